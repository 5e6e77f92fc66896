//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
pub(crate) mod parse;
mod polynomial;
pub mod univariate;

use std::collections::HashSet;
use std::sync::Arc;

pub use monomial::Monomial;
pub use order::{ModuleOrder, MonomialOrder};
pub use polynomial::Polynomial;

use crate::{Error, Result};

/// Coefficient field.
pub type Q = num_rational::BigRational;

/// Variable names of the ambient polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Ring>> {
        let names: Vec<String> = names.into_iter().map(|s| s.as_ref().trim().to_string()).collect();
        if names.is_empty() {
            return Err(Error::EmptyRing);
        }
        let mut seen = HashSet::new();
        for n in &names {
            let valid = n
                .chars()
                .next()
                .is_some_and(|c| c.is_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
            if !valid {
                return Err(Error::InvalidVariableName(n.clone()));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(Ring { names }))
    }

    /// Ring with variables `x1, ..., xn`.
    pub fn with_vars(n: usize) -> Arc<Ring> {
        Ring::new((1..=n).map(|i| format!("x{i}"))).expect("valid generated names")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.nvars(), i)
    }

    pub fn vars(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse::parse_polynomial(text, &self.names)
    }

    pub fn format(&self, p: &Polynomial) -> String {
        parse::format_polynomial(p, &self.names)
    }

    /// Ring with one extra variable named `name` (made unique) placed first.
    pub fn with_leading_var(&self, name: &str) -> Arc<Ring> {
        let mut fresh = name.to_string();
        while self.names.contains(&fresh) {
            fresh.push('_');
        }
        let mut names = vec![fresh];
        names.extend(self.names.iter().cloned());
        Arc::new(Ring { names })
    }
}
