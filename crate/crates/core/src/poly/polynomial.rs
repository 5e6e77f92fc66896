use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Q};
use crate::{Error, Result};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept strictly descending in degrevlex with no zero coefficients,
/// so structural equality is polynomial equality. Other orders are only used
/// through [`Polynomial::leading_term`] or the engine's own sorted vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Q, Monomial)>,
}

const CANONICAL: MonomialOrder = MonomialOrder::DegRevLex;

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::monomial(nvars, c, Monomial::one(nvars))
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Q::from_integer(BigInt::from(c)))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, Q::one(), Monomial::var(nvars, i))
    }

    pub fn monomial(nvars: usize, c: Q, m: Monomial) -> Self {
        debug_assert_eq!(m.nvars(), nvars);
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(c, m)],
        }
    }

    /// Collects arbitrary (possibly repeated, possibly zero) terms into canonical form.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Q, Monomial)>) -> Self {
        let mut acc: HashMap<Monomial, Q> = HashMap::new();
        for (c, m) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            *acc.entry(m).or_insert_with(Q::zero) += c;
        }
        let mut terms: Vec<(Q, Monomial)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_by(|a, b| CANONICAL.cmp(&b.1, &a.1));
        Polynomial { nvars, terms }
    }

    /// Builds from terms already sorted strictly descending in degrevlex.
    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(Q, Monomial)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| CANONICAL.cmp(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Q, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Q, Monomial)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`Polynomial::is_zero`]: no stored terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one() && self.terms[0].0.is_one()
    }

    /// A single term `c·m`.
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_term(&self) -> Q {
        // Degrevlex puts 1 last.
        match self.terms.last() {
            Some((c, m)) if m.is_one() => c.clone(),
            _ => Q::zero(),
        }
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(_, m)| m.degree())
    }

    /// Lowest total degree occurring (order of vanishing at the origin).
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.last().map(|(_, m)| m.degree())
    }

    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(Q, Monomial)> {
        let best = self
            .terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.1, &b.1))
            .ok_or(Error::ZeroPolynomial)?;
        Ok(best.clone())
    }

    pub fn leading_coefficient(&self, ord: MonomialOrder) -> Option<Q> {
        self.leading_term(ord).ok().map(|(c, _)| c)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match CANONICAL.cmp(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].0 } else { b[j].0.clone() };
                    out.push((c, b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].0 - &b[j].0
                    } else {
                        &a[i].0 + &b[j].0
                    };
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(c, m)| {
            let c = if negate { -c } else { c.clone() };
            (c, m.clone())
        }));
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        if other.terms.len() == 1 {
            let (c, m) = &other.terms[0];
            return self.mul_term(c, m);
        }
        if self.terms.len() == 1 {
            let (c, m) = &self.terms[0];
            return other.mul_term(c, m);
        }
        let mut acc: HashMap<Monomial, Q> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (c1, m1) in &self.terms {
            for (c2, m2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        let mut terms: Vec<(Q, Monomial)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_by(|a, b| CANONICAL.cmp(&b.1, &a.1));
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// `c·m·self`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, c: &Q, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(a, n)| (a * c, n.mul(m)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.nvars))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.product(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    pub fn partial(&self, i: usize) -> Result<Polynomial> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let terms = self.terms.iter().filter_map(|(c, m)| {
            let e = m.exponents()[i];
            if e == 0 {
                return None;
            }
            let mut d = m.clone();
            d.exps_mut()[i] -= 1;
            Some((c * Q::from_integer(BigInt::from(e)), d))
        });
        Ok(Polynomial::from_terms(self.nvars, terms))
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.nvars)
            .map(|i| self.partial(i).expect("index in range"))
            .collect()
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong length");
        let mut sum = Q::zero();
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            sum += t;
        }
        sum
    }

    /// Substitutes `x_i ↦ images[i]`; the images share a (possibly different) ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(p.nvars), p.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().product(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.product(&powers[i][e]);
                }
            }
            out = out.merge(&t, false);
        }
        out
    }

    /// Multivariate division by a single divisor in degrevlex: `self = q·d + r`
    /// with no term of `r` divisible by the leading monomial of `d`.
    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_ring(d)?;
        let (lc, lm) = d.leading_term(CANONICAL)?;
        let mut q_terms = Vec::new();
        let mut r_terms = Vec::new();
        let mut p = self.clone();
        while let Some((c, m)) = p.terms.first().cloned() {
            match lm.quotient_of(&m) {
                Some(qm) => {
                    let qc = &c / &lc;
                    p = p.merge(&d.mul_term(&qc, &qm), true);
                    q_terms.push((qc, qm));
                }
                None => {
                    r_terms.push(p.terms.remove(0));
                }
            }
        }
        Ok((
            Polynomial::from_terms(self.nvars, q_terms),
            Polynomial::from_sorted_terms(self.nvars, r_terms),
        ))
    }

    /// `self / d` when the division is exact.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Scales so the degrevlex-leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((c, _)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (c, _) in &self.terms {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        let mut num = BigInt::zero();
        for (c, _) in &self.terms {
            let v = c.numer() * (&den / c.denom());
            num = num_integer::Integer::gcd(&num, &v);
        }
        let mut factor = Q::new(den, num);
        if self.terms[0].0.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Embed into a ring with `extra` new variables placed first.
    pub fn shift(&self, extra: usize) -> Polynomial {
        Polynomial::from_terms(
            self.nvars + extra,
            self.terms.iter().map(|(c, m)| (c.clone(), m.shift(extra))),
        )
    }

    /// Drop the first `extra` variables; `None` if any of them occurs.
    pub fn unshift(&self, extra: usize) -> Option<Polynomial> {
        let terms: Option<Vec<_>> = self
            .terms
            .iter()
            .map(|(c, m)| m.unshift(extra).map(|m| (c.clone(), m)))
            .collect();
        Some(Polynomial::from_terms(self.nvars - extra, terms?))
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.iter().any(|(_, m)| m.exponents()[i] > 0))
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(_, m)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Weighted degree if all terms share it.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u64> {
        let mut degs = self.terms.iter().map(|(_, m)| m.weighted_degree(weights));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&super::parse::format_polynomial(self, &names))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on ring mismatch; use the `try_` variants to get an error.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$imp(rhs).expect("polynomials from different rings")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
