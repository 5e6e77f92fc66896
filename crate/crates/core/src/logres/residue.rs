use std::fmt;
use std::sync::Arc;

use num_traits::Signed;

use super::LogOneForm;
use crate::divisor::DivisorGerm;
use crate::ideal::{self, Ideal};
use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};

/// A fraction `numerator / denominator` on `{modulus = 0}`, where the
/// denominator is a nonzerodivisor modulo the modulus.
#[derive(Clone, Debug)]
pub struct ResidueClass {
    ring: Arc<Ring>,
    pub numerator: Polynomial,
    pub denominator: Polynomial,
    pub modulus: Polynomial,
    /// Coordinate `j` whose partial `∂_j h` served as the denominator.
    pub index: Option<usize>,
}

impl ResidueClass {
    /// Fails when the denominator is a zerodivisor modulo the modulus.
    pub fn new(ring: &Arc<Ring>, numerator: Polynomial, denominator: Polynomial, modulus: Polynomial) -> Result<Self> {
        if !admissible(ring, &modulus, &denominator) {
            return Err(Error::InvalidInput(
                "denominator is a zerodivisor modulo the modulus".into(),
            ));
        }
        Ok(ResidueClass {
            ring: ring.clone(),
            numerator,
            denominator,
            modulus,
            index: None,
        })
    }

    fn modulus_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, [self.modulus.clone()]).expect("same ring")
    }

    /// `a/b = c/d` iff `ad - bc ∈ (modulus)` at the origin.
    pub fn equals(&self, other: &ResidueClass) -> bool {
        let cross = &self.numerator * &other.denominator - &self.denominator * &other.numerator;
        self.modulus_ideal().contains_locally(&cross)
            && Ideal::new(&self.ring, [other.modulus.clone()])
                .expect("same ring")
                .contains_locally(&cross)
    }

    pub fn is_zero(&self) -> bool {
        self.modulus_ideal().contains_locally(&self.numerator)
    }

    pub fn is_one(&self) -> bool {
        self.modulus_ideal().contains_locally(&(&self.numerator - &self.denominator))
    }

    pub fn product(&self, other: &ResidueClass) -> ResidueClass {
        ResidueClass {
            ring: self.ring.clone(),
            numerator: &self.numerator * &other.numerator,
            denominator: &self.denominator * &other.denominator,
            modulus: self.modulus.clone(),
            index: None,
        }
    }

    /// The class has a holomorphic representative on the smooth component
    /// `{modulus = 0}`: `numerator ∈ (modulus, denominator)` at the origin.
    pub fn is_holomorphic(&self) -> Result<bool> {
        if !self.modulus.gradient().iter().any(|p| !p.vanishes_at_origin()) {
            return Err(Error::ComponentNotSmooth(self.ring.format(&self.modulus)));
        }
        let i = Ideal::new(&self.ring, [self.modulus.clone(), self.denominator.clone()]).expect("same ring");
        Ok(i.contains_locally(&self.numerator))
    }

    /// Numerator and denominator reduced modulo the modulus, divided by their
    /// common factor and scaled to coprime integer coefficients with a
    /// positive leading denominator coefficient. Reduction eliminates later
    /// variables first, so on `{x + y = 0}` the class reads in terms of `x`.
    pub fn simplified(&self) -> (Polynomial, Polynomial) {
        let n = self.ring.nvars();
        let rev: Vec<Polynomial> = (0..n).rev().map(|i| Polynomial::var(n, i)).collect();
        let reversed = Ideal::new(&self.ring, [self.modulus.substitute(&rev)]).expect("same ring");
        let g = reversed.groebner();
        let mut a = g.normal_form(&self.numerator.substitute(&rev)).substitute(&rev);
        let mut b = g.normal_form(&self.denominator.substitute(&rev)).substitute(&rev);
        if !a.is_zero() {
            if let Ok(c) = ideal::polynomial_gcd(&a, &b) {
                if let (Some(a2), Some(b2)) = (a.div_exact(&c), b.div_exact(&c)) {
                    a = a2;
                    b = b2;
                }
            }
        }
        if b.is_zero() {
            return (a, b);
        }
        let joint = a.shift(1) + Polynomial::var(n + 1, 0) * b.shift(1);
        let lead = |p: &Polynomial| p.terms()[0].0.clone();
        let mut factor = lead(&joint.primitive()) / lead(&joint);
        if (lead(&b) * &factor).is_negative() {
            factor = -factor;
        }
        (a.scale(&factor), b.scale(&factor))
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.simplified();
        let r = &self.ring;
        if a.is_zero() || b.is_one() {
            write!(f, "{}", r.format(&a))
        } else {
            let num = if a.len() > 1 { format!("({})", r.format(&a)) } else { r.format(&a) };
            let den = r.format(&b);
            let den = if den.chars().all(|c| c.is_alphanumeric() || c == '_') { den } else { format!("({den})") };
            write!(f, "{num} / {den}")
        }
    }
}

fn admissible(ring: &Arc<Ring>, modulus: &Polynomial, g: &Polynomial) -> bool {
    let n = ring.nvars() as i64;
    Ideal::new(ring, [modulus.clone(), g.clone()])
        .expect("same ring")
        .local_dimension()
        <= n - 2
}

/// Indices `j` for which `∂_j h` is a nonzerodivisor modulo `modulus`.
pub fn admissible_indices(d: &DivisorGerm, modulus: &Polynomial) -> Vec<usize> {
    d.partials()
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero() && admissible(d.ring(), modulus, p))
        .map(|(j, _)| j)
        .collect()
}

/// Writes `ω = a / (u·h)` with `u(0) ≠ 0`.
fn over_h(w: &LogOneForm, d: &DivisorGerm) -> Result<(Vec<Polynomial>, Polynomial)> {
    let den = w.denominator();
    if let Some(u) = den.div_exact(d.h()) {
        if !u.vanishes_at_origin() {
            return Ok((w.numerators().to_vec(), u));
        }
    }
    if let Some(q) = d.h().div_exact(den) {
        let n = d.nvars();
        return Ok((w.numerators().iter().map(|a| a * &q).collect(), Polynomial::one(n)));
    }
    Err(Error::NotLogarithmic(
        "denominator is neither a divisor of h nor a unit multiple of h".into(),
    ))
}

/// `ρ(ω)` using the coordinate `j`: writing `∂_j h · ω = (dh/h)·(a_j/u) + η`
/// gives the class `a_j / (u ∂_j h)`. The clearing identities
/// `∂_j h·a_i − ∂_i h·a_j ∈ (h)` are checked for every `i`.
pub fn residue_with_index(
    w: &LogOneForm,
    d: &DivisorGerm,
    modulus: Option<&Polynomial>,
    j: usize,
) -> Result<ResidueClass> {
    let ring = d.ring();
    if !w.is_logarithmic(ring, d.h()) {
        return Err(Error::NotLogarithmic(format!(
            "({}) / ({})",
            w.numerators().iter().map(|a| ring.format(a)).collect::<Vec<_>>().join(", "),
            ring.format(w.denominator())
        )));
    }
    let modulus = modulus.cloned().unwrap_or_else(|| d.h().clone());
    if modulus.div_exact(d.h()).is_none() && d.h().div_exact(&modulus).is_none() {
        return Err(Error::InvalidInput("modulus must divide h".into()));
    }
    let (a, u) = over_h(w, d)?;
    let partials = d.partials();
    let hi = Ideal::new(ring, [d.h().clone()]).expect("same ring");
    for (i, ai) in a.iter().enumerate() {
        let clear = &partials[j] * ai - &partials[i] * &a[j];
        if !hi.contains_locally(&clear) {
            return Err(Error::Internal(format!("clearing identity fails for i = {i}, j = {j}")));
        }
    }
    let denominator = &u * &partials[j];
    if partials[j].is_zero() || !admissible(ring, &modulus, &partials[j]) {
        return Err(Error::NoAdmissibleIndex);
    }
    Ok(ResidueClass {
        ring: ring.clone(),
        numerator: a[j].clone(),
        denominator,
        modulus,
        index: Some(j),
    })
}

/// `ρ(ω)` modulo `h`, or modulo a component when given, using the first
/// admissible coordinate.
pub fn residue(w: &LogOneForm, d: &DivisorGerm, modulus: Option<&Polynomial>) -> Result<ResidueClass> {
    let m = modulus.cloned().unwrap_or_else(|| d.h().clone());
    let j = *admissible_indices(d, &m).first().ok_or(Error::NoAdmissibleIndex)?;
    residue_with_index(w, d, Some(&m), j)
}

/// Residue of `ω` on the smooth component `{h_i = 0}` has a holomorphic
/// representative.
pub fn residue_is_holomorphic_on_smooth_component(w: &LogOneForm, d: &DivisorGerm, hi: &Polynomial) -> Result<bool> {
    if !hi.gradient().iter().any(|p| !p.vanishes_at_origin()) {
        return Err(Error::ComponentNotSmooth(d.format(hi)));
    }
    residue(w, d, Some(hi))?.is_holomorphic()
}
