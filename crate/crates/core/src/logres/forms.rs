use std::sync::Arc;

use crate::divisor::{basis_commutes, DivisorGerm, FreenessReport, VectorField};
use crate::ideal::Ideal;
use crate::linalg;
use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};

/// A meromorphic 1-form `(a_1 dx_1 + ... + a_n dx_n) / den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogOneForm {
    numerators: Vec<Polynomial>,
    denominator: Polynomial,
}

impl LogOneForm {
    pub fn new(numerators: Vec<Polynomial>, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = denominator.nvars();
        if let Some(a) = numerators.iter().find(|a| a.nvars() != n) {
            return Err(Error::RingMismatch { left: n, right: a.nvars() });
        }
        if numerators.len() != n {
            return Err(Error::InvalidInput(format!(
                "a 1-form in {n} variables needs {n} coefficients, got {}",
                numerators.len()
            )));
        }
        Ok(LogOneForm { numerators, denominator })
    }

    /// Parses coefficient strings over a common denominator.
    pub fn parse(ring: &Arc<Ring>, numerators: &[&str], denominator: &str) -> Result<Self> {
        let a = numerators.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        LogOneForm::new(a, ring.parse(denominator)?)
    }

    /// `dh/h`.
    pub fn dlog(h: &Polynomial) -> Self {
        LogOneForm {
            numerators: h.gradient(),
            denominator: h.clone(),
        }
    }

    pub fn numerators(&self) -> &[Polynomial] {
        &self.numerators
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn nvars(&self) -> usize {
        self.denominator.nvars()
    }

    /// Cleared coefficient of `dx_i ∧ dx_j` in `dω`; the true coefficient is
    /// this divided by `den²`.
    pub fn d_coefficient(&self, i: usize, j: usize) -> Polynomial {
        let a = &self.numerators;
        let den = &self.denominator;
        let p = |f: &Polynomial, k: usize| f.partial(k).expect("index in range");
        den * &(p(&a[j], i) - p(&a[i], j)) - (&a[j] * &p(den, i) - &a[i] * &p(den, j))
    }

    pub fn is_closed(&self) -> bool {
        let n = self.nvars();
        (0..n).all(|i| (i + 1..n).all(|j| self.d_coefficient(i, j).is_zero()))
    }

    /// `hω` and `h dω` are holomorphic at the origin.
    pub fn is_logarithmic(&self, ring: &Arc<Ring>, h: &Polynomial) -> bool {
        let den = Ideal::new(ring, [self.denominator.clone()]).expect("same ring");
        if !self.numerators.iter().all(|a| den.contains_locally(&(h * a))) {
            return false;
        }
        let den2 = Ideal::new(ring, [&self.denominator * &self.denominator]).expect("same ring");
        let n = self.nvars();
        (0..n).all(|i| (i + 1..n).all(|j| den2.contains_locally(&(h * &self.d_coefficient(i, j)))))
    }

    /// Holomorphic at the origin: every numerator lies in `(den)` locally.
    pub fn is_holomorphic(&self, ring: &Arc<Ring>) -> bool {
        let den = Ideal::new(ring, [self.denominator.clone()]).expect("same ring");
        self.numerators.iter().all(|a| den.contains_locally(a))
    }

    /// `ω(δ) = Σ a_i δ_i / den`, returned as its numerator.
    pub fn pair_numerator(&self, field: &VectorField) -> Polynomial {
        self.numerators
            .iter()
            .zip(field.coeffs())
            .fold(Polynomial::zero(self.nvars()), |acc, (a, d)| acc + a * d)
    }

    /// Pull back along the linear substitution `x = A·x'`.
    pub fn pullback(&self, images: &[Polynomial], matrix: &[Vec<crate::poly::Q>]) -> LogOneForm {
        let n = self.nvars();
        let subst: Vec<Polynomial> = self.numerators.iter().map(|a| a.substitute(images)).collect();
        let numerators = (0..n)
            .map(|k| {
                (0..n).fold(Polynomial::zero(n), |acc, i| acc + subst[i].scale(&matrix[i][k]))
            })
            .collect();
        LogOneForm {
            numerators,
            denominator: self.denominator.substitute(images),
        }
    }
}

/// Forms `ω_i` with `ω_i(δ_j) = δ_ij` for a free basis `δ_1, ..., δ_n`.
///
/// The numerators are the rows of the cofactor matrix `A` of `M` and the
/// common denominator is `det M = u·h`. Fails unless `A·Mᵀ = det(M)·Id`.
pub fn dual_basis(d: &DivisorGerm, free: &FreenessReport) -> Result<Vec<LogOneForm>> {
    let m = free.matrix().ok_or(Error::NotFree)?;
    dual_of_fields(d, &m)
}

pub fn dual_of_fields(d: &DivisorGerm, m: &[Vec<Polynomial>]) -> Result<Vec<LogOneForm>> {
    let n = d.nvars();
    let det = linalg::det(m);
    if det.is_zero() {
        return Err(Error::InvalidInput("vector fields are linearly dependent".into()));
    }
    let a = linalg::cofactor_matrix(m);
    for (i, row) in a.iter().enumerate() {
        for (j, mrow) in m.iter().enumerate() {
            let entry = row.iter().zip(mrow).fold(Polynomial::zero(n), |acc, (x, y)| acc + x * y);
            let expected = if i == j { det.clone() } else { Polynomial::zero(n) };
            if entry != expected {
                return Err(Error::Internal("cofactor identity failed".into()));
            }
        }
    }
    a.into_iter().map(|row| LogOneForm::new(row, det.clone())).collect()
}

/// `dh/h` belongs to a minimal generating set of `Ω¹(log D)` at the origin:
/// in the dual basis its coordinates are `δ_i(h)/h`, and one of them must be a
/// unit.
pub fn dlog_in_minimal_basis(d: &DivisorGerm, free: &FreenessReport) -> Result<bool> {
    let basis = free.basis().ok_or(Error::NotFree)?;
    for f in basis {
        let q = f
            .apply(d.h())
            .div_exact(d.h())
            .ok_or_else(|| Error::Internal("basis field is not logarithmic".into()))?;
        if !q.vanishes_at_origin() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Outcome of checking a supplied basis of closed logarithmic forms.
#[derive(Clone, Debug)]
pub struct ClosedBasisCertificate {
    pub closed: Vec<bool>,
    /// `ω_1 ∧ ... ∧ ω_n = u·dx/h` with `u(0) ≠ 0`.
    pub wedge_is_unit_over_h: bool,
    /// Both conditions hold, so `D` has normal crossings at the origin.
    pub issued: bool,
}

pub fn verify_closed_basis_certificate(d: &DivisorGerm, forms: &[LogOneForm]) -> Result<ClosedBasisCertificate> {
    let n = d.nvars();
    if forms.len() != n {
        return Err(Error::InvalidInput(format!("expected {n} forms, got {}", forms.len())));
    }
    for (k, w) in forms.iter().enumerate() {
        if !w.is_logarithmic(d.ring(), d.h()) {
            return Err(Error::NotLogarithmic(format!("form {}", k + 1)));
        }
    }
    let closed: Vec<bool> = forms.iter().map(LogOneForm::is_closed).collect();
    let m: Vec<Vec<Polynomial>> = forms.iter().map(|w| w.numerators.clone()).collect();
    let lhs = &linalg::det(&m) * d.h();
    let rhs = forms.iter().fold(Polynomial::one(n), |acc, w| acc * &w.denominator);
    let wedge = !lhs.is_zero() && same_principal_ideal(d.ring(), &lhs, &rhs);
    let issued = wedge && closed.iter().all(|&c| c);
    Ok(ClosedBasisCertificate {
        closed,
        wedge_is_unit_over_h: wedge,
        issued,
    })
}

/// `n` logarithmic fields with determinant a unit times `h` whose brackets
/// all vanish certify normal crossings.
pub fn verify_commuting_basis(d: &DivisorGerm, fields: &[VectorField]) -> Result<bool> {
    let n = d.nvars();
    if fields.len() != n {
        return Err(Error::InvalidInput(format!("expected {n} fields, got {}", fields.len())));
    }
    if !fields.iter().all(|f| f.is_logarithmic(d.h())) {
        return Ok(false);
    }
    let m: Vec<Vec<Polynomial>> = fields.iter().map(|f| f.coeffs().to_vec()).collect();
    let det = linalg::det(&m);
    let saito = !det.is_zero() && same_principal_ideal(d.ring(), &det, d.h());
    Ok(saito && basis_commutes(fields))
}

fn same_principal_ideal(ring: &Arc<Ring>, a: &Polynomial, b: &Polynomial) -> bool {
    let ia = Ideal::new(ring, [a.clone()]).expect("same ring");
    let ib = Ideal::new(ring, [b.clone()]).expect("same ring");
    ia.contains_locally(b) && ib.contains_locally(a)
}
