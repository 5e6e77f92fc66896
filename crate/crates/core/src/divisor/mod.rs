//! Divisor germs `{h = 0}` at the origin and the criteria deciding whether
//! they have normal crossings.

mod components;
mod freeness;
mod verdict;

use std::sync::Arc;


use crate::gb;
use crate::ideal::{self, Ideal, RadicalHint, RadicalityReport, Radicality};
use crate::poly::{Polynomial, Ring, Q};
use crate::{Error, Result};

pub use components::{splayed_factor_property, ComponentReport, FactorCheck, PairCheck, SplayedReport, TripleCheck};
pub use freeness::FreenessReport;
pub use verdict::{Final, NCVerdict, StepOutcome, StepRecord, UndecidedReason, Witness, WitnessKind};

/// A derivation `Σ a_i ∂_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField {
    coeffs: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(coeffs: Vec<Polynomial>) -> Self {
        VectorField { coeffs }
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `δ(f) = Σ a_i ∂_i f`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .fold(Polynomial::zero(f.nvars()), |acc, (i, a)| {
                acc + a * &f.partial(i).expect("index in range")
            })
    }

    /// `δ(h) ∈ (h)` as polynomials.
    pub fn is_logarithmic(&self, h: &Polynomial) -> bool {
        self.apply(h).div_exact(h).is_some()
    }

    /// Lie bracket `[δ, ε]`, with `k`-th coefficient `δ(ε_k) - ε(δ_k)`.
    pub fn bracket(&self, other: &VectorField) -> VectorField {
        VectorField::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(d, e)| self.apply(e) - other.apply(d))
                .collect(),
        )
    }
}

/// All pairwise brackets vanish.
pub fn basis_commutes(basis: &[VectorField]) -> bool {
    (0..basis.len()).all(|i| (i + 1..basis.len()).all(|j| basis[i].bracket(&basis[j]).is_zero()))
}

/// Outcome of the reducedness test.
#[derive(Clone, Debug)]
pub struct Reducedness {
    pub reduced: bool,
    /// Local dimension of `(h) + J_h`.
    pub singular_dimension: i64,
    /// `gcd(h, ∂_1 h, ..., ∂_n h)` when not reduced.
    pub witness: Option<Polynomial>,
}

/// A hypersurface germ at the origin, optionally with a factorization.
#[derive(Clone, Debug)]
pub struct DivisorGerm {
    ring: Arc<Ring>,
    h: Polynomial,
    factors: Option<Vec<Polynomial>>,
}

impl DivisorGerm {
    /// Fails when `h` does not vanish at the origin or the factors do not
    /// multiply to `h`.
    pub fn new(ring: &Arc<Ring>, h: Polynomial, factors: Option<Vec<Polynomial>>) -> Result<Self> {
        let n = ring.nvars();
        if h.nvars() != n {
            return Err(Error::RingMismatch { left: n, right: h.nvars() });
        }
        if h.is_zero() {
            return Err(Error::InvalidInput("the zero polynomial does not define a divisor".into()));
        }
        if !h.vanishes_at_origin() {
            return Err(Error::OriginNotOnDivisor(format!("{}", h.constant_term())));
        }
        if let Some(fs) = &factors {
            if fs.iter().any(|f| f.nvars() != n) {
                return Err(Error::RingMismatch { left: n, right: fs[0].nvars() });
            }
            let prod = fs.iter().fold(Polynomial::one(n), |a, f| a * f);
            if prod != h {
                return Err(Error::FactorMismatch);
            }
        }
        Ok(DivisorGerm {
            ring: ring.clone(),
            h,
            factors,
        })
    }

    pub fn parse(ring: &Arc<Ring>, h: &str, factors: Option<&[&str]>) -> Result<Self> {
        let h = ring.parse(h)?;
        let factors = factors
            .map(|fs| fs.iter().map(|f| ring.parse(f)).collect::<Result<Vec<_>>>())
            .transpose()?;
        DivisorGerm::new(ring, h, factors)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn h(&self) -> &Polynomial {
        &self.h
    }

    pub fn factors(&self) -> Option<&[Polynomial]> {
        self.factors.as_deref()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn format(&self, p: &Polynomial) -> String {
        self.ring.format(p)
    }

    /// Factors passing through the origin; the others are units of the local ring.
    pub fn local_factors(&self) -> Option<Vec<Polynomial>> {
        self.factors
            .as_ref()
            .map(|fs| fs.iter().filter(|f| f.vanishes_at_origin()).cloned().collect())
    }

    pub fn partials(&self) -> Vec<Polynomial> {
        self.h.gradient()
    }

    /// `J_h = (∂_1 h, ..., ∂_n h)`.
    pub fn jacobian_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.partials()).expect("same ring")
    }

    /// `(h) + J_h`, the ideal of the singular locus.
    pub fn singular_locus_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, std::iter::once(self.h.clone()).chain(self.partials())).expect("same ring")
    }

    /// `dh(0) ≠ 0`.
    pub fn is_smooth_at_origin(&self) -> bool {
        self.partials().iter().any(|p| !p.vanishes_at_origin())
    }

    /// `h` is squarefree near the origin iff its singular locus has codimension
    /// at least two there.
    pub fn reducedness(&self) -> Result<Reducedness> {
        let n = self.nvars() as i64;
        let dim = self.singular_locus_ideal().local_dimension();
        let reduced = dim <= n - 2;
        let witness = if reduced {
            None
        } else {
            let mut g = self.h.clone();
            for p in self.partials() {
                g = ideal::polynomial_gcd(&g, &p)?;
            }
            Some(g)
        };
        Ok(Reducedness {
            reduced,
            singular_dimension: dim,
            witness,
        })
    }

    pub fn is_reduced_equation(&self) -> Result<bool> {
        Ok(self.reducedness()?.reduced)
    }

    /// Errors with the common factor of `h` and its partials when not reduced.
    pub fn ensure_reduced(&self) -> Result<()> {
        let r = self.reducedness()?;
        if r.reduced {
            Ok(())
        } else {
            let w = r.witness.map(|w| self.format(&w)).unwrap_or_default();
            Err(Error::NotReduced(w))
        }
    }

    /// Generators of `Der(log D)`: the first `n` coordinates of the syzygies
    /// of `(∂_1 h, ..., ∂_n h, h)`. Each one is re-checked to be logarithmic.
    pub fn der_log(&self) -> Result<Vec<VectorField>> {
        let n = self.nvars();
        let mut gens = self.partials();
        gens.push(self.h.clone());
        let syz = gb::syzygies(&gens, crate::poly::MonomialOrder::DegRevLex)?;
        let fields: Vec<VectorField> = syz
            .into_iter()
            .map(|s| VectorField::new(s.into_components().into_iter().take(n).collect()))
            .filter(|f| !f.is_zero())
            .collect();
        for f in &fields {
            if !f.is_logarithmic(&self.h) {
                return Err(Error::Internal("syzygy projection is not logarithmic".into()));
            }
        }
        Ok(fields)
    }

    pub fn is_free_at_origin(&self) -> Result<FreenessReport> {
        freeness::is_free_at_origin(self)
    }

    /// Radicality of `(h) + J_h` at the origin, using the Cohen–Macaulay
    /// hypothesis when `D` is known to be free and singular. When radical,
    /// `h ∈ J_h` locally is asserted.
    pub fn is_radical_jacobian(&self, free: Option<&FreenessReport>) -> Result<RadicalityReport> {
        let sing = self.singular_locus_ideal();
        let cm = free.filter(|f| f.free && !self.is_smooth_at_origin()).map(|_| 2usize);
        let hint = RadicalHint {
            cohen_macaulay_codim: cm,
            splitters: self.local_factors().unwrap_or_default(),
        };
        let report = sing.is_radical(Some(hint));
        if report.verdict == Radicality::Radical && !self.jacobian_ideal().contains_locally(&self.h) {
            return Err(Error::Internal("radical Jacobian ideal but h is not in J_h".into()));
        }
        Ok(report)
    }

    /// `k` when `J_h` is a complete intersection of codimension `k`, in which
    /// case `D` is locally `{x_1^2 + ... + x_k^2 = 0}` along its singular locus.
    pub fn classify_a1(&self) -> Result<Option<usize>> {
        let j = self.jacobian_ideal();
        if j.is_locally_unit() {
            return Ok(None);
        }
        let codim = j.local_codimension();
        let mu = j.minimal_generators_at_origin()?;
        Ok((codim >= 0 && mu as i64 == codim).then_some(mu))
    }

    /// `Some(true)` when the singular locus has dimension `n-2` and `J_h` is
    /// generated by two elements at the origin; `None` when not applicable.
    pub fn gorenstein_shortcut(&self) -> Result<Option<bool>> {
        let n = self.nvars() as i64;
        if self.singular_locus_ideal().local_dimension() != n - 2 {
            return Ok(None);
        }
        let j = self.jacobian_ideal();
        if j.is_locally_unit() {
            return Ok(None);
        }
        Ok((j.minimal_generators_at_origin()? == 2).then_some(true))
    }

    /// A field `δ` with `δ(h) = h`, from a lift of `h` into `J_h`.
    pub fn euler_homogeneity(&self) -> Result<Option<VectorField>> {
        let lift = gb::lift(&self.h, &self.partials())?;
        Ok(lift.map(VectorField::new).filter(|d| d.apply(&self.h) == self.h))
    }

    pub fn component_checks(&self) -> Result<ComponentReport> {
        components::component_checks(self)
    }

    pub fn decide_normal_crossing(&self) -> Result<NCVerdict> {
        verdict::decide(self)
    }

    /// The germ of `{h(x + a) = 0}`, moving the point `a` to the origin.
    pub fn translate(ring: &Arc<Ring>, h: &Polynomial, factors: Option<&[Polynomial]>, point: &[Q]) -> Result<Self> {
        let n = ring.nvars();
        if point.len() != n {
            return Err(Error::InvalidInput(format!(
                "translation needs {n} coordinates, got {}",
                point.len()
            )));
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| Polynomial::var(n, i) + Polynomial::constant(n, point[i].clone()))
            .collect();
        let h2 = h.substitute(&images);
        let f2 = factors.map(|fs| fs.iter().map(|f| f.substitute(&images)).collect());
        DivisorGerm::new(ring, h2, f2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn germ(names: &[&str], h: &str, f: Option<&[&str]>) -> DivisorGerm {
        let r = Ring::new(names.iter().copied()).unwrap();
        DivisorGerm::parse(&r, h, f).unwrap()
    }

    #[test]
    fn reducedness_examples() {
        assert!(germ(&["x", "y"], "x*y", None).is_reduced_equation().unwrap());
        assert!(germ(&["x", "y"], "x^3 - y^2", None).is_reduced_equation().unwrap());
        let d = germ(&["x", "y"], "x^2*y", None);
        let r = d.reducedness().unwrap();
        assert!(!r.reduced);
        assert_eq!(r.singular_dimension, 1);
        assert_eq!(d.format(&r.witness.unwrap()), "x");
    }

    #[test]
    fn origin_and_factor_validation() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert!(matches!(
            DivisorGerm::parse(&r, "x + 1", None),
            Err(Error::OriginNotOnDivisor(_))
        ));
        assert_eq!(
            DivisorGerm::parse(&r, "x*y", Some(&["x", "x"])).unwrap_err(),
            Error::FactorMismatch
        );
    }

    #[test]
    fn der_log_of_simple_germs() {
        let d = germ(&["x", "y"], "x*y", None);
        let f = d.der_log().unwrap();
        assert_eq!(f.len(), 2);
        let d = germ(&["x", "y"], "x", None);
        let f = d.der_log().unwrap();
        assert!(f.iter().all(|v| v.is_logarithmic(d.h())));
    }

    #[test]
    fn brackets() {
        let r = Ring::new(["x", "y"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        let xdx = VectorField::new(vec![p("x"), p("0")]);
        let ydy = VectorField::new(vec![p("0"), p("y")]);
        let dx = VectorField::new(vec![p("1"), p("0")]);
        assert!(xdx.bracket(&ydy).is_zero());
        assert_eq!(dx.bracket(&xdx), dx);
        assert!(basis_commutes(&[xdx, ydy]));
    }

    #[test]
    fn euler_fields() {
        let d = germ(&["x", "y"], "x^3 - y^2", None);
        let e = d.euler_homogeneity().unwrap().unwrap();
        assert_eq!(e.apply(d.h()), d.h().clone());
    }
}
