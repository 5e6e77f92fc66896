//! Gröbner bases for global orders, standard bases for the local order `ds`,
//! module bases, Schreyer syzygies, free resolutions and dimension.

mod dimension;
pub(crate) mod engine;
mod resolution;
mod syzygy;
pub(crate) mod vector;

use crate::poly::{ModuleOrder, Monomial, MonomialOrder, Polynomial, Q};
use crate::{Error, Result};
use engine::Builder;
use vector::Vector;

pub use dimension::{dimension_of_monomials, krull_dimension, local_dimension};
pub use resolution::{free_resolution, quasi_homogeneous_weights, FreeResolution};
pub use syzygy::{minimal_subset_at_origin, module_syzygies, syzygies};

pub(crate) fn common_nvars(polys: &[Polynomial]) -> Result<usize> {
    let n = polys.first().map_or(0, |p| p.nvars());
    for p in polys {
        if p.nvars() != n {
            return Err(Error::RingMismatch {
                left: n,
                right: p.nvars(),
            });
        }
    }
    Ok(n)
}

/// A Gröbner basis (global order) or standard basis (`ds`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// True for reduced bases, which global orders always produce.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|p| p.leading_term(self.order).expect("nonzero").1)
            .collect()
    }

    /// The ideal is the whole ring (globally, or locally at the origin for `ds`).
    pub fn is_unit(&self) -> bool {
        self.leading_monomials().iter().any(|m| m.is_one())
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.elements, self.order)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.is_zero() || self.normal_form(p).is_zero()
    }

    /// Dimension of `R/I` (or of the local ring for `ds`); `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        dimension_of_monomials(&self.leading_monomials(), self.nvars)
    }
}

fn to_vectors(polys: &[Polynomial], ord: ModuleOrder) -> Vec<Vector> {
    polys.iter().map(|p| Vector::from_poly(p, &ord)).collect()
}

/// Remainder of `p` modulo the list `g`. Global orders fully reduce; the local
/// order uses Mora's normal form, whose result is zero exactly when `p` lies in
/// the localized ideal provided `g` is a standard basis.
pub fn normal_form(p: &Polynomial, g: &[Polynomial], ord: MonomialOrder) -> Polynomial {
    let mord = ModuleOrder::Pot(ord);
    let basis: Vec<Vector> = to_vectors(g, mord).into_iter().filter(|v| !v.is_zero()).collect();
    let b = Builder::from_basis(mord, p.nvars(), 1, &basis);
    b.normal_form(Vector::from_poly(p, &mord)).to_poly(p.nvars())
}

/// Gröbner basis of the ideal generated by `gens`; a standard basis of the
/// localization at the origin when `ord` is local.
pub fn buchberger(gens: &[Polynomial], ord: MonomialOrder) -> Result<GroebnerBasis> {
    let nvars = common_nvars(gens)?;
    // Homogeneous ideals: a degrevlex basis is also a ds standard basis, since
    // both orders pick the same leading term of a form.
    let compute_ord = if ord.is_local() && gens.iter().all(|g| g.is_homogeneous()) {
        MonomialOrder::DegRevLex
    } else {
        ord
    };
    let mord = ModuleOrder::Pot(compute_ord);
    let b = engine::compute(&to_vectors(gens, mord), mord, nvars, 1, false);
    let (vs, _) = b.finish();
    let mut elements: Vec<Polynomial> = vs.iter().map(|v| v.to_poly(nvars)).collect();
    if ord.is_local() {
        elements.sort_by(|a, b| {
            let la = a.leading_term(ord).unwrap().1;
            let lb = b.leading_term(ord).unwrap().1;
            ord.cmp(&la, &lb)
        });
    }
    Ok(GroebnerBasis {
        order: ord,
        nvars,
        elements,
        reduced: ord.is_global(),
    })
}

/// Expresses `f` as `Σ c_i gens_i` over the polynomial ring, if possible.
pub fn lift(f: &Polynomial, gens: &[Polynomial]) -> Result<Option<Vec<Polynomial>>> {
    let nvars = common_nvars(gens)?;
    if f.nvars() != nvars && !gens.is_empty() {
        return Err(Error::RingMismatch {
            left: nvars,
            right: f.nvars(),
        });
    }
    let mord = ModuleOrder::Pot(MonomialOrder::DegRevLex);
    let b = engine::compute(&to_vectors(gens, mord), mord, f.nvars(), 1, true);
    let (vs, reps) = b.finish();
    let reps = reps.expect("tracked");
    let basis = Builder::from_basis(mord, f.nvars(), 1, &vs);
    let idx: Vec<usize> = (0..vs.len()).collect();
    let (q, r) = basis.divide(Vector::from_poly(f, &mord), &idx);
    if !r.is_zero() {
        return Ok(None);
    }
    let mut coeffs = vec![Polynomial::zero(f.nvars()); gens.len()];
    for (qk, rep) in q.iter().zip(&reps) {
        if qk.is_zero() {
            continue;
        }
        for (c, rk) in coeffs.iter_mut().zip(rep) {
            *c = &*c + &(qk * rk);
        }
    }
    Ok(Some(coeffs))
}

/// An element of the free module `R^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    components: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        ModuleElement { components }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    /// `Σ c_i · v_i`.
    pub fn dot(&self, v: &[Polynomial]) -> Polynomial {
        let nvars = self.components.first().map_or(0, |p| p.nvars());
        self.components
            .iter()
            .zip(v)
            .fold(Polynomial::zero(nvars), |acc, (a, b)| acc + a * b)
    }

    /// `Σ c_i · cols_i` for module elements `cols`.
    pub fn combine(&self, cols: &[ModuleElement]) -> ModuleElement {
        let rank = cols.first().map_or(0, |c| c.rank());
        let nvars = self.components.first().map_or(0, |p| p.nvars());
        let mut out = vec![Polynomial::zero(nvars); rank];
        for (c, col) in self.components.iter().zip(cols) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(&col.components) {
                *o = &*o + &(c * x);
            }
        }
        ModuleElement::new(out)
    }

    pub fn at_origin(&self) -> Vec<Q> {
        self.components.iter().map(|p| p.constant_term()).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.components.iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }
}

/// Gröbner basis of a submodule of `R^r` (global position-over-term order).
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    rank: usize,
    nvars: usize,
    elements: Vec<ModuleElement>,
}

impl ModuleBasis {
    pub fn new(gens: &[ModuleElement], nvars: usize) -> Result<ModuleBasis> {
        let rank = gens.first().map_or(0, |g| g.rank());
        if gens.iter().any(|g| g.rank() != rank) {
            return Err(Error::RankMismatch);
        }
        let ord = ModuleOrder::Pot(MonomialOrder::DegRevLex);
        let vs: Vec<Vector> = gens
            .iter()
            .map(|g| Vector::from_components(g.components(), &ord))
            .collect();
        let b = engine::compute(&vs, ord, nvars, rank, false);
        let (basis, _) = b.finish();
        Ok(ModuleBasis {
            rank,
            nvars,
            elements: basis
                .iter()
                .map(|v| ModuleElement::new(v.to_components(rank, nvars)))
                .collect(),
        })
    }

    pub fn elements(&self) -> &[ModuleElement] {
        &self.elements
    }

    pub fn contains(&self, v: &ModuleElement) -> bool {
        if v.rank() != self.rank {
            return false;
        }
        let ord = ModuleOrder::Pot(MonomialOrder::DegRevLex);
        let vs: Vec<Vector> = self
            .elements
            .iter()
            .map(|g| Vector::from_components(g.components(), &ord))
            .collect();
        let b = Builder::from_basis(ord, self.nvars, self.rank, &vs);
        b.normal_form(Vector::from_components(v.components(), &ord)).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn lex_basis_of_small_system() {
        let r = Ring::new(["x", "y"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        let gb = buchberger(&[p("x^2-1"), p("x*y-1")], MonomialOrder::Lex).unwrap();
        let mut got: Vec<String> = gb.elements().iter().map(|e| r.format(e)).collect();
        got.sort();
        assert_eq!(got, vec!["x - y", "y^2 - 1"]);
    }

    #[test]
    fn local_versus_global_membership() {
        let r = Ring::new(["x"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        let g = [p("x + x^2")];
        assert!(normal_form(&p("x"), &g, MonomialOrder::Ds).is_zero());
        assert_eq!(normal_form(&p("x"), &g, MonomialOrder::Lex), p("x"));
        let gb = buchberger(&g, MonomialOrder::DegRevLex).unwrap();
        assert!(!gb.contains(&p("x")));
    }

    #[test]
    fn lift_reconstructs() {
        let r = Ring::new(["x", "y"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        let h = p("x^3 - y^2");
        let gens = h.gradient();
        let c = lift(&h, &gens).unwrap().unwrap();
        let back = c.iter().zip(&gens).fold(Polynomial::zero(2), |a, (x, y)| a + x * y);
        assert_eq!(back, h);
        assert!(lift(&p("x"), &[p("x^2")]).unwrap().is_none());
    }

    #[test]
    fn module_membership() {
        let r = Ring::new(["x", "y"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        let gens = vec![
            ModuleElement::new(vec![p("x"), p("y")]),
            ModuleElement::new(vec![p("y"), p("0")]),
        ];
        let mb = ModuleBasis::new(&gens, 2).unwrap();
        assert!(mb.contains(&ModuleElement::new(vec![p("x*y + y^2"), p("y^2")])));
        assert!(!mb.contains(&ModuleElement::new(vec![p("1"), p("0")])));
    }
}
