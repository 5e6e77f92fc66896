//! Ideals of a polynomial ring with cached bases, and the usual operations.
//!
//! Membership, equality and dimension come in two flavors: global (in the
//! polynomial ring) and local (in its localization at the origin, via the
//! `ds` standard basis). The divisor criteria only ever need the local ones.

mod radical;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::gb::{self, GroebnerBasis, ModuleElement};
use crate::linalg;
use crate::poly::univariate::UniPoly;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, Q};
use crate::{Error, Result};

pub use radical::{RadicalMethod, Radicality, RadicalityReport};

pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.ring.format(g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl Ideal {
    /// Ideal generated by `gens`; zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            if g.nvars() != ring.nvars() {
                return Err(Error::RingMismatch {
                    left: ring.nvars(),
                    right: g.nvars(),
                });
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<Ideal> {
        let ps = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, ps)
    }

    /// The maximal ideal of the origin.
    pub fn maximal(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, ring.vars()).expect("same ring")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::RingMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(())
    }

    fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() != self.nvars() {
            return Err(Error::RingMismatch {
                left: self.nvars(),
                right: f.nvars(),
            });
        }
        Ok(())
    }

    /// Cached basis for `ord`; computed at most once per order.
    pub fn basis(&self, ord: MonomialOrder) -> Arc<GroebnerBasis> {
        if let Some(b) = self.cache.lock().unwrap().get(&ord) {
            return b.clone();
        }
        let b = Arc::new(gb::buchberger(&self.gens, ord).expect("generators share the ring"));
        self.cache.lock().unwrap().entry(ord).or_insert(b).clone()
    }

    pub fn groebner(&self) -> Arc<GroebnerBasis> {
        self.basis(MonomialOrder::DegRevLex)
    }

    pub fn standard_basis(&self) -> Arc<GroebnerBasis> {
        self.basis(MonomialOrder::Ds)
    }

    pub fn format(&self, p: &Polynomial) -> String {
        self.ring.format(p)
    }

    pub fn formatted_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.format(g)).collect()
    }

    // ---- membership and comparison -------------------------------------

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.is_zero() || (!self.gens.is_empty() && self.groebner().contains(f))
    }

    pub fn contains_locally(&self, f: &Polynomial) -> bool {
        f.is_zero() || (!self.gens.is_empty() && self.standard_basis().contains(f))
    }

    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        self.check_poly(f)?;
        Ok(self.contains(f))
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn is_locally_subset_of(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains_locally(g))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        Ok(self.is_subset_of(other) && other.is_subset_of(self))
    }

    pub fn equals_locally(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        Ok(self.is_locally_subset_of(other) && other.is_locally_subset_of(self))
    }

    pub fn is_unit(&self) -> bool {
        !self.gens.is_empty() && self.groebner().is_unit()
    }

    /// Contains a polynomial not vanishing at the origin.
    pub fn is_locally_unit(&self) -> bool {
        self.gens.iter().any(|g| !g.vanishes_at_origin())
    }

    /// `f ∈ √I`, decided by `1 ∈ I + (1 - t·f)` in a ring with one more variable.
    pub fn radical_member(&self, f: &Polynomial) -> Result<bool> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.shift(1)).collect();
        let n1 = self.nvars() + 1;
        gens.push(Polynomial::one(n1) - Polynomial::var(n1, 0) * f.shift(1));
        Ok(gb::buchberger(&gens, MonomialOrder::DegRevLex)?.is_unit())
    }

    /// Smallest `k ≤ max_k` with `f^k` in the localized ideal.
    pub fn local_power_membership(&self, f: &Polynomial, max_k: u32) -> Option<u32> {
        let mut p = f.clone();
        for k in 1..=max_k {
            if self.contains_locally(&p) {
                return Some(k);
            }
            p = &p * f;
        }
        None
    }

    // ---- constructions --------------------------------------------------

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn with(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        Ideal::new(&self.ring, self.gens.iter().cloned().chain(extra))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a * b))
            .collect::<Vec<_>>();
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` as the `t`-free part of `t·I + (1-t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ideal::new(&self.ring, []);
        }
        let n1 = self.nvars() + 1;
        let t = Polynomial::var(n1, 0);
        let one_minus_t = Polynomial::one(n1) - t.clone();
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| &t * &g.shift(1)).collect();
        gens.extend(other.gens.iter().map(|g| &one_minus_t * &g.shift(1)));
        let gb = gb::buchberger(&gens, MonomialOrder::Elimination(1))?;
        let kept = gb.elements().iter().filter_map(|g| g.unshift(1));
        Ideal::new(&self.ring, kept)
    }

    pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
        let (first, rest) = ideals
            .split_first()
            .ok_or_else(|| Error::InvalidInput("empty intersection".into()))?;
        rest.iter().try_fold(first.clone(), |acc, j| acc.intersect(j))
    }

    /// `I : f`.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let fi = Ideal::new(&self.ring, [f.clone()])?;
        let inter = self.intersect(&fi)?;
        let gens = inter
            .gens
            .iter()
            .map(|g| {
                g.div_exact(f)
                    .ok_or_else(|| Error::Internal("element of I ∩ (f) not divisible by f".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let q = Ideal::new(&self.ring, gens)?;
        Ok(q.reduced_generators())
    }

    /// `I : J = ∩_g (I : g)`.
    pub fn quotient_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let parts = other
            .gens
            .iter()
            .map(|g| self.quotient(g))
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Ideal::new(&self.ring, [Polynomial::one(self.nvars())]);
        }
        Ideal::intersect_all(&parts).map(|i| i.reduced_generators())
    }

    /// `I : f^∞` together with the first `k` where `I : f^k` stabilizes.
    pub fn saturate(&self, f: &Polynomial) -> Result<(Ideal, usize)> {
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let next = cur.quotient(f)?;
            if next.is_subset_of(&cur) {
                return Ok((cur, k));
            }
            cur = next;
            k += 1;
        }
    }

    /// Same ideal, generated by its reduced degrevlex Gröbner basis.
    pub fn reduced_generators(&self) -> Ideal {
        let gb = self.groebner();
        let out = Ideal::new(&self.ring, gb.elements().to_vec()).expect("same ring");
        out.cache
            .lock()
            .unwrap()
            .insert(MonomialOrder::DegRevLex, gb.clone());
        out
    }

    /// `I ∩ K[x_j : j ∉ vars]`.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.nvars();
        if let Some(&bad) = vars.iter().find(|&&v| v >= n) {
            return Err(Error::VariableOutOfRange { index: bad, nvars: n });
        }
        // Move the eliminated variables to the front and use a block order.
        let mut perm: Vec<usize> = vars.to_vec();
        perm.extend((0..n).filter(|i| !vars.contains(i)));
        let forward: Vec<Polynomial> = (0..n)
            .map(|i| Polynomial::var(n, perm.iter().position(|&p| p == i).unwrap()))
            .collect();
        let back: Vec<Polynomial> = perm.iter().map(|&p| Polynomial::var(n, p)).collect();
        let moved: Vec<Polynomial> = self.gens.iter().map(|g| g.substitute(&forward)).collect();
        let gb = gb::buchberger(&moved, MonomialOrder::Elimination(vars.len()))?;
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.support().iter().all(|&i| i >= vars.len()))
            .map(|g| g.substitute(&back));
        Ideal::new(&self.ring, kept)
    }

    /// Generator of `I ∩ K[x_i]` for a zero-dimensional ideal, found as the
    /// first linear dependency among the normal forms of `1, x_i, x_i^2, ...`.
    pub fn univariate_eliminant(&self, i: usize) -> Result<UniPoly> {
        if self.krull_dimension() != 0 {
            return Err(Error::InvalidInput("eliminant requires a zero-dimensional ideal".into()));
        }
        let gb = self.groebner();
        let x = Polynomial::var(self.nvars(), i);
        let mut nfs: Vec<Polynomial> = vec![gb.normal_form(&Polynomial::one(self.nvars()))];
        let mut power = Polynomial::one(self.nvars());
        loop {
            power = &power * &x;
            nfs.push(gb.normal_form(&power));
            // Coordinates of the normal forms in their common monomial support.
            let mut monos: Vec<Monomial> = nfs.iter().flat_map(|p| p.terms().iter().map(|t| t.1.clone())).collect();
            monos.sort();
            monos.dedup();
            let rows: Vec<Vec<Q>> = monos
                .iter()
                .map(|m| {
                    nfs.iter()
                        .map(|p| {
                            p.terms()
                                .iter()
                                .find(|t| &t.1 == m)
                                .map_or_else(Q::zero, |t| t.0.clone())
                        })
                        .collect()
                })
                .collect();
            let ns = linalg::nullspace(&rows, nfs.len());
            if let Some(v) = ns.into_iter().next() {
                return Ok(UniPoly::new(v).monic());
            }
        }
    }

    // ---- dimension and generators ---------------------------------------

    pub fn krull_dimension(&self) -> i64 {
        if self.gens.is_empty() {
            return self.nvars() as i64;
        }
        self.groebner().dimension()
    }

    pub fn local_dimension(&self) -> i64 {
        if self.gens.is_empty() {
            return self.nvars() as i64;
        }
        if self.is_locally_unit() {
            return -1;
        }
        self.standard_basis().dimension()
    }

    /// Height of the localized ideal, `n - dim`.
    pub fn local_codimension(&self) -> i64 {
        self.nvars() as i64 - self.local_dimension()
    }

    /// Indices of generators forming a minimal generating set at the origin.
    pub fn minimal_generator_indices(&self) -> Result<Vec<usize>> {
        if self.is_locally_unit() {
            return Err(Error::UnitIdeal);
        }
        let elems: Vec<ModuleElement> = self.gens.iter().map(|g| ModuleElement::new(vec![g.clone()])).collect();
        gb::minimal_subset_at_origin(&elems)
    }

    /// `μ(I) = dim_K I / mI`.
    pub fn minimal_generators_at_origin(&self) -> Result<usize> {
        Ok(self.minimal_generator_indices()?.len())
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.is_empty() || self.groebner().elements().iter().all(|g| g.is_term())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn jacobian_matrix(&self) -> Vec<Vec<Polynomial>> {
        self.gens.iter().map(|g| g.gradient()).collect()
    }

    /// Ideal of `c×c` minors of the Jacobian matrix of the generators.
    pub fn jacobian_minors(&self, c: usize) -> Result<Ideal> {
        if c == 0 {
            return Ideal::new(&self.ring, [Polynomial::one(self.nvars())]);
        }
        Ideal::new(&self.ring, linalg::minors(&self.jacobian_matrix(), c))
    }

    pub fn is_radical(&self, hint: Option<RadicalHint>) -> RadicalityReport {
        radical::is_radical(self, hint.unwrap_or_default())
    }
}

/// Generator of `(a) ∩ (b)`, normalized to be monic in degrevlex.
pub fn polynomial_lcm(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.nvars() != b.nvars() {
        return Err(Error::RingMismatch {
            left: a.nvars(),
            right: b.nvars(),
        });
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Polynomial::zero(a.nvars()));
    }
    let ring = Ring::with_vars(a.nvars());
    let inter = Ideal::new(&ring, [a.clone()])?.intersect(&Ideal::new(&ring, [b.clone()])?)?;
    let gb = inter.groebner();
    match gb.elements() {
        [l] => Ok(l.monic()),
        _ => Err(Error::Internal("intersection of principal ideals is not principal".into())),
    }
}

/// Greatest common divisor, monic in degrevlex; `gcd(0, 0) = 0`.
pub fn polynomial_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    let l = polynomial_lcm(a, b)?;
    (a * b)
        .div_exact(&l)
        .map(|g| g.monic())
        .ok_or_else(|| Error::Internal("lcm does not divide the product".into()))
}

/// Extra knowledge passed to [`Ideal::is_radical`].
#[derive(Clone, Debug, Default)]
pub struct RadicalHint {
    /// The localized quotient ring is known to be Cohen–Macaulay of this codimension.
    pub cohen_macaulay_codim: Option<usize>,
    /// Polynomials worth trying as splitting elements `I = (I:f) ∩ (I+(f))`.
    pub splitters: Vec<Polynomial>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn intersections_and_quotients() {
        let r = ring(&["x", "y", "z"]);
        let i = |g: &[&str]| Ideal::parse(&r, g).unwrap();
        let xy = i(&["x"]).intersect(&i(&["y"])).unwrap();
        assert!(xy.equals(&i(&["x*y"])).unwrap());
        let three = Ideal::intersect_all(&[i(&["x", "y"]), i(&["x", "z"]), i(&["y", "z"])]).unwrap();
        assert!(three.equals(&i(&["x*y", "x*z", "y*z"])).unwrap());
        let q = i(&["x^2", "x*y"]).quotient(&r.parse("x").unwrap()).unwrap();
        assert!(q.equals(&i(&["x", "y"])).unwrap());
        let (s, k) = i(&["x^2*y"]).saturate(&r.parse("x").unwrap()).unwrap();
        assert!(s.equals(&i(&["y"])).unwrap());
        assert_eq!(k, 2);
    }

    #[test]
    fn membership_flavors() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        let x = r.parse("x").unwrap();
        assert!(!i.contains(&x));
        assert!(i.radical_member(&x).unwrap());
        let j = Ideal::parse(&r, &["x + x^2"]).unwrap();
        assert!(j.contains_locally(&x) && !j.contains(&x));
    }

    #[test]
    fn minimal_generators() {
        let r = ring(&["x", "y", "z"]);
        let cone = Ideal::parse(&r, &["-y", "-x", "2*z"]).unwrap();
        assert_eq!(cone.minimal_generators_at_origin().unwrap(), 3);
        let red = Ideal::parse(&r, &["x", "y", "x + y", "x*z"]).unwrap();
        assert_eq!(red.minimal_generators_at_origin().unwrap(), 2);
        assert!(Ideal::parse(&r, &["1 + x"]).unwrap().minimal_generators_at_origin().is_err());
    }

    #[test]
    fn gcds() {
        let r = ring(&["x", "y"]);
        let p = |s: &str| r.parse(s).unwrap();
        let g = polynomial_gcd(&p("x^2*y - y^3"), &p("x*y + y^2")).unwrap();
        assert_eq!(g, p("x*y + y^2"));
        assert!(polynomial_gcd(&p("x + 1"), &p("y")).unwrap().is_one());
    }

    #[test]
    fn eliminants() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2 - 1", "y - x"]).unwrap();
        let e = i.univariate_eliminant(1).unwrap();
        assert!(e.is_squarefree());
        assert_eq!(e.degree(), Some(2));
        let e = Ideal::parse(&r, &["x^2", "y"]).unwrap().univariate_eliminant(0).unwrap();
        assert!(!e.is_squarefree());
        let el = Ideal::parse(&r, &["x - y^2", "y^3"]).unwrap().eliminate(&[1]).unwrap();
        assert!(el.equals(&Ideal::parse(&r, &["x^2"]).unwrap()).unwrap());
    }
}
