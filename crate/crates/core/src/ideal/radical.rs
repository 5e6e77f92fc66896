//! Radicality of an ideal after localizing at the origin.
//!
//! No primary decomposition is attempted. A ladder of sufficient criteria is
//! tried in order and the answer is `Inconclusive` when none applies. A
//! `NotRadical` answer always carries a witness `c` with `c ∉ I` and either an
//! exhibited power `c^k ∈ I` or a Rabinowitsch certificate `c ∈ √I`.

use serde::Serialize;

use super::{Ideal, RadicalHint};
use crate::gb;
use crate::poly::{Monomial, Polynomial};

const MAX_POWER: u32 = 12;
const MAX_DEPTH: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Radicality {
    Radical,
    NotRadical,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadicalMethod {
    /// Zero ideal or an ideal containing a unit.
    Trivial,
    Monomial,
    ZeroDimensional,
    JacobianR0,
    /// `I = (I:f) ∩ (I+(f))` with both parts decided separately.
    Splitting,
    Witness,
    /// Nothing applied.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalityReport {
    pub verdict: Radicality,
    pub method: RadicalMethod,
    /// Element of `√I \ I` when not radical.
    pub witness: Option<Polynomial>,
    /// Exhibited `k` with `witness^k ∈ I`; `None` when certified by Rabinowitsch.
    pub exponent: Option<u32>,
    pub notes: Vec<String>,
}

impl RadicalMethod {
    pub fn name(&self) -> &'static str {
        match self {
            RadicalMethod::Trivial => "trivial",
            RadicalMethod::Monomial => "monomial",
            RadicalMethod::ZeroDimensional => "zero-dimensional",
            RadicalMethod::JacobianR0 => "jacobian-r0",
            RadicalMethod::Splitting => "splitting",
            RadicalMethod::Witness => "witness",
            RadicalMethod::Exhausted => "exhausted",
        }
    }
}

impl RadicalityReport {
    fn radical(method: RadicalMethod) -> Self {
        RadicalityReport {
            verdict: Radicality::Radical,
            method,
            witness: None,
            exponent: None,
            notes: Vec::new(),
        }
    }

    fn not_radical(method: RadicalMethod, w: Witness) -> Self {
        RadicalityReport {
            verdict: Radicality::NotRadical,
            method,
            witness: Some(w.element),
            exponent: w.exponent,
            notes: Vec::new(),
        }
    }

    fn inconclusive(method: RadicalMethod, note: impl Into<String>) -> Self {
        RadicalityReport {
            verdict: Radicality::Inconclusive,
            method,
            witness: None,
            exponent: None,
            notes: vec![note.into()],
        }
    }

    fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn is_radical(&self) -> bool {
        self.verdict == Radicality::Radical
    }
}

#[derive(Clone, Debug)]
struct Witness {
    element: Polynomial,
    exponent: Option<u32>,
}

/// Independent re-check of a witness against the localized ideal.
pub(crate) fn verify_witness(i: &Ideal, c: &Polynomial, exponent: Option<u32>) -> bool {
    if i.contains_locally(c) {
        return false;
    }
    match exponent {
        Some(k) => i.contains_locally(&c.pow(k)),
        None => i.radical_member(c).unwrap_or(false),
    }
}

fn checked(i: &Ideal, w: Witness) -> Option<Witness> {
    verify_witness(i, &w.element, w.exponent).then_some(w)
}

fn monomial_poly(nvars: usize, m: Monomial) -> Polynomial {
    Polynomial::monomial(nvars, num_traits::One::one(), m)
}

pub(crate) fn is_radical(i: &Ideal, hint: RadicalHint) -> RadicalityReport {
    ladder(i, &hint, 0)
}

fn ladder(i: &Ideal, hint: &RadicalHint, depth: usize) -> RadicalityReport {
    let n = i.nvars();
    if i.is_zero() || i.is_locally_unit() || i.standard_basis().is_unit() {
        return RadicalityReport::radical(RadicalMethod::Trivial);
    }

    if i.is_monomial() {
        // Associated primes of monomial ideals pass through the origin, so the
        // global squarefree criterion is also the local one.
        for g in i.groebner().elements() {
            let m = &g.terms()[0].1;
            let k = m.exponents().iter().copied().max().unwrap_or(0);
            if k > 1 {
                let w = Witness {
                    element: monomial_poly(n, m.support()),
                    exponent: Some(k),
                };
                if let Some(w) = checked(i, w) {
                    return RadicalityReport::not_radical(RadicalMethod::Monomial, w);
                }
                return RadicalityReport::inconclusive(RadicalMethod::Monomial, "monomial witness failed verification");
            }
        }
        return RadicalityReport::radical(RadicalMethod::Monomial);
    }

    let dim = i.local_dimension();
    if dim == 0 {
        return zero_dimensional(i);
    }

    let codim = (n as i64 - dim) as usize;
    let cm_reason = cohen_macaulay_reason(i, hint, codim, depth);
    if let Some(reason) = &cm_reason {
        let minors = match i.jacobian_minors(codim) {
            Ok(m) => m,
            Err(e) => return RadicalityReport::inconclusive(RadicalMethod::JacobianR0, e.to_string()),
        };
        let sing = i.sum(&minors).expect("same ring");
        if sing.local_dimension() < dim {
            return RadicalityReport::radical(RadicalMethod::JacobianR0).note(reason.clone());
        }
        // Not generically reduced, so certainly not radical; find a witness.
        return match witness_search(i, hint, depth) {
            Some(w) => RadicalityReport::not_radical(RadicalMethod::JacobianR0, w).note(reason.clone()),
            None => RadicalityReport::inconclusive(
                RadicalMethod::JacobianR0,
                "Jacobian criterion fails but no witness was found",
            ),
        };
    }

    if let Some(w) = witness_search(i, hint, depth) {
        return RadicalityReport::not_radical(RadicalMethod::Witness, w);
    }

    if depth < MAX_DEPTH {
        if let Some(r) = splitting(i, hint, depth) {
            return r;
        }
    }
    RadicalityReport::inconclusive(RadicalMethod::Exhausted, "no criterion applied")
}

fn zero_dimensional(i: &Ideal) -> RadicalityReport {
    let n = i.nvars();
    let missing = (0..n).find(|&v| !i.contains_locally(&Polynomial::var(n, v)));
    let report = match missing {
        None => RadicalityReport::radical(RadicalMethod::ZeroDimensional),
        Some(v) => {
            let x = Polynomial::var(n, v);
            let w = match i.local_power_membership(&x, 64) {
                Some(k) => Witness {
                    element: x,
                    exponent: Some(k),
                },
                None => Witness {
                    element: x,
                    exponent: None,
                },
            };
            match checked(i, w) {
                Some(w) => RadicalityReport::not_radical(RadicalMethod::ZeroDimensional, w),
                None => {
                    return RadicalityReport::inconclusive(
                        RadicalMethod::ZeroDimensional,
                        "m-primary ideal but no variable power found",
                    )
                }
            }
        }
    };
    // Globally zero-dimensional: squarefree eliminants mean the ideal is
    // radical everywhere, in particular at the origin.
    if i.krull_dimension() == 0 {
        let globally_radical = (0..n).all(|v| i.univariate_eliminant(v).is_ok_and(|e| e.is_squarefree()));
        if globally_radical && !report.is_radical() {
            return RadicalityReport::inconclusive(
                RadicalMethod::ZeroDimensional,
                "internal inconsistency: squarefree eliminants but local test failed",
            );
        }
        return report.note(if globally_radical {
            "all univariate eliminants squarefree"
        } else {
            "some univariate eliminant has a repeated factor"
        });
    }
    report
}

/// Why the localized quotient is Cohen–Macaulay, if we can tell.
fn cohen_macaulay_reason(i: &Ideal, hint: &RadicalHint, codim: usize, depth: usize) -> Option<String> {
    if hint.cohen_macaulay_codim == Some(codim) && depth == 0 {
        return Some("Cohen-Macaulay by hypothesis".into());
    }
    if i.minimal_generators_at_origin().ok()? == codim {
        return Some(format!("complete intersection of codimension {codim}"));
    }
    if i.is_homogeneous() {
        let res = gb::free_resolution(i.gens()).ok()?;
        if res.minimal_at_origin && res.projective_dimension() == codim {
            return Some(format!("perfect: projective dimension {codim} equals codimension"));
        }
    }
    None
}

fn witness_candidates(i: &Ideal, hint: &RadicalHint, depth: usize) -> Vec<Polynomial> {
    let n = i.nvars();
    let mut cands: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(n, v)).collect();
    cands.extend(hint.splitters.iter().cloned());
    if depth == 0 {
        if let Ok(q) = i.quotient_ideal(&Ideal::maximal(i.ring())) {
            cands.extend(q.gens().iter().cloned());
        }
        // Elements killing the Jacobian minors: on a non-reduced component
        // these tend to be the missing radical elements.
        let codim = i.local_codimension();
        if codim > 0 {
            if let Ok(minors) = i.jacobian_minors(codim as usize) {
                let minors = minors.reduced_generators();
                if !minors.is_zero() && minors.gens().len() <= 12 {
                    if let Ok(q) = i.quotient_ideal(&minors) {
                        cands.extend(q.gens().iter().cloned());
                    }
                }
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    cands.retain(|c| c.vanishes_at_origin() && !c.is_zero() && seen.insert(c.monic()));
    cands
}

fn witness_search(i: &Ideal, hint: &RadicalHint, depth: usize) -> Option<Witness> {
    let cands: Vec<Polynomial> = witness_candidates(i, hint, depth)
        .into_iter()
        .filter(|c| !i.contains_locally(c))
        .collect();
    let by_power = crate::par::find_map_first(&cands, |c| {
        let mut p = c.pow(2);
        for k in 2..=MAX_POWER {
            if i.contains_locally(&p) {
                return Some(Witness {
                    element: c.clone(),
                    exponent: Some(k),
                });
            }
            p = &p * c;
        }
        None
    });
    if let Some(w) = by_power.and_then(|w| checked(i, w)) {
        return Some(w);
    }
    if depth > 0 {
        return None;
    }
    crate::par::find_map_first(&cands, |c| {
        i.radical_member(c).ok()?.then(|| Witness {
            element: c.clone(),
            exponent: None,
        })
    })
    .and_then(|w| checked(i, w))
}

fn splitting(i: &Ideal, hint: &RadicalHint, depth: usize) -> Option<RadicalityReport> {
    let n = i.nvars();
    let mut cands: Vec<Polynomial> = hint.splitters.clone();
    cands.extend((0..n).map(|v| Polynomial::var(n, v)));
    let sub_hint = RadicalHint {
        cohen_macaulay_codim: None,
        splitters: hint.splitters.clone(),
    };
    for f in cands {
        if f.is_zero() || !f.vanishes_at_origin() || i.contains_locally(&f) {
            continue;
        }
        let Ok(q1) = i.quotient(&f) else { continue };
        if q1.is_subset_of(i) {
            continue;
        }
        let Ok(q2) = q1.quotient(&f) else { continue };
        if !q2.is_subset_of(&q1) {
            continue;
        }
        let r1 = ladder(&q1, &sub_hint, depth + 1);
        if r1.verdict == Radicality::NotRadical {
            let c = r1.witness.as_ref()? * &f;
            let w = Witness {
                element: c,
                exponent: r1.exponent,
            };
            if let Some(w) = checked(i, w) {
                return Some(
                    RadicalityReport::not_radical(RadicalMethod::Splitting, w)
                        .note(format!("witness from the quotient by a splitting element (depth {depth})")),
                );
            }
            continue;
        }
        if r1.verdict != Radicality::Radical {
            continue;
        }
        let Ok(s) = i.with([f.clone()]) else { continue };
        let r2 = ladder(&s, &sub_hint, depth + 1);
        if r2.verdict == Radicality::Radical {
            return Some(RadicalityReport::radical(RadicalMethod::Splitting).note(format!(
                "split into I:f and I+(f) via f of degree {}",
                f.degree().unwrap_or(0)
            )));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn ladder_on_small_ideals() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let i = |g: &[&str]| Ideal::parse(&r, g).unwrap();
        let rep = i(&["x", "y", "z"]).is_radical(None);
        assert_eq!(rep.verdict, Radicality::Radical);

        let rep = i(&["x^2", "x*y"]).is_radical(None);
        assert_eq!(rep.verdict, Radicality::NotRadical);
        assert_eq!(rep.witness, Some(r.parse("x").unwrap()));

        let rep = i(&["x*y", "x*z", "y*z"]).is_radical(None);
        assert_eq!((rep.verdict, rep.method), (Radicality::Radical, RadicalMethod::Monomial));

        let rep = i(&["x^2 + y^2", "z"]).is_radical(None);
        assert_eq!((rep.verdict, rep.method), (Radicality::Radical, RadicalMethod::JacobianR0));

        let rep = i(&["(x - y^2)^2", "z"]).is_radical(None);
        assert_eq!(rep.verdict, Radicality::NotRadical);
        let w = rep.witness.unwrap();
        assert!(verify_witness(&i(&["(x - y^2)^2", "z"]), &w, rep.exponent));
    }

    #[test]
    fn local_semantics_ignore_far_components() {
        let r = Ring::new(["x", "y"]).unwrap();
        // (x (x - 1)^2): at the origin this is (x), radical.
        let i = Ideal::parse(&r, &["x*(x-1)^2"]).unwrap();
        assert!(i.is_radical(None).is_radical());
    }
}
