//! Engine-internal representation: a module element as one term list sorted
//! descending in a fixed [`ModuleOrder`]. Ideals are the rank-one case.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::poly::{ModuleOrder, Monomial, Polynomial, Q};

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Term {
    pub c: Q,
    pub m: Monomial,
    pub comp: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_components(comps: &[Polynomial], ord: &ModuleOrder) -> Self {
        let mut terms: Vec<Term> = comps
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().iter().map(move |(c, m)| Term {
                    c: c.clone(),
                    m: m.clone(),
                    comp,
                })
            })
            .collect();
        terms.sort_by(|a, b| ord.cmp((&b.m, b.comp), (&a.m, a.comp)));
        Vector { terms }
    }

    pub fn from_poly(p: &Polynomial, ord: &ModuleOrder) -> Self {
        Self::from_components(std::slice::from_ref(p), ord)
    }

    pub fn to_components(&self, rank: usize, nvars: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Q, Monomial)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            parts[t.comp].push((t.c.clone(), t.m.clone()));
        }
        parts
            .into_iter()
            .map(|ts| Polynomial::from_terms(nvars, ts))
            .collect()
    }

    pub fn to_poly(&self, nvars: usize) -> Polynomial {
        self.to_components(1, nvars).pop().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.m.degree()).max().unwrap_or(0)
    }

    /// Degree excess of the whole vector over its leading monomial.
    pub fn ecart(&self) -> u32 {
        match self.lead() {
            None => 0,
            Some(t) => self.max_degree() - t.m.degree(),
        }
    }

    pub fn scale(&self, c: &Q) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    c: &t.c * c,
                    m: t.m.clone(),
                    comp: t.comp,
                })
                .collect(),
        }
    }

    pub fn make_monic(&self) -> (Vector, Q) {
        match self.lead() {
            None => (self.clone(), Q::one()),
            Some(t) => {
                let inv = t.c.recip();
                (self.scale(&inv), inv)
            }
        }
    }

    /// `self - c·m·other`.
    pub fn sub_mul(&self, c: &Q, m: &Monomial, other: &Vector, ord: &ModuleOrder) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let a = &self.terms;
        let mut i = 0;
        let mut it = other.terms.iter().map(|t| Term {
            c: -(&t.c * c),
            m: t.m.mul(m),
            comp: t.comp,
        });
        let mut next_b = it.next();
        while let Some(b) = next_b.take() {
            if i >= a.len() {
                out.push(b);
                out.extend(it.by_ref());
                break;
            }
            match ord.cmp((&a[i].m, a[i].comp), (&b.m, b.comp)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                    next_b = Some(b);
                }
                Ordering::Less => {
                    out.push(b);
                    next_b = it.next();
                }
                Ordering::Equal => {
                    let s = &a[i].c + &b.c;
                    if !s.is_zero() {
                        out.push(Term {
                            c: s,
                            m: b.m,
                            comp: b.comp,
                        });
                    }
                    i += 1;
                    next_b = it.next();
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        Vector { terms: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, Ring};

    #[test]
    fn sub_mul_cancels_leading_terms() {
        let r = Ring::new(["x", "y"]).unwrap();
        let ord = ModuleOrder::Pot(MonomialOrder::DegRevLex);
        let f = Vector::from_poly(&r.parse("x^2*y + y").unwrap(), &ord);
        let g = Vector::from_poly(&r.parse("x*y - 1").unwrap(), &ord);
        let d = f.sub_mul(&Q::one(), &Monomial::from_exponents(&[1, 0]), &g, &ord);
        assert_eq!(d.to_poly(2), r.parse("x + y").unwrap());
    }

    #[test]
    fn components_roundtrip() {
        let r = Ring::new(["x", "y"]).unwrap();
        let ord = ModuleOrder::Top(MonomialOrder::DegRevLex);
        let comps = vec![r.parse("x+1").unwrap(), r.parse("0").unwrap(), r.parse("y^2").unwrap()];
        let v = Vector::from_components(&comps, &ord);
        assert_eq!(v.lead().unwrap().comp, 2);
        assert_eq!(v.to_components(3, 2), comps);
    }
}
