use serde::Serialize;

use super::DivisorGerm;
use crate::ideal::{Ideal, RadicalHint, Radicality};
use crate::linalg;
use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct FactorCheck {
    pub factor: String,
    pub smooth: bool,
    /// Local dimension of the singular locus of the factor, `-1` if empty.
    pub singular_dimension: i64,
    pub singular_dimension_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub i: usize,
    pub j: usize,
    pub intersection_dimension: i64,
    pub intersection_dimension_ok: bool,
    /// Local dimension of the locus where the two gradients are dependent
    /// on the intersection.
    pub tangency_dimension: i64,
    pub transversal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleCheck {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub intersection_dimension: i64,
    pub ok: bool,
}

/// Local geometry of the supplied components: smoothness, codimension of
/// their singular loci, pairwise transversality and triple intersections.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub factors: Vec<FactorCheck>,
    pub pairs: Vec<PairCheck>,
    pub triples: Vec<TripleCheck>,
}

impl ComponentReport {
    pub fn all_smooth(&self) -> bool {
        self.factors.iter().all(|f| f.smooth)
    }

    pub fn singular_loci_ok(&self) -> bool {
        self.factors.iter().all(|f| f.singular_dimension_ok)
    }

    pub fn pairs_transversal(&self) -> bool {
        self.pairs.iter().all(|p| p.transversal && p.intersection_dimension_ok)
    }

    pub fn triples_ok(&self) -> bool {
        self.triples.iter().all(|t| t.ok)
    }

    pub fn all_pass(&self) -> bool {
        self.singular_loci_ok() && self.pairs_transversal() && self.triples_ok()
    }
}

pub(super) fn component_checks(d: &DivisorGerm) -> Result<ComponentReport> {
    let fs = d
        .local_factors()
        .ok_or_else(|| Error::InvalidInput("component checks need a factorization".into()))?;
    let ring = d.ring();
    let n = d.nvars() as i64;
    let ideal = |gens: Vec<Polynomial>| Ideal::new(ring, gens).expect("same ring");

    let factors = fs
        .iter()
        .map(|f| {
            let smooth = f.gradient().iter().any(|p| !p.vanishes_at_origin());
            let sing = ideal(std::iter::once(f.clone()).chain(f.gradient()).collect()).local_dimension();
            FactorCheck {
                factor: ring.format(f),
                smooth,
                singular_dimension: sing,
                singular_dimension_ok: sing <= n - 3,
            }
        })
        .collect();

    let mut pairs = Vec::new();
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            let base = vec![fs[i].clone(), fs[j].clone()];
            let dim = ideal(base.clone()).local_dimension();
            let m = vec![fs[i].gradient(), fs[j].gradient()];
            let minors = linalg::minors(&m, 2);
            let tangency = ideal(base.into_iter().chain(minors).collect()).local_dimension();
            pairs.push(PairCheck {
                i,
                j,
                intersection_dimension: dim,
                intersection_dimension_ok: dim == n - 2,
                tangency_dimension: tangency,
                transversal: tangency <= n - 3,
            });
        }
    }

    let mut triples = Vec::new();
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            for k in j + 1..fs.len() {
                let dim = ideal(vec![fs[i].clone(), fs[j].clone(), fs[k].clone()]).local_dimension();
                triples.push(TripleCheck {
                    i,
                    j,
                    k,
                    intersection_dimension: dim,
                    ok: dim <= n - 3,
                });
            }
        }
    }
    Ok(ComponentReport { factors, pairs, triples })
}

/// For `D = {g·h = 0}`: whenever the Jacobian ideal of the product is
/// radical, so are those of both factors.
#[derive(Clone, Debug, Serialize)]
pub struct SplayedReport {
    pub product: Radicality,
    pub first: Radicality,
    pub second: Radicality,
    pub holds: bool,
}

fn singular_ideal(ring: &std::sync::Arc<Ring>, f: &Polynomial, splitters: Vec<Polynomial>) -> Radicality {
    let i = Ideal::new(ring, std::iter::once(f.clone()).chain(f.gradient())).expect("same ring");
    if i.is_locally_unit() {
        return Radicality::Radical;
    }
    i.is_radical(Some(RadicalHint {
        cohen_macaulay_codim: None,
        splitters,
    }))
    .verdict
}

pub fn splayed_factor_property(ring: &std::sync::Arc<Ring>, g: &Polynomial, h: &Polynomial) -> Result<SplayedReport> {
    let prod = g * h;
    let product = singular_ideal(ring, &prod, vec![g.clone(), h.clone()]);
    let (first, second) = if product == Radicality::Radical {
        (singular_ideal(ring, g, Vec::new()), singular_ideal(ring, h, Vec::new()))
    } else {
        (Radicality::Inconclusive, Radicality::Inconclusive)
    };
    let holds = product != Radicality::Radical || (first == Radicality::Radical && second == Radicality::Radical);
    Ok(SplayedReport {
        product,
        first,
        second,
        holds,
    })
}
