use num_traits::Zero;

use super::engine::{self, Builder};
use super::vector::Vector;
use super::ModuleElement;
use crate::linalg;
use crate::par;
use crate::poly::{ModuleOrder, MonomialOrder, Polynomial, Q};
use crate::{Error, Result};

/// Generators of the syzygy module of a list of polynomials. Syzygies are
/// computed over the polynomial ring; by flatness they also generate the
/// syzygies of the localization, so a local `ord` is accepted and ignored.
pub fn syzygies(gens: &[Polynomial], _ord: MonomialOrder) -> Result<Vec<ModuleElement>> {
    super::common_nvars(gens)?;
    let elems: Vec<ModuleElement> = gens.iter().map(|g| ModuleElement::new(vec![g.clone()])).collect();
    module_syzygies(&elems)
}

/// Schreyer syzygies of module elements `f_1..f_k` (all of equal rank).
///
/// With a Gröbner basis `G = R·F` and division quotients `F = T·G`, the
/// lifted S-pair relations of `G` pulled back through `R`, together with the
/// columns of `Id - T·R`, generate `Syz(F)`. The result is then thinned by
/// dropping every candidate that lies in the span of the ones kept before it.
pub fn module_syzygies(gens: &[ModuleElement]) -> Result<Vec<ModuleElement>> {
    let k = gens.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let rank = gens[0].rank();
    if gens.iter().any(|g| g.rank() != rank) {
        return Err(Error::RankMismatch);
    }
    let nvars = gens
        .iter()
        .flat_map(|g| g.components())
        .map(|p| p.nvars())
        .next()
        .unwrap_or(0);
    let ord = ModuleOrder::Top(MonomialOrder::DegRevLex);
    let vs: Vec<Vector> = gens
        .iter()
        .map(|g| Vector::from_components(g.components(), &ord))
        .collect();
    let built = engine::compute(&vs, ord, nvars, rank, true);
    let (basis, reps) = built.finish();
    let reps = reps.expect("tracked");
    let s = basis.len();
    let div = Builder::from_basis(ord, nvars, rank, &basis);
    let all: Vec<usize> = (0..s).collect();

    let mut pairs = Vec::new();
    for a in 0..s {
        for b in a + 1..s {
            let (ma, ca) = div.leading(a);
            let (mb, cb) = div.leading(b);
            if ca != cb {
                continue;
            }
            let l = ma.lcm(mb);
            let redundant = (0..s).any(|c| {
                if c == a || c == b {
                    return false;
                }
                let (mc, cc) = div.leading(c);
                cc == ca && mc.divides(&l) && ma.lcm(mc) != l && mc.lcm(mb) != l
            });
            if !redundant {
                pairs.push((a, b, l));
            }
        }
    }

    let one_q: Q = num_traits::One::one();
    let pulled = par::map(&pairs, |(a, b, l)| -> Result<Vec<Polynomial>> {
        let ma = div.leading(*a).0.quotient_of(l).unwrap();
        let mb = div.leading(*b).0.quotient_of(l).unwrap();
        let sp = Vector::zero()
            .sub_mul(&-one_q.clone(), &ma, &basis[*a], &ord)
            .sub_mul(&one_q, &mb, &basis[*b], &ord);
        let (q, r) = div.divide(sp, &all);
        if !r.is_zero() {
            return Err(Error::Internal("S-polynomial of a Gröbner basis did not reduce to zero".into()));
        }
        let mut sigma: Vec<Polynomial> = q.into_iter().map(|x| -x).collect();
        sigma[*a] = &sigma[*a] + &Polynomial::monomial(nvars, one_q.clone(), ma);
        sigma[*b] = &sigma[*b] - &Polynomial::monomial(nvars, one_q.clone(), mb);
        Ok(pull_back(&sigma, &reps, k, nvars))
    });

    let mut candidates: Vec<Vec<Polynomial>> = Vec::new();
    for p in pulled {
        candidates.push(p?);
    }
    let idx: Vec<usize> = (0..k).collect();
    let back = par::map(&idx, |&l| -> Result<Vec<Polynomial>> {
        let (t, r) = div.divide(vs[l].clone(), &all);
        if !r.is_zero() {
            return Err(Error::Internal("generator not reduced to zero by its own basis".into()));
        }
        let mut v = pull_back(&t, &reps, k, nvars);
        for x in v.iter_mut() {
            *x = -&*x;
        }
        v[l] = &v[l] + &Polynomial::one(nvars);
        Ok(v)
    });
    for v in back {
        candidates.push(v?);
    }
    Ok(thin(candidates, k, nvars))
}

fn pull_back(sigma: &[Polynomial], reps: &[Vec<Polynomial>], k: usize, nvars: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(nvars); k];
    for (s, rep) in sigma.iter().zip(reps) {
        if s.is_zero() {
            continue;
        }
        for (o, r) in out.iter_mut().zip(rep) {
            if !r.is_zero() {
                *o = &*o + &(s * r);
            }
        }
    }
    out
}

/// Keeps candidates in increasing degree while they enlarge the span.
fn thin(mut candidates: Vec<Vec<Polynomial>>, k: usize, nvars: usize) -> Vec<ModuleElement> {
    candidates.retain(|c| c.iter().any(|p| !p.is_zero()));
    let deg = |c: &Vec<Polynomial>| c.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let size = |c: &Vec<Polynomial>| c.iter().map(|p| p.len()).sum::<usize>();
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by_key(|&i| (deg(&candidates[i]), size(&candidates[i]), i));
    let ord = ModuleOrder::Top(MonomialOrder::DegRevLex);
    let mut b = Builder::new(ord, nvars, k, None);
    let mut kept = Vec::new();
    for i in order {
        let v = Vector::from_components(&candidates[i], &ord);
        if b.insert(v, None) {
            kept.push(ModuleElement::new(std::mem::take(&mut candidates[i])));
        }
    }
    kept
}

/// Indices of a subset of `gens` that minimally generates the module they
/// span, after localizing at the origin. Its size is the minimal number of
/// generators `μ`. Nakayama: `gens_l` is redundant exactly when a syzygy has
/// a unit in position `l`, so `μ = k - rank Syz(0)` and any complement of the
/// row space of `Syz(0)` spanned by unit vectors is a valid choice.
pub fn minimal_subset_at_origin(gens: &[ModuleElement]) -> Result<Vec<usize>> {
    let k = gens.len();
    let syz = module_syzygies(gens)?;
    let mut rows: Vec<Vec<Q>> = syz.iter().map(|s| s.at_origin()).filter(|r| r.iter().any(|c| !c.is_zero())).collect();
    let mut chosen = Vec::new();
    let mut current = linalg::rank(&rows);
    for l in 0..k {
        let mut e = vec![Q::zero(); k];
        e[l] = num_traits::One::one();
        rows.push(e);
        let r = linalg::rank(&rows);
        if r > current {
            current = r;
            chosen.push(l);
        } else {
            rows.pop();
        }
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn koszul_syzygies() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let gens = r.vars();
        let syz = syzygies(&gens, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(syz.len(), 3);
        for s in &syz {
            assert!(s.dot(&gens).is_zero());
        }
        let two = syzygies(&gens[..2], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(two.len(), 1);
    }

    #[test]
    fn minimal_generators_of_redundant_list() {
        let r = Ring::new(["x", "y"]).unwrap();
        let p = |s: &str| ModuleElement::new(vec![r.parse(s).unwrap()]);
        let gens = vec![p("x"), p("y"), p("x+y"), p("x + x^2"), p("x*y")];
        assert_eq!(minimal_subset_at_origin(&gens).unwrap().len(), 2);
        // Locally x and x + x^2 generate the same ideal.
        let gens = vec![p("x + x^2"), p("x")];
        assert_eq!(minimal_subset_at_origin(&gens).unwrap(), vec![0]);
    }
}
