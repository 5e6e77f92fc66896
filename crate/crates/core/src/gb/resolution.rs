use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::syzygy::{minimal_subset_at_origin, module_syzygies};
use super::ModuleElement;
use crate::linalg;
use crate::poly::{Polynomial, Q};
use crate::{Error, Result};

/// Free resolution `0 <- R/I <- R <- R^{r_1} <- ... <- R^{r_p} <- 0`,
/// minimal after localizing at the origin.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    nvars: usize,
    /// `maps[i]` lists the images of the basis of `F_{i+1}` in `F_i`.
    pub maps: Vec<Vec<ModuleElement>>,
    /// Ranks `r_0 = 1, r_1, ..., r_p`.
    pub ranks: Vec<usize>,
    /// Generators are quasi-homogeneous for a common positive weight vector,
    /// so local and graded minimality coincide.
    pub graded: bool,
    /// No map has an entry that is a unit at the origin.
    pub minimal_at_origin: bool,
    pub weights: Option<Vec<u32>>,
}

impl FreeResolution {
    /// Projective dimension of `R/I`.
    pub fn projective_dimension(&self) -> usize {
        self.maps.len()
    }

    /// Depth via Auslander–Buchsbaum.
    pub fn depth(&self) -> i64 {
        self.nvars as i64 - self.maps.len() as i64
    }

    /// Every composite of consecutive maps vanishes.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[1].iter().all(|col| col.combine(&w[0]).is_zero()))
    }
}

fn rank_one(gens: &[Polynomial]) -> Vec<ModuleElement> {
    gens.iter().filter(|g| !g.is_zero()).map(|g| ModuleElement::new(vec![g.clone()])).collect()
}

/// Resolution of `R/I`. Each syzygy module is cut down to a minimal
/// generating set at the origin before it is resolved further, so the ranks
/// are the local Betti numbers. Errors when `I` contains a unit at the origin.
pub fn free_resolution(gens: &[Polynomial]) -> Result<FreeResolution> {
    let nvars = super::common_nvars(gens)?;
    if gens.iter().any(|g| !g.is_zero() && !g.vanishes_at_origin()) {
        return Err(Error::UnitIdeal);
    }
    let weights = quasi_homogeneous_weights(gens);
    let mut maps = Vec::new();
    let mut ranks = vec![1usize];
    let mut current = rank_one(gens);
    while !current.is_empty() {
        let keep = minimal_subset_at_origin(&current)?;
        if keep.is_empty() {
            break;
        }
        let chosen: Vec<ModuleElement> = keep.iter().map(|&i| current[i].clone()).collect();
        ranks.push(chosen.len());
        let next = module_syzygies(&chosen)?;
        maps.push(chosen);
        current = next;
        if maps.len() > nvars + 1 {
            return Err(Error::Internal("resolution longer than the number of variables".into()));
        }
    }
    let minimal_at_origin = maps
        .iter()
        .all(|m| m.iter().all(|c| c.components().iter().all(|p| p.vanishes_at_origin())));
    Ok(FreeResolution {
        nvars,
        maps,
        ranks,
        graded: weights.is_some(),
        minimal_at_origin,
        weights,
    })
}

/// A positive integer weight vector making every polynomial weighted
/// homogeneous, if one exists among small candidates.
pub fn quasi_homogeneous_weights(polys: &[Polynomial]) -> Option<Vec<u32>> {
    let nvars = polys.iter().map(|p| p.nvars()).next()?;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for p in polys {
        let ts = p.terms();
        for t in ts.iter().skip(1) {
            let row = t
                .1
                .exponents()
                .iter()
                .zip(ts[0].1.exponents())
                .map(|(&a, &b)| Q::from_integer((a as i64 - b as i64).into()))
                .collect();
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Some(vec![1; nvars]);
    }
    let basis = linalg::nullspace(&rows, nvars);
    if basis.is_empty() {
        return None;
    }
    let d = basis.len();
    let span = 4i64;
    let total = (2 * span + 1).checked_pow(d as u32)?;
    if total > 200_000 {
        // Too many free directions to search; try the plain sum.
        return positive_integer(&basis.iter().fold(vec![Q::zero(); nvars], |acc, b| {
            acc.iter().zip(b).map(|(x, y)| x + y).collect()
        }));
    }
    let mut best: Option<Vec<u32>> = None;
    for code in 0..total {
        let mut c = code;
        let mut v = vec![Q::zero(); nvars];
        for b in &basis {
            let coef = Q::from_integer(((c % (2 * span + 1)) - span).into());
            c /= 2 * span + 1;
            for (x, y) in v.iter_mut().zip(b) {
                *x += &coef * y;
            }
        }
        if let Some(w) = positive_integer(&v) {
            let better = best.as_ref().is_none_or(|b| {
                (w.iter().sum::<u32>(), &w) < (b.iter().sum::<u32>(), b)
            });
            if better {
                best = Some(w);
            }
        }
    }
    best
}

fn positive_integer(v: &[Q]) -> Option<Vec<u32>> {
    if v.iter().any(|x| !x.is_positive()) {
        return None;
    }
    let den = v.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter().map(|x| u32::try_from(x / &g).ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn koszul_and_monomial_resolutions() {
        let r = Ring::new(["x", "y"]).unwrap();
        let res = free_resolution(&r.vars()).unwrap();
        assert_eq!(res.ranks, vec![1, 2, 1]);
        assert_eq!(res.depth(), 0);
        assert!(res.is_complex() && res.graded && res.minimal_at_origin);

        let r = Ring::new(["x", "y", "z"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        let res = free_resolution(&[p("x*y"), p("x*z"), p("y*z")]).unwrap();
        assert_eq!(res.ranks, vec![1, 3, 2]);
        assert!(res.is_complex());
    }

    #[test]
    fn weights_of_quasi_homogeneous_polynomials() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        assert_eq!(quasi_homogeneous_weights(&[p("y^5 + z^3 + x*y^3*z")]), Some(vec![1, 3, 5]));
        assert_eq!(quasi_homogeneous_weights(&[p("x*z*(x + z - y^2)")]), Some(vec![2, 1, 2]));
        assert_eq!(quasi_homogeneous_weights(&[p("x + x^2")]), None);
    }
}
