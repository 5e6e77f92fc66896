use super::buchberger;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::Result;

/// Dimension of `K[x]/(ms)`: the size of a largest variable set containing the
/// support of no monomial. `-1` when `1` is among the monomials.
pub fn dimension_of_monomials(ms: &[Monomial], nvars: usize) -> i64 {
    if ms.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<u64> = ms
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    assert!(nvars < 64, "too many variables for subset enumeration");
    let mut best = 0i64;
    for set in 0u64..(1u64 << nvars) {
        let size = set.count_ones() as i64;
        if size > best && supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    best
}

/// Krull dimension of `R/I` for the polynomial ring; `-1` for the unit ideal.
pub fn krull_dimension(gens: &[Polynomial]) -> Result<i64> {
    let nvars = super::common_nvars(gens)?;
    if gens.iter().all(|g| g.is_zero()) {
        return Ok(nvars as i64);
    }
    Ok(buchberger(gens, MonomialOrder::DegRevLex)?.dimension())
}

/// Dimension of the localization of `R/I` at the origin; `-1` when `I`
/// contains a unit there.
pub fn local_dimension(gens: &[Polynomial]) -> Result<i64> {
    let nvars = super::common_nvars(gens)?;
    if gens.iter().all(|g| g.is_zero()) {
        return Ok(nvars as i64);
    }
    if gens.iter().any(|g| !g.vanishes_at_origin()) {
        return Ok(-1);
    }
    Ok(buchberger(gens, MonomialOrder::Ds)?.dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn dimensions() {
        let r = Ring::new(["x", "y", "z", "w"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        assert_eq!(krull_dimension(&[p("x"), p("y"), p("z")]).unwrap(), 1);
        assert_eq!(krull_dimension(&[p("x*z"), p("x*w"), p("y*z"), p("y*w")]).unwrap(), 2);
        assert_eq!(krull_dimension(&[p("x^2"), p("x*y")]).unwrap(), 3);
        assert_eq!(krull_dimension(&[p("1 + x")]).unwrap(), 3);
        assert_eq!(local_dimension(&[p("1 + x")]).unwrap(), -1);
        assert_eq!(krull_dimension(&[p("x*y - 1"), p("x")]).unwrap(), -1);
        // (x + y, z - 1) is a line away from the origin.
        assert_eq!(local_dimension(&[p("x*(x+y)"), p("x*(z - 1)")]).unwrap(), 3);
        assert_eq!(local_dimension(&[p("(x+y)*y"), p("(z - 1)*y"), p("w")]).unwrap(), 2);
    }
}
