use std::fmt;

use smallvec::SmallVec;

/// Exponent vector `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Product of the variables occurring in `self`.
    pub fn support(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|&e| e * k).collect())
    }

    /// Embed into a ring with `extra` new variables placed before the old ones.
    pub fn shift(&self, extra: usize) -> Monomial {
        let mut v: SmallVec<[u32; 8]> = SmallVec::from_elem(0, extra);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    /// Inverse of [`Monomial::shift`]; `None` if one of the dropped variables occurs.
    pub fn unshift(&self, extra: usize) -> Option<Monomial> {
        if self.0[..extra].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Monomial(SmallVec::from_slice(&self.0[extra..])))
    }

    pub(crate) fn exps_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 0, 1]);
        let b = Monomial::from_exponents(&[1, 3, 0]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 3, 1]);
        assert!(!a.divides(&b));
        let q = a.quotient_of(&a.lcm(&b)).unwrap();
        assert_eq!(q.exponents(), &[0, 3, 0]);
        assert_eq!(a.mul(&b).degree(), a.degree() + b.degree());
    }

    #[test]
    fn shift_roundtrip() {
        let a = Monomial::from_exponents(&[1, 2]);
        let s = a.shift(2);
        assert_eq!(s.exponents(), &[0, 0, 1, 2]);
        assert_eq!(s.unshift(2), Some(a));
        assert_eq!(Monomial::var(3, 0).unshift(1), None);
    }
}
