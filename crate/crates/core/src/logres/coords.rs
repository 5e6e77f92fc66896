use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LogOneForm;
use crate::divisor::DivisorGerm;
use crate::linalg;
use crate::poly::{Polynomial, Q};
use crate::Result;

/// Seed used for generic coordinate changes unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 0x6e63_7273;

/// An invertible rational linear substitution `x = A·x'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    pub matrix: Vec<Vec<Q>>,
}

impl LinearChange {
    /// Entries in `-3..=3`, redrawn until the matrix is invertible.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let matrix: Vec<Vec<Q>> = (0..n)
                .map(|_| (0..n).map(|_| Q::from_integer(rng.gen_range(-3i64..=3).into())).collect())
                .collect();
            if linalg::rank(&matrix) == n {
                return LinearChange { matrix };
            }
        }
    }

    pub fn images(&self) -> Vec<Polynomial> {
        let n = self.matrix.len();
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .fold(Polynomial::zero(n), |acc, (k, c)| acc + Polynomial::var(n, k).scale(c))
            })
            .collect()
    }

    pub fn apply_to_germ(&self, d: &DivisorGerm) -> Result<DivisorGerm> {
        let im = self.images();
        let factors = d
            .factors()
            .map(|fs| fs.iter().map(|f| f.substitute(&im)).collect());
        DivisorGerm::new(d.ring(), d.h().substitute(&im), factors)
    }

    pub fn apply_to_form(&self, w: &LogOneForm) -> LogOneForm {
        w.pullback(&self.images(), &self.matrix)
    }
}
