use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hnf::row_hnf;
use super::{det, IntMatrix};
use crate::error::{Error, Result};

/// A square integer matrix whose determinant has been verified to be ±1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularWitness {
    matrix: IntMatrix,
    det: i8,
}

impl UnimodularWitness {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        let d = det(&matrix)?;
        if !d.abs().is_one() {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        Ok(UnimodularWitness {
            det: if d.is_negative() { -1 } else { 1 },
            matrix,
        })
    }

    pub fn identity(d: usize) -> Self {
        UnimodularWitness {
            matrix: IntMatrix::identity(d),
            det: 1,
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.matrix
    }

    pub fn det(&self) -> i8 {
        self.det
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `self · m`
    pub fn apply(&self, m: &IntMatrix) -> IntMatrix {
        &self.matrix * m
    }

    /// `next · self`
    pub fn then(&self, next: &UnimodularWitness) -> UnimodularWitness {
        UnimodularWitness {
            matrix: &next.matrix * &self.matrix,
            det: self.det * next.det,
        }
    }

    pub fn inverse(&self) -> UnimodularWitness {
        // The Hermite form of a unimodular matrix is the identity, so the
        // recorded transform is the inverse.
        let ech = row_hnf(&self.matrix);
        debug_assert_eq!(ech.h, IntMatrix::identity(self.dim()));
        UnimodularWitness {
            matrix: ech.t,
            det: self.det,
        }
    }

    /// Negates row `i` (left multiplication by a sign diagonal).
    pub(crate) fn negate_row(&mut self, i: usize) {
        self.matrix.negate_row(i);
        self.det = -self.det;
    }
}

/// Deterministic random unimodular matrix: the product of `steps` random
/// elementary row operations (shears with coefficient in [-3, 3], swaps,
/// negations).
pub fn unimodular_random(d: usize, seed: u64, steps: usize) -> UnimodularWitness {
    assert!(d >= 1, "dimension must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = UnimodularWitness::identity(d);
    for _ in 0..steps {
        if d == 1 {
            if rng.gen_bool(0.5) {
                w.negate_row(0);
            }
            continue;
        }
        let i = rng.gen_range(0..d);
        let j = (i + rng.gen_range(1..d)) % d;
        match rng.gen_range(0..6) {
            0 => {
                w.matrix.swap_rows(i, j);
                w.det = -w.det;
            }
            1 => w.negate_row(i),
            _ => {
                let mut k: i64 = rng.gen_range(1..=3);
                if rng.gen_bool(0.5) {
                    k = -k;
                }
                w.matrix.add_row_multiple(i, j, &BigInt::from(k));
            }
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_steps_is_identity() {
        assert_eq!(unimodular_random(4, 99, 0), UnimodularWitness::identity(4));
    }

    #[test]
    fn random_is_unimodular_and_deterministic() {
        for d in 1..=5 {
            for seed in 0..20 {
                let w = unimodular_random(d, seed, 15);
                let checked = UnimodularWitness::new(w.matrix().clone()).unwrap();
                assert_eq!(checked.det(), w.det());
                assert_eq!(w, unimodular_random(d, seed, 15));
            }
        }
    }

    #[test]
    fn inverse_and_composition() {
        let w = unimodular_random(3, 7, 20);
        let inv = w.inverse();
        assert_eq!(w.then(&inv).matrix(), &IntMatrix::identity(3));
        assert_eq!(inv.then(&w).matrix(), &IntMatrix::identity(3));
    }

    #[test]
    fn rejects_non_unimodular() {
        let m = IntMatrix::from_rows(&[[2, 0], [0, 1]]).unwrap();
        assert!(matches!(
            UnimodularWitness::new(m),
            Err(Error::NotUnimodular(_))
        ));
        let m = IntMatrix::from_rows(&[[1, 2, 3]]).unwrap();
        assert!(matches!(
            UnimodularWitness::new(m),
            Err(Error::NotSquare { .. })
        ));
    }
}
