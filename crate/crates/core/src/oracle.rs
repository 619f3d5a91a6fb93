//! Exhaustive reference computations used to cross-check the fast paths.
//!
//! Nothing here shares code with the canonical-form pipeline beyond the
//! matrix type: matroid equality compares full tables, equivalence tries all
//! `2^N` column sign patterns against the left Hermite form of the row lattice, and
//! multiplicities are recomputed as gcds of cofactor-expanded minors.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arimatroid::{Representation, DEFAULT_TABLE_CAP};
use crate::canonical::{assemble, basic_form, canonical_form, TransformWitness};
use crate::error::{Error, Result};
use crate::exactla::{hnf_left_any_rank, unimodular_random, IntMatrix, UnimodularWitness};

pub const DEFAULT_BRUTEFORCE_CAP: usize = 16;

fn check_shapes(x: &Representation, y: &Representation) -> Result<()> {
    if x.d() != y.d() || x.n() != y.n() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            x.d(),
            x.n(),
            y.d(),
            y.n()
        )));
    }
    Ok(())
}

/// Compares the rank and multiplicity of every subset.
pub fn same_arithmetic_matroid(x: &Representation, y: &Representation) -> Result<bool> {
    same_arithmetic_matroid_with_cap(x, y, DEFAULT_TABLE_CAP)
}

pub fn same_arithmetic_matroid_with_cap(
    x: &Representation,
    y: &Representation,
    cap: usize,
) -> Result<bool> {
    check_shapes(x, y)?;
    Ok(x.full_table_with_cap(cap)? == y.full_table_with_cap(cap)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub same_matroid: bool,
    pub equivalent: bool,
    /// First column sign pattern `D` (in binary counting order) for which
    /// `X · D` and `Y` have the same left Hermite form.
    pub witness_sign_pattern: Option<Vec<i8>>,
    pub notes: String,
}

fn sign_pattern(mask: u64, n: usize) -> Vec<i8> {
    (0..n)
        .map(|j| if mask >> j & 1 == 1 { -1 } else { 1 })
        .collect()
}

fn check_bruteforce_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::TooLarge {
            what: "brute-force sign search (N)",
            size: n,
            cap,
        });
    }
    Ok(())
}

/// Every `(T, D)` with `T · X · D = Y`, one per admissible `D`.
pub fn equivalence_witnesses_bruteforce(
    x: &Representation,
    y: &Representation,
    cap: usize,
) -> Result<Vec<TransformWitness>> {
    check_shapes(x, y)?;
    check_bruteforce_cap(x.n(), cap)?;
    let (hy, ty) = hnf_left_any_rank(y.matrix());
    let ty_inv = ty.inverse();
    let mut found = Vec::new();
    for mask in 0..1u64 << x.n() {
        let signs = sign_pattern(mask, x.n());
        let (hx, tx) = hnf_left_any_rank(&x.matrix().scale_columns_by_signs(&signs));
        if hx == hy {
            found.push(TransformWitness {
                left: tx.then(&ty_inv),
                signs,
            });
        }
    }
    Ok(found)
}

/// First witness found by the exhaustive search.
pub fn equivalence_witness_bruteforce(
    x: &Representation,
    y: &Representation,
    cap: usize,
) -> Result<Option<TransformWitness>> {
    check_shapes(x, y)?;
    check_bruteforce_cap(x.n(), cap)?;
    let (hy, ty) = hnf_left_any_rank(y.matrix());
    for mask in 0..1u64 << x.n() {
        let signs = sign_pattern(mask, x.n());
        let (hx, tx) = hnf_left_any_rank(&x.matrix().scale_columns_by_signs(&signs));
        if hx == hy {
            return Ok(Some(TransformWitness {
                left: tx.then(&ty.inverse()),
                signs,
            }));
        }
    }
    Ok(None)
}

pub fn equivalent_bruteforce(x: &Representation, y: &Representation) -> Result<EquivalenceReport> {
    equivalent_bruteforce_with_cap(x, y, DEFAULT_BRUTEFORCE_CAP)
}

pub fn equivalent_bruteforce_with_cap(
    x: &Representation,
    y: &Representation,
    cap: usize,
) -> Result<EquivalenceReport> {
    check_shapes(x, y)?;
    check_bruteforce_cap(x.n(), cap)?;
    let same_matroid = same_arithmetic_matroid_with_cap(x, y, cap)?;
    if !same_matroid {
        return Ok(EquivalenceReport {
            same_matroid,
            equivalent: false,
            witness_sign_pattern: None,
            notes: "rank or multiplicity tables differ".into(),
        });
    }
    let witness = equivalence_witness_bruteforce(x, y, cap)?;
    let notes = match &witness {
        Some(_) => "left Hermite forms agree after a column sign change".into(),
        None => format!("no sign pattern among {} matches", 1u64 << x.n()),
    };
    Ok(EquivalenceReport {
        same_matroid,
        equivalent: witness.is_some(),
        witness_sign_pattern: witness.map(|w| w.signs),
        notes,
    })
}

fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => {
            let mut total = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * cofactor_det(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// `m(S)` as the gcd of the maximal nonvanishing minors of `X_S`.
pub fn multiplicity_gcd_minors(x: &Representation, s: &[usize]) -> Result<BigInt> {
    let sub = x.submatrix(s)?;
    let rows = sub.to_rows();
    for size in (1..=sub.rows().min(sub.cols())).rev() {
        let mut g = BigInt::zero();
        for rs in (0..sub.rows()).combinations(size) {
            for cs in (0..sub.cols()).combinations(size) {
                let minor: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect())
                    .collect();
                g = g.gcd(&cofactor_det(&minor));
            }
        }
        if !g.is_zero() {
            return Ok(g);
        }
    }
    Ok(BigInt::one())
}

/// Every matrix `(B | A')` with `|A'| = |A|` entrywise that represents the
/// same arithmetic matroid as `X`, found by trying all signs of the nonzero
/// entries of `A`. Sorted, without duplicates.
pub fn basic_reps_bruteforce(
    x: &Representation,
    basis: &[usize],
    cap: usize,
) -> Result<Vec<IntMatrix>> {
    let form = basic_form(x, basis)?;
    let support: Vec<(usize, usize)> = (0..form.a().rows())
        .cartesian_product(0..form.a().cols())
        .filter(|&(i, j)| !form.a().get(i, j).is_zero())
        .collect();
    if support.len() > cap {
        return Err(Error::TooLarge {
            what: "brute-force basic forms (nonzero entries)",
            size: support.len(),
            cap,
        });
    }
    let table = x.full_table()?;
    let mut found = Vec::new();
    for mask in 0..1u64 << support.len() {
        let mut a = form.a().clone();
        for (k, &(i, j)) in support.iter().enumerate() {
            if mask >> k & 1 == 1 {
                let v = -a.get(i, j).clone();
                a.set(i, j, v);
            }
        }
        let candidate = assemble(form.basis(), form.non_basis(), form.diag(), &a);
        if Representation::new(candidate.clone())?.full_table()? == table {
            found.push(candidate);
        }
    }
    found.sort_by_key(|p| p.to_rows());
    found.dedup();
    Ok(found)
}

/// A random `(T, D)` whose image did not canonicalize as expected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialFailure {
    pub trial: usize,
    pub seed: u64,
    pub transform: UnimodularWitness,
    pub signs: Vec<i8>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessReport {
    pub trials: usize,
    pub failures: Vec<TrialFailure>,
}

impl UniquenessReport {
    pub fn passed(&self) -> usize {
        self.trials - self.failures.len()
    }

    pub fn all_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Applies `trials` random `(T, D)` to `X` and checks that each image has the
/// canonical form of `X`, that its own witness holds, and that the composed
/// witness maps `X` to the image.
pub fn verify_uniqueness_theorem(
    x: &Representation,
    trials: usize,
    seed: u64,
) -> Result<UniquenessReport> {
    let base = canonical_form(x)?;
    let (d, n) = (x.d(), x.n());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let trial_seed: u64 = rng.gen();
        let transform = unimodular_random(d, trial_seed, 3 * d + 2);
        let signs: Vec<i8> = (0..n)
            .map(|_| if rng.gen_bool(0.5) { -1 } else { 1 })
            .collect();
        let y = transform.apply(&x.matrix().scale_columns_by_signs(&signs));
        let reason = match Representation::new(y.clone()).and_then(|r| canonical_form(&r)) {
            Err(e) => Some(format!("canonicalization failed: {e}")),
            Ok(c) if c.matrix != base.matrix => Some("canonical forms differ".to_string()),
            Ok(c) if !c.witness.maps(&y, &c.matrix) => {
                Some("image witness does not verify".to_string())
            }
            Ok(c) if !TransformWitness::between(&base.witness, &c.witness).maps(x.matrix(), &y) => {
                Some("composed witness does not verify".to_string())
            }
            Ok(_) => None,
        };
        if let Some(reason) = reason {
            failures.push(TrialFailure {
                trial,
                seed: trial_seed,
                transform,
                signs,
                reason,
            });
        }
    }
    Ok(UniquenessReport { trials, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep<const C: usize>(rows: &[[i64; C]]) -> Representation {
        Representation::new(IntMatrix::from_rows(rows).unwrap()).unwrap()
    }

    fn example_x() -> Representation {
        rep(&[
            [1, 0, 0, -4, 0, 3, 0],
            [0, 2, 0, 1, 2, 0, -2],
            [0, 0, 3, 0, 1, -1, -1],
        ])
    }

    #[test]
    fn cofactor_matches_small_cases() {
        let m = |rows: &[[i64; 3]]| {
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        };
        assert_eq!(
            cofactor_det(&m(&[[2, 0, 1], [1, 3, 2], [1, 1, 2]])),
            BigInt::from(6)
        );
        assert_eq!(
            cofactor_det(&m(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]])),
            BigInt::zero()
        );
        assert_eq!(cofactor_det(&[]), BigInt::one());
    }

    #[test]
    fn gcd_minors_agree_with_snf() {
        let x = example_x();
        for mask in 0u64..1 << x.n() {
            let s = crate::arimatroid::mask_to_subset(mask, x.n());
            assert_eq!(
                multiplicity_gcd_minors(&x, &s).unwrap(),
                x.multiplicity(&s).unwrap(),
                "{s:?}"
            );
        }
    }

    #[test]
    fn bruteforce_equivalence_on_small_cases() {
        let x15 = rep(&[[1, 1], [0, 5]]);
        let x25 = rep(&[[1, 2], [0, 5]]);
        let x45 = rep(&[[1, 4], [0, 5]]);
        let r = equivalent_bruteforce(&x15, &x25).unwrap();
        assert!(r.same_matroid && !r.equivalent);
        let r = equivalent_bruteforce(&x15, &x45).unwrap();
        assert!(r.same_matroid && r.equivalent);
        let r = equivalent_bruteforce(&x15, &rep(&[[1, 0], [0, 5]])).unwrap();
        assert!(!r.same_matroid && !r.equivalent);

        for w in equivalence_witnesses_bruteforce(&x15, &x45, 16).unwrap() {
            assert!(w.maps(x15.matrix(), x45.matrix()));
        }
        assert!(matches!(
            equivalent_bruteforce_with_cap(&example_x(), &example_x(), 6),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn bruteforce_basic_reps_match_enumeration() {
        let x = example_x();
        let brute = basic_reps_bruteforce(&x, &[0, 1, 2], 20).unwrap();
        let mut fast = crate::canonical::enumerate_basic_reps(&x, &[0, 1, 2]).unwrap();
        fast.sort_by_key(|p| p.to_rows());
        assert_eq!(brute, fast);
    }

    #[test]
    fn uniqueness_holds_on_the_worked_example() {
        let report = verify_uniqueness_theorem(&example_x(), 50, 1).unwrap();
        assert!(report.all_ok(), "{:?}", report.failures.first());
        assert_eq!(report.passed(), 50);
    }
}
