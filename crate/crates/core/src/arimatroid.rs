//! The arithmetic matroid represented by an integer matrix.
//!
//! For a column subset `S` the rank is the rational rank of `X_S` and the
//! multiplicity is the index of the lattice generated by `X_S` inside its
//! saturation `span_R(X_S) ∩ Z^d`, which equals the product of the invariant
//! factors of `X_S`.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{det, invariant_factors, rank, IntMatrix};

/// Default cap on the ground-set size for exhaustive subset tables.
pub const DEFAULT_TABLE_CAP: usize = 22;

/// An integer matrix viewed as a list of `N` vectors in `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    matrix: IntMatrix,
    labels: Vec<String>,
}

impl Representation {
    /// Requires full row rank.
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        let x = Self::with_any_rank(matrix)?;
        let r = rank(&x.matrix);
        if r < x.d() {
            return Err(Error::NotFullRank {
                rank: r,
                rows: x.d(),
            });
        }
        Ok(x)
    }

    /// Accepts rank-deficient matrices. Subset tables and layer posets are
    /// defined for these; canonical forms are not.
    pub fn with_any_rank(matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() == 0 {
            return Err(Error::DimensionMismatch(
                "a representation needs at least one row".into(),
            ));
        }
        let labels = (1..=matrix.cols()).map(|i| i.to_string()).collect();
        Ok(Representation { matrix, labels })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} columns",
                labels.len(),
                self.n()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Ambient dimension (number of rows).
    pub fn d(&self) -> usize {
        self.matrix.rows()
    }

    /// Ground-set size (number of columns).
    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_full_rank(&self) -> bool {
        rank(&self.matrix) == self.d()
    }

    pub(crate) fn require_full_rank(&self) -> Result<()> {
        let r = rank(&self.matrix);
        if r < self.d() {
            return Err(Error::NotFullRank {
                rank: r,
                rows: self.d(),
            });
        }
        Ok(())
    }

    /// Sorted, deduplicated copy of `s`, checked against the ground set.
    pub(crate) fn normalize_subset(&self, s: &[usize]) -> Result<Vec<usize>> {
        if let Some(&bad) = s.iter().find(|&&j| j >= self.n()) {
            return Err(Error::BadIndex {
                index: bad,
                len: self.n(),
            });
        }
        let mut v = s.to_vec();
        v.sort_unstable();
        v.dedup();
        Ok(v)
    }

    pub fn submatrix(&self, s: &[usize]) -> Result<IntMatrix> {
        self.matrix.select_columns(&self.normalize_subset(s)?)
    }

    pub fn rank_of(&self, s: &[usize]) -> Result<usize> {
        Ok(rank(&self.submatrix(s)?))
    }

    pub fn multiplicity(&self, s: &[usize]) -> Result<BigInt> {
        Ok(invariant_factors(&self.submatrix(s)?).iter().product())
    }

    /// Rank and multiplicity of a subset from a single Smith reduction.
    pub fn profile(&self, s: &[usize]) -> Result<SubsetProfile> {
        let subset = self.normalize_subset(s)?;
        let factors = invariant_factors(&self.matrix.select_columns(&subset)?);
        Ok(SubsetProfile {
            subset,
            rank: factors.len(),
            multiplicity: factors.iter().product(),
        })
    }

    pub fn full_table(&self) -> Result<MatroidTable> {
        self.full_table_with_cap(DEFAULT_TABLE_CAP)
    }

    /// Profiles of all `2^N` subsets in binary counting order: bit `j` of the
    /// position selects column `j`.
    pub fn full_table_with_cap(&self, cap: usize) -> Result<MatroidTable> {
        let n = self.n();
        if n > cap {
            return Err(Error::TooLarge {
                what: "subset table",
                size: n,
                cap,
            });
        }
        let profiles = (0..1u64 << n)
            .map(|mask| self.profile(&mask_to_subset(mask, n)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatroidTable { n, profiles })
    }

    /// All bases in lexicographic order.
    pub fn bases(&self) -> Vec<Vec<usize>> {
        (0..self.n())
            .combinations(self.d())
            .filter(|b| {
                let sub = self.matrix.select_columns(b).expect("indices in range");
                !det(&sub).expect("square").is_zero()
            })
            .collect()
    }

    pub fn is_basis(&self, b: &[usize]) -> Result<bool> {
        let b = self.normalize_subset(b)?;
        if b.len() != self.d() {
            return Ok(false);
        }
        Ok(!det(&self.matrix.select_columns(&b)?)?.is_zero())
    }

    /// `m(B) = ∏_{x ∈ B} m({x})`, with `m(B) = |det X_B|`.
    pub fn is_multiplicative_basis(&self, b: &[usize]) -> Result<bool> {
        let b = self.normalize_subset(b)?;
        if b.len() != self.d() {
            return Err(Error::NotABasis(b));
        }
        let basis_mult = det(&self.matrix.select_columns(&b)?)?.abs();
        if basis_mult.is_zero() {
            return Err(Error::NotABasis(b));
        }
        if basis_mult.is_one() {
            return Ok(true);
        }
        let mut product = BigInt::one();
        for &x in &b {
            product *= self.multiplicity(&[x])?;
        }
        Ok(product == basis_mult)
    }

    pub fn multiplicative_bases(&self) -> Vec<Vec<usize>> {
        self.bases()
            .into_iter()
            .filter(|b| self.is_multiplicative_basis(b).expect("b is a basis"))
            .collect()
    }

    /// Lexicographically first multiplicative basis, if any.
    pub fn first_multiplicative_basis(&self) -> Option<Vec<usize>> {
        (0..self.n())
            .combinations(self.d())
            .find(|b| self.is_multiplicative_basis(b).unwrap_or(false))
    }

    pub fn is_weakly_multiplicative(&self) -> bool {
        self.first_multiplicative_basis().is_some()
    }
}

pub fn mask_to_subset(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|j| mask >> j & 1 == 1).collect()
}

/// Rank and multiplicity of one subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetProfile {
    /// Sorted zero-based column indices.
    pub subset: Vec<usize>,
    pub rank: usize,
    pub multiplicity: BigInt,
}

/// Profiles of every subset of the ground set; two representations with
/// equal tables represent the same arithmetic matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidTable {
    n: usize,
    profiles: Vec<SubsetProfile>,
}

impl MatroidTable {
    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    /// Profile of the subset whose bit mask is `mask`.
    pub fn get(&self, mask: u64) -> &SubsetProfile {
        &self.profiles[mask as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = &SubsetProfile> {
        self.profiles.iter()
    }

    /// Rank is monotone and submodular over the whole table.
    pub fn rank_is_submodular(&self) -> bool {
        let size = self.profiles.len() as u64;
        (0..size).all(|a| {
            (0..size).all(|b| {
                let (ra, rb) = (self.get(a).rank, self.get(b).rank);
                let (ru, ri) = (self.get(a | b).rank, self.get(a & b).rank);
                ru + ri <= ra + rb && (a & b != a || ra <= rb)
            })
        })
    }
}
