use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{rank, IntMatrix, UnimodularWitness};
use crate::error::{Error, Result};

/// Row-style Hermite normal form `h = t · m` with the pivot columns chosen
/// greedily from the left.
pub(crate) struct RowEchelon {
    pub h: IntMatrix,
    pub t: IntMatrix,
    pub pivots: Vec<usize>,
}

pub(crate) fn row_hnf(m: &IntMatrix) -> RowEchelon {
    let rows = m.rows();
    let mut h = m.clone();
    let mut t = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m.cols() {
        if r == rows {
            break;
        }
        let mut found = false;
        while let Some(p) = (r..rows)
            .filter(|&i| !h.get(i, col).is_zero())
            .min_by(|&a, &b| h.get(a, col).abs().cmp(&h.get(b, col).abs()))
        {
            found = true;
            h.swap_rows(p, r);
            t.swap_rows(p, r);
            let mut cleared = true;
            for i in r + 1..rows {
                if h.get(i, col).is_zero() {
                    continue;
                }
                let q = -h.get(i, col).div_floor(h.get(r, col));
                h.add_row_multiple(i, r, &q);
                t.add_row_multiple(i, r, &q);
                if !h.get(i, col).is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                break;
            }
        }
        if !found {
            continue;
        }
        if h.get(r, col).is_negative() {
            h.negate_row(r);
            t.negate_row(r);
        }
        let pivot = h.get(r, col).clone();
        for i in 0..r {
            let q: BigInt = -h.get(i, col).div_floor(&pivot);
            h.add_row_multiple(i, r, &q);
            t.add_row_multiple(i, r, &q);
        }
        pivots.push(col);
        r += 1;
    }
    RowEchelon { h, t, pivots }
}

fn require_full_row_rank(m: &IntMatrix) -> Result<()> {
    let r = rank(m);
    if r < m.rows() {
        return Err(Error::NotFullRank {
            rank: r,
            rows: m.rows(),
        });
    }
    Ok(())
}

/// Hermite normal form with respect to a chosen ordered basis.
///
/// The `k`-th basis column becomes the `k`-th pivot: restricted to the basis
/// columns the result is upper triangular with positive diagonal and entries
/// above each pivot reduced into `[0, pivot)`. Columns are returned in their
/// original positions. `h = t · m` exactly.
pub fn hnf_basis_form(
    m: &IntMatrix,
    basis_cols: &[usize],
) -> Result<(IntMatrix, UnimodularWitness)> {
    let d = m.rows();
    for &j in basis_cols {
        if j >= m.cols() {
            return Err(Error::BadIndex {
                index: j,
                len: m.cols(),
            });
        }
    }
    require_full_row_rank(m)?;
    let mut seen = vec![false; m.cols()];
    let distinct = basis_cols
        .iter()
        .all(|&j| !std::mem::replace(&mut seen[j], true));
    if basis_cols.len() != d || !distinct {
        return Err(Error::NotABasis(basis_cols.to_vec()));
    }
    let order: Vec<usize> = basis_cols
        .iter()
        .copied()
        .chain((0..m.cols()).filter(|j| !seen[*j]))
        .collect();
    let permuted = m.select_columns(&order)?;
    let ech = row_hnf(&permuted);
    if ech.pivots != (0..d).collect::<Vec<_>>() {
        return Err(Error::NotABasis(basis_cols.to_vec()));
    }
    let mut h = IntMatrix::zeros(d, m.cols());
    for (k, &j) in order.iter().enumerate() {
        for i in 0..d {
            h.set(i, j, ech.h.get(i, k).clone());
        }
    }
    Ok((h, UnimodularWitness::new(ech.t)?))
}

/// Unique representative of the orbit `{T · m : T ∈ GL(d, Z)}`.
pub fn hnf_left_canonical(m: &IntMatrix) -> Result<(IntMatrix, UnimodularWitness)> {
    require_full_row_rank(m)?;
    let ech = row_hnf(m);
    Ok((ech.h, UnimodularWitness::new(ech.t)?))
}

/// As [`hnf_left_canonical`] for any rank; zero rows come last.
pub(crate) fn hnf_left_any_rank(m: &IntMatrix) -> (IntMatrix, UnimodularWitness) {
    let ech = row_hnf(m);
    (
        ech.h,
        UnimodularWitness::new(ech.t).expect("row reduction is unimodular"),
    )
}
