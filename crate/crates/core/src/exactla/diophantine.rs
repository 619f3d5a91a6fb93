use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::hnf::row_hnf;
use super::{snf, IntMatrix};
use crate::error::{Error, Result};

/// One integer solution of `m · x = b` together with a lattice basis of the
/// integer kernel of `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineSolution {
    pub particular: Vec<BigInt>,
    /// Rows of the Hermite normal form of the kernel lattice.
    pub kernel_basis: Vec<Vec<BigInt>>,
}

/// Solves `m · x = b` over the integers. `Ok(None)` means no integer
/// solution exists.
pub fn solve_diophantine(m: &IntMatrix, b: &[BigInt]) -> Result<Option<DiophantineSolution>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has {} entries, matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    // U m W = D, so m x = b  <=>  D y = U b  with  x = W y.
    let s = snf(m);
    let ub = s.left.mul_vec(b);
    let n = m.cols();
    let mut y = vec![BigInt::zero(); n];
    for (i, rhs) in ub.iter().enumerate() {
        if i < s.rank {
            let (q, r) = rhs.div_rem(&s.diagonal[i]);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        } else if !rhs.is_zero() {
            return Ok(None);
        }
    }
    let particular = s.right.mul_vec(&y);

    let kernel_cols: Vec<usize> = (s.rank..n).collect();
    let kernel_basis = if kernel_cols.is_empty() {
        Vec::new()
    } else {
        let k = s.right.select_columns(&kernel_cols)?.transpose();
        let ech = row_hnf(&k);
        ech.h.to_rows().into_iter().take(ech.pivots.len()).collect()
    };
    Ok(Some(DiophantineSolution {
        particular,
        kernel_basis,
    }))
}
