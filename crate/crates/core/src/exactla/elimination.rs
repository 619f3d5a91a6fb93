use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Bareiss: the quotient is exact
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Rational rank by fraction-free row elimination. Rows are divided by their
/// content after each update to keep entries small.
pub fn rank(m: &IntMatrix) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.to_rows();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            if a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            let pivot = a[r][col].clone();
            let mut content = BigInt::zero();
            let (top, bottom) = a.split_at_mut(i);
            let (src, dst) = (&top[r], &mut bottom[0]);
            for j in col..cols {
                let v = &dst[j] * &pivot - &f * &src[j];
                content = content.gcd(&v);
                dst[j] = v;
            }
            if !content.is_zero() && !content.is_one() {
                for x in &mut a[i][col..] {
                    *x = &*x / &content;
                }
            }
        }
        r += 1;
    }
    r
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_negative() {
        -1
    } else if x.is_positive() {
        1
    } else {
        0
    }
}
