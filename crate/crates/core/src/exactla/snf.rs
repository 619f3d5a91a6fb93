use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Smith normal form `left · m · right = diag(s_1, ..., s_r, 0, ...)` with
/// `s_k | s_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Invariant factors, all positive.
    pub diagonal: Vec<BigInt>,
    /// Unimodular row transform (rows × rows).
    pub left: IntMatrix,
    /// Unimodular column transform (cols × cols).
    pub right: IntMatrix,
    pub rank: usize,
}

impl SnfResult {
    /// The `rows × cols` diagonal matrix `left · m · right`.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.cols());
        for (k, s) in self.diagonal.iter().enumerate() {
            d.set(k, k, s.clone());
        }
        d
    }

    /// Product of the invariant factors (1 for the zero matrix).
    pub fn invariant_product(&self) -> BigInt {
        self.diagonal.iter().product()
    }
}

/// Working state of the reduction; transforms are optional so that the
/// multiplicity hot path skips them.
struct Reducer {
    a: IntMatrix,
    left: Option<IntMatrix>,
    right: Option<IntMatrix>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, k: usize) {
        self.a.swap_rows(i, k);
        if let Some(u) = &mut self.left {
            u.swap_rows(i, k);
        }
    }

    fn swap_cols(&mut self, i: usize, k: usize) {
        self.a.swap_cols(i, k);
        if let Some(w) = &mut self.right {
            w.swap_cols(i, k);
        }
    }

    fn add_row(&mut self, target: usize, source: usize, f: &BigInt) {
        self.a.add_row_multiple(target, source, f);
        if let Some(u) = &mut self.left {
            u.add_row_multiple(target, source, f);
        }
    }

    fn add_col(&mut self, target: usize, source: usize, f: &BigInt) {
        self.a.add_col_multiple(target, source, f);
        if let Some(w) = &mut self.right {
            w.add_col_multiple(target, source, f);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.left {
            u.negate_row(i);
        }
    }

    /// Moves the smallest nonzero entry of the trailing block to (t, t).
    fn bring_min_to(&mut self, t: usize) -> bool {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        match best {
            Some((i, j)) => {
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                true
            }
            None => false,
        }
    }

    /// Clears row t and column t; returns false if some remainder survived.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            if self.a.get(i, t).is_zero() {
                continue;
            }
            let q = -self.a.get(i, t).div_floor(self.a.get(t, t));
            self.add_row(i, t, &q);
            clean &= self.a.get(i, t).is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a.get(t, j).is_zero() {
                continue;
            }
            let q = -self.a.get(t, j).div_floor(self.a.get(t, t));
            self.add_col(j, t, &q);
            clean &= self.a.get(t, j).is_zero();
        }
        clean
    }

    /// Moves the smallest nonzero entry of row t / column t to (t, t).
    fn bring_cross_min_to(&mut self, t: usize) {
        let mut best = (t, t, self.a.get(t, t).abs());
        for i in t + 1..self.a.rows() {
            let x = self.a.get(i, t).abs();
            if !x.is_zero() && x < best.2 {
                best = (i, t, x);
            }
        }
        for j in t + 1..self.a.cols() {
            let x = self.a.get(t, j).abs();
            if !x.is_zero() && x < best.2 {
                best = (t, j, x);
            }
        }
        self.swap_rows(t, best.0);
        self.swap_cols(t, best.1);
    }

    fn run(mut self) -> (Vec<BigInt>, Option<IntMatrix>, Option<IntMatrix>) {
        let n = self.a.rows().min(self.a.cols());
        let mut diagonal = Vec::new();
        for t in 0..n {
            if !self.bring_min_to(t) {
                break;
            }
            loop {
                if !self.clear_cross(t) {
                    self.bring_cross_min_to(t);
                    continue;
                }
                let pivot = self.a.get(t, t).clone();
                let offender = (t + 1..self.a.rows()).find(|&i| {
                    (t + 1..self.a.cols()).any(|j| !self.a.get(i, j).is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a.get(t, t).is_negative() {
                self.negate_row(t);
            }
            diagonal.push(self.a.get(t, t).clone());
        }
        (diagonal, self.left, self.right)
    }
}

/// Smith normal form with both transforms.
pub fn snf(m: &IntMatrix) -> SnfResult {
    let reducer = Reducer {
        a: m.clone(),
        left: Some(IntMatrix::identity(m.rows())),
        right: Some(IntMatrix::identity(m.cols())),
    };
    let (diagonal, left, right) = reducer.run();
    SnfResult {
        rank: diagonal.len(),
        diagonal,
        left: left.expect("left transform tracked"),
        right: right.expect("right transform tracked"),
    }
}

/// Invariant factors only.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    Reducer {
        a: m.clone(),
        left: None,
        right: None,
    }
    .run()
    .0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::det;

    fn check(m: &IntMatrix) -> SnfResult {
        let r = snf(m);
        assert_eq!(&(&r.left * m) * &r.right, r.diagonal_matrix());
        for w in r.diagonal.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]), "{:?}", r.diagonal);
        }
        assert!(r.diagonal.iter().all(|s| s.is_positive()));
        assert!(det(&r.left).unwrap().abs().is_one());
        assert!(det(&r.right).unwrap().abs().is_one());
        assert_eq!(r.diagonal, invariant_factors(m));
        r
    }

    #[test]
    fn zero_matrix() {
        let r = check(&IntMatrix::zeros(2, 3));
        assert!(r.diagonal.is_empty());
        assert_eq!(r.rank, 0);
        assert!(r.invariant_product().is_one());
    }

    #[test]
    fn single_column() {
        let m = IntMatrix::from_rows(&[[0], [2], [0]]).unwrap();
        assert_eq!(check(&m).diagonal, vec![BigInt::from(2)]);
        let m = IntMatrix::from_rows(&[[6], [-4], [10]]).unwrap();
        assert_eq!(check(&m).diagonal, vec![BigInt::from(2)]);
    }

    #[test]
    fn diagonal_already_reduced() {
        let m = IntMatrix::from_rows(&[[1, 0, 0], [0, 2, 0], [0, 0, 3]]).unwrap();
        // 1 | 2 | 3 fails divisibility, so the normal form is (1, 1, 6)
        let r = check(&m);
        assert_eq!(r.diagonal, vec![1.into(), 1.into(), BigInt::from(6)]);
        assert_eq!(r.invariant_product(), BigInt::from(6));
    }

    #[test]
    fn divisibility_repair() {
        let m = IntMatrix::from_rows(&[[2, 0], [0, 3]]).unwrap();
        assert_eq!(check(&m).diagonal, vec![1.into(), BigInt::from(6)]);
        let m = IntMatrix::from_rows(&[[4, 0], [0, 6]]).unwrap();
        assert_eq!(check(&m).diagonal, vec![2.into(), BigInt::from(12)]);
    }

    #[test]
    fn rank_deficient_rectangular() {
        let m = IntMatrix::from_rows(&[[2, 4, 6], [1, 2, 3], [0, 0, 0]]).unwrap();
        let r = check(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.diagonal, vec![BigInt::one()]);
    }
}
