//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;

/// `left * m * right = diag(diagonal)` with unimodular `left` and `right`.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub left: Matrix<BigInt>,
    pub right: Matrix<BigInt>,
    /// Nonzero invariant factors, each dividing the next.
    pub diagonal: Vec<BigInt>,
}

fn int_identity(n: usize) -> Matrix<BigInt> {
    let mut m = Matrix::filled(n, n, BigInt::zero());
    for i in 0..n {
        m.set(i, i, BigInt::one());
    }
    m
}

struct Work {
    a: Matrix<BigInt>,
    left: Matrix<BigInt>,
    right: Matrix<BigInt>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.left] {
            for c in 0..m.cols() {
                let x = m.get(i, c).clone();
                let y = m.get(j, c).clone();
                m.set(i, c, y);
                m.set(j, c, x);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.a, &mut self.right] {
            for r in 0..m.rows() {
                let x = m.get(r, i).clone();
                let y = m.get(r, j).clone();
                m.set(r, i, y);
                m.set(r, j, x);
            }
        }
    }

    /// row_i -= q * row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.left] {
            for c in 0..m.cols() {
                let v = m.get(i, c) - q * m.get(j, c);
                m.set(i, c, v);
            }
        }
    }

    /// col_i -= q * col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.right] {
            for r in 0..m.rows() {
                let v = m.get(r, i) - q * m.get(r, j);
                m.set(r, i, v);
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.left] {
            for c in 0..m.cols() {
                let v = -m.get(i, c);
                m.set(i, c, v);
            }
        }
    }

    /// Position of the smallest nonzero absolute value in the trailing block.
    fn min_entry(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in k..self.a.rows() {
            for c in k..self.a.cols() {
                let v = self.a.get(r, c);
                if v.is_zero() {
                    continue;
                }
                match best {
                    Some((br, bc)) if self.a.get(br, bc).abs() <= v.abs() => {}
                    _ => best = Some((r, c)),
                }
            }
        }
        best
    }
}

pub fn smith_decomposition(m: &Matrix<BigInt>) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work { a: m.clone(), left: int_identity(rows), right: int_identity(cols) };
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((r, c)) = w.min_entry(k) else { break };
        w.swap_rows(k, r);
        w.swap_cols(k, c);
        loop {
            let pivot = w.a.get(k, k).clone();
            let mut changed = false;
            for r in k + 1..rows {
                let q = w.a.get(r, k).div_floor(&pivot);
                if !q.is_zero() {
                    w.add_row(r, k, &q);
                }
                if !w.a.get(r, k).is_zero() {
                    // Remainder smaller than the pivot: bring it up and restart.
                    w.swap_rows(k, r);
                    changed = true;
                    break;
                }
            }
            if changed {
                continue;
            }
            for c in k + 1..cols {
                let q = w.a.get(k, c).div_floor(&pivot);
                if !q.is_zero() {
                    w.add_col(c, k, &q);
                }
                if !w.a.get(k, c).is_zero() {
                    w.swap_cols(k, c);
                    changed = true;
                    break;
                }
            }
            if changed {
                continue;
            }
            // Pivot isolated; enforce divisibility of the trailing block.
            let bad = (k + 1..rows)
                .flat_map(|r| (k + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !w.a.get(r, c).is_multiple_of(&pivot));
            match bad {
                Some((r, _)) => {
                    let one = BigInt::from(-1);
                    w.add_row(k, r, &one);
                }
                None => break,
            }
        }
        if w.a.get(k, k).is_negative() {
            w.negate_row(k);
        }
        k += 1;
    }
    let diagonal: Vec<BigInt> =
        (0..rows.min(cols)).map(|i| w.a.get(i, i).clone()).take_while(|d| !d.is_zero()).collect();
    debug_assert!(diagonal.windows(2).all(|p| p[1].is_multiple_of(&p[0])));
    SmithDecomposition { left: w.left, right: w.right, diagonal }
}

/// Nonzero invariant factors `d_1 | d_2 | ... | d_r`.
pub fn smith_normal_form(m: &Matrix<BigInt>) -> Vec<BigInt> {
    let d = smith_decomposition(m).diagonal;
    assert!(d.windows(2).all(|p| p[1].is_multiple_of(&p[0])), "invariant factors violate the divisibility chain");
    d
}
