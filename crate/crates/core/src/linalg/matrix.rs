use std::fmt;

use super::scalar::Field;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.cols.max(1)).take(self.rows)).finish()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    /// Builds a matrix from row vectors. All rows must share `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix row");
            data.extend(row);
        }
        Matrix { rows: nrows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Sub-matrix keeping the listed columns, in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> Self {
        let rows = (0..self.rows).map(|r| columns.iter().map(|&c| self.get(r, c).clone()).collect()).collect();
        Matrix::from_rows(columns.len(), rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, F::zero())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| self.row(r).iter().zip(v).fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b)))).collect()
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::<F>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Reduced row-echelon form and the strictly increasing pivot columns.
    /// Zero rows are kept at the bottom so the shape is unchanged.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, found);
            let scale = m.get(pivot_row, col).inv();
            for c in col..m.cols {
                let v = m.get(pivot_row, c).mul(&scale);
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(pivot_row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : m v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![F::zero(); self.cols];
                v[free] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = r.get(row, free).neg();
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, F::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let rows = (0..n).map(|r| red.row(r)[n..].to_vec()).collect();
        Some(Matrix::from_rows(n, rows))
    }
}

/// True iff `v` lies in the span of `basis`. All vectors must share a length.
pub fn subspace_membership<F: Field>(basis: &[Vec<F>], v: &[F]) -> bool {
    if v.iter().all(Field::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let cols = v.len();
    let m = Matrix::from_rows(cols, basis.to_vec());
    let rank = m.rank();
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    Matrix::from_rows(cols, rows).rank() == rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{rational, Rational};
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| rational(x)).collect()).collect())
    }

    fn qv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational(x)).collect()
    }

    #[test]
    fn rref_small_cases() {
        let (r, p) = q(&[&[1, 0], &[0, 1]]).rref();
        assert_eq!(r, q(&[&[1, 0], &[0, 1]]));
        assert_eq!(p, vec![0, 1]);

        let (r, p) = q(&[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r, q(&[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_small_cases() {
        let k = q(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![qv(&[-1, 1])]);
        assert!(q(&[&[1, 0], &[0, 1]]).kernel_basis().is_empty());
    }

    #[test]
    fn membership_small_cases() {
        assert!(subspace_membership(&[qv(&[1, 0])], &qv(&[0, 0])));
        assert!(!subspace_membership(&[qv(&[1, 0])], &qv(&[0, 1])));
        assert!(subspace_membership(&[qv(&[1, 1, 0]), qv(&[0, 1, 1])], &qv(&[1, 2, 1])));
        assert!(!subspace_membership::<Rational>(&[], &qv(&[0, 1])));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = q(&[&[1, 1], &[0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, q(&[&[1, -1], &[0, 1]]));
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
        proptest::collection::vec((-3i64..4, 1i64..4), rows * cols).prop_map(move |entries| {
            let rows_v =
                entries.chunks(cols).map(|c| c.iter().map(|&(n, d)| rational(n) / rational(d)).collect()).collect();
            Matrix::from_rows(cols, rows_v)
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent_and_preserves_rank(m in matrix(5, 7)) {
            let (r, pivots) = m.rref();
            let (rr, pivots2) = r.rref();
            prop_assert_eq!(&rr, &r);
            prop_assert_eq!(&pivots, &pivots2);
            prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
            // Row space preserved: every original row is in the span of the rref rows.
            let basis: Vec<_> = r.row_vecs().into_iter().take(pivots.len()).collect();
            for row in m.row_vecs() {
                prop_assert!(subspace_membership(&basis, &row));
            }
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in matrix(4, 6)) {
            let kernel = m.kernel_basis();
            prop_assert_eq!(kernel.len() + m.rank(), m.cols());
            for v in &kernel {
                prop_assert!(m.mul_vec(v).iter().all(Field::is_zero));
            }
            if !kernel.is_empty() {
                prop_assert_eq!(Matrix::from_rows(m.cols(), kernel.clone()).rank(), kernel.len());
            }
        }
    }
}
