//! Sparse row reduction for relation subspaces.
//!
//! Relation spaces of product quivers have classes with thousands of parallel
//! paths but each spanning vector touches only a handful of them, so rows are
//! kept as sorted `(column, value)` lists.

use std::collections::HashMap;

use super::scalar::Field;

/// Sparse vector: entries sorted by column, no explicit zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Returns `a - factor * b`.
fn sub_scaled<F: Field>(a: &SparseVec<F>, factor: &F, b: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, factor.mul(&b[j].1).neg()));
            j += 1;
        } else {
            let v = a[i].1.sub(&factor.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn normalize<F: Field>(mut v: SparseVec<F>) -> SparseVec<F> {
    v.sort_by_key(|(c, _)| *c);
    let mut out: SparseVec<F> = Vec::with_capacity(v.len());
    for (c, x) in v {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx = lx.add(&x),
            _ => out.push((c, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// Incremental semi-echelon basis; call [`SparseEchelon::finish`] for the rref.
#[derive(Debug, Clone)]
pub struct SparseEchelon<F> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    pivot_of: HashMap<usize, usize>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon { ncols, rows: Vec::new(), pivot_of: HashMap::new() }
    }

    /// Adds a vector to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        self.insert_residual(v).is_some()
    }

    /// Adds a vector and returns its (monic) residual modulo the earlier
    /// rows, or `None` when it was already in the span.
    pub fn insert_residual(&mut self, v: SparseVec<F>) -> Option<&SparseVec<F>> {
        let mut v = normalize(v);
        while let Some((lead, coef)) = v.first().cloned() {
            debug_assert!(lead < self.ncols);
            match self.pivot_of.get(&lead) {
                Some(&r) => v = sub_scaled(&v, &coef, &self.rows[r]),
                None => {
                    let scale = coef.inv();
                    for (_, x) in v.iter_mut() {
                        *x = x.mul(&scale);
                    }
                    self.pivot_of.insert(lead, self.rows.len());
                    self.rows.push(v);
                    return self.rows.last();
                }
            }
        }
        None
    }

    /// Whether `v` lies in the current span.
    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        let mut v = normalize(v.clone());
        while let Some((lead, coef)) = v.first().cloned() {
            match self.pivot_of.get(&lead) {
                Some(&r) => v = sub_scaled(&v, &coef, &self.rows[r]),
                None => return false,
            }
        }
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn finish(self) -> SparseRref<F> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r][0].0));
        let mut rows = self.rows;
        // Largest pivot first: every row consulted during elimination is already reduced.
        for &r in &order {
            let lead = rows[r][0].0;
            let hits: Vec<(usize, F)> =
                rows[r].iter().filter(|(c, _)| *c != lead && self.pivot_of.contains_key(c)).cloned().collect();
            for (c, coef) in hits {
                let other = rows[self.pivot_of[&c]].clone();
                rows[r] = sub_scaled(&rows[r], &coef, &other);
            }
        }
        rows.sort_by_key(|row| row[0].0);
        let pivots = rows.iter().map(|row| row[0].0).collect();
        SparseRref { ncols: self.ncols, rows, pivots }
    }
}

/// Reduced row-echelon basis of a subspace of `F^ncols`.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseRref<F> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> SparseRref<F> {
    pub fn from_vectors(ncols: usize, vectors: impl IntoIterator<Item = SparseVec<F>>) -> Self {
        let mut e = SparseEchelon::new(ncols);
        for v in vectors {
            e.insert(v);
        }
        e.finish()
    }

    pub fn zero(ncols: usize) -> Self {
        SparseRref { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.binary_search(&col).is_ok()
    }

    /// Remainder of `v` modulo the subspace; zero on every pivot column.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let v = normalize(v.clone());
        let mut out = v.clone();
        // Rows are fully reduced, so a pivot coordinate only changes through its own row.
        for (c, coef) in v.iter().filter(|(c, _)| self.is_pivot(*c)) {
            let r = self.pivots.binary_search(c).expect("pivot");
            out = sub_scaled(&out, coef, &self.rows[r]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn dense_rows(&self) -> Vec<Vec<F>> {
        self.rows
            .iter()
            .map(|row| {
                let mut d = vec![F::zero(); self.ncols];
                for (c, x) in row {
                    d[*c] = x.clone();
                }
                d
            })
            .collect()
    }
}

pub fn to_sparse<F: Field>(dense: &[F]) -> SparseVec<F> {
    dense.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::Matrix;
    use crate::linalg::scalar::{rational, Rational};
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn agrees_with_dense_rref(entries in proptest::collection::vec(-2i64..3, 24)) {
            let dense: Vec<Vec<Rational>> = entries.chunks(6).map(|c| c.iter().map(|&x| rational(x)).collect()).collect();
            let m = Matrix::from_rows(6, dense.clone());
            let (r, pivots) = m.rref();
            let sparse = SparseRref::from_vectors(6, dense.iter().map(|v| to_sparse(v)));
            prop_assert_eq!(sparse.pivots(), &pivots[..]);
            let expected: Vec<Vec<Rational>> = r.row_vecs().into_iter().take(pivots.len()).collect();
            prop_assert_eq!(sparse.dense_rows(), expected);
            for v in &dense {
                prop_assert!(sparse.contains(&to_sparse(v)));
            }
        }
    }

    #[test]
    fn reduce_kills_pivots() {
        let v = |xs: &[i64]| to_sparse(&xs.iter().map(|&x| rational(x)).collect::<Vec<_>>());
        let s = SparseRref::from_vectors(3, [v(&[1, -1, 0]), v(&[0, 1, -1])]);
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s.reduce(&v(&[1, 0, 0])), v(&[0, 0, 1]));
        assert!(s.contains(&v(&[2, 0, -2])));
    }
}
