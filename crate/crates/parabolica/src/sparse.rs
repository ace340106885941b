//! Sparse exact linear algebra over ℚ for the chain-complex computations.
//!
//! The boundary and differential matrices of the curvature module have a
//! few nonzero structure constants per column but thousands of rows and
//! columns on the largest models, so the dense engine in [`crate::linalg`]
//! is not suitable. Columns are kept as sorted `(row, value)` lists, and
//! rank/kernel come from a column echelon sweep that reduces each column
//! against previously installed pivot columns. Pivots are normalized to a
//! leading 1, which keeps entries small on the incidence-like matrices
//! that show up here.

use crate::scalar::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Sparse vector: strictly increasing indices, nonzero values.
pub type SVec = Vec<(usize, Rat)>;

pub fn svec_from_dense(v: &[Rat]) -> SVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn svec_to_dense(v: &SVec, len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn svec_unit(i: usize) -> SVec {
    vec![(i, Rat::one())]
}

pub fn svec_scale(v: &SVec, c: &Rat) -> SVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// `a + c·b`, merging sorted supports and dropping exact zeros.
pub fn svec_axpy(a: &SVec, c: &Rat, b: &SVec) -> SVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn svec_add(a: &SVec, b: &SVec) -> SVec {
    svec_axpy(a, &Rat::one(), b)
}

pub fn svec_get(v: &SVec, i: usize) -> Rat {
    match v.binary_search_by_key(&i, |e| e.0) {
        Ok(p) => v[p].1.clone(),
        Err(_) => Rat::zero(),
    }
}

/// Column-major sparse matrix.
#[derive(Clone, Debug)]
pub struct SMat {
    pub rows: usize,
    pub cols: Vec<SVec>,
}

impl SMat {
    pub fn new(rows: usize) -> Self {
        SMat { rows, cols: Vec::new() }
    }

    pub fn with_cols(rows: usize, cols: Vec<SVec>) -> Self {
        SMat { rows, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn push_col(&mut self, col: SVec) {
        debug_assert!(col.iter().all(|(r, _)| *r < self.rows));
        self.cols.push(col);
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Matrix–vector product `M·v = Σ_j v_j · col_j`.
    pub fn apply(&self, v: &SVec) -> SVec {
        let mut out = Vec::new();
        for (j, x) in v {
            out = svec_axpy(&out, x, &self.cols[*j]);
        }
        out
    }

    /// Matrix product; the result has this matrix's rows and `rhs`'s columns.
    pub fn matmul(&self, rhs: &SMat) -> SMat {
        assert_eq!(self.ncols(), rhs.rows, "sparse product shape mismatch");
        SMat {
            rows: self.rows,
            cols: rhs.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    /// Stack vertically: rows of `self` above rows of `other`.
    pub fn vstack(&self, other: &SMat) -> SMat {
        assert_eq!(self.ncols(), other.ncols());
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut col = a.clone();
                col.extend(b.iter().map(|(r, v)| (r + self.rows, v.clone())));
                col
            })
            .collect();
        SMat {
            rows: self.rows + other.rows,
            cols,
        }
    }

    pub fn rank(&self) -> usize {
        let mut red = ColReducer::new(self.rows);
        for c in &self.cols {
            red.offer(c.clone(), Vec::new());
        }
        red.rank()
    }

    /// Basis of `{v : M·v = 0}` as sparse coordinate vectors of length
    /// `ncols()`.
    pub fn kernel_basis(&self) -> Vec<SVec> {
        let mut red = ColReducer::new(self.rows);
        let mut kernel = Vec::new();
        for (j, c) in self.cols.iter().enumerate() {
            if let Some(combo) = red.offer(c.clone(), svec_unit(j)) {
                kernel.push(combo);
            }
        }
        kernel
    }

    /// A basis of the column space (the installed pivot columns).
    pub fn image_basis(&self) -> Vec<SVec> {
        let mut red = ColReducer::new(self.rows);
        for c in &self.cols {
            red.offer(c.clone(), Vec::new());
        }
        red.pivot_columns()
    }
}

/// Incremental column echelon: pivot columns are indexed by their leading
/// row and normalized to a leading 1.
pub struct ColReducer {
    rows: usize,
    pivots: BTreeMap<usize, (SVec, SVec)>,
}

impl ColReducer {
    pub fn new(rows: usize) -> Self {
        ColReducer {
            rows,
            pivots: BTreeMap::new(),
        }
    }

    /// Reduce `col` against the pivots. If it vanishes, return the reduced
    /// augment (a certificate: the same combination applied to the offered
    /// augments). Otherwise install it as a new pivot and return `None`.
    pub fn offer(&mut self, mut col: SVec, mut aug: SVec) -> Option<SVec> {
        loop {
            let Some((lead_row, lead_val)) = col.first().cloned() else {
                return Some(aug);
            };
            debug_assert!(lead_row < self.rows);
            match self.pivots.get(&lead_row) {
                Some((p, pa)) => {
                    let f = -lead_val;
                    col = svec_axpy(&col, &f, p);
                    aug = svec_axpy(&aug, &f, pa);
                }
                None => {
                    let inv = Rat::one() / lead_val;
                    col = svec_scale(&col, &inv);
                    aug = svec_scale(&aug, &inv);
                    self.pivots.insert(lead_row, (col, aug));
                    return None;
                }
            }
        }
    }

    /// Reduce without installing; the residual is zero iff `col` lies in
    /// the span of the pivots.
    pub fn residual(&self, col: SVec) -> SVec {
        self.residual_with_aug(col, Vec::new()).0
    }

    /// Reduce without installing, tracking the reduction through the
    /// augment.
    pub fn residual_with_aug(&self, mut col: SVec, mut aug: SVec) -> (SVec, SVec) {
        loop {
            let Some((lead_row, lead_val)) = col.first().cloned() else {
                return (col, aug);
            };
            match self.pivots.get(&lead_row) {
                Some((p, pa)) => {
                    let f = -lead_val;
                    col = svec_axpy(&col, &f, p);
                    aug = svec_axpy(&aug, &f, pa);
                }
                None => return (col, aug),
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<SVec> {
        self.pivots.values().map(|(c, _)| c.clone()).collect()
    }
}

/// A subspace of ℚ^n held in echelon form for rank and membership queries.
pub struct SparseSpace {
    ambient: usize,
    red: ColReducer,
}

impl SparseSpace {
    pub fn from_vectors(ambient: usize, vectors: &[SVec]) -> Self {
        let mut red = ColReducer::new(ambient);
        for v in vectors {
            red.offer(v.clone(), Vec::new());
        }
        SparseSpace { ambient, red }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.red.rank()
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.red.residual(v.clone()).is_empty()
    }

    pub fn add_vector(&mut self, v: SVec) -> bool {
        self.red.offer(v, Vec::new()).is_none()
    }

    pub fn basis(&self) -> Vec<SVec> {
        self.red.pivot_columns()
    }
}

/// Repeated exact solving of `B·x = v` against a fixed list of columns.
///
/// The pivot augments remember how each pivot was assembled from the
/// offered columns, so a vanishing residual yields the coordinates
/// directly.
pub struct LinSolver {
    red: ColReducer,
    rank: usize,
}

impl LinSolver {
    pub fn new(rows: usize, columns: &[SVec]) -> Self {
        let mut red = ColReducer::new(rows);
        for (j, c) in columns.iter().enumerate() {
            red.offer(c.clone(), svec_unit(j));
        }
        let rank = red.rank();
        LinSolver { red, rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coordinates of `v` in terms of the offered columns, or `None` when
    /// `v` is outside their span.
    pub fn solve(&self, v: &SVec) -> Option<SVec> {
        let (res, aug) = self.red.residual_with_aug(v.clone(), Vec::new());
        if res.is_empty() {
            Some(svec_scale(&aug, &-Rat::one()))
        } else {
            None
        }
    }
}

/// dim(U ∩ V) computed from dim U + dim V − dim(U + V).
pub fn intersection_dim(ambient: usize, u: &[SVec], v: &[SVec]) -> usize {
    let du = SparseSpace::from_vectors(ambient, u).dim();
    let dv = SparseSpace::from_vectors(ambient, v).dim();
    let mut all = u.to_vec();
    all.extend_from_slice(v);
    let dsum = SparseSpace::from_vectors(ambient, &all).dim();
    du + dv - dsum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn col(entries: &[(usize, i64)]) -> SVec {
        entries.iter().map(|(i, v)| (*i, rat(*v))).collect()
    }

    #[test]
    fn rank_and_kernel_agree_with_dense() {
        // [[1,1],[2,2]] has rank 1 and kernel spanned by (1,-1)
        let m = SMat::with_cols(2, vec![col(&[(0, 1), (1, 2)]), col(&[(0, 1), (1, 2)])]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).is_empty());
    }

    #[test]
    fn kernel_certificates_reproduce_zero_columns() {
        let m = SMat::with_cols(
            3,
            vec![
                col(&[(0, 1), (2, 1)]),
                col(&[(1, 1)]),
                col(&[(0, 2), (1, 3), (2, 2)]),
                col(&[(0, 1), (1, 1), (2, 1)]),
            ],
        );
        assert_eq!(m.rank() + m.kernel_basis().len(), m.ncols());
        for v in m.kernel_basis() {
            assert!(m.apply(&v).is_empty());
        }
    }

    #[test]
    fn intersection_dims() {
        let e0 = svec_unit(0);
        let e1 = svec_unit(1);
        let e2 = svec_unit(2);
        let d = intersection_dim(3, &[e0.clone(), e1.clone()], &[e1.clone(), e2]);
        assert_eq!(d, 1);
        assert_eq!(intersection_dim(3, &[e0], &[e1]), 0);
    }

    #[test]
    fn membership() {
        let space = SparseSpace::from_vectors(3, &[col(&[(0, 1), (1, 1)]), col(&[(1, 1), (2, 1)])]);
        assert_eq!(space.dim(), 2);
        assert!(space.contains(&col(&[(0, 1), (2, -1)])));
        assert!(!space.contains(&col(&[(0, 1)])));
    }

    #[test]
    fn lin_solver_recovers_coordinates() {
        let cols = vec![col(&[(0, 1), (1, 1)]), col(&[(1, 2)]), col(&[(2, 5)])];
        let solver = LinSolver::new(3, &cols);
        assert_eq!(solver.rank(), 3);
        let target = col(&[(0, 3), (1, 7), (2, -5)]);
        let x = solver.solve(&target).unwrap();
        // reassemble and compare
        let m = SMat::with_cols(3, cols);
        assert_eq!(m.apply(&x), target);
        assert!(solver.solve(&col(&[(0, 1)])).is_some());
    }
}
