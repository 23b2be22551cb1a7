//! Dense matrices over an exact field, with canonical elimination.
//!
//! All decision procedures in this crate reduce to exact linear algebra, so
//! the canonical forms here are load-bearing: reduced row echelon form picks
//! the pivot in the leftmost nonzero column and the topmost available row,
//! kernel bases are themselves RREF matrices, and affine solves put the
//! particular solution on the pivot columns (free variables zero). Two
//! different computations of the same subspace therefore produce identical
//! matrices.
//!
//! Elimination runs on sparse rows internally. The defect-operator systems
//! built elsewhere in the crate can reach thousands of rows with only a few
//! nonzero entries each; dense elimination would waste almost all its work.
//! RREF is unique, so the result is independent of that choice.

use crate::scalar::{Field, Scalar};
use crate::Error;
use std::fmt;

/// A dense row-major matrix over a single [`Field`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows, requiring rectangular shape and a single
    /// field across all entries.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, Error> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch {
                        expected: field,
                        found: s.field(),
                    });
                }
                data.push(s.clone());
            }
        }
        Ok(Matrix { field, rows: rows.len(), cols: ncols, data })
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut m = Matrix::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// A single-column matrix holding `v`.
    pub fn column(field: Field, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, v.len(), 1, |i, _| v[i].clone())
    }

    /// A single-row matrix holding `v`.
    pub fn row_matrix(field: Field, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, 1, v.len(), |_, j| v[j].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        assert!(v.field() == self.field, "field mismatch on set");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(|i| self.row(i))
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols && self.field == rhs.field,
            "matrix add shape/field mismatch"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols && self.field == rhs.field,
            "matrix sub shape/field mismatch"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = a.sub(b);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(c);
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert!(
            self.cols == rhs.rows && self.field == rhs.field,
            "matrix mul shape/field mismatch: {}x{} * {}x{}",
            self.rows,
            self.cols,
            rhs.rows,
            rhs.cols
        );
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Applies the matrix to a coordinate column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert!(v.len() == self.cols, "apply length mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = out[i].add(&a.mul(&v[j]));
            }
        }
        out
    }

    /// Kronecker product. Basis convention: the pair `(i, j)` of factors with
    /// dimensions `(r, s)` sits at flat index `i * s + j`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        assert!(self.field == rhs.field, "kron field mismatch");
        let mut out = Matrix::zero(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * rhs.rows + k, j * rhs.cols + l, a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.field == rhs.field, "hstack mismatch");
        Matrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert!(self.cols == rhs.cols && self.field == rhs.field, "vstack mismatch");
        Matrix::from_fn(self.field, self.rows + rhs.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                rhs.get(i - self.rows, j).clone()
            }
        })
    }

    /// Reduced row echelon form with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut red = Reducer::new(self.field, self.cols);
        for i in 0..self.rows {
            red.insert(SparseRow::from_dense(self.row(i)));
        }
        red.into_rref()
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of `{ x : A x = 0 }`, one basis vector per row, itself
    /// in RREF. A matrix with no rows has the full ambient space as kernel.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut red = Reducer::new(self.field, self.cols);
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, f).neg();
            }
            red.insert(SparseRow::from_dense(&v));
        }
        red.into_rref().0
    }

    /// One solution of `A x = b` with all free variables zero, or `None` when
    /// the system is inconsistent. The kernel describes the remaining
    /// solutions.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert!(b.len() == self.rows, "solve rhs length mismatch");
        let aug = self.hstack(&Matrix::column(self.field, b));
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn invert(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Tensor product of coordinate vectors; the pair `(i, j)` of factors with
/// lengths `(r, s)` lands at flat index `i * s + j`.
pub fn kron_vec(field: Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); a.len() * b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x.mul(y);
            }
        }
    }
    out
}

/// A sparse vector: sorted (column, nonzero value) pairs.
#[derive(Debug, Clone)]
pub(crate) struct SparseRow {
    entries: Vec<(usize, Scalar)>,
}

impl SparseRow {
    pub(crate) fn from_dense(v: &[Scalar]) -> SparseRow {
        SparseRow {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .map(|(i, s)| (i, s.clone()))
                .collect(),
        }
    }

    pub(crate) fn from_entries(mut entries: Vec<(usize, Scalar)>) -> SparseRow {
        entries.sort_by_key(|(c, _)| *c);
        let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (c, s) in entries {
            match merged.last_mut() {
                Some((lc, ls)) if *lc == c => *ls = ls.add(&s),
                _ => merged.push((c, s)),
            }
        }
        merged.retain(|(_, s)| !s.is_zero());
        SparseRow { entries: merged }
    }

    fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(c, s)| (*c, s))
    }

    fn value_at(&self, col: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    fn scale(&mut self, c: &Scalar) {
        for (_, s) in self.entries.iter_mut() {
            *s = s.mul(c);
        }
    }

    /// `self -= coeff * other`, merging sorted entry lists.
    fn axpy(&mut self, coeff: &Scalar, other: &SparseRow) {
        if coeff.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let next_self = self.entries.get(i).map(|(c, _)| *c);
            let next_other = other.entries.get(j).map(|(c, _)| *c);
            match (next_self, next_other) {
                (Some(a), Some(b)) if a == b => {
                    let v = self.entries[i].1.sub(&coeff.mul(&other.entries[j].1));
                    if !v.is_zero() {
                        out.push((a, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => {
                    out.push(self.entries[i].clone());
                    i += 1;
                    let _ = a;
                }
                (Some(_), Some(b)) => {
                    out.push((b, coeff.mul(&other.entries[j].1).neg()));
                    j += 1;
                }
                (Some(_), None) => {
                    out.push(self.entries[i].clone());
                    i += 1;
                }
                (None, Some(b)) => {
                    out.push((b, coeff.mul(&other.entries[j].1).neg()));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        self.entries = out;
    }
}

/// Incremental RREF: rows are kept fully reduced at all times, ordered by
/// pivot column, so extraction is the canonical reduced echelon form.
pub(crate) struct Reducer {
    field: Field,
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_cols: Vec<usize>,
}

impl Reducer {
    pub(crate) fn new(field: Field, ncols: usize) -> Reducer {
        Reducer { field, ncols, rows: Vec::new(), pivot_cols: Vec::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current basis and absorbs any remainder.
    /// Returns true when the rank grew.
    pub(crate) fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            let Some((lead, _)) = row.leading() else {
                return false;
            };
            match self.pivot_cols.binary_search(&lead) {
                Ok(i) => {
                    let coeff = row.value_at(lead).expect("leading entry").clone();
                    let basis = self.rows[i].clone();
                    row.axpy(&coeff, &basis);
                }
                Err(insert_at) => {
                    let lead_val = row.value_at(lead).expect("leading entry").clone();
                    row.scale(&lead_val.inv().expect("nonzero leading entry"));
                    for r in self.rows.iter_mut() {
                        if let Some(c) = r.value_at(lead).cloned() {
                            r.axpy(&c, &row);
                        }
                    }
                    self.rows.insert(insert_at, row);
                    self.pivot_cols.insert(insert_at, lead);
                    return true;
                }
            }
        }
    }

    /// True when `row` lies in the current row space (without inserting it).
    pub(crate) fn reduces_to_zero(&self, row: &SparseRow) -> bool {
        let mut row = row.clone();
        loop {
            let Some((lead, _)) = row.leading() else {
                return true;
            };
            match self.pivot_cols.binary_search(&lead) {
                Ok(i) => {
                    let coeff = row.value_at(lead).expect("leading entry").clone();
                    row.axpy(&coeff, &self.rows[i]);
                }
                Err(_) => return false,
            }
        }
    }

    pub(crate) fn into_rref(self) -> (Matrix, Vec<usize>) {
        let mut m = Matrix::zero(self.field, self.rows.len(), self.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            for (c, s) in &row.entries {
                m.set(i, *c, s.clone());
            }
        }
        (m, self.pivot_cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            Field::Q,
            rows.iter().map(|r| r.iter().map(|&x| Field::Q.from_i64(x)).collect()).collect(),
        )
        .unwrap()
    }

    /// Textbook dense RREF, used only as an independent oracle for the
    /// sparse engine.
    fn dense_rref(m: &Matrix) -> (Matrix, Vec<usize>) {
        let mut a: Vec<Vec<Scalar>> = m.rows_iter().map(|r| r.to_vec()).collect();
        let (rows, cols) = (m.nrows(), m.ncols());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let inv = a[r][c].inv().unwrap();
            for j in 0..cols {
                a[r][j] = a[r][j].mul(&inv);
            }
            for i in 0..rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..cols {
                        a[i][j] = a[i][j].sub(&f.mul(&a[r][j]));
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        a.truncate(r);
        (Matrix::from_rows(m.field(), a).unwrap(), pivots)
    }

    #[test]
    fn rref_pivot_tie_break_leftmost_topmost() {
        let m = qm(&[&[0, 2, 4], &[1, 1, 1], &[1, 3, 5]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r, qm(&[&[1, 0, -1], &[0, 1, 2]]));
    }

    #[test]
    fn rref_is_idempotent() {
        let m = qm(&[&[2, 4, 1], &[1, 2, 0], &[3, 6, 2]]);
        let (r, _) = m.rref();
        let (rr, _) = r.rref();
        assert_eq!(r, rr);
    }

    #[test]
    fn kernel_of_sum_covector_is_canonical() {
        let m = qm(&[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, qm(&[&[1, -1]]));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = qm(&[&[1, 2, 3], &[4, 5, 6]]);
        let k = m.kernel_basis();
        assert_eq!(k.nrows(), 1);
        for row in k.rows_iter() {
            assert!(m.apply(row).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn kernel_of_empty_matrix_is_ambient() {
        let m = Matrix::zero(Field::Q, 0, 3);
        assert_eq!(m.kernel_basis(), Matrix::identity(Field::Q, 3));
    }

    #[test]
    fn solve_particular_has_zero_free_variables() {
        let m = qm(&[&[1, 1]]);
        let x = m.solve(&[Field::Q.from_i64(1)]).unwrap();
        assert_eq!(x, vec![Field::Q.from_i64(1), Field::Q.from_i64(0)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = qm(&[&[1, 1], &[1, 1]]);
        let b = vec![Field::Q.from_i64(1), Field::Q.from_i64(2)];
        assert!(m.solve(&b).is_none());
    }

    #[test]
    fn invert_round_trip_and_singular() {
        let m = qm(&[&[2, 1], &[1, 1]]);
        let inv = m.invert().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Field::Q, 2));
        assert_eq!(inv.mul(&m), Matrix::identity(Field::Q, 2));
        assert!(qm(&[&[1, 2], &[2, 4]]).invert().is_none());
        assert!(qm(&[&[1, 2, 3]]).invert().is_none());
    }

    #[test]
    fn one_by_one_rank_and_invert() {
        let m = qm(&[&[5]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.invert().unwrap(), qm(&[&[1]]).scale(&Field::Q.parse("1/5").unwrap()));
        assert_eq!(qm(&[&[0]]).rank(), 0);
        assert!(qm(&[&[0]]).invert().is_none());
    }

    #[test]
    fn kron_index_convention() {
        // e_i (x) e_j of factors with dims (2, 3) lands at flat index i*3+j.
        let a = Matrix::column(Field::Q, &[Field::Q.from_i64(0), Field::Q.from_i64(1)]);
        let b = Matrix::column(
            Field::Q,
            &[Field::Q.from_i64(0), Field::Q.from_i64(0), Field::Q.from_i64(1)],
        );
        let k = a.kron(&b);
        let col = k.col(0);
        for (idx, v) in col.iter().enumerate() {
            assert_eq!(!v.is_zero(), idx == 1 * 3 + 2);
        }
    }

    #[test]
    fn kron_respects_composition() {
        let a = qm(&[&[1, 2], &[0, 1]]);
        let b = qm(&[&[3, 0], &[1, 1]]);
        let c = qm(&[&[1, 1], &[2, 0]]);
        let d = qm(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn sparse_engine_matches_dense_oracle() {
        let cases: Vec<Matrix> = vec![
            qm(&[&[0, 0], &[0, 0]]),
            qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]),
            qm(&[&[0, 1, 0, 2], &[1, 0, 0, 3], &[0, 0, 0, 0], &[1, 1, 0, 5]]),
            qm(&[&[7]]),
        ];
        for m in cases {
            let (fast, pf) = m.rref();
            let (slow, ps) = dense_rref(&m);
            assert_eq!(fast, slow);
            assert_eq!(pf, ps);
        }
    }

    #[test]
    fn field_mismatch_is_a_structural_error() {
        let rows = vec![vec![Field::Q.from_i64(1), Field::fp(3).unwrap().from_i64(1)]];
        assert!(matches!(
            Matrix::from_rows(Field::Q, rows),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn fp_elimination_wraps_exactly() {
        let f2 = Field::fp(2).unwrap();
        let m = Matrix::from_rows(
            f2,
            vec![
                vec![f2.one(), f2.one()],
                vec![f2.one(), f2.one()],
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        // over F_2 the canonical kernel vector is (1, 1)
        assert_eq!(k.row(0), &[f2.one(), f2.one()][..]);
    }
}
