//! Subspaces and quotient spaces of coordinate spaces, in canonical form.

use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

/// A subspace of `K^n`, stored as an RREF basis (one basis vector per row).
/// Equal subspaces therefore compare equal as values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the given vectors.
    pub fn from_rows(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let mut red = crate::matrix::Reducer::new(field, ambient);
        for v in vectors {
            assert!(v.len() == ambient, "subspace vector length mismatch");
            red.insert(crate::matrix::SparseRow::from_dense(v));
        }
        let (basis, pivots) = red.into_rref();
        Subspace { ambient, basis, pivots }
    }

    /// A subspace from a matrix whose rows span it.
    pub fn from_span_matrix(m: &Matrix) -> Subspace {
        let (basis, pivots) = m.rref();
        Subspace { ambient: m.ncols(), basis, pivots }
    }

    /// The kernel of `m` as a subspace of its column space.
    pub fn kernel_of(m: &Matrix) -> Subspace {
        let basis = m.kernel_basis();
        let pivots = basis.rref().1;
        Subspace { ambient: m.ncols(), basis, pivots }
    }

    /// The column span of `m` (image of the map it represents).
    pub fn image_of(m: &Matrix) -> Subspace {
        Subspace::from_span_matrix(&m.transpose())
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn zero_space(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zero(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    /// The canonical basis, one vector per row, in RREF.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as columns: the inclusion map of the subspace.
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` is not
    /// a member. Because the basis is RREF, the coordinates are read off the
    /// pivot columns and verified by reconstruction.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert!(v.len() == self.ambient, "coords length mismatch");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![self.field().zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, r) in recon.iter_mut().enumerate() {
                let b = self.basis.get(i, j);
                if !b.is_zero() {
                    *r = r.add(&c.mul(b));
                }
            }
        }
        if recon.iter().zip(v).all(|(a, b)| a == b) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    /// Expresses every column of `m` in the canonical basis, `None` when any
    /// column falls outside the subspace.
    pub fn coords_matrix(&self, m: &Matrix) -> Option<Matrix> {
        let mut cols = Vec::with_capacity(m.ncols());
        for j in 0..m.ncols() {
            cols.push(self.coords(&m.col(j))?);
        }
        Some(Matrix::from_fn(self.field(), self.dim(), m.ncols(), |i, j| {
            cols[j][i].clone()
        }))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert!(self.ambient == other.ambient, "subspace sum ambient mismatch");
        let stacked = self.basis.vstack(&other.basis);
        Subspace::from_span_matrix(&stacked)
    }

    /// Intersection via the kernel of the stacked coefficient matrix:
    /// a vector is in both spans iff some combination of the first basis
    /// equals one of the second.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert!(self.ambient == other.ambient, "subspace intersect ambient mismatch");
        let a = self.basis.transpose();
        let b = other.basis.transpose().scale(&self.field().one().neg());
        if a.ncols() == 0 || b.ncols() == 0 {
            return Subspace::zero_space(self.field(), self.ambient);
        }
        let coeffs = a.hstack(&b);
        let k = coeffs.kernel_basis();
        let vectors: Vec<Vec<Scalar>> = k
            .rows_iter()
            .map(|row| {
                let x = &row[..self.dim()];
                let mut v = vec![self.field().zero(); self.ambient];
                for (i, c) in x.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (j, tgt) in v.iter_mut().enumerate() {
                        let bv = self.basis.get(i, j);
                        if !bv.is_zero() {
                            *tgt = tgt.add(&c.mul(bv));
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::from_rows(self.field(), self.ambient, &vectors)
    }
}

/// A quotient `K^n / D` with a fixed linear section.
///
/// Quotient coordinates are the non-pivot coordinates of the denominator's
/// RREF basis; the section re-embeds them as the corresponding unit vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    denominator: Subspace,
    projection: Matrix,
    section: Matrix,
}

impl QuotientSpace {
    pub fn by(denominator: Subspace) -> QuotientSpace {
        let n = denominator.ambient_dim();
        let field = denominator.field();
        let pivots = denominator.pivots().to_vec();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut projection = Matrix::zero(field, free.len(), n);
        for (k, &f) in free.iter().enumerate() {
            projection.set(k, f, field.one());
            for (i, &p) in pivots.iter().enumerate() {
                projection.set(k, p, denominator.basis().get(i, f).neg());
            }
        }
        let mut section = Matrix::zero(field, n, free.len());
        for (k, &f) in free.iter().enumerate() {
            section.set(f, k, field.one());
        }
        QuotientSpace { denominator, projection, section }
    }

    pub fn field(&self) -> Field {
        self.denominator.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.denominator.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.projection.nrows()
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denominator
    }

    /// The quotient map as a matrix (quotient coordinates of each class).
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// The canonical section: quotient coordinates to ambient representatives.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }

    pub fn lift(&self, w: &[Scalar]) -> Vec<Scalar> {
        self.section.apply(w)
    }

    /// The induced map on quotients of an ambient map `f` (domain `self`,
    /// codomain `target`), or `None` when `f` does not send the denominator
    /// into the target denominator (i.e. the induced map is ill-defined).
    pub fn induced_map(&self, f: &Matrix, target: &QuotientSpace) -> Option<Matrix> {
        for row in self.denominator.basis().rows_iter() {
            let image = f.apply(row);
            if !target.denominator.contains(&image) {
                return None;
            }
        }
        Some(target.projection.mul(f).mul(&self.section))
    }
}

/// The outcome of a consistent affine solve: one particular solution (free
/// variables zero) plus the full homogeneous solution space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub homogeneous: Subspace,
}

/// Solves `A x = b` exactly, reporting the whole solution set.
pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Option<AffineSolution> {
    let particular = a.solve(b)?;
    Some(AffineSolution { particular, homogeneous: Subspace::kernel_of(a) })
}
