//! Finite-dimensional bialgebras presented by structure constants.
//!
//! A bialgebra on basis `b_0..b_{n-1}` is stored as four exact tensors:
//! the multiplication `b_i b_j = sum_k c_{ij}^k b_k` (an `n x n^2` matrix,
//! column `i*n+j`), the coordinates of the unit element, the
//! comultiplication `Delta b_i = sum_{j,k} d_i^{jk} b_j (x) b_k` (an
//! `n^2 x n` matrix, row `j*n+k`), and the counit functional. Basis index 0
//! is not required to be the unit.

use crate::matrix::{kron_vec, Matrix};
use crate::scalar::{Field, Scalar};
use crate::Error;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bialgebra {
    field: Field,
    dim: usize,
    basis: Vec<String>,
    unit: Vec<Scalar>,
    counit: Vec<Scalar>,
    mult: Matrix,
    comult: Matrix,
}

impl Bialgebra {
    /// Builds a bialgebra and checks all axioms; the report of the first
    /// failing instance is returned on rejection.
    pub fn new(
        field: Field,
        basis: Vec<String>,
        unit: Vec<Scalar>,
        counit: Vec<Scalar>,
        mult: Matrix,
        comult: Matrix,
    ) -> Result<Bialgebra, Error> {
        let b = Bialgebra::new_unchecked(field, basis, unit, counit, mult, comult)?;
        let report = check_bialgebra_axioms(&b);
        if report.all_pass() {
            Ok(b)
        } else {
            Err(Error::AxiomsFail(Box::new(report)))
        }
    }

    /// Builds a bialgebra checking shapes and fields only. Intended for
    /// exercising the axiom checker on broken tables; every operation in
    /// this crate assumes the axioms hold once an instance exists.
    pub fn new_unchecked(
        field: Field,
        basis: Vec<String>,
        unit: Vec<Scalar>,
        counit: Vec<Scalar>,
        mult: Matrix,
        comult: Matrix,
    ) -> Result<Bialgebra, Error> {
        let n = basis.len();
        if n == 0 {
            return Err(Error::InvalidData("dimension must be positive".into()));
        }
        if unit.len() != n || counit.len() != n {
            return Err(Error::InvalidData(format!(
                "unit/counit length must be {n}, got {}/{}",
                unit.len(),
                counit.len()
            )));
        }
        if mult.nrows() != n || mult.ncols() != n * n {
            return Err(Error::InvalidData(format!(
                "multiplication tensor must be {n}x{}, got {}x{}",
                n * n,
                mult.nrows(),
                mult.ncols()
            )));
        }
        if comult.nrows() != n * n || comult.ncols() != n {
            return Err(Error::InvalidData(format!(
                "comultiplication tensor must be {}x{n}, got {}x{}",
                n * n,
                comult.nrows(),
                comult.ncols()
            )));
        }
        for s in unit.iter().chain(counit.iter()) {
            if s.field() != field {
                return Err(Error::FieldMismatch { expected: field, found: s.field() });
            }
        }
        if mult.field() != field || comult.field() != field {
            return Err(Error::FieldMismatch { expected: field, found: mult.field() });
        }
        Ok(Bialgebra { field, dim: n, basis, unit, counit, mult, comult })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// Coordinates of the unit element.
    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Counit values on the basis.
    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// Multiplication as an `n x n^2` matrix.
    pub fn mult_matrix(&self) -> &Matrix {
        &self.mult
    }

    /// Comultiplication as an `n^2 x n` matrix.
    pub fn comult_matrix(&self) -> &Matrix {
        &self.comult
    }

    pub fn unit_column(&self) -> Matrix {
        Matrix::column(self.field, &self.unit)
    }

    pub fn counit_row(&self) -> Matrix {
        Matrix::row_matrix(self.field, &self.counit)
    }

    /// `c_{ij}^k`: coefficient of `b_k` in `b_i b_j`.
    pub fn mult_coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.mult.get(k, i * self.dim + j)
    }

    /// `d_i^{jk}`: coefficient of `b_j (x) b_k` in `Delta b_i`.
    pub fn comult_coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.comult.get(j * self.dim + k, i)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Product of two coordinate vectors.
    pub fn mult_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.mult.apply(&kron_vec(self.field, a, b))
    }

    /// Product on `B (x) B` (componentwise in the tensor legs).
    pub fn mult2_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![self.field.zero(); n * n];
        for (ab, xv) in x.iter().enumerate() {
            if xv.is_zero() {
                continue;
            }
            let (a, b) = (ab / n, ab % n);
            for (cd, yv) in y.iter().enumerate() {
                if yv.is_zero() {
                    continue;
                }
                let (c, d) = (cd / n, cd % n);
                let coeff = xv.mul(yv);
                for k in 0..n {
                    let m1 = self.mult_coeff(a, c, k);
                    if m1.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        let m2 = self.mult_coeff(b, d, l);
                        if m2.is_zero() {
                            continue;
                        }
                        let idx = k * n + l;
                        out[idx] = out[idx].add(&coeff.mul(m1).mul(m2));
                    }
                }
            }
        }
        out
    }

    pub fn comult_vec(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.comult.apply(a)
    }

    pub fn counit_of(&self, a: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (x, e) in a.iter().zip(&self.counit) {
            if !x.is_zero() && !e.is_zero() {
                acc = acc.add(&x.mul(e));
            }
        }
        acc
    }

    /// Matrix of left multiplication by basis element `i`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n, n, |k, j| self.mult_coeff(i, j, k).clone())
    }

    /// Matrix of right multiplication by basis element `i`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n, n, |k, j| self.mult_coeff(j, i, k).clone())
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mult_by(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zero(self.field, n, n);
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.left_mult(i).scale(c));
        }
        m
    }

    pub fn right_mult_by(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zero(self.field, n, n);
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.right_mult(i).scale(c));
        }
        m
    }

    /// The augmentation ideal `ker(counit)` as a canonical basis matrix.
    pub fn augmentation_ideal(&self) -> Matrix {
        self.counit_row().kernel_basis()
    }

    /// Returns a copy with a single multiplication coefficient replaced.
    /// Shape-checked only; used to probe the axiom checker.
    pub fn with_mult_coeff(&self, i: usize, j: usize, k: usize, v: Scalar) -> Bialgebra {
        let mut mult = self.mult.clone();
        mult.set(k, i * self.dim + j, v);
        Bialgebra { mult, ..self.clone() }
    }

    /// Returns a copy with a single comultiplication coefficient replaced.
    pub fn with_comult_coeff(&self, i: usize, j: usize, k: usize, v: Scalar) -> Bialgebra {
        let mut comult = self.comult.clone();
        comult.set(j * self.dim + k, i, v);
        Bialgebra { comult, ..self.clone() }
    }
}

/// One failing axiom instance: the basis tuple it was detected on and the
/// two sides' coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub tuple: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

fn violation(tuple: Vec<usize>, lhs: &[Scalar], rhs: &[Scalar]) -> Option<Violation> {
    if lhs == rhs {
        None
    } else {
        Some(Violation { tuple, lhs: lhs.to_vec(), rhs: rhs.to_vec() })
    }
}

/// Outcome of the five bialgebra axiom groups, with the first violation per
/// group (algebra-map conditions for the comultiplication and counit are
/// reported separately).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub associativity: Option<Violation>,
    pub unitality: Option<Violation>,
    pub coassociativity: Option<Violation>,
    pub counitality: Option<Violation>,
    pub comult_is_algebra_map: Option<Violation>,
    pub counit_is_algebra_map: Option<Violation>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, v)| v.is_none())
    }

    pub fn checks(&self) -> [(&'static str, &Option<Violation>); 6] {
        [
            ("associativity", &self.associativity),
            ("unitality", &self.unitality),
            ("coassociativity", &self.coassociativity),
            ("counitality", &self.counitality),
            ("comultiplication is an algebra map", &self.comult_is_algebra_map),
            ("counit is an algebra map", &self.counit_is_algebra_map),
        ]
    }

    pub fn first_failure(&self) -> Option<(&'static str, Violation)> {
        self.checks()
            .iter()
            .find_map(|(name, v)| v.as_ref().map(|v| (*name, v.clone())))
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, check) in self.checks() {
            match check {
                None => writeln!(f, "  {name}: ok")?,
                Some(v) => {
                    let tuple: Vec<String> = v.tuple.iter().map(|t| t.to_string()).collect();
                    writeln!(
                        f,
                        "  {name}: FAIL at basis tuple ({}): lhs = [{}], rhs = [{}]",
                        tuple.join(","),
                        render_vec(&v.lhs),
                        render_vec(&v.rhs),
                    )?;
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn render_vec(v: &[Scalar]) -> String {
    v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

/// Checks all bialgebra axioms instance by instance, recording the first
/// violating basis tuple per axiom group.
pub fn check_bialgebra_axioms(b: &Bialgebra) -> AxiomReport {
    let n = b.dim();
    let mut report = AxiomReport {
        associativity: None,
        unitality: None,
        coassociativity: None,
        counitality: None,
        comult_is_algebra_map: None,
        counit_is_algebra_map: None,
    };

    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = b.mult_vec(&b.basis_vector(i), &b.basis_vector(j));
            for k in 0..n {
                let lhs = b.mult_vec(&ij, &b.basis_vector(k));
                let jk = b.mult_vec(&b.basis_vector(j), &b.basis_vector(k));
                let rhs = b.mult_vec(&b.basis_vector(i), &jk);
                if let Some(v) = violation(vec![i, j, k], &lhs, &rhs) {
                    report.associativity = Some(v);
                    break 'assoc;
                }
            }
        }
    }

    for i in 0..n {
        let e = b.basis_vector(i);
        let left = b.mult_vec(b.unit(), &e);
        let right = b.mult_vec(&e, b.unit());
        if let Some(v) = violation(vec![i], &left, &e) {
            report.unitality = Some(v);
            break;
        }
        if let Some(v) = violation(vec![i], &right, &e) {
            report.unitality = Some(v);
            break;
        }
    }

    for i in 0..n {
        let d = b.comult_vec(&b.basis_vector(i));
        // expand the left (respectively right) tensor leg once more
        let mut lhs = vec![b.field().zero(); n * n * n];
        let mut rhs = vec![b.field().zero(); n * n * n];
        for (jk, c) in d.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, k) = (jk / n, jk % n);
            let dj = b.comult_vec(&b.basis_vector(j));
            for (pq, cc) in dj.iter().enumerate() {
                if cc.is_zero() {
                    continue;
                }
                let (p, q) = (pq / n, pq % n);
                let idx = (p * n + q) * n + k;
                lhs[idx] = lhs[idx].add(&c.mul(cc));
            }
            let dk = b.comult_vec(&b.basis_vector(k));
            for (pq, cc) in dk.iter().enumerate() {
                if cc.is_zero() {
                    continue;
                }
                let (p, q) = (pq / n, pq % n);
                let idx = (j * n + p) * n + q;
                rhs[idx] = rhs[idx].add(&c.mul(cc));
            }
        }
        if let Some(v) = violation(vec![i], &lhs, &rhs) {
            report.coassociativity = Some(v);
            break;
        }
    }

    for i in 0..n {
        let e = b.basis_vector(i);
        let d = b.comult_vec(&e);
        let mut left = vec![b.field().zero(); n];
        let mut right = vec![b.field().zero(); n];
        for (jk, c) in d.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, k) = (jk / n, jk % n);
            left[k] = left[k].add(&c.mul(&b.counit()[j]));
            right[j] = right[j].add(&c.mul(&b.counit()[k]));
        }
        if let Some(v) = violation(vec![i], &left, &e) {
            report.counitality = Some(v);
            break;
        }
        if let Some(v) = violation(vec![i], &right, &e) {
            report.counitality = Some(v);
            break;
        }
    }

    let unit_compat = violation(
        vec![],
        &b.comult_vec(b.unit()),
        &kron_vec(b.field(), b.unit(), b.unit()),
    );
    if let Some(v) = unit_compat {
        report.comult_is_algebra_map = Some(v);
    } else {
        'dmult: for i in 0..n {
            for j in 0..n {
                let prod = b.mult_vec(&b.basis_vector(i), &b.basis_vector(j));
                let lhs = b.comult_vec(&prod);
                let rhs = b.mult2_vec(
                    &b.comult_vec(&b.basis_vector(i)),
                    &b.comult_vec(&b.basis_vector(j)),
                );
                if let Some(v) = violation(vec![i, j], &lhs, &rhs) {
                    report.comult_is_algebra_map = Some(v);
                    break 'dmult;
                }
            }
        }
    }

    let eps_unit = b.counit_of(b.unit());
    if !eps_unit.is_one() {
        report.counit_is_algebra_map =
            Some(Violation { tuple: vec![], lhs: vec![eps_unit], rhs: vec![b.field().one()] });
    } else {
        'emult: for i in 0..n {
            for j in 0..n {
                let prod = b.mult_vec(&b.basis_vector(i), &b.basis_vector(j));
                let lhs = b.counit_of(&prod);
                let rhs = b.counit()[i].mul(&b.counit()[j]);
                if lhs != rhs {
                    report.counit_is_algebra_map =
                        Some(Violation { tuple: vec![i, j], lhs: vec![lhs], rhs: vec![rhs] });
                    break 'emult;
                }
            }
        }
    }

    report
}

/// The dual bialgebra on the dual basis: multiplication is the transpose of
/// the comultiplication and vice versa, the unit is the counit functional,
/// and the counit is evaluation at the unit element.
pub fn dual_bialgebra(b: &Bialgebra) -> Bialgebra {
    let n = b.dim();
    let names = b.basis_names().iter().map(|s| format!("{s}*")).collect();
    let mult = Matrix::from_fn(b.field(), n, n * n, |k, ij| {
        let (i, j) = (ij / n, ij % n);
        b.comult_coeff(k, i, j).clone()
    });
    let comult = Matrix::from_fn(b.field(), n * n, n, |ij, k| {
        let (i, j) = (ij / n, ij % n);
        b.mult_coeff(i, j, k).clone()
    });
    Bialgebra::new(
        b.field(),
        names,
        b.counit().to_vec(),
        b.unit().to_vec(),
        mult,
        comult,
    )
    .expect("the dual of a bialgebra satisfies the axioms")
}

/// Opposite and/or co-opposite bialgebra: swap the multiplication arguments
/// and/or the comultiplication output legs.
pub fn op_cop(b: &Bialgebra, op: bool, cop: bool) -> Bialgebra {
    let n = b.dim();
    let mult = if op {
        Matrix::from_fn(b.field(), n, n * n, |k, ij| {
            let (i, j) = (ij / n, ij % n);
            b.mult_coeff(j, i, k).clone()
        })
    } else {
        b.mult_matrix().clone()
    };
    let comult = if cop {
        Matrix::from_fn(b.field(), n * n, n, |jk, i| {
            let (j, k) = (jk / n, jk % n);
            b.comult_coeff(i, k, j).clone()
        })
    } else {
        b.comult_matrix().clone()
    };
    Bialgebra::new(
        b.field(),
        b.basis_names().to_vec(),
        b.unit().to_vec(),
        b.counit().to_vec(),
        mult,
        comult,
    )
    .expect("op/cop of a bialgebra satisfies the axioms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn group_algebra_passes_all_axioms() {
        let b = zoo::cyclic_group(Field::Q, 2).unwrap();
        assert!(check_bialgebra_axioms(&b).all_pass());
        let b3 = zoo::cyclic_group(Field::Q, 3).unwrap();
        assert!(check_bialgebra_axioms(&b3).all_pass());
    }

    #[test]
    fn sweedler_h4_passes_all_axioms() {
        let b = zoo::sweedler_h4(Field::Q).unwrap();
        assert!(check_bialgebra_axioms(&b).all_pass());
    }

    #[test]
    fn unit_need_not_be_basis_index_zero() {
        // c2 with basis listed as (g, 1): unit is coordinate vector e_1
        let f = Field::Q;
        let names = vec!["g".to_string(), "1".to_string()];
        let mut mult = Matrix::zero(f, 2, 4);
        // g*g = 1, g*1 = g, 1*g = g, 1*1 = 1 with indices g=0, 1=1
        mult.set(1, 0, f.one());
        mult.set(0, 1, f.one());
        mult.set(0, 2, f.one());
        mult.set(1, 3, f.one());
        let mut comult = Matrix::zero(f, 4, 2);
        comult.set(0, 0, f.one());
        comult.set(3, 1, f.one());
        let unit = vec![f.zero(), f.one()];
        let counit = vec![f.one(), f.one()];
        let b = Bialgebra::new(f, names, unit, counit, mult, comult).unwrap();
        assert!(check_bialgebra_axioms(&b).all_pass());
    }

    #[test]
    fn single_entry_mutation_is_pinpointed() {
        let b = zoo::cyclic_group(Field::Q, 2).unwrap();
        // break g*g: make it 2*unit
        let broken = b.with_mult_coeff(1, 1, 0, Field::Q.from_i64(2));
        let report = check_bialgebra_axioms(&broken);
        assert!(!report.all_pass());
        let (name, v) = report.first_failure().unwrap();
        assert!(!v.tuple.is_empty(), "violation at {name} should name a tuple");
    }

    #[test]
    fn dual_of_dual_restores_structure_constants() {
        for b in [
            zoo::cyclic_group(Field::Q, 3).unwrap(),
            zoo::sweedler_h4(Field::Q).unwrap(),
            zoo::idempotent_monoid(Field::Q).unwrap(),
        ] {
            let dd = dual_bialgebra(&dual_bialgebra(&b));
            assert_eq!(dd.mult_matrix(), b.mult_matrix());
            assert_eq!(dd.comult_matrix(), b.comult_matrix());
            assert_eq!(dd.unit(), b.unit());
            assert_eq!(dd.counit(), b.counit());
        }
    }

    #[test]
    fn dual_of_idempotent_monoid_is_pointwise_functions() {
        let b = zoo::idempotent_monoid(Field::Q).unwrap();
        let d = dual_bialgebra(&b);
        // (1*)(1*) = 1*, (s*)(s*) = s*, cross products vanish
        let e0 = d.basis_vector(0);
        let e1 = d.basis_vector(1);
        assert_eq!(d.mult_vec(&e0, &e0), e0);
        assert_eq!(d.mult_vec(&e1, &e1), e1);
        assert!(d.mult_vec(&e0, &e1).iter().all(Scalar::is_zero));
        // unit of the dual is the counit functional (1,1)
        assert_eq!(d.unit(), &[Field::Q.one(), Field::Q.one()][..]);
    }

    #[test]
    fn op_cop_composition_is_identity_for_double_flip() {
        let b = zoo::sweedler_h4(Field::Q).unwrap();
        let flipped = op_cop(&op_cop(&b, true, true), true, true);
        assert_eq!(flipped.mult_matrix(), b.mult_matrix());
        assert_eq!(flipped.comult_matrix(), b.comult_matrix());
    }

    #[test]
    fn op_cop_changes_h4_but_not_c2() {
        let h4 = zoo::sweedler_h4(Field::Q).unwrap();
        let c2 = zoo::cyclic_group(Field::Q, 2).unwrap();
        assert_ne!(op_cop(&h4, true, false).mult_matrix(), h4.mult_matrix());
        assert_eq!(op_cop(&c2, true, true).mult_matrix(), c2.mult_matrix());
    }

    #[test]
    fn augmentation_ideal_has_codimension_one() {
        for b in [
            zoo::cyclic_group(Field::Q, 2).unwrap(),
            zoo::sweedler_h4(Field::Q).unwrap(),
            zoo::symmetric_s3(Field::Q).unwrap(),
        ] {
            assert_eq!(b.augmentation_ideal().nrows(), b.dim() - 1);
        }
    }
}
