//! Right Hopf modules over a bialgebra, their coinvariants and bar
//! quotients, the comparison map between the two, and the decision
//! procedures built on it.
//!
//! A right Hopf module `M` is a right module (action `M (x) B -> M`) and a
//! right comodule (coaction `M -> M (x) B`) whose coaction is a module map
//! for the diagonal structure on `M (x) B`.
//!
//! Left-handed objects are stored mirrored: a left action `B (x) M -> M`
//! and left coaction `M -> B (x) M` become a right action and coaction over
//! the opposite-coopposite bialgebra by swapping tensor legs. The mirror
//! preserves coinvariants, bar quotients, and the comparison map entrywise,
//! so every left-handed question is answered on the mirrored module.

use crate::bialg::{op_cop, Bialgebra, Violation};
use crate::conv::{
    check_antihom, check_super_identities, convolution, convolution_unit, solve_antipode,
    AntipodeSide, AntipodeSolution,
};
use crate::matrix::{kron_vec, Matrix, Reducer, SparseRow};
use crate::scalar::{Field, Scalar};
use crate::space::{QuotientSpace, Subspace};

/// A right module over a fixed bialgebra: `action: M (x) B -> M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Module {
    pub dim: usize,
    pub action: Matrix,
}

/// A right comodule: `coaction: M -> M (x) B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comodule {
    pub dim: usize,
    pub coaction: Matrix,
}

/// How a Hopf module was obtained: directly right-handed, or as the mirror
/// image of a left-handed one (in which case it lives over the
/// opposite-coopposite bialgebra of the original).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presentation {
    Right,
    MirroredLeft,
}

/// A right Hopf module: compatible module and comodule structures on one
/// underlying space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfModule {
    pub module: Module,
    pub comodule: Comodule,
    pub presentation: Presentation,
}

impl HopfModule {
    pub fn new(dim: usize, action: Matrix, coaction: Matrix) -> HopfModule {
        HopfModule {
            module: Module { dim, action },
            comodule: Comodule { dim, coaction },
            presentation: Presentation::Right,
        }
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn action(&self) -> &Matrix {
        &self.module.action
    }

    pub fn coaction(&self) -> &Matrix {
        &self.comodule.coaction
    }

    pub fn field(&self) -> Field {
        self.module.action.field()
    }
}

fn basis_vec(field: Field, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}

fn violation(tuple: Vec<usize>, lhs: &[Scalar], rhs: &[Scalar]) -> Option<Violation> {
    if lhs == rhs {
        None
    } else {
        Some(Violation { tuple, lhs: lhs.to_vec(), rhs: rhs.to_vec() })
    }
}

/// Outcome of the five Hopf module axioms, first violation per axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfModuleReport {
    pub action_unital: Option<Violation>,
    pub action_associative: Option<Violation>,
    pub coaction_counital: Option<Violation>,
    pub coaction_coassociative: Option<Violation>,
    pub compatibility: Option<Violation>,
}

impl HopfModuleReport {
    pub fn all_pass(&self) -> bool {
        self.action_unital.is_none()
            && self.action_associative.is_none()
            && self.coaction_counital.is_none()
            && self.coaction_coassociative.is_none()
            && self.compatibility.is_none()
    }
}

/// Checks the Hopf module axioms instance by instance over basis tuples.
pub fn validate_hopf_module(b: &Bialgebra, m: &HopfModule) -> HopfModuleReport {
    let n = b.dim();
    let md = m.dim();
    let f = b.field();
    let act = m.action();
    let coact = m.coaction();
    let mut report = HopfModuleReport {
        action_unital: None,
        action_associative: None,
        coaction_counital: None,
        coaction_coassociative: None,
        compatibility: None,
    };

    for i in 0..md {
        let e = basis_vec(f, md, i);
        let lhs = act.apply(&kron_vec(f, &e, b.unit()));
        if let Some(v) = violation(vec![i], &lhs, &e) {
            report.action_unital = Some(v);
            break;
        }
    }

    'assoc: for i in 0..md {
        for j in 0..n {
            let mj = act.apply(&kron_vec(f, &basis_vec(f, md, i), &b.basis_vector(j)));
            for k in 0..n {
                let lhs = act.apply(&kron_vec(f, &mj, &b.basis_vector(k)));
                let jk = b.mult_vec(&b.basis_vector(j), &b.basis_vector(k));
                let rhs = act.apply(&kron_vec(f, &basis_vec(f, md, i), &jk));
                if let Some(v) = violation(vec![i, j, k], &lhs, &rhs) {
                    report.action_associative = Some(v);
                    break 'assoc;
                }
            }
        }
    }

    for i in 0..md {
        let e = basis_vec(f, md, i);
        let d = coact.apply(&e);
        let mut lhs = vec![f.zero(); md];
        for (mb, c) in d.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (mi, bi) = (mb / n, mb % n);
            lhs[mi] = lhs[mi].add(&c.mul(&b.counit()[bi]));
        }
        if let Some(v) = violation(vec![i], &lhs, &e) {
            report.coaction_counital = Some(v);
            break;
        }
    }

    for i in 0..md {
        let d = coact.apply(&basis_vec(f, md, i));
        let mut lhs = vec![f.zero(); md * n * n];
        let mut rhs = vec![f.zero(); md * n * n];
        for (mb, c) in d.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (mi, bi) = (mb / n, mb % n);
            let dm = coact.apply(&basis_vec(f, md, mi));
            for (m2b2, cc) in dm.iter().enumerate() {
                if cc.is_zero() {
                    continue;
                }
                let (m2, b2) = (m2b2 / n, m2b2 % n);
                let idx = (m2 * n + b2) * n + bi;
                lhs[idx] = lhs[idx].add(&c.mul(cc));
            }
            let db = b.comult_vec(&b.basis_vector(bi));
            for (pq, cc) in db.iter().enumerate() {
                if cc.is_zero() {
                    continue;
                }
                let (p, q) = (pq / n, pq % n);
                let idx = (mi * n + p) * n + q;
                rhs[idx] = rhs[idx].add(&c.mul(cc));
            }
        }
        if let Some(v) = violation(vec![i], &lhs, &rhs) {
            report.coaction_coassociative = Some(v);
            break;
        }
    }

    'compat: for i in 0..md {
        let dm = coact.apply(&basis_vec(f, md, i));
        for j in 0..n {
            let mb = act.apply(&kron_vec(f, &basis_vec(f, md, i), &b.basis_vector(j)));
            let lhs = coact.apply(&mb);
            let db = b.comult_vec(&b.basis_vector(j));
            let mut rhs = vec![f.zero(); md * n];
            for (m0b, c) in dm.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (m0, m1) = (m0b / n, m0b % n);
                for (b1b2, cc) in db.iter().enumerate() {
                    if cc.is_zero() {
                        continue;
                    }
                    let (b1, b2) = (b1b2 / n, b1b2 % n);
                    let coeff = c.mul(cc);
                    let macted = act.apply(&kron_vec(
                        f,
                        &basis_vec(f, md, m0),
                        &b.basis_vector(b1),
                    ));
                    let bprod = b.mult_vec(&b.basis_vector(m1), &b.basis_vector(b2));
                    for (mi, mv) in macted.iter().enumerate() {
                        if mv.is_zero() {
                            continue;
                        }
                        for (bi, bv) in bprod.iter().enumerate() {
                            if bv.is_zero() {
                                continue;
                            }
                            let idx = mi * n + bi;
                            rhs[idx] = rhs[idx].add(&coeff.mul(mv).mul(bv));
                        }
                    }
                }
            }
            if let Some(v) = violation(vec![i, j], &lhs, &rhs) {
                report.compatibility = Some(v);
                break 'compat;
            }
        }
    }

    report
}

/// The regular Hopf module: `B` acting and coacting on itself.
pub fn regular_hopf_module(b: &Bialgebra) -> HopfModule {
    HopfModule::new(b.dim(), b.mult_matrix().clone(), b.comult_matrix().clone())
}

/// The free Hopf module `V (x) B`: action and coaction on the `B` leg only.
pub fn free_hopf_module(b: &Bialgebra, v_dim: usize) -> HopfModule {
    let iv = Matrix::identity(b.field(), v_dim);
    HopfModule::new(
        v_dim * b.dim(),
        iv.kron(b.mult_matrix()),
        iv.kron(b.comult_matrix()),
    )
}

/// The Hopf module on `B (x) B` with diagonal action
/// `(a (x) b) . c = a c_(1) (x) b c_(2)` and coaction on the second leg.
pub fn b_hat(b: &Bialgebra) -> HopfModule {
    let n = b.dim();
    let f = b.field();
    let mut action = Matrix::zero(f, n * n, n * n * n);
    for a in 0..n {
        for bb in 0..n {
            for c in 0..n {
                let col = (a * n + bb) * n + c;
                let dc = b.comult_vec(&b.basis_vector(c));
                for (pq, coeff) in dc.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let (p, q) = (pq / n, pq % n);
                    let left = b.mult_vec(&b.basis_vector(a), &b.basis_vector(p));
                    let right = b.mult_vec(&b.basis_vector(bb), &b.basis_vector(q));
                    for (k, lv) in left.iter().enumerate() {
                        if lv.is_zero() {
                            continue;
                        }
                        for (l, rv) in right.iter().enumerate() {
                            if rv.is_zero() {
                                continue;
                            }
                            let row = k * n + l;
                            let cur = action.get(row, col).add(&coeff.mul(lv).mul(rv));
                            action.set(row, col, cur);
                        }
                    }
                }
            }
        }
    }
    let coaction = Matrix::identity(f, n).kron(b.comult_matrix());
    HopfModule::new(n * n, action, coaction)
}

/// The left-handed companion of [`b_hat`] on `B (x) B`: left action
/// `c . (b (x) a) = c_(1) b (x) c_(2) a`, left coaction
/// `b (x) a -> b_(1) (x) (b_(2) (x) a)`. Returned mirrored, as a right Hopf
/// module over `op_cop` of the input, together with that bialgebra.
pub fn b_check(b: &Bialgebra) -> (Bialgebra, HopfModule) {
    let n = b.dim();
    let f = b.field();
    let mut action = Matrix::zero(f, n * n, n * n * n);
    for bb in 0..n {
        for a in 0..n {
            for c in 0..n {
                let col = (bb * n + a) * n + c;
                let dc = b.comult_vec(&b.basis_vector(c));
                for (pq, coeff) in dc.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let (p, q) = (pq / n, pq % n);
                    let left = b.mult_vec(&b.basis_vector(p), &b.basis_vector(bb));
                    let right = b.mult_vec(&b.basis_vector(q), &b.basis_vector(a));
                    for (k, lv) in left.iter().enumerate() {
                        if lv.is_zero() {
                            continue;
                        }
                        for (l, rv) in right.iter().enumerate() {
                            if rv.is_zero() {
                                continue;
                            }
                            let row = k * n + l;
                            let cur = action.get(row, col).add(&coeff.mul(lv).mul(rv));
                            action.set(row, col, cur);
                        }
                    }
                }
            }
        }
    }
    let mut coaction = Matrix::zero(f, n * n * n, n * n);
    for bb in 0..n {
        for a in 0..n {
            let col = bb * n + a;
            let db = b.comult_vec(&b.basis_vector(bb));
            for (pq, coeff) in db.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (p, q) = (pq / n, pq % n);
                let row = (q * n + a) * n + p;
                let cur = coaction.get(row, col).add(coeff);
                coaction.set(row, col, cur);
            }
        }
    }
    let mirrored = HopfModule {
        module: Module { dim: n * n, action },
        comodule: Comodule { dim: n * n, coaction },
        presentation: Presentation::MirroredLeft,
    };
    (op_cop(b, true, true), mirrored)
}

/// `B` as a comodule over itself via the comultiplication.
pub fn regular_comodule(b: &Bialgebra) -> Comodule {
    Comodule { dim: b.dim(), coaction: b.comult_matrix().clone() }
}

/// The trivial comodule `V`, `v -> v (x) 1`.
pub fn trivial_comodule(b: &Bialgebra, v_dim: usize) -> Comodule {
    Comodule {
        dim: v_dim,
        coaction: Matrix::identity(b.field(), v_dim).kron(&b.unit_column()),
    }
}

/// `B` as a module over itself via the multiplication.
pub fn regular_module(b: &Bialgebra) -> Module {
    Module { dim: b.dim(), action: b.mult_matrix().clone() }
}

/// The trivial module `V`, `v . b = eps(b) v`.
pub fn trivial_module(b: &Bialgebra, v_dim: usize) -> Module {
    Module {
        dim: v_dim,
        action: Matrix::identity(b.field(), v_dim).kron(&b.counit_row()),
    }
}

/// The coinvariants `{ m : coaction(m) = m (x) 1 }` as a canonical subspace.
pub fn coinvariants(b: &Bialgebra, m: &HopfModule) -> Subspace {
    let insert_unit = Matrix::identity(b.field(), m.dim()).kron(&b.unit_column());
    let defect = m.coaction().sub(&insert_unit);
    Subspace::kernel_of(&defect)
}

/// The span of `m . k` over basis elements `m` and augmentation-ideal
/// elements `k`: the denominator of the bar quotient.
pub fn bar_denominator(b: &Bialgebra, m: &HopfModule) -> Subspace {
    let f = b.field();
    let aug = b.augmentation_ideal();
    let mut vectors = Vec::with_capacity(m.dim() * aug.nrows());
    for i in 0..m.dim() {
        for k in aug.rows_iter() {
            vectors.push(m.action().apply(&kron_vec(f, &basis_vec(f, m.dim(), i), k)));
        }
    }
    Subspace::from_rows(f, m.dim(), &vectors)
}

/// The quotient of `M` by the image of the augmentation-ideal action.
pub fn bar_quotient(b: &Bialgebra, m: &HopfModule) -> QuotientSpace {
    QuotientSpace::by(bar_denominator(b, m))
}

/// The comparison map from coinvariants to the bar quotient, with both
/// spaces, its matrix, and the direct-sum diagnosis.
#[derive(Debug, Clone)]
pub struct SigmaData {
    pub coinvariants: Subspace,
    pub bar: QuotientSpace,
    /// Matrix from coinvariant coordinates to bar coordinates.
    pub matrix: Matrix,
    pub invertible: bool,
    pub inverse: Option<Matrix>,
    /// Coinvariants intersect the denominator trivially.
    pub intersection_trivial: bool,
    /// Coinvariants plus the denominator fill the module.
    pub sum_full: bool,
}

/// Computes the comparison map (restriction of the quotient projection to
/// the coinvariants). Invertibility is cross-checked against the direct-sum
/// decomposition it is equivalent to; disagreement would be an internal
/// error and panics.
pub fn sigma(b: &Bialgebra, m: &HopfModule) -> SigmaData {
    let coinv = coinvariants(b, m);
    let bar = bar_quotient(b, m);
    let matrix = bar.projection().mul(&coinv.inclusion());
    let inverse = if matrix.nrows() == matrix.ncols() { matrix.invert() } else { None };
    let invertible = inverse.is_some();
    let inter = coinv.intersect(bar.denominator());
    let sum = coinv.sum(bar.denominator());
    let intersection_trivial = inter.dim() == 0;
    let sum_full = sum.dim() == m.dim();
    assert_eq!(
        invertible,
        intersection_trivial && sum_full,
        "comparison-map invertibility must coincide with the direct-sum decomposition"
    );
    SigmaData { coinvariants: coinv, bar, matrix, invertible, inverse, intersection_trivial, sum_full }
}

/// Why the closed-form inverse failed to exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaFailure {
    /// `m -> m_(0) . S(m_(1))` does not kill the bar denominator, so it does
    /// not descend to the quotient. Witness: a denominator vector with a
    /// nonzero image.
    NotWellDefined { witness: Vec<Scalar>, image: Vec<Scalar> },
    /// The descended map does not land in the coinvariants.
    NotCoinvariant { witness: Vec<Scalar>, image: Vec<Scalar> },
}

/// The closed-form candidate inverse of the comparison map induced by
/// `m -> m_(0) . S(m_(1))`, expressed from bar coordinates to coinvariant
/// coordinates. Fails typed when the formula does not descend or does not
/// land in the coinvariants.
pub fn sigma_inverse_formula(
    b: &Bialgebra,
    m: &HopfModule,
    s: &Matrix,
    data: &SigmaData,
) -> Result<Matrix, FormulaFailure> {
    let f = b.field();
    let full = m
        .action()
        .mul(&Matrix::identity(f, m.dim()).kron(s))
        .mul(m.coaction());
    for w in data.bar.denominator().basis().rows_iter() {
        let image = full.apply(w);
        if !image.iter().all(Scalar::is_zero) {
            return Err(FormulaFailure::NotWellDefined { witness: w.to_vec(), image });
        }
    }
    let lifted = full.mul(data.bar.section());
    match data.coinvariants.coords_matrix(&lifted) {
        Some(mat) => Ok(mat),
        None => {
            let j = (0..lifted.ncols())
                .find(|&j| !data.coinvariants.contains(&lifted.col(j)))
                .expect("some column is outside the coinvariants");
            Err(FormulaFailure::NotCoinvariant {
                witness: data.bar.section().col(j),
                image: lifted.col(j),
            })
        }
    }
}

/// The unit and counit data of the two adjunctions around a Hopf module:
/// `eta: M -> bar(M) (x) B` and `theta: coinv(M) (x) B -> M`.
#[derive(Debug, Clone)]
pub struct AdjunctionData {
    pub coinv: Subspace,
    pub bar: QuotientSpace,
    pub eta: Matrix,
    pub theta: Matrix,
}

pub fn adjunction_maps(b: &Bialgebra, m: &HopfModule) -> AdjunctionData {
    let coinv = coinvariants(b, m);
    let bar = bar_quotient(b, m);
    let eta = bar
        .projection()
        .kron(&Matrix::identity(b.field(), b.dim()))
        .mul(m.coaction());
    let theta = m
        .action()
        .mul(&coinv.inclusion().kron(&Matrix::identity(b.field(), b.dim())));
    AdjunctionData { coinv, bar, eta, theta }
}

/// The isomorphisms attached to a free module `V (x) B`:
/// `counit: bar(V (x) B) -> V` and `unit: V -> coinv(V (x) B)` (in canonical
/// coordinates on both quotient and subspace).
#[derive(Debug, Clone)]
pub struct FreeAdjunctionData {
    pub counit: Matrix,
    pub unit: Matrix,
}

pub fn free_adjunction_maps(b: &Bialgebra, v_dim: usize) -> FreeAdjunctionData {
    let f = b.field();
    let m = free_hopf_module(b, v_dim);
    let bar = bar_quotient(b, &m);
    let contract = Matrix::identity(f, v_dim).kron(&b.counit_row());
    for w in bar.denominator().basis().rows_iter() {
        assert!(
            contract.apply(w).iter().all(Scalar::is_zero),
            "the counit contraction must descend to the bar quotient of a free module"
        );
    }
    let counit = contract.mul(bar.section());
    let coinv = coinvariants(b, &m);
    let insert = Matrix::identity(f, v_dim).kron(&b.unit_column());
    let unit = coinv
        .coords_matrix(&insert)
        .expect("v (x) 1 is coinvariant in a free module");
    FreeAdjunctionData { counit, unit }
}

/// The Galois-type endomorphism of `B (x) B`: `a (x) b -> a b_(1) (x) b_(2)`.
pub fn hopf_galois(b: &Bialgebra) -> Matrix {
    let n = b.dim();
    let id = Matrix::identity(b.field(), n);
    b.mult_matrix().kron(&id).mul(&id.kron(b.comult_matrix()))
}

/// Typed failure: the unit map of the bar adjunction at `B (x) B` is not
/// invertible, so no candidate inverse-antipode can be extracted from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaNotInvertible {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank: usize,
}

/// When `eta` at `B (x) B` is invertible, extracts the map
/// `nu(b) = (B (x) eps)(eta^{-1}(class(1 (x) b) (x) 1))` and asserts it is a
/// left convolution inverse of the identity.
pub fn nu_from_eta(b: &Bialgebra) -> Result<Matrix, EtaNotInvertible> {
    let n = b.dim();
    let f = b.field();
    let m = b_hat(b);
    let data = adjunction_maps(b, &m);
    let eta = &data.eta;
    let rank = eta.rank();
    if eta.nrows() != eta.ncols() || rank != eta.nrows() {
        return Err(EtaNotInvertible {
            domain_dim: eta.ncols(),
            codomain_dim: eta.nrows(),
            rank,
        });
    }
    let eta_inv = eta.invert().expect("square full-rank matrix");
    let mut nu = Matrix::zero(f, n, n);
    for j in 0..n {
        let class = data.bar.project(&kron_vec(f, b.unit(), &b.basis_vector(j)));
        let arg = kron_vec(f, &class, b.unit());
        let z = eta_inv.apply(&arg);
        for k in 0..n {
            let mut acc = f.zero();
            for bi in 0..n {
                let zv = &z[k * n + bi];
                if !zv.is_zero() && !b.counit()[bi].is_zero() {
                    acc = acc.add(&zv.mul(&b.counit()[bi]));
                }
            }
            nu.set(k, j, acc);
        }
    }
    assert_eq!(
        convolution(b, &nu, &Matrix::identity(f, n)),
        convolution_unit(b),
        "the extracted map must be a left convolution inverse of the identity"
    );
    Ok(nu)
}

/// Verdict and witnesses for one one-sided Hopf question.
#[derive(Debug, Clone)]
pub struct OneSidedDecision {
    pub holds: bool,
    pub sigma: SigmaData,
    pub solver: Option<AntipodeSolution>,
    /// The anti-(co)multiplicative one-sided antipode, when the verdict holds.
    pub antipode: Option<Matrix>,
}

fn extract_antipode_from_sigma(
    b: &Bialgebra,
    data: &SigmaData,
    insert_left: bool,
) -> Matrix {
    let n = b.dim();
    let f = b.field();
    let inv = data.inverse.as_ref().expect("sigma must be invertible here");
    let mut s = Matrix::zero(f, n, n);
    for j in 0..n {
        let inserted = if insert_left {
            kron_vec(f, &b.basis_vector(j), b.unit())
        } else {
            kron_vec(f, b.unit(), &b.basis_vector(j))
        };
        let coords = inv.apply(&data.bar.project(&inserted));
        let ambient = data.coinvariants.inclusion().apply(&coords);
        for k in 0..n {
            let mut acc = f.zero();
            for bi in 0..n {
                let (idx, eps_idx) = if insert_left {
                    // mirrored layout: contract the first leg with the counit
                    (bi * n + k, bi)
                } else {
                    (k * n + bi, bi)
                };
                let v = &ambient[idx];
                if !v.is_zero() && !b.counit()[eps_idx].is_zero() {
                    acc = acc.add(&v.mul(&b.counit()[eps_idx]));
                }
            }
            s.set(k, j, acc);
        }
    }
    s
}

/// Decides whether the bialgebra is right Hopf with an
/// anti-(co)multiplicative right antipode, by two independent routes that a
/// theorem forces to agree: invertibility of the comparison map on
/// `B (x) B`, and solvability of the right antipode system together with
/// the strengthened identities. Disagreement panics.
pub fn decide_right_hopf(b: &Bialgebra) -> OneSidedDecision {
    let m = b_hat(b);
    let data = sigma(b, &m);
    let solver = solve_antipode(b, AntipodeSide::Right);
    decide_one_sided(b, data, solver, false)
}

/// Mirror of [`decide_right_hopf`]: comparison map on the left-handed
/// companion module, left antipode system, mirrored strengthened identities.
pub fn decide_left_hopf(b: &Bialgebra) -> OneSidedDecision {
    let (bp, bc) = b_check(b);
    let data = sigma(&bp, &bc);
    let solver = solve_antipode(b, AntipodeSide::Left);
    decide_one_sided(b, data, solver, true)
}

fn decide_one_sided(
    b: &Bialgebra,
    data: SigmaData,
    solver: Option<AntipodeSolution>,
    left: bool,
) -> OneSidedDecision {
    let f = b.field();
    let id = Matrix::identity(f, b.dim());
    let strong_checks = |s: &Matrix| -> bool {
        let anti = check_antihom(b, s);
        let strong = if left {
            check_super_identities(&op_cop(b, true, true), s)
        } else {
            check_super_identities(b, s)
        };
        anti.all_pass() && strong.all_pass()
    };
    if data.invertible {
        let s = extract_antipode_from_sigma(b, &data, left);
        let one_sided = if left {
            convolution(b, &s, &id)
        } else {
            convolution(b, &id, &s)
        };
        assert_eq!(
            one_sided,
            convolution_unit(b),
            "invertible comparison map must yield a one-sided antipode"
        );
        assert!(
            solver.is_some(),
            "the antipode system must be solvable when the comparison map is invertible"
        );
        assert!(
            strong_checks(&s),
            "the extracted antipode must satisfy the strengthened identities"
        );
        if let Some(sol) = &solver {
            if sol.solution_space_dim == 0 {
                assert_eq!(sol.matrix, s, "unique solver solution must match the extraction");
            }
        }
        OneSidedDecision { holds: true, sigma: data, solver, antipode: Some(s) }
    } else {
        if let Some(sol) = &solver {
            assert!(
                !strong_checks(&sol.matrix),
                "a one-sided antipode with the strengthened identities forces the comparison \
                 map to be invertible"
            );
        }
        OneSidedDecision { holds: false, sigma: data, solver, antipode: None }
    }
}

/// Which maps a hom-space basis must respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomCategory {
    Vec,
    Mod,
    Comod,
    Hopf,
}

fn hom_ambient(field: Field, rows: usize, cols: usize) -> usize {
    let _ = field;
    rows * cols
}

/// Reinterprets a flat hom-space vector as the matrix of a map.
pub fn hom_element(field: Field, flat: &[Scalar], target_dim: usize, source_dim: usize) -> Matrix {
    assert_eq!(flat.len(), target_dim * source_dim);
    Matrix::from_fn(field, target_dim, source_dim, |r, c| flat[r * source_dim + c].clone())
}

/// Flattens the matrix of a map into hom-space coordinates.
pub fn hom_flatten(m: &Matrix) -> Vec<Scalar> {
    (0..m.nrows()).flat_map(|r| m.row(r).to_vec()).collect()
}

fn module_constraints(
    b: &Bialgebra,
    source: &Module,
    target: &Module,
    red: &mut Reducer,
) {
    let n = b.dim();
    let (ms, mt) = (source.dim, target.dim);
    for j in 0..n {
        for i in 0..ms {
            let acted = source.action.col(i * n + j);
            for r in 0..mt {
                let mut entries: Vec<(usize, Scalar)> = Vec::new();
                for (k, c) in acted.iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((r * ms + k, c.clone()));
                    }
                }
                for s in 0..mt {
                    let c = target.action.get(r, s * n + j);
                    if !c.is_zero() {
                        entries.push((s * ms + i, c.neg()));
                    }
                }
                red.insert(SparseRow::from_entries(entries));
            }
        }
    }
}

fn comodule_constraints(
    b: &Bialgebra,
    source: &Comodule,
    target: &Comodule,
    red: &mut Reducer,
) {
    let n = b.dim();
    let (ms, mt) = (source.dim, target.dim);
    for i in 0..ms {
        let dsource = source.coaction.col(i);
        for r in 0..mt {
            for bi in 0..n {
                let mut entries: Vec<(usize, Scalar)> = Vec::new();
                for s in 0..mt {
                    let c = target.coaction.get(r * n + bi, s);
                    if !c.is_zero() {
                        entries.push((s * ms + i, c.clone()));
                    }
                }
                for k in 0..ms {
                    let c = &dsource[k * n + bi];
                    if !c.is_zero() {
                        entries.push((r * ms + k, c.neg()));
                    }
                }
                red.insert(SparseRow::from_entries(entries));
            }
        }
    }
}

fn kernel_of_reducer(red: Reducer, field: Field, ambient: usize) -> Subspace {
    let (m, _) = red.into_rref();
    if m.nrows() == 0 {
        return Subspace::full(field, ambient);
    }
    Subspace::kernel_of(&m)
}

/// Linear maps between the underlying spaces of two modules.
pub fn hom_linear(field: Field, source_dim: usize, target_dim: usize) -> Subspace {
    Subspace::full(field, hom_ambient(field, target_dim, source_dim))
}

/// Module maps `source -> target`, as a canonical subspace of flattened map
/// matrices.
pub fn hom_module_maps(b: &Bialgebra, source: &Module, target: &Module) -> Subspace {
    let ambient = target.dim * source.dim;
    let mut red = Reducer::new(b.field(), ambient);
    module_constraints(b, source, target, &mut red);
    kernel_of_reducer(red, b.field(), ambient)
}

/// Comodule maps `source -> target`.
pub fn hom_comodule_maps(b: &Bialgebra, source: &Comodule, target: &Comodule) -> Subspace {
    let ambient = target.dim * source.dim;
    let mut red = Reducer::new(b.field(), ambient);
    comodule_constraints(b, source, target, &mut red);
    kernel_of_reducer(red, b.field(), ambient)
}

/// Hopf module maps (module and comodule maps simultaneously).
pub fn hom_hopf_maps(b: &Bialgebra, source: &HopfModule, target: &HopfModule) -> Subspace {
    let ambient = target.dim() * source.dim();
    let mut red = Reducer::new(b.field(), ambient);
    module_constraints(b, &source.module, &target.module, &mut red);
    comodule_constraints(b, &source.comodule, &target.comodule, &mut red);
    kernel_of_reducer(red, b.field(), ambient)
}

/// Canonical basis of maps between two Hopf modules respecting the selected
/// structure.
pub fn hom_space(
    b: &Bialgebra,
    source: &HopfModule,
    target: &HopfModule,
    category: HomCategory,
) -> Subspace {
    match category {
        HomCategory::Vec => hom_linear(b.field(), source.dim(), target.dim()),
        HomCategory::Mod => hom_module_maps(b, &source.module, &target.module),
        HomCategory::Comod => hom_comodule_maps(b, &source.comodule, &target.comodule),
        HomCategory::Hopf => hom_hopf_maps(b, source, target),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn q() -> Field {
        Field::Q
    }

    #[test]
    fn builders_validate_over_the_zoo() {
        for b in [
            zoo::cyclic_group(q(), 2).unwrap(),
            zoo::cyclic_group(q(), 3).unwrap(),
            zoo::sweedler_h4(q()).unwrap(),
            zoo::idempotent_monoid(q()).unwrap(),
            zoo::divided_power(2).unwrap(),
        ] {
            assert!(validate_hopf_module(&b, &regular_hopf_module(&b)).all_pass());
            assert!(validate_hopf_module(&b, &free_hopf_module(&b, 2)).all_pass());
            assert!(validate_hopf_module(&b, &b_hat(&b)).all_pass());
            let (bp, bc) = b_check(&b);
            assert!(validate_hopf_module(&bp, &bc).all_pass());
        }
    }

    #[test]
    fn broken_action_is_flagged() {
        let b = zoo::cyclic_group(q(), 2).unwrap();
        let mut m = regular_hopf_module(&b);
        m.module.action.set(0, 3, q().from_i64(5));
        let report = validate_hopf_module(&b, &m);
        assert!(!report.all_pass());
    }

    #[test]
    fn coinvariants_of_b_hat_are_first_leg() {
        // over any bialgebra the coinvariants of B (x) B with coaction on the
        // second leg are exactly x (x) 1
        for b in [
            zoo::cyclic_group(q(), 2).unwrap(),
            zoo::sweedler_h4(q()).unwrap(),
            zoo::idempotent_monoid(q()).unwrap(),
        ] {
            let coinv = coinvariants(&b, &b_hat(&b));
            assert_eq!(coinv.dim(), b.dim());
            for i in 0..b.dim() {
                let v = kron_vec(q(), &b.basis_vector(i), b.unit());
                assert!(coinv.contains(&v));
            }
        }
    }

    #[test]
    fn c2_b_hat_sigma_is_invertible() {
        let b = zoo::cyclic_group(q(), 2).unwrap();
        let m = b_hat(&b);
        let data = sigma(&b, &m);
        assert_eq!(data.coinvariants.dim(), 2);
        assert_eq!(data.bar.dim(), 2);
        assert!(data.invertible);
        assert!(data.intersection_trivial && data.sum_full);
    }

    #[test]
    fn idempotent_monoid_b_hat_sigma_is_rank_one() {
        let b = zoo::idempotent_monoid(q()).unwrap();
        let m = b_hat(&b);
        let data = sigma(&b, &m);
        assert_eq!(data.coinvariants.dim(), 2);
        assert_eq!(data.bar.dim(), 1);
        assert_eq!(data.matrix.rank(), 1);
        assert!(!data.invertible);
        // dim M = 4 but coinv + denominator has dimension 2 + 3 - 1 = 4? no:
        // the decomposition fails because the intersection is nontrivial.
        assert!(!(data.intersection_trivial && data.sum_full));
    }

    #[test]
    fn free_module_decomposes_for_any_bialgebra() {
        for b in [
            zoo::cyclic_group(q(), 2).unwrap(),
            zoo::idempotent_monoid(q()).unwrap(),
        ] {
            for v in 0..3 {
                let m = free_hopf_module(&b, v);
                let data = sigma(&b, &m);
                assert!(data.invertible, "free modules always split");
                assert_eq!(data.coinvariants.dim(), v);
            }
        }
    }

    #[test]
    fn sigma_inverse_formula_matches_matrix_inverse_on_c2() {
        let b = zoo::cyclic_group(q(), 2).unwrap();
        let m = b_hat(&b);
        let data = sigma(&b, &m);
        // the antipode of a group algebra inverts group elements; for c2 the
        // inversion is the identity matrix
        let s = Matrix::identity(q(), 2);
        let formula = sigma_inverse_formula(&b, &m, &s, &data).unwrap();
        assert_eq!(&formula, data.inverse.as_ref().unwrap());
        assert_eq!(formula.mul(&data.matrix), Matrix::identity(q(), 2));
        assert_eq!(data.matrix.mul(&formula), Matrix::identity(q(), 2));
    }

    #[test]
    fn galois_map_rank_separates_hopf_from_non_hopf() {
        let c2 = zoo::cyclic_group(q(), 2).unwrap();
        assert_eq!(hopf_galois(&c2).rank(), 4);
        let m2 = zoo::idempotent_monoid(q()).unwrap();
        assert_eq!(hopf_galois(&m2).rank(), 3);
    }

    #[test]
    fn galois_map_is_theta_under_first_leg_identification() {
        for b in [
            zoo::cyclic_group(q(), 2).unwrap(),
            zoo::sweedler_h4(q()).unwrap(),
            zoo::idempotent_monoid(q()).unwrap(),
        ] {
            let m = b_hat(&b);
            let data = adjunction_maps(&b, &m);
            let n = b.dim();
            let embed = data
                .coinv
                .coords_matrix(
                    &Matrix::identity(q(), n).kron(&b.unit_column()),
                )
                .expect("x (x) 1 is coinvariant");
            let theta_on_b = data.theta.mul(&embed.kron(&Matrix::identity(q(), n)));
            assert_eq!(theta_on_b, hopf_galois(&b));
        }
    }

    #[test]
    fn nu_from_eta_is_group_inversion_on_c3() {
        let b = zoo::cyclic_group(q(), 3).unwrap();
        let nu = nu_from_eta(&b).unwrap();
        let mut expected = Matrix::zero(q(), 3, 3);
        expected.set(0, 0, q().one());
        expected.set(2, 1, q().one());
        expected.set(1, 2, q().one());
        assert_eq!(nu, expected);
    }

    #[test]
    fn nu_from_eta_fails_typed_on_idempotent_monoid() {
        let b = zoo::idempotent_monoid(q()).unwrap();
        let err = nu_from_eta(&b).unwrap_err();
        assert_eq!(err.domain_dim, 4);
        assert_eq!(err.codomain_dim, 2);
    }

    #[test]
    fn decide_right_hopf_on_the_zoo() {
        for b in [
            zoo::cyclic_group(q(), 2).unwrap(),
            zoo::cyclic_group(q(), 3).unwrap(),
            zoo::sweedler_h4(q()).unwrap(),
            zoo::divided_power(2).unwrap(),
        ] {
            let d = decide_right_hopf(&b);
            assert!(d.holds);
            assert!(d.antipode.is_some());
        }
        let d = decide_right_hopf(&zoo::idempotent_monoid(q()).unwrap());
        assert!(!d.holds);
        assert!(d.solver.is_none());
    }

    #[test]
    fn decide_left_matches_right_over_op_cop() {
        for b in [
            zoo::cyclic_group(q(), 3).unwrap(),
            zoo::sweedler_h4(q()).unwrap(),
            zoo::idempotent_monoid(q()).unwrap(),
        ] {
            let left = decide_left_hopf(&b);
            let right = decide_right_hopf(&op_cop(&b, true, true));
            assert_eq!(left.holds, right.holds);
            assert_eq!(left.antipode, right.antipode);
        }
    }

    #[test]
    fn h4_antipode_from_sigma_extraction() {
        let b = zoo::sweedler_h4(q()).unwrap();
        let d = decide_right_hopf(&b);
        let s = d.antipode.unwrap();
        // S(1)=1, S(g)=g, S(x)=-gx, S(gx)=x
        let mut expected = Matrix::zero(q(), 4, 4);
        expected.set(0, 0, q().one());
        expected.set(1, 1, q().one());
        expected.set(3, 2, q().one().neg());
        expected.set(2, 3, q().one());
        assert_eq!(s, expected);
    }

    #[test]
    fn hom_space_dims_on_c2() {
        let b = zoo::cyclic_group(q(), 2).unwrap();
        let reg = regular_hopf_module(&b);
        let bh = b_hat(&b);
        assert_eq!(hom_space(&b, &reg, &reg, HomCategory::Vec).dim(), 4);
        assert_eq!(hom_space(&b, &reg, &reg, HomCategory::Mod).dim(), 2);
        assert_eq!(hom_space(&b, &reg, &reg, HomCategory::Comod).dim(), 2);
        assert_eq!(hom_space(&b, &reg, &reg, HomCategory::Hopf).dim(), 1);
        assert_eq!(hom_space(&b, &bh, &bh, HomCategory::Hopf).dim(), 4);
    }

    #[test]
    fn hom_space_elements_commute_with_structure() {
        let b = zoo::sweedler_h4(q()).unwrap();
        let reg = regular_hopf_module(&b);
        let hom = hom_space(&b, &reg, &reg, HomCategory::Hopf);
        assert_eq!(hom.dim(), 1);
        let f = hom_element(q(), hom.basis().row(0), 4, 4);
        // a Hopf module endomorphism of the regular module is a scalar
        assert!(!f.get(0, 0).is_zero());
        for i in 1..4 {
            assert_eq!(f.get(i, i), f.get(0, 0));
        }
    }

    #[test]
    fn zero_module_hom_spaces_are_zero() {
        let b = zoo::cyclic_group(q(), 2).unwrap();
        let z = free_hopf_module(&b, 0);
        let reg = regular_hopf_module(&b);
        assert_eq!(hom_space(&b, &z, &reg, HomCategory::Hopf).dim(), 0);
        assert_eq!(hom_space(&b, &reg, &z, HomCategory::Hopf).dim(), 0);
        assert_eq!(sigma(&b, &z).coinvariants.dim(), 0);
    }
}
