//! Stock bialgebras: group and monoid algebras from multiplication tables,
//! the four-dimensional Sweedler algebra, the truncated polynomial algebra
//! with primitive generator over `F_p`, and the one-dimensional bialgebra.

use crate::bialg::Bialgebra;
use crate::matrix::Matrix;
use crate::scalar::Field;
use crate::Error;

/// Validates a multiplication table: square, in-range, associative, with a
/// two-sided identity; inverses are additionally required for groups.
/// Returns the identity's index.
fn validate_table(table: &[Vec<usize>], require_inverses: bool) -> Result<usize, Error> {
    let n = table.len();
    if n == 0 {
        return Err(Error::CayleyInvalid("table is empty".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::CayleyInvalid(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::CayleyInvalid(format!(
                    "entry at ({i},{j}) is {v}, out of range 0..{n}"
                )));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::CayleyInvalid(format!(
                        "associativity fails at ({i},{j},{k}): ({i}*{j})*{k} = {} but {i}*({j}*{k}) = {}",
                        table[table[i][j]][k], table[i][table[j][k]]
                    )));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::CayleyInvalid("no two-sided identity element".into()))?;
    if require_inverses {
        for a in 0..n {
            let has_inverse =
                (0..n).any(|b| table[a][b] == identity && table[b][a] == identity);
            if !has_inverse {
                return Err(Error::CayleyInvalid(format!("element {a} has no inverse")));
            }
        }
    }
    Ok(identity)
}

fn table_bialgebra(
    field: Field,
    labels: Vec<String>,
    table: &[Vec<usize>],
    require_inverses: bool,
) -> Result<Bialgebra, Error> {
    let n = table.len();
    if labels.len() != n {
        return Err(Error::CayleyInvalid(format!(
            "{} labels for {n} elements",
            labels.len()
        )));
    }
    let identity = validate_table(table, require_inverses)?;
    let mut mult = Matrix::zero(field, n, n * n);
    for i in 0..n {
        for j in 0..n {
            mult.set(table[i][j], i * n + j, field.one());
        }
    }
    let mut comult = Matrix::zero(field, n * n, n);
    for i in 0..n {
        comult.set(i * n + i, i, field.one());
    }
    let mut unit = vec![field.zero(); n];
    unit[identity] = field.one();
    let counit = vec![field.one(); n];
    Bialgebra::new(field, labels, unit, counit, mult, comult)
}

/// The group algebra of the group presented by a multiplication table.
/// Basis elements are grouplike.
pub fn group_algebra(
    field: Field,
    labels: Vec<String>,
    table: &[Vec<usize>],
) -> Result<Bialgebra, Error> {
    table_bialgebra(field, labels, table, true)
}

/// The monoid algebra of the monoid presented by a multiplication table.
/// No inverses are required, so an antipode need not exist.
pub fn monoid_algebra(
    field: Field,
    labels: Vec<String>,
    table: &[Vec<usize>],
) -> Result<Bialgebra, Error> {
    table_bialgebra(field, labels, table, false)
}

/// The cyclic group of order `n`.
pub fn cyclic_group(field: Field, n: usize) -> Result<Bialgebra, Error> {
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    group_algebra(field, labels, &table)
}

/// The symmetric group on three letters (order 6), with permutations
/// enumerated in lexicographic one-line order and named by cycles.
pub fn symmetric_s3(field: Field) -> Result<Bialgebra, Error> {
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let labels = vec!["e", "(23)", "(12)", "(123)", "(132)", "(13)"]
        .into_iter()
        .map(String::from)
        .collect();
    let index_of = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    // composition acts left-to-right on points: (p*q)(x) = p(q(x))
                    let composed = [p[q[0]], p[q[1]], p[q[2]]];
                    index_of(&composed)
                })
                .collect()
        })
        .collect();
    group_algebra(field, labels, &table)
}

/// The two-element idempotent monoid `{1, s}` with `s*s = s`. Its bialgebra
/// has no antipode on either side.
pub fn idempotent_monoid(field: Field) -> Result<Bialgebra, Error> {
    let table = vec![vec![0, 1], vec![1, 1]];
    monoid_algebra(field, vec!["1".into(), "s".into()], &table)
}

/// The four-dimensional Sweedler algebra on basis `1, g, x, gx` with
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, grouplike `g`, and
/// `Delta x = x (x) 1 + g (x) x`.
pub fn sweedler_h4(field: Field) -> Result<Bialgebra, Error> {
    let labels: Vec<String> = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let n = 4;
    let one = field.one();
    let neg = field.one().neg();
    let mut mult = Matrix::zero(field, n, n * n);
    // products in basis order 1, g, x, gx; (i, j, k, coeff)
    let entries: [(usize, usize, usize, bool); 12] = [
        (0, 0, 0, false),
        (0, 1, 1, false),
        (0, 2, 2, false),
        (0, 3, 3, false),
        (1, 0, 1, false),
        (1, 1, 0, false),
        (1, 2, 3, false), // g*x = gx
        (1, 3, 2, false), // g*gx = x
        (2, 0, 2, false),
        (2, 1, 3, true), // x*g = -gx
        (3, 0, 3, false),
        (3, 1, 2, true), // gx*g = -x
    ];
    for (i, j, k, negate) in entries {
        mult.set(k, i * n + j, if negate { neg.clone() } else { one.clone() });
    }
    let mut comult = Matrix::zero(field, n * n, n);
    // Delta 1 = 1(x)1
    comult.set(0, 0, one.clone());
    // Delta g = g(x)g
    comult.set(1 * n + 1, 1, one.clone());
    // Delta x = x(x)1 + g(x)x
    comult.set(2 * n + 0, 2, one.clone());
    comult.set(1 * n + 2, 2, one.clone());
    // Delta gx = gx(x)g + 1(x)gx
    comult.set(3 * n + 1, 3, one.clone());
    comult.set(0 * n + 3, 3, one.clone());
    let unit = vec![one.clone(), field.zero(), field.zero(), field.zero()];
    let counit = vec![one.clone(), one, field.zero(), field.zero()];
    Bialgebra::new(field, labels, unit, counit, mult, comult)
}

/// The truncated polynomial table `K[x]/(x^m)` with primitive `x`
/// (`Delta x^k` expands binomially). A bialgebra exactly when the field
/// kills the relevant binomials, i.e. over `F_p` with `m = p`.
pub fn truncated_primitive_table(field: Field, m: usize) -> Result<Bialgebra, Error> {
    if m < 2 {
        return Err(Error::InvalidData("truncation degree must be at least 2".into()));
    }
    let labels = (0..m)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x{i}"),
        })
        .collect();
    let mut mult = Matrix::zero(field, m, m * m);
    for i in 0..m {
        for j in 0..m {
            if i + j < m {
                mult.set(i + j, i * m + j, field.one());
            }
        }
    }
    // Pascal triangle in the field
    let mut binom = vec![vec![field.zero(); m]; m];
    for row in binom.iter_mut() {
        row[0] = field.one();
    }
    for k in 1..m {
        for j in 1..=k {
            let a = binom[k - 1][j - 1].clone();
            let b = if j <= k - 1 { binom[k - 1][j].clone() } else { field.zero() };
            binom[k][j] = a.add(&b);
        }
    }
    let mut comult = Matrix::zero(field, m * m, m);
    for k in 0..m {
        for j in 0..=k {
            comult.set(j * m + (k - j), k, binom[k][j].clone());
        }
    }
    let mut unit = vec![field.zero(); m];
    unit[0] = field.one();
    let mut counit = vec![field.zero(); m];
    counit[0] = field.one();
    Bialgebra::new(field, labels, unit, counit, mult, comult)
}

/// `F_p[x]/(x^p)` with primitive `x`.
pub fn divided_power(p: u64) -> Result<Bialgebra, Error> {
    let field = Field::fp(p)?;
    truncated_primitive_table(field, p as usize)
}

/// The one-dimensional bialgebra.
pub fn trivial(field: Field) -> Bialgebra {
    let one = field.one();
    Bialgebra::new(
        field,
        vec!["1".into()],
        vec![one.clone()],
        vec![one.clone()],
        Matrix::from_rows(field, vec![vec![one.clone()]]).unwrap(),
        Matrix::from_rows(field, vec![vec![one]]).unwrap(),
    )
    .expect("the one-dimensional bialgebra is valid")
}

/// Generator names accepted by [`by_name`], in the order they are listed by
/// the command-line help.
pub const GENERATOR_NAMES: [&str; 7] =
    ["c2", "c3", "s3", "idempotent_monoid", "sweedler_h4", "trivial", "divided_power"];

/// Builds a stock bialgebra by name over the requested field.
/// `divided_power` requires a prime field and uses its characteristic as the
/// truncation degree.
pub fn by_name(name: &str, field: Field) -> Result<Bialgebra, Error> {
    match name {
        "c2" => cyclic_group(field, 2),
        "c3" => cyclic_group(field, 3),
        "s3" => symmetric_s3(field),
        "idempotent_monoid" => idempotent_monoid(field),
        "sweedler_h4" => sweedler_h4(field),
        "trivial" => Ok(trivial(field)),
        "divided_power" => match field {
            Field::Fp(p) => divided_power(p),
            Field::Q => Err(Error::InvalidData(
                "divided_power requires a prime field (the primitive-generator table over Q \
                 fails the comultiplication algebra-map axiom)"
                    .into(),
            )),
        },
        _ => Err(Error::UnknownGenerator(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialg::check_bialgebra_axioms;

    #[test]
    fn zoo_members_are_valid() {
        assert!(cyclic_group(Field::Q, 2).is_ok());
        assert!(cyclic_group(Field::Q, 3).is_ok());
        assert!(symmetric_s3(Field::Q).is_ok());
        assert!(idempotent_monoid(Field::Q).is_ok());
        assert!(sweedler_h4(Field::Q).is_ok());
        assert!(divided_power(2).is_ok());
        assert!(divided_power(3).is_ok());
        assert!(divided_power(5).is_ok());
    }

    #[test]
    fn s3_is_a_noncommutative_group_algebra() {
        let b = symmetric_s3(Field::Q).unwrap();
        assert_eq!(b.dim(), 6);
        let lhs = b.mult_vec(&b.basis_vector(1), &b.basis_vector(2));
        let rhs = b.mult_vec(&b.basis_vector(2), &b.basis_vector(1));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn bad_tables_name_the_offending_cell() {
        // not associative: 2-element table with s*s = s but s*1 = s, 1*s = 1
        let bad = vec![vec![0, 0], vec![1, 1]];
        let err = monoid_algebra(Field::Q, vec!["a".into(), "b".into()], &bad).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("identity") || msg.contains("associativity"), "{msg}");

        let no_inverse = vec![vec![0, 1], vec![1, 1]];
        let err =
            group_algebra(Field::Q, vec!["1".into(), "s".into()], &no_inverse).unwrap_err();
        assert!(err.to_string().contains("no inverse"));

        let out_of_range = vec![vec![0, 2], vec![1, 0]];
        let err =
            monoid_algebra(Field::Q, vec!["1".into(), "s".into()], &out_of_range).unwrap_err();
        assert!(err.to_string().contains("out of range"));
    }

    #[test]
    fn truncated_primitive_table_is_rejected_over_q() {
        let err = truncated_primitive_table(Field::Q, 2).unwrap_err();
        match err {
            crate::Error::AxiomsFail(report) => {
                assert!(report.comult_is_algebra_map.is_some());
            }
            other => panic!("expected axiom failure, got {other}"),
        }
    }

    #[test]
    fn divided_power_is_valid_over_matching_prime() {
        for p in [2u64, 3, 5] {
            let b = divided_power(p).unwrap();
            assert!(check_bialgebra_axioms(&b).all_pass());
            assert_eq!(b.dim(), p as usize);
        }
    }

    #[test]
    fn h4_relations_hold() {
        let b = sweedler_h4(Field::Q).unwrap();
        let (one, g, x, gx) =
            (b.basis_vector(0), b.basis_vector(1), b.basis_vector(2), b.basis_vector(3));
        assert_eq!(b.mult_vec(&g, &g), one);
        assert!(b.mult_vec(&x, &x).iter().all(|s| s.is_zero()));
        let xg = b.mult_vec(&x, &g);
        let minus_gx: Vec<_> = gx.iter().map(|s| s.neg()).collect();
        assert_eq!(xg, minus_gx);
        assert_eq!(b.mult_vec(&g, &x), gx);
    }
}
