//! Exact field scalars: arbitrary-precision rationals and prime fields.
//!
//! Every scalar belongs to an explicit [`Field`]. Rationals are kept in
//! lowest terms with a positive denominator; prime-field residues are kept
//! reduced to `0..p`. There is no floating point and no tolerance anywhere:
//! equality is structural equality of canonical forms.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A coefficient field: the rationals or a prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The field of rational numbers.
    Q,
    /// The prime field with `p` elements. `p` is validated prime on entry.
    Fp(u64),
}

impl Field {
    /// Constructs `F_p`, rejecting non-primes.
    pub fn fp(p: u64) -> Result<Field, Error> {
        if is_prime(p) {
            Ok(Field::Fp(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { p: *p, v: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { p: *p, v: 1 % *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, v: r }
            }
        }
    }

    /// Parses a scalar string: a decimal integer or `a/b` with `b` nonzero
    /// (and invertible, over `F_p`).
    pub fn parse(&self, s: &str) -> Result<Scalar, Error> {
        let bad = |reason: &str| Error::ScalarParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (num_str, den_str) = match s.split_once('/') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let numer = BigInt::from_str(num_str.trim()).map_err(|_| bad("invalid integer"))?;
        let denom = match den_str {
            Some(b) => BigInt::from_str(b.trim()).map_err(|_| bad("invalid denominator"))?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(bad("zero denominator"));
        }
        match self {
            Field::Q => Ok(Scalar::Q(BigRational::new(numer, denom))),
            Field::Fp(p) => {
                let n = bigint_mod(&numer, *p);
                let d = bigint_mod(&denom, *p);
                let dinv = inv_mod(d, *p).ok_or_else(|| bad("denominator is 0 mod p"))?;
                Ok(Scalar::Fp { p: *p, v: mul_mod(n, dinv, *p) })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

/// An element of a [`Field`], in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { p, v } => *v == 1 % *p,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) if p == q => {
                Scalar::Fp { p: *p, v: add_mod(*a, *b, *p) }
            }
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), rhs.field()),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) if p == q => {
                Scalar::Fp { p: *p, v: mul_mod(*a, *b, *p) }
            }
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), rhs.field()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: if *v == 0 { 0 } else { p - v } },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(a.recip()))
                }
            }
            Scalar::Fp { p, v } => inv_mod(*v, *p).map(|v| Scalar::Fp { p: *p, v }),
        }
    }

    /// `self / rhs`; `None` when `rhs` is zero.
    pub fn div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|i| self.mul(&i))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    let (_, digits) = m.to_u64_digits();
    match digits.as_slice() {
        [] => 0,
        [d] => *d,
        _ => unreachable!("residue exceeds modulus"),
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(v: u64, p: u64) -> Option<u64> {
    if v % p == 0 {
        None
    } else {
        Some(pow_mod(v, p - 2, p))
    }
}

/// Deterministic Miller-Rabin, exact for all u64 with this witness set.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        Field::Q.parse(s).unwrap()
    }

    #[test]
    fn rational_canonical_form() {
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(q("-2/-4"), q("1/2"));
        assert_eq!(q("2/-4").to_string(), "-1/2");
        assert_eq!(q("6/3").to_string(), "2");
        assert_eq!(q("0/5"), Field::Q.zero());
    }

    #[test]
    fn rational_parse_rejects_zero_denominator() {
        assert!(Field::Q.parse("1/0").is_err());
        assert!(Field::Q.parse("x").is_err());
        assert!(Field::Q.parse("1/2/3").is_err());
    }

    #[test]
    fn fp_reduction_and_inverse() {
        let f5 = Field::fp(5).unwrap();
        assert_eq!(f5.parse("7").unwrap(), f5.from_i64(2));
        assert_eq!(f5.parse("-1").unwrap(), f5.from_i64(4));
        assert_eq!(f5.parse("1/2").unwrap(), f5.from_i64(3));
        assert!(f5.parse("1/5").is_err());
        assert_eq!(f5.from_i64(3).inv().unwrap(), f5.from_i64(2));
        assert!(f5.zero().inv().is_none());
    }

    #[test]
    fn fp_requires_prime_modulus() {
        assert!(Field::fp(6).is_err());
        assert!(Field::fp(1).is_err());
        assert!(Field::fp(0).is_err());
        assert!(Field::fp(2).is_ok());
        assert!(Field::fp(97).is_ok());
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = q("1/3");
        let sum = third.add(&third).add(&third);
        assert!(sum.is_one());
        let f2 = Field::fp(2).unwrap();
        assert!(f2.one().add(&f2.one()).is_zero());
    }

    #[test]
    fn display_reparses_to_itself() {
        for s in ["0", "1", "-1", "1/2", "-3/7", "22"] {
            let v = q(s);
            assert_eq!(Field::Q.parse(&v.to_string()).unwrap(), v);
            assert_eq!(v.to_string(), Field::Q.parse(s).unwrap().to_string());
        }
    }
}
