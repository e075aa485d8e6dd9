//! Exact scalar fields: the rationals and prime fields F_p.
//!
//! A [`Scalar`] carries enough information to do arithmetic on its own (the
//! prime travels with every F_p element), so matrix code can use ordinary
//! operators. Mixing elements of different fields is a logic error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime; products of two residues must fit in a `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum ExactField {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    Prime { p: u64 },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The first `count` primes, starting at 2.
pub fn first_primes(count: usize) -> Vec<u64> {
    (2u64..).filter(|&n| is_prime(n)).take(count).collect()
}

impl ExactField {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(Error::NotPrime(p));
        }
        Ok(ExactField::Prime { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            ExactField::Rationals => 0,
            ExactField::Prime { p } => *p,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            ExactField::Rationals => None,
            ExactField::Prime { p } => Some(*p),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            ExactField::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            ExactField::Prime { p } => Scalar::Fp {
                v: v.rem_euclid(*p as i64) as u64,
                p: *p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            ExactField::Rationals => Scalar::Q(BigRational::from_integer(v.clone())),
            ExactField::Prime { p } => {
                let m = BigInt::from(*p);
                let r = ((v % &m) + &m) % &m;
                Scalar::Fp {
                    v: r.to_u64().unwrap(),
                    p: *p,
                }
            }
        }
    }

    /// Element number `index` in a fixed enumeration of F_p (0, 1, ..., p-1).
    pub fn element(&self, index: u64) -> Scalar {
        match self {
            ExactField::Rationals => self.from_i64(index as i64),
            ExactField::Prime { p } => Scalar::Fp {
                v: index % p,
                p: *p,
            },
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (ExactField::Rationals, Scalar::Q(_)) => true,
            (ExactField::Prime { p }, Scalar::Fp { p: q, .. }) => p == q,
            _ => false,
        }
    }
}

impl fmt::Display for ExactField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactField::Rationals => write!(f, "Q"),
            ExactField::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { v: u64, p: u64 },
    Q(BigRational),
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }

    pub fn field(&self) -> ExactField {
        match self {
            Scalar::Fp { p, .. } => ExactField::Prime { p: *p },
            Scalar::Q(_) => ExactField::Rationals,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Fp { v, p } => Scalar::Fp {
                v: mod_pow(*v, p - 2, *p),
                p: *p,
            },
            Scalar::Q(q) => Scalar::Q(q.recip()),
        }
    }

    /// Integer representative: the residue in `0..p`, or the rational itself
    /// when it is integral.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Fp { v, .. } => Some(BigInt::from(*v)),
            Scalar::Q(q) => q.is_integer().then(|| q.to_integer()),
        }
    }

    /// Integer representative as `i64`, with residues mapped to the symmetric
    /// range so that `-1` prints as `-1` rather than `p-1`.
    pub fn to_i64_symmetric(&self) -> Option<i64> {
        match self {
            Scalar::Fp { v, p } => {
                let v = *v as i64;
                let p = *p as i64;
                Some(if v > p / 2 { v - p } else { v })
            }
            Scalar::Q(q) => q.is_integer().then(|| q.to_integer().to_i64()).flatten(),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { v, .. } => write!(f, "{v}"),
            Scalar::Q(q) => write!(f, "{q}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $fp:expr, $q:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                        assert_eq!(p, q, "mixed prime fields");
                        Scalar::Fp {
                            v: $fp(*a, *b, *p),
                            p: *p,
                        }
                    }
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q($q(a, b)),
                    _ => panic!("mixed fields in scalar arithmetic"),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a, b, p| (a + b) % p,
    |a: &BigRational, b: &BigRational| a + b
);
binop!(
    Sub,
    sub,
    |a, b, p| (a + p - b) % p,
    |a: &BigRational, b: &BigRational| a - b
);
binop!(
    Mul,
    mul,
    |a, b, p| a * b % p,
    |a: &BigRational, b: &BigRational| a * b
);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (p - v) % p,
                p: *p,
            },
            Scalar::Q(q) => Scalar::Q(-q),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = ExactField::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(-2);
        assert_eq!(&a + &b, f.from_i64(1));
        assert_eq!(&a * &b, f.from_i64(1));
        assert_eq!(a.inv(), f.from_i64(5));
        assert_eq!(-&a, f.from_i64(4));
        assert_eq!(b.to_i64_symmetric(), Some(-2));
    }

    #[test]
    fn rationals() {
        let f = ExactField::Rationals;
        let half = f.from_i64(2).inv();
        assert_eq!(&half + &half, f.one());
        assert!(half.to_bigint().is_none());
    }

    #[test]
    fn rejects_composites() {
        assert_eq!(ExactField::prime(9), Err(Error::NotPrime(9)));
        assert!(ExactField::prime(2).is_ok());
        assert_eq!(first_primes(5), vec![2, 3, 5, 7, 11]);
    }
}
