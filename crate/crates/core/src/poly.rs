//! Integer polynomials in one variable `q` and exact interpolation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial with `i128` coefficients; index = degree. Trailing zeros are
/// trimmed so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

/// An integer read through `deserialize_any`, so that 128-bit values also
/// load inside buffered (tagged or flattened) serde content.
pub(crate) struct Wide(pub i128);

struct WideVisitor;

impl Visitor<'_> for WideVisitor {
    type Value = Wide;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "an integer")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Wide, E> {
        Ok(Wide(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Wide, E> {
        Ok(Wide(v.into()))
    }

    fn visit_i128<E: de::Error>(self, v: i128) -> std::result::Result<Wide, E> {
        Ok(Wide(v))
    }

    fn visit_u128<E: de::Error>(self, v: u128) -> std::result::Result<Wide, E> {
        i128::try_from(v)
            .map(Wide)
            .map_err(|_| E::custom("integer out of range"))
    }
}

impl<'de> Deserialize<'de> for Wide {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(WideVisitor)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<Wide> = Vec::deserialize(d)?;
        Ok(IntPolynomial::new(raw.into_iter().map(|w| w.0).collect()))
    }
}

/// `(prime, count)` samples with wide counts.
pub(crate) fn deserialize_samples<'de, D: Deserializer<'de>>(
    d: D,
) -> std::result::Result<Vec<(u64, u128)>, D::Error> {
    let raw: Vec<(u64, Wide)> = Vec::deserialize(d)?;
    raw.into_iter()
        .map(|(p, w)| {
            u128::try_from(w.0)
                .map(|c| (p, c))
                .map_err(|_| de::Error::custom("negative count"))
        })
        .collect()
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i128) -> Self {
        Self::new(vec![c])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        IntPolynomial { coeffs: c }
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs: c }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{a}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&0) + rhs.coeffs.get(i).unwrap_or(&0))
            .collect();
        IntPolynomial::new(c)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPolynomial::new(c)
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |a, b| &a + &b)
    }
}

/// Fits the polynomial of degree at most `degree_bound` through the first
/// `degree_bound + 1` samples by exact Lagrange interpolation, then checks it
/// against every remaining sample.
pub fn fit_polynomial(samples: &[(u64, i128)], degree_bound: usize) -> Result<IntPolynomial> {
    let n = degree_bound + 1;
    if samples.len() < n {
        return Err(Error::NotEnoughSamples {
            needed: n,
            got: samples.len(),
        });
    }
    let (fit, rest) = samples.split_at(n);
    for (i, a) in fit.iter().enumerate() {
        if fit[..i].iter().any(|b| b.0 == a.0) {
            return Err(Error::NotEnoughSamples { needed: n, got: i });
        }
    }
    let mut total = vec![BigRational::zero(); n];
    for (i, &(xi, yi)) in fit.iter().enumerate() {
        // basis polynomial prod_{j != i} (q - xj) / (xi - xj)
        let mut basis = vec![BigRational::from_integer(BigInt::from(1))];
        let mut denom = BigInt::from(1);
        for (j, &(xj, _)) in fit.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj = BigRational::from_integer(BigInt::from(xj));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &xj;
            }
            basis = next;
            denom *= BigInt::from(xi as i128 - fit[j].0 as i128);
        }
        let scale = BigRational::new(BigInt::from(yi), denom);
        for (k, b) in basis.iter().enumerate() {
            total[k] += b * &scale;
        }
    }
    let mut coeffs = Vec::with_capacity(n);
    for c in &total {
        if !c.is_integer() {
            return Err(Error::NonIntegralFit(c.to_string()));
        }
        let v = c
            .to_integer()
            .to_i128()
            .ok_or_else(|| Error::NonIntegralFit(c.to_string()))?;
        coeffs.push(v);
    }
    let poly = IntPolynomial::new(coeffs);
    for &(q, count) in rest {
        let predicted = poly.eval(q as i128);
        if predicted != count {
            return Err(Error::InconsistentSamples {
                q,
                count,
                predicted,
            });
        }
    }
    Ok(poly)
}
