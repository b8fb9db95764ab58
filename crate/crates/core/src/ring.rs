//! The scalar contract and the base scalar.
//!
//! All matrix and graph computations in this crate are generic over a
//! commutative ring with identity. [`Ring`] is a trait alias over the
//! `num-traits` building blocks; anything that implements the usual operator
//! traits plus `Zero`/`One` gets it for free. The concrete rings are the
//! arbitrary-precision [`Rational`], the jet rings in [`crate::jet`], and the
//! bivariate polynomials in [`crate::poly`].

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Commutative ring with identity, as needed by the determinant engine.
///
/// Division is deliberately absent: the jet rings contain zero divisors, so
/// everything built on this trait must stay division-free.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
{
}

/// Exact arbitrary-precision rational, the base scalar everywhere.
///
/// Always stored canonically: reduced, positive denominator, zero as `0/1`.
/// Equality is therefore structural.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fraction `n/d`. Panics on `d == 0`; use [`checked_div`] for fallible paths.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact division with an explicit error on a zero divisor.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Parses `"p/q"` or `"p"` into a canonical rational.
///
/// Rejects a zero denominator and anything that is not an integer pair.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let trimmed = s.trim();
    Rational::from_str(trimmed).map_err(|e| Error::InvalidRational {
        input: s.to_string(),
        reason: e.to_string(),
    })
}

/// Canonical string form: `"p/q"` with `q > 0` and `gcd(|p|,q) = 1`, or just
/// `"p"` when the denominator is 1.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

/// `base^exp` by repeated squaring, using only ring multiplications.
pub fn ring_pow<R: Ring>(base: &R, mut exp: u64) -> R {
    let mut acc = R::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * sq.clone();
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.clone() * sq;
        }
    }
    acc
}
