//! Truncated jets: ring elements carrying derivatives.
//!
//! A [`Jet1`] is `a0 + a1·ε` with `ε² = 0`; multiplying jets propagates first
//! derivatives exactly. A [`Jet2`] adds a second independent infinitesimal
//! (`ε₁² = ε₂² = 0`, but `ε₁ε₂ ≠ 0`) and so carries a mixed partial in its
//! top coefficient. Both are commutative rings with zero divisors, which is
//! why every determinant in this crate is division-free.

use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use crate::ring::Ring;

/// First-order jet `a0 + a1·ε` over the ring `R`, with `ε² = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet1<R> {
    /// Value part.
    pub a0: R,
    /// Coefficient of ε.
    pub a1: R,
}

impl<R: Ring> Jet1<R> {
    pub fn new(a0: R, a1: R) -> Self {
        Jet1 { a0, a1 }
    }

    /// Embeds a plain ring element: derivative zero.
    pub fn constant(a: R) -> Self {
        Jet1 { a0: a, a1: R::zero() }
    }

    /// The evaluation point of the active variable: `a + ε`.
    pub fn variable(a: R) -> Self {
        Jet1 { a0: a, a1: R::one() }
    }
}

impl<R: Ring> Add for Jet1<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Jet1 { a0: self.a0 + rhs.a0, a1: self.a1 + rhs.a1 }
    }
}

impl<R: Ring> Sub for Jet1<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Jet1 { a0: self.a0 - rhs.a0, a1: self.a1 - rhs.a1 }
    }
}

impl<R: Ring> Neg for Jet1<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Jet1 { a0: -self.a0, a1: -self.a1 }
    }
}

impl<R: Ring> Mul for Jet1<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Jet1 {
            a0: self.a0.clone() * rhs.a0.clone(),
            a1: self.a0 * rhs.a1 + self.a1 * rhs.a0,
        }
    }
}

impl<R: Ring> Zero for Jet1<R> {
    fn zero() -> Self {
        Jet1::constant(R::zero())
    }
    fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }
}

impl<R: Ring> One for Jet1<R> {
    fn one() -> Self {
        Jet1::constant(R::one())
    }
}

/// Second-order bi-jet `a00 + a10·ε₁ + a01·ε₂ + a11·ε₁ε₂` with
/// `ε₁² = ε₂² = 0`. The `a11` coefficient of a product accumulates the mixed
/// second derivative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet2<R> {
    pub a00: R,
    pub a10: R,
    pub a01: R,
    pub a11: R,
}

impl<R: Ring> Jet2<R> {
    pub fn new(a00: R, a10: R, a01: R, a11: R) -> Self {
        Jet2 { a00, a10, a01, a11 }
    }

    pub fn constant(a: R) -> Self {
        Jet2 { a00: a, a10: R::zero(), a01: R::zero(), a11: R::zero() }
    }

    /// `a + ε₁`: active in the first infinitesimal.
    pub fn variable_1(a: R) -> Self {
        Jet2 { a00: a, a10: R::one(), a01: R::zero(), a11: R::zero() }
    }

    /// `a + ε₂`: active in the second infinitesimal.
    pub fn variable_2(a: R) -> Self {
        Jet2 { a00: a, a10: R::zero(), a01: R::one(), a11: R::zero() }
    }

    /// Embeds a first-order jet in the ε₁ slot, ε₂ parts zero.
    pub fn from_jet1(j: Jet1<R>) -> Self {
        Jet2 { a00: j.a0, a10: j.a1, a01: R::zero(), a11: R::zero() }
    }

    /// Projects back onto the ε₁ slot, discarding ε₂ information.
    pub fn to_jet1(&self) -> Jet1<R> {
        Jet1 { a0: self.a00.clone(), a1: self.a10.clone() }
    }
}

impl<R: Ring> Add for Jet2<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Jet2 {
            a00: self.a00 + rhs.a00,
            a10: self.a10 + rhs.a10,
            a01: self.a01 + rhs.a01,
            a11: self.a11 + rhs.a11,
        }
    }
}

impl<R: Ring> Sub for Jet2<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Jet2 {
            a00: self.a00 - rhs.a00,
            a10: self.a10 - rhs.a10,
            a01: self.a01 - rhs.a01,
            a11: self.a11 - rhs.a11,
        }
    }
}

impl<R: Ring> Neg for Jet2<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Jet2 { a00: -self.a00, a10: -self.a10, a01: -self.a01, a11: -self.a11 }
    }
}

impl<R: Ring> Mul for Jet2<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let a11 = self.a00.clone() * rhs.a11.clone()
            + self.a10.clone() * rhs.a01.clone()
            + self.a01.clone() * rhs.a10.clone()
            + self.a11.clone() * rhs.a00.clone();
        Jet2 {
            a00: self.a00.clone() * rhs.a00.clone(),
            a10: self.a00.clone() * rhs.a10.clone() + self.a10 * rhs.a00.clone(),
            a01: self.a00 * rhs.a01 + self.a01 * rhs.a00,
            a11,
        }
    }
}

impl<R: Ring> Zero for Jet2<R> {
    fn zero() -> Self {
        Jet2::constant(R::zero())
    }
    fn is_zero(&self) -> bool {
        self.a00.is_zero() && self.a10.is_zero() && self.a01.is_zero() && self.a11.is_zero()
    }
}

impl<R: Ring> One for Jet2<R> {
    fn one() -> Self {
        Jet2::constant(R::one())
    }
}
