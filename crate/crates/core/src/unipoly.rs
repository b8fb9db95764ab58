//! Exact univariate polynomials over the rationals.
//!
//! Support for the interpolation oracles: Lagrange interpolation through
//! exact nodes, formal derivatives, and Horner evaluation. Production paths
//! use jets instead; this module exists so the two routes stay independent.

use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use crate::ring::Rational;

/// Coefficients ascending by power, no trailing zeros (zero poly is empty).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(k.into()))
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, s: &Rational) -> UniPoly {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact division by `(x − r)`. Panics unless `r` is a root.
    pub fn div_linear(&self, r: &Rational) -> UniPoly {
        self.try_div_linear(r)
            .expect("not a root in exact linear division")
    }

    /// Exact division by (x − r): the quotient, or None when r is not a root
    /// (nonzero remainder).
    pub fn try_div_linear(&self, r: &Rational) -> Option<UniPoly> {
        let n = self.coeffs.len();
        if n == 0 {
            return Some(UniPoly::default());
        }
        let mut quot = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &carry * r;
            if k == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                quot[k - 1] = v.clone();
                carry = v;
            }
        }
        Some(Self::new(quot))
    }

    /// Lagrange interpolation through points with pairwise-distinct abscissae.
    pub fn interpolate(points: &[(Rational, Rational)]) -> UniPoly {
        // Full node product Π(x − x_j), then peel one factor per basis poly.
        let mut master = UniPoly::constant(Rational::one());
        for (x, _) in points {
            master = master * (UniPoly::x() - UniPoly::constant(x.clone()));
        }
        let mut acc = UniPoly::default();
        for (xi, yi) in points {
            let basis = master.div_linear(xi);
            let denom = basis.eval(xi);
            assert!(!denom.is_zero(), "repeated interpolation node");
            acc = acc + basis.scale(&(yi / denom));
        }
        acc
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        UniPoly::constant(Rational::one())
    }
}

impl Add for UniPoly {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Self::new(coeffs)
    }
}

impl Sub for UniPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Self::new(coeffs)
    }
}

impl Neg for UniPoly {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for UniPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }
}
