//! Bivariate polynomials over the rationals.
//!
//! `BivarPoly` represents elements of Q[λ,μ] as a sparse exponent-pair map.
//! It is itself a [`Ring`], so it can sit in matrix entries, and it evaluates
//! into any ring that embeds the rationals — in particular the jet rings,
//! which is how partial derivatives of the determinant function are obtained
//! without symbolic differentiation.

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::jet::{Jet1, Jet2};
use crate::ring::{parse_rational, rational_string, ring_pow, Rational, Ring};

/// The two formal variables of the determinant function Φ(λ, μ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Lambda,
    Mu,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Lambda => write!(f, "lambda"),
            Var::Mu => write!(f, "mu"),
        }
    }
}

/// Rings into which a rational coefficient embeds canonically.
pub trait FromRational: Ring {
    fn from_rational(r: &Rational) -> Self;
}

impl FromRational for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl FromRational for Jet1<Rational> {
    fn from_rational(r: &Rational) -> Self {
        Jet1::constant(r.clone())
    }
}

impl FromRational for Jet2<Rational> {
    fn from_rational(r: &Rational) -> Self {
        Jet2::constant(r.clone())
    }
}

impl FromRational for BivarPoly {
    fn from_rational(r: &Rational) -> Self {
        BivarPoly::constant(r.clone())
    }
}

/// Sparse polynomial in Q[λ, μ]: exponent pair `(d_λ, d_μ)` → coefficient.
/// Zero coefficients are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivarPoly {
    /// Single term `coef · λ^dl · μ^dm`; the zero polynomial if `coef` is 0.
    pub fn monomial(coef: Rational, dl: u32, dm: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert((dl, dm), coef);
        }
        BivarPoly { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn variable(v: Var) -> Self {
        match v {
            Var::Lambda => Self::monomial(Rational::one(), 1, 0),
            Var::Mu => Self::monomial(Rational::one(), 0, 1),
        }
    }

    /// Builds from `(coef, dl, dm)` triples, accumulating repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (Rational, u32, u32)>>(iter: I) -> Self {
        let mut p = BivarPoly::zero();
        for (coef, dl, dm) in iter {
            p.add_term(coef, dl, dm);
        }
        p
    }

    fn add_term(&mut self, coef: Rational, dl: u32, dm: u32) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry((dl, dm)).or_insert_with(Rational::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&(dl, dm));
        }
    }

    /// Terms in ascending `(d_λ, d_μ)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(dl, dm), c)| (dl, dm, c))
    }

    /// Largest exponent of `v` appearing in any term (0 for the zero poly).
    pub fn degree(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|&(dl, dm)| match v {
                Var::Lambda => dl,
                Var::Mu => dm,
            })
            .max()
            .unwrap_or(0)
    }

    /// Formal partial derivative ∂p/∂v.
    pub fn partial(&self, v: Var) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(dl, dm), c) in &self.terms {
            match v {
                Var::Lambda if dl > 0 => {
                    out.add_term(c * Rational::from_integer(dl.into()), dl - 1, dm)
                }
                Var::Mu if dm > 0 => {
                    out.add_term(c * Rational::from_integer(dm.into()), dl, dm - 1)
                }
                _ => {}
            }
        }
        out
    }

    /// Evaluates in any ring embedding Q, by embedding each coefficient and
    /// forming the monomials with ring multiplications only.
    pub fn eval_in<R: FromRational>(&self, lambda: &R, mu: &R) -> R {
        let mut acc = R::zero();
        for (&(dl, dm), c) in &self.terms {
            let term =
                R::from_rational(c) * ring_pow(lambda, dl as u64) * ring_pow(mu, dm as u64);
            acc = acc + term;
        }
        acc
    }

    pub fn eval(&self, lambda: &Rational, mu: &Rational) -> Rational {
        self.eval_in(lambda, mu)
    }

    /// Jet evaluation: feeding `α + ε₁` in one slot yields the value and the
    /// corresponding first partial in the ε₁ coefficient, exactly.
    pub fn eval_jet2(&self, lambda: &Jet2<Rational>, mu: &Jet2<Rational>) -> Jet2<Rational> {
        self.eval_in(lambda, mu)
    }
}

impl Add for BivarPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (&(dl, dm), c) in &rhs.terms {
            self.add_term(c.clone(), dl, dm);
        }
        self
    }
}

impl Sub for BivarPoly {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (&(dl, dm), c) in &rhs.terms {
            self.add_term(-c.clone(), dl, dm);
        }
        self
    }
}

impl Neg for BivarPoly {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for BivarPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = BivarPoly::zero();
        for (&(dl1, dm1), c1) in &self.terms {
            for (&(dl2, dm2), c2) in &rhs.terms {
                out.add_term(c1 * c2, dl1 + dl2, dm1 + dm2);
            }
        }
        out
    }
}

impl Zero for BivarPoly {
    fn zero() -> Self {
        BivarPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BivarPoly {
    fn one() -> Self {
        BivarPoly::constant(Rational::one())
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(dl, dm), c) in self.terms.iter().rev() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut vars = String::new();
            if dl > 0 {
                vars.push_str("l");
                if dl > 1 {
                    vars.push_str(&format!("^{dl}"));
                }
            }
            if dm > 0 {
                if dl > 0 {
                    vars.push('*');
                }
                vars.push_str("m");
                if dm > 1 {
                    vars.push_str(&format!("^{dm}"));
                }
            }
            if vars.is_empty() {
                write!(f, "{}", rational_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{}*{vars}", rational_string(&mag))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    coef: String,
    dl: u32,
    dm: u32,
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let dtos: Vec<TermDto> = self
            .terms
            .iter()
            .map(|(&(dl, dm), c)| TermDto { coef: rational_string(c), dl, dm })
            .collect();
        dtos.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dtos = Vec::<TermDto>::deserialize(deserializer)?;
        let mut p = BivarPoly::zero();
        for dto in dtos {
            let coef = parse_rational(&dto.coef).map_err(D::Error::custom)?;
            p.add_term(coef, dto.dl, dto.dm);
        }
        Ok(p)
    }
}
