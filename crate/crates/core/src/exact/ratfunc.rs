use std::fmt;

use num_traits::{One, Zero};

use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// A reduced quotient of univariate polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = UniPoly::gcd(&num, &den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let lead = den.leading().expect("nonzero").clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Valuation at `t = 0`.
    pub fn order(&self) -> Result<i64> {
        let n = self.num.order_at_zero().ok_or(Error::OrderOfZero)?;
        let d = self.den.order_at_zero().expect("nonzero denominator");
        Ok(n as i64 - d as i64)
    }

    /// Value at `t = 0` when the function is regular there.
    pub fn value_at_zero(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            // Reduced, so a pole unless the numerator also vanishes (it does not).
            return None;
        }
        Some(self.num.coeff(0) / d0)
    }

    /// Largest total degree of numerator and denominator.
    pub fn height(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn sub_const(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let num = &self.num - &self.den.scale(c);
        Self::new(num, self.den.clone()).expect("nonzero denominator")
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
