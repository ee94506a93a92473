use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::rational::{rat, Rational};

/// An element `p + q*sqrt(5)` of the real quadratic field Q(sqrt 5).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd5 {
    pub p: Rational,
    pub q: Rational,
}

impl Surd5 {
    pub fn new(p: Rational, q: Rational) -> Self {
        Surd5 { p, q }
    }

    pub fn rational(p: Rational) -> Self {
        Surd5 { p, q: Rational::zero() }
    }

    pub fn sqrt5() -> Self {
        Surd5 { p: Rational::zero(), q: rat(1, 1) }
    }

    /// `(3 + sqrt 5) / 2`
    pub fn golden_square() -> Self {
        Surd5::new(rat(3, 2), rat(1, 2))
    }

    /// Exact sign, decided by comparing `p^2` with `5 q^2`.
    pub fn sign(&self) -> Ordering {
        let sp = self.p.cmp(&Rational::zero());
        let sq = self.q.cmp(&Rational::zero());
        match (sp, sq) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (a, b) if a == b => a,
            // Opposite signs: the larger magnitude wins. Equality is impossible
            // since sqrt 5 is irrational and both parts are nonzero.
            (a, _) => {
                let p2 = &self.p * &self.p;
                let q2 = &self.q * &self.q * rat(5, 1);
                if p2 > q2 {
                    a
                } else {
                    a.reverse()
                }
            }
        }
    }

    pub fn signum(&self) -> i8 {
        match self.sign() {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Surd5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_negative() {
            write!(f, "{} - {}*sqrt(5)", self.p, -self.q.clone())
        } else {
            write!(f, "{} + {}*sqrt(5)", self.p, self.q)
        }
    }
}

impl Neg for &Surd5 {
    type Output = Surd5;
    fn neg(self) -> Surd5 {
        Surd5::new(-self.p.clone(), -self.q.clone())
    }
}

impl Add for &Surd5 {
    type Output = Surd5;
    fn add(self, o: &Surd5) -> Surd5 {
        Surd5::new(&self.p + &o.p, &self.q + &o.q)
    }
}

impl Sub for &Surd5 {
    type Output = Surd5;
    fn sub(self, o: &Surd5) -> Surd5 {
        Surd5::new(&self.p - &o.p, &self.q - &o.q)
    }
}

impl Mul for &Surd5 {
    type Output = Surd5;
    fn mul(self, o: &Surd5) -> Surd5 {
        let five = rat(5, 1);
        Surd5::new(
            &self.p * &o.p + &self.q * &o.q * five,
            &self.p * &o.q + &self.q * &o.p,
        )
    }
}
