use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, Rational};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Homogeneous form in `(s, t)`.
///
/// `coeffs[i]` is the coefficient of `s^(d-i) t^i`. This descending
/// `s`-power order is also the order used by every "first nonzero
/// coefficient" normalization in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

/// A point `(s : t)` of the projective line, normalized so the first
/// nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamPoint {
    s: Rational,
    t: Rational,
}

impl ParamPoint {
    pub fn new(s: Rational, t: Rational) -> Result<Self> {
        if s.is_zero() && t.is_zero() {
            return Err(Error::InvalidArgument("(0:0) is not a point".into()));
        }
        if s.is_zero() {
            Ok(ParamPoint {
                s,
                t: Rational::one(),
            })
        } else {
            let t = &t / &s;
            Ok(ParamPoint {
                s: Rational::one(),
                t,
            })
        }
    }

    pub fn from_ints(s: i64, t: i64) -> Self {
        Self::new(super::rational::int(s), super::rational::int(t)).expect("nonzero point")
    }

    /// The point `(1 : a)`.
    pub fn affine(a: Rational) -> Self {
        ParamPoint {
            s: Rational::one(),
            t: a,
        }
    }

    pub fn infinity() -> Self {
        ParamPoint {
            s: Rational::zero(),
            t: Rational::one(),
        }
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn is_infinity(&self) -> bool {
        self.s.is_zero()
    }

    /// The normalized linear form vanishing at this point.
    pub fn linear_form(&self) -> BinaryForm {
        BinaryForm::new(vec![-self.t.clone(), self.s.clone()]).normalized()
    }

    /// Root of a nonzero linear form.
    pub fn root_of(linear: &BinaryForm) -> Result<Self> {
        if linear.degree() != 1 || linear.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "{linear} is not a linear form"
            )));
        }
        // a s + b t = 0  at  (s : t) = (b : -a)
        Self::new(linear.coeffs[1].clone(), -linear.coeffs[0].clone())
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.s, self.t)
    }
}

impl BinaryForm {
    /// Builds a form of degree `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs a degree");
        BinaryForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::rational::int(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    pub fn constant(c: Rational) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    pub fn s() -> Self {
        Self::from_ints(&[1, 0])
    }

    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `a s + b t`
    pub fn linear(a: Rational, b: Rational) -> Self {
        BinaryForm { coeffs: vec![a, b] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Set `s = 1`; the result is a polynomial in `t`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Set `t = 1`; the result is a polynomial in `s`.
    pub fn dehomogenize_s(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `s^degree * p(t/s)`. Fails if `p` has larger degree.
    pub fn homogenize(p: &UniPoly, degree: usize) -> Result<Self> {
        if p.degree().is_some_and(|pd| pd > degree) {
            return Err(Error::DimensionMismatch(format!(
                "cannot homogenize degree {} polynomial to degree {degree}",
                p.degree().unwrap_or(0)
            )));
        }
        Ok(BinaryForm {
            coeffs: (0..=degree).map(|i| p.coeff(i)).collect(),
        })
    }

    /// Multiplicity of `(0:1)` as a root, i.e. the power of `s` dividing the form.
    fn s_power(&self) -> usize {
        let hat = self.dehomogenize();
        self.degree() - hat.degree().unwrap_or(0)
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        let d = self.degree();
        let mut acc = Rational::zero();
        let mut tp = Rational::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &tp * pow(s, d - i);
            }
            tp = &tp * t;
        }
        acc
    }

    pub fn eval_at(&self, p: &ParamPoint) -> Rational {
        self.eval(p.s(), p.t())
    }

    /// Expansion in a local parameter `u` centered at `p`: `(1 : a + u)` for
    /// an affine point, `(u : 1)` for `(0:1)`.
    pub fn local_at(&self, p: &ParamPoint) -> UniPoly {
        if p.is_infinity() {
            self.dehomogenize_s()
        } else {
            self.dehomogenize().translate(p.t())
        }
    }

    /// Vanishing order at `p`; `None` for the zero form.
    pub fn order_at(&self, p: &ParamPoint) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        self.local_at(p).order_at_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &BinaryForm) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DimensionMismatch(format!(
                "adding forms of degree {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &BinaryForm) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &BinaryForm) -> Self {
        let mut out = vec![Rational::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = BinaryForm::constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Linear combination `sum c_i f_i` of forms of equal degree.
    pub fn combine(terms: &[(Rational, &BinaryForm)]) -> Result<Self> {
        let first = terms
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty combination".into()))?;
        let mut acc = BinaryForm::zero(first.1.degree());
        for (c, f) in terms {
            acc = acc.add(&f.scale(c))?;
        }
        Ok(acc)
    }

    /// Scale so the first nonzero coefficient is 1. The zero form is returned unchanged.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn partial_s(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm {
            coeffs: (0..d)
                .map(|i| &self.coeffs[i] * Rational::from_integer(BigInt::from(d - i)))
                .collect(),
        }
    }

    pub fn partial_t(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm {
            coeffs: (1..=d)
                .map(|i| &self.coeffs[i] * Rational::from_integer(BigInt::from(i)))
                .collect(),
        }
    }

    /// `f(a s + b t, c s + d t)` for `m = [[a, b], [c, d]]`.
    pub fn substitute_linear(&self, m: &[[Rational; 2]; 2]) -> Self {
        let new_s = BinaryForm::linear(m[0][0].clone(), m[0][1].clone());
        let new_t = BinaryForm::linear(m[1][0].clone(), m[1][1].clone());
        let d = self.degree();
        let s_pows: Vec<BinaryForm> = powers(&new_s, d);
        let t_pows: Vec<BinaryForm> = powers(&new_t, d);
        let mut acc = BinaryForm::zero(d);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = s_pows[d - i].mul(&t_pows[i]).scale(c);
            acc = acc.add(&term).expect("equal degrees");
        }
        acc
    }

    /// Exact quotient if `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &BinaryForm) -> Option<Self> {
        if divisor.is_zero() || divisor.degree() > self.degree() {
            return None;
        }
        let qd = self.degree() - divisor.degree();
        if self.is_zero() {
            return Some(BinaryForm::zero(qd));
        }
        // Divide out powers of s separately, then the t-dehomogenizations.
        let (sf, sd) = (self.s_power(), divisor.s_power());
        if sd > sf {
            return None;
        }
        let q = self.dehomogenize().exact_div(&divisor.dehomogenize())?;
        BinaryForm::homogenize(&q, qd).ok()
    }

    /// Greatest common divisor, normalized so its first nonzero coefficient is 1.
    pub fn gcd(f: &BinaryForm, g: &BinaryForm) -> Result<BinaryForm> {
        match (f.is_zero(), g.is_zero()) {
            (true, true) => Err(Error::UndefinedGcd),
            (true, false) => Ok(g.normalized()),
            (false, true) => Ok(f.normalized()),
            (false, false) => {
                let e = f.s_power().min(g.s_power());
                let h = UniPoly::gcd(&f.dehomogenize(), &g.dehomogenize());
                let hd = h.degree().unwrap_or(0);
                let core = BinaryForm::homogenize(&h, hd)?;
                Ok(BinaryForm::s().pow(e).mul(&core).normalized())
            }
        }
    }

    /// Gcd of several forms, skipping zero ones.
    pub fn gcd_all<'a>(forms: impl IntoIterator<Item = &'a BinaryForm>) -> Result<BinaryForm> {
        let mut acc: Option<BinaryForm> = None;
        for f in forms {
            if f.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => f.normalized(),
                Some(a) => BinaryForm::gcd(&a, f)?,
            });
        }
        acc.ok_or(Error::UndefinedGcd)
    }

    /// Factorization into normalized irreducible factors over the rationals,
    /// with multiplicities. Constants are dropped; factors are sorted by
    /// degree, then coefficients.
    pub fn factor(&self) -> Result<Vec<(BinaryForm, usize)>> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("cannot factor the zero form".into()));
        }
        let mut out = Vec::new();
        let e = self.s_power();
        if e > 0 {
            out.push((BinaryForm::s(), e));
        }
        let hat = self.dehomogenize();
        for (p, power) in super::factor::factor(&hat) {
            let deg = p.degree().unwrap_or(0);
            out.push((BinaryForm::homogenize(&p, deg)?.normalized(), power));
        }
        out.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.cmp_coeffs(b)));
        Ok(out)
    }

    fn cmp_coeffs(&self, other: &BinaryForm) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

fn pow(x: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc = &acc * x;
    }
    acc
}

fn powers(f: &BinaryForm, n: usize) -> Vec<BinaryForm> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BinaryForm::constant(Rational::one()));
    for i in 0..n {
        let next = out[i].mul(f);
        out.push(next);
    }
    out
}

/// Clear denominators and content of a rational coefficient list.
pub(crate) fn primitive_integer_coeffs(coeffs: &[Rational]) -> Vec<BigInt> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let terms: Vec<(Rational, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mut parts = Vec::new();
                match d - i {
                    0 => {}
                    1 => parts.push("s".to_string()),
                    e => parts.push(format!("s^{e}")),
                }
                match i {
                    0 => {}
                    1 => parts.push("t".to_string()),
                    e => parts.push(format!("t^{e}")),
                }
                (c.clone(), parts.join("*"))
            })
            .collect();
        super::write_terms(f, &terms)
    }
}

impl std::str::FromStr for ParamPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = inner
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("not a point: {s:?}")))?;
        ParamPoint::new(
            super::rational::parse_rational(a)?,
            super::rational::parse_rational(b)?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn f(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        // s^2 t and s t^2
        assert_eq!(BinaryForm::gcd(&f(&[0, 1, 0, 0]), &f(&[0, 0, 1, 0])).unwrap(), f(&[0, 1, 0]));
        // s - t and s + t
        assert_eq!(BinaryForm::gcd(&f(&[1, -1]), &f(&[1, 1])).unwrap(), f(&[1]));
        // (s-t)^2 (2s+t) and (s-t) t
        let a = f(&[1, -1]).pow(2).mul(&f(&[2, 1]));
        let b = f(&[1, -1]).mul(&f(&[0, 1]));
        assert_eq!(BinaryForm::gcd(&a, &b).unwrap(), f(&[1, -1]));
        assert_eq!(BinaryForm::gcd(&f(&[0, 0]), &f(&[0, 0, 0])), Err(Error::UndefinedGcd));
    }

    #[test]
    fn factor_tangent_composite() {
        // 2s^3 - 3s^2 t + t^3 = (s-t)^2 (2s+t)
        let facs = f(&[2, -3, 0, 1]).factor().unwrap();
        assert_eq!(
            facs,
            vec![(f(&[1, -1]), 2), (BinaryForm::linear(int(1), rat(1, 2)), 1)]
        );
        let facs = f(&[0, 0, 0, 1]).factor().unwrap();
        assert_eq!(facs, vec![(BinaryForm::t(), 3)]);
        // s^2 (s^2 + t^2): the irreducible quadratic is kept whole
        let facs = f(&[1, 0, 1, 0, 0]).factor().unwrap();
        assert_eq!(facs, vec![(BinaryForm::s(), 2), (f(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn param_points() {
        let p = ParamPoint::new(int(2), int(-4)).unwrap();
        assert_eq!(p, ParamPoint::from_ints(1, -2));
        assert_eq!(p.linear_form(), BinaryForm::linear(int(1), rat(1, 2)));
        assert_eq!(ParamPoint::infinity().linear_form(), BinaryForm::s());
        assert_eq!(ParamPoint::from_ints(1, 0).linear_form(), BinaryForm::t());
        assert_eq!(ParamPoint::root_of(&f(&[2, 1])).unwrap(), p);
        assert_eq!("(1:-2)".parse::<ParamPoint>().unwrap(), p);
    }

    #[test]
    fn substitution_and_local_orders() {
        let cubic_z = f(&[0, 0, 0, 1]);
        assert_eq!(cubic_z.order_at(&ParamPoint::from_ints(1, 0)), Some(3));
        assert_eq!(cubic_z.order_at(&ParamPoint::infinity()), Some(0));
        let swap = [[int(0), int(1)], [int(1), int(0)]];
        assert_eq!(cubic_z.substitute_linear(&swap), f(&[1, 0, 0, 0]));
        assert_eq!(f(&[1, 2, 3]).to_string(), "s^2 + 2*s*t + 3*t^2");
        assert_eq!(f(&[1, -1]).to_string(), "s - t");
    }
}

#[derive(Serialize, Deserialize)]
struct FormWire {
    degree: usize,
    #[serde(with = "super::rational::vec_as_string")]
    coeffs: Vec<Rational>,
}

impl Serialize for BinaryForm {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        FormWire {
            degree: self.degree(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for BinaryForm {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let w = FormWire::deserialize(de)?;
        if w.coeffs.len() != w.degree + 1 {
            return Err(serde::de::Error::custom(format!(
                "degree {} form needs {} coefficients, got {}",
                w.degree,
                w.degree + 1,
                w.coeffs.len()
            )));
        }
        Ok(BinaryForm::new(w.coeffs))
    }
}

impl Serialize for ParamPoint {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&self.s), format_rational(&self.t)].serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ParamPoint {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let [s, t] = <[String; 2]>::deserialize(de)?;
        let s = parse_rational(&s).map_err(serde::de::Error::custom)?;
        let t = parse_rational(&t).map_err(serde::de::Error::custom)?;
        ParamPoint::new(s, t).map_err(serde::de::Error::custom)
    }
}
