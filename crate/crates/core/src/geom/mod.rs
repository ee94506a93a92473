//! Parameterized plane curves, points and lines, and their local analysis.

mod certify;
mod germ;
mod verify;

pub use certify::{injectivity_certificate, line_divisor, singular_support, wronskians};
pub use germ::{affine_chart, germ_at, germ_intersection, line_germ, mult_sequence, BranchGerm};
pub use verify::{detect_cusps, verify_curve, CuspRecord, CurveReport};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::form::{primitive_integer_coeffs, BinaryForm, ParamPoint};
use crate::exact::linalg;
use crate::exact::rational::{format_rational, parse_rational, Rational};

pub type Matrix3 = [[Rational; 3]; 3];

/// A point of the projective plane, first nonzero coordinate 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point([Rational; 3]);

/// The line `a x + b y + c z = 0`, scaled to primitive integers with a
/// positive first nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line([Rational; 3]);

/// Three coprime binary forms of a common degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveParameterization {
    x: BinaryForm,
    y: BinaryForm,
    z: BinaryForm,
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

impl Point {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        let Some(lead) = coords.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::InvalidArgument("(0:0:0) is not a point".into()));
        };
        Ok(Point(coords.map(|c| c / &lead)))
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new([x, y, z].map(|v| Rational::from_integer(v.into()))).expect("nonzero point")
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }

    pub fn transform(&self, a: &Matrix3) -> Result<Point> {
        Point::new(std::array::from_fn(|i| dot(&a[i], &self.0)))
    }
}

impl Line {
    pub fn new(coeffs: [Rational; 3]) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("0 = 0 is not a line".into()));
        }
        let mut ints = primitive_integer_coeffs(&coeffs);
        if ints.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
            ints.iter_mut().for_each(|c| *c = -&*c);
        }
        let v: Vec<Rational> = ints.into_iter().map(Rational::from_integer).collect();
        Ok(Line([v[0].clone(), v[1].clone(), v[2].clone()]))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Self::new([a, b, c].map(|v| Rational::from_integer(BigInt::from(v)))).expect("nonzero line")
    }

    pub fn coeffs(&self) -> &[Rational; 3] {
        &self.0
    }

    pub fn through(p: &Point, q: &Point) -> Result<Line> {
        if p == q {
            return Err(Error::InvalidArgument(format!("no unique line through {p} twice")));
        }
        Line::new(cross(&p.0, &q.0))
    }

    pub fn meet(&self, other: &Line) -> Result<Point> {
        if self == other {
            return Err(Error::InvalidArgument(format!("{self} meets itself in a line")));
        }
        Point::new(cross(&self.0, &other.0))
    }

    pub fn eval(&self, p: &Point) -> Rational {
        dot(&self.0, &p.0)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    /// `a x(s,t) + b y(s,t) + c z(s,t)`.
    pub fn compose(&self, c: &CurveParameterization) -> BinaryForm {
        BinaryForm::combine(&[
            (self.0[0].clone(), &c.x),
            (self.0[1].clone(), &c.y),
            (self.0[2].clone(), &c.z),
        ])
        .expect("equal degrees")
    }

    /// Image under the point map `p -> A p`: coefficients `l A^-1`.
    pub fn transform(&self, a: &Matrix3) -> Result<Line> {
        let rows: Vec<Vec<Rational>> = a.iter().map(|r| r.to_vec()).collect();
        let inv = linalg::inverse(&rows)?
            .ok_or_else(|| Error::InvalidArgument("singular projective transformation".into()))?;
        Line::new(std::array::from_fn(|j| (0..3).map(|i| &self.0[i] * &inv[i][j]).sum()))
    }
}

impl CurveParameterization {
    pub fn new(x: BinaryForm, y: BinaryForm, z: BinaryForm) -> Result<Self> {
        let d = x.degree();
        if y.degree() != d || z.degree() != d {
            return Err(Error::InvalidParameterization(format!(
                "component degrees {}, {}, {} differ",
                d,
                y.degree(),
                z.degree()
            )));
        }
        if d == 0 {
            return Err(Error::InvalidParameterization("degree 0".into()));
        }
        let rows: Vec<Vec<Rational>> = [&x, &y, &z].iter().map(|f| f.coeffs().to_vec()).collect();
        if linalg::rank(&rows)? < 2 {
            return Err(Error::InvalidParameterization("image is a point".into()));
        }
        let g = BinaryForm::gcd_all([&x, &y, &z])?;
        if g.degree() > 0 {
            return Err(Error::InvalidParameterization(format!("components share the factor {g}")));
        }
        Ok(CurveParameterization { x, y, z })
    }

    pub fn from_ints(x: &[i64], y: &[i64], z: &[i64]) -> Result<Self> {
        Self::new(BinaryForm::from_ints(x), BinaryForm::from_ints(y), BinaryForm::from_ints(z))
    }

    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    pub fn x(&self) -> &BinaryForm {
        &self.x
    }

    pub fn y(&self) -> &BinaryForm {
        &self.y
    }

    pub fn z(&self) -> &BinaryForm {
        &self.z
    }

    pub fn components(&self) -> [&BinaryForm; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn point_at(&self, p: &ParamPoint) -> Point {
        Point::new(self.components().map(|f| f.eval_at(p))).expect("coprime components")
    }

    /// Precomposition with the substitution `(s, t) -> m (s, t)`.
    pub fn reparameterize(&self, m: &[[Rational; 2]; 2]) -> Result<Self> {
        let [x, y, z] = self.components().map(|f| f.substitute_linear(m));
        Self::new(x, y, z)
    }

    /// Postcomposition with the projective transformation `a`.
    pub fn transform(&self, a: &Matrix3) -> Result<Self> {
        let comps = self.components();
        let row = |i: usize| {
            BinaryForm::combine(&[
                (a[i][0].clone(), comps[0]),
                (a[i][1].clone(), comps[1]),
                (a[i][2].clone(), comps[2]),
            ])
        };
        Self::new(row(0)?, row(1)?, row(2)?)
    }

    /// Each component scaled so its first nonzero coefficient is 1.
    pub fn normalized(&self) -> Self {
        let [x, y, z] = self.components().map(BinaryForm::normalized);
        CurveParameterization { x, y, z }
    }

    pub fn is_rational_line(&self) -> bool {
        self.degree() == 1
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Rational, String)> = self
            .0
            .iter()
            .zip(["x", "y", "z"])
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, v)| (c.clone(), v.to_string()))
            .collect();
        crate::exact::write_terms(f, &terms)
    }
}

impl fmt::Display for CurveParameterization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.x, self.y, self.z)
    }
}

fn ser_triple<S: Serializer>(v: &[Rational; 3], ser: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(format_rational).collect::<Vec<_>>().serialize(ser)
}

fn de_triple<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<[Rational; 3], D::Error> {
    let v = <[String; 3]>::deserialize(de)?;
    let mut out: [Rational; 3] = Default::default();
    for (o, s) in out.iter_mut().zip(&v) {
        *o = parse_rational(s).map_err(serde::de::Error::custom)?;
    }
    Ok(out)
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser_triple(&self.0, ser)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        Point::new(de_triple(de)?).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser_triple(&self.0, ser)
    }
}

impl<'de> Deserialize<'de> for Line {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        Line::new(de_triple(de)?).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct CurveWire {
    degree: usize,
    x: BinaryForm,
    y: BinaryForm,
    z: BinaryForm,
}

impl Serialize for CurveParameterization {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        CurveWire {
            degree: self.degree(),
            x: self.x.clone(),
            y: self.y.clone(),
            z: self.z.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CurveParameterization {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let w = CurveWire::deserialize(de)?;
        if w.x.degree() != w.degree {
            return Err(serde::de::Error::custom("degree tag disagrees with components"));
        }
        CurveParameterization::new(w.x, w.y, w.z).map_err(serde::de::Error::custom)
    }
}

/// The identity 3x3 matrix.
pub fn identity3() -> Matrix3 {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() }))
}

/// The cuspidal cubic `(s^3 : s^2 t : t^3)`.
pub fn cuspidal_cubic() -> CurveParameterization {
    CurveParameterization::from_ints(&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]).expect("valid cubic")
}
