//! Quadratic Cremona maps with a tangential base point, the inductive
//! construction from the cuspidal cubic, its inverse, canonical forms and
//! rectification to a line.

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::constructor::TheoremCurve;
use crate::error::{Error, Result};
use crate::exact::form::{BinaryForm, ParamPoint};
use crate::exact::linalg::{self, Solution};
use crate::exact::rational::{format_rational, int, parse_rational, Rational};
use crate::geom::{
    cuspidal_cubic, germ_at, line_divisor, mult_sequence, verify_curve, CurveParameterization, Line,
    Matrix3, Point,
};
use crate::multseq::MultiplicitySequence;

/// Three conics, coefficients in the order `x^2, y^2, z^2, xy, xz, yz`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticMap {
    pub conics: [[Rational; 6]; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedCurve {
    pub k: u32,
    pub curve: CurveParameterization,
    pub q: ParamPoint,
    pub p: ParamPoint,
    pub r: ParamPoint,
    pub s: ParamPoint,
    pub ell: Line,
    pub tangent: Line,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rectification {
    pub maps: Vec<QuadraticMap>,
    pub line: CurveParameterization,
}

fn monomials(p: &[Rational; 3]) -> [Rational; 6] {
    let [x, y, z] = p;
    [x * x, y * y, z * z, x * y, x * z, y * z]
}

/// `sum w_i dF/dx_i (b)` as a row in the monomial basis.
fn polar_row(b: &[Rational; 3], w: &[Rational; 3]) -> [Rational; 6] {
    let two = int(2);
    [
        &two * &b[0] * &w[0],
        &two * &b[1] * &w[1],
        &two * &b[2] * &w[2],
        &b[1] * &w[0] + &b[0] * &w[1],
        &b[2] * &w[0] + &b[0] * &w[2],
        &b[2] * &w[1] + &b[1] * &w[2],
    ]
}

/// A point of `m` different from `b`.
fn second_point(m: &Line, b: &Point) -> Point {
    (0..3)
        .map(|i| {
            let mut e = [Rational::zero(), Rational::zero(), Rational::zero()];
            e[i] = Rational::one();
            Line::new(e)
        })
        .filter_map(|l| l.ok().and_then(|l| m.meet(&l).ok()))
        .find(|p| p != b)
        .expect("a line has more than one point")
}

/// Conics through `s`, and through `b` with tangent `m`.
pub fn quadratic_map(s: &Point, b: &Point, m: &Line) -> Result<QuadraticMap> {
    if !m.contains(b) || m.contains(s) || s == b {
        return Err(Error::DegenerateBaseScheme);
    }
    let w = second_point(m, b);
    let rows = vec![
        monomials(s.coords()).to_vec(),
        monomials(b.coords()).to_vec(),
        polar_row(b.coords(), w.coords()).to_vec(),
    ];
    let kernel = linalg::nullspace(&rows)?;
    if kernel.len() != 3 {
        return Err(Error::DegenerateBaseScheme);
    }
    let conics = std::array::from_fn(|i| std::array::from_fn(|j| kernel[i][j].clone()));
    Ok(QuadraticMap { conics })
}

impl QuadraticMap {
    pub fn eval_point(&self, p: &Point) -> Result<Point> {
        let m = monomials(p.coords());
        Point::new(std::array::from_fn(|i| self.conics[i].iter().zip(&m).map(|(a, b)| a * b).sum()))
    }

    fn compose_forms(&self, c: &CurveParameterization) -> [BinaryForm; 3] {
        let [x, y, z] = c.components();
        let mons = [x.mul(x), y.mul(y), z.mul(z), x.mul(y), x.mul(z), y.mul(z)];
        std::array::from_fn(|i| {
            let terms: Vec<(Rational, &BinaryForm)> =
                self.conics[i].iter().cloned().zip(mons.iter()).collect();
            BinaryForm::combine(&terms).expect("equal degrees")
        })
    }
}

/// Proper transform: compose, then remove the common factor of the three forms.
pub fn apply(map: &QuadraticMap, c: &CurveParameterization) -> Result<CurveParameterization> {
    let comps = map.compose_forms(c);
    let g = BinaryForm::gcd_all(comps.iter())
        .map_err(|_| Error::DegenerateComposite("all three composites vanish".into()))?;
    let [x, y, z] = comps.map(|f| f.exact_div(&g).expect("gcd divides"));
    CurveParameterization::new(x, y, z).map_err(|e| Error::DegenerateComposite(e.to_string()))
}

/// Tangent line of the branch at `t0`, certified by its contact order.
pub fn tangent_line(c: &CurveParameterization, t0: &ParamPoint) -> Result<Line> {
    let [j, a, b] = crate::geom::affine_chart(c, t0);
    let g = germ_at(c, t0)?;
    let (ou, ov) = (g.u.order().ok(), g.v.order().ok());
    let dir = match (ou, ov) {
        (Some(x), Some(y)) if x <= y => (Rational::one(), g.v.div(&g.u)?.value_at_zero().expect("regular")),
        (Some(_), None) => (Rational::one(), Rational::zero()),
        _ => (Rational::zero(), Rational::one()),
    };
    let p0 = c.point_at(t0);
    let base = p0.coords();
    let mut q = [Rational::zero(), Rational::zero(), Rational::zero()];
    q[j] = base[j].clone();
    q[a] = &base[a] + &(&dir.0 * &base[j]);
    q[b] = &base[b] + &(&dir.1 * &base[j]);
    let line = Line::through(&p0, &Point::new(q)?)?;
    let contact = line.compose(c).order_at(t0).ok_or(Error::LineContainsCurve)?;
    if (contact as i64) < g.multiplicity() + 1 {
        return Err(Error::DegenerateTangent(t0.to_string()));
    }
    Ok(line)
}

/// Root of the cofactor of `known^mult` in the line's composite, which must be linear.
fn residual_param(c: &CurveParameterization, l: &Line, known: &ParamPoint) -> Result<ParamPoint> {
    let f = l.compose(c);
    let mult = f.order_at(known).ok_or(Error::LineContainsCurve)?;
    let rest = f
        .exact_div(&known.linear_form().pow(mult))
        .expect("root multiplicity divides");
    if rest.degree() != 1 {
        return Err(Error::ConstructionBrokeDown(format!(
            "residual of {l} has degree {}, expected 1",
            rest.degree()
        )));
    }
    ParamPoint::root_of(&rest)
}

/// Whether `f` factors as exactly the given powers of linear forms.
fn divisor_is(c: &CurveParameterization, l: &Line, want: &[(&ParamPoint, usize)]) -> Result<bool> {
    let got = line_divisor(c, l)?;
    let mut want: Vec<(BinaryForm, usize)> = want
        .iter()
        .filter(|(_, m)| *m > 0)
        .map(|(p, m)| (p.linear_form(), *m))
        .collect();
    if got.len() != want.len() {
        return Ok(false);
    }
    for (f, m) in &got {
        match want.iter().position(|(g, n)| g == f && n == m) {
            Some(i) => {
                want.swap_remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

impl MarkedCurve {
    pub fn degree(&self) -> usize {
        self.curve.degree()
    }

    /// Cusps expected at level `k` as `(param, sequence)`.
    pub fn expected_cusps(&self) -> Vec<(ParamPoint, MultiplicitySequence)> {
        let k = self.k as usize;
        let two = MultiplicitySequence::repeated(2, 1).expect("valid");
        if k == 0 {
            return vec![(self.r.clone(), two)];
        }
        vec![
            (self.q.clone(), MultiplicitySequence::with_tail(&[2 * self.k], 2, k).expect("valid")),
            (self.p.clone(), MultiplicitySequence::repeated(3, k).expect("valid")),
            (self.r.clone(), two),
        ]
    }

    /// All invariants of a level-`k` marked curve.
    pub fn check(&self) -> Result<()> {
        let d = self.degree();
        let fail = |m: String| Err(Error::ConstructionBrokeDown(m));
        if d != 2 * self.k as usize + 3 {
            return fail(format!("degree {d} at level {}", self.k));
        }
        let marks = [&self.q, &self.p, &self.r, &self.s];
        for (i, a) in marks.iter().enumerate() {
            if marks[i + 1..].contains(a) {
                return fail(format!("marks are not distinct: {a} repeats"));
            }
        }
        let report = verify_curve(&self.curve, &self.expected_cusps())?;
        if !report.passes {
            return fail(format!("cusp check failed: {}", report.problems.join("; ")));
        }
        if self.k == 0 && mult_sequence(&germ_at(&self.curve, &self.p)?)?.is_some() {
            return fail("inflection point is singular".into());
        }
        if !divisor_is(&self.curve, &self.ell, &[(&self.q, d - 3), (&self.p, 3)])? {
            return fail(format!("{} does not cut out (d-3) Q + 3 P", self.ell));
        }
        if !divisor_is(&self.curve, &self.tangent, &[(&self.q, d - 1), (&self.s, 1)])? {
            return fail(format!("{} does not cut out (d-1) Q + S", self.tangent));
        }
        Ok(())
    }

    /// Recomputes `tangent`, `ell` and `s` from the curve and the marks `q`, `p`, `r`.
    fn with_derived_lines(k: u32, curve: CurveParameterization, q: ParamPoint, p: ParamPoint, r: ParamPoint) -> Result<Self> {
        let tangent = tangent_line(&curve, &q)?;
        let ell = if k == 0 {
            tangent_line(&curve, &p)?
        } else {
            Line::through(&curve.point_at(&p), &curve.point_at(&q))?
        };
        let s = residual_param(&curve, &tangent, &q)?;
        let mc = MarkedCurve { k, curve, q, p, r, s, ell, tangent };
        mc.check()?;
        Ok(mc)
    }

    pub fn from_theorem(tc: &TheoremCurve) -> Result<Self> {
        Self::with_derived_lines(
            tc.k,
            tc.curve.clone(),
            ParamPoint::infinity(),
            ParamPoint::from_ints(1, 0),
            ParamPoint::from_ints(1, 1),
        )
    }

    pub fn image(&self, p: &ParamPoint) -> Point {
        self.curve.point_at(p)
    }
}

pub fn cubic_seed() -> MarkedCurve {
    MarkedCurve {
        k: 0,
        curve: cuspidal_cubic(),
        q: ParamPoint::from_ints(1, 1),
        p: ParamPoint::from_ints(1, 0),
        r: ParamPoint::infinity(),
        s: ParamPoint::from_ints(1, -2),
        ell: Line::from_ints(0, 0, 1),
        tangent: Line::from_ints(2, -3, 1),
    }
}

/// The map used by [`forward_step`].
pub fn forward_map(mc: &MarkedCurve) -> Result<QuadraticMap> {
    let s = mc.image(&mc.s);
    let b = mc.tangent.meet(&mc.ell)?;
    quadratic_map(&s, &b, &mc.ell)
}

pub fn forward_step(mc: &MarkedCurve) -> Result<MarkedCurve> {
    let psi = forward_map(mc)?;
    let curve = apply(&psi, &mc.curve)?;
    MarkedCurve::with_derived_lines(mc.k + 1, curve, mc.q.clone(), mc.p.clone(), mc.r.clone())
        .map_err(|e| match e {
            Error::ConstructionBrokeDown(_) => e,
            other => Error::ConstructionBrokeDown(other.to_string()),
        })
}

/// The map used by [`inverse_step`].
pub fn inverse_map(mc: &MarkedCurve) -> Result<QuadraticMap> {
    if mc.k == 0 {
        return Err(Error::AlreadyCubic);
    }
    quadratic_map(&mc.image(&mc.p), &mc.image(&mc.q), &mc.tangent)
}

pub fn inverse_step(mc: &MarkedCurve) -> Result<MarkedCurve> {
    let phi = inverse_map(mc)?;
    let curve = apply(&phi, &mc.curve)?;
    MarkedCurve::with_derived_lines(mc.k - 1, curve, mc.q.clone(), mc.p.clone(), mc.r.clone())
}

/// Sends the parameters `q, p, r` to `(0:1), (1:0), (1:1)` and their images
/// to `(0:0:1), (0:1:0), (1:0:0)`, then normalizes each component.
pub fn canonical_form_with(
    c: &CurveParameterization,
    q: &ParamPoint,
    p: &ParamPoint,
    r: &ParamPoint,
) -> Result<CurveParameterization> {
    // alpha p + beta q = r
    let a = vec![vec![p.s().clone(), q.s().clone()], vec![p.t().clone(), q.t().clone()]];
    let Solution::Unique(ab) = linalg::solve_linear(&a, &[r.s().clone(), r.t().clone()])? else {
        return Err(Error::AmbiguousCusps("cusp parameters are not distinct".into()));
    };
    let (alpha, beta) = (&ab[0], &ab[1]);
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::AmbiguousCusps("cusp parameters are not distinct".into()));
    }
    let m = [[alpha * p.s(), beta * q.s()], [alpha * p.t(), beta * q.t()]];
    let c1 = c.reparameterize(&m)?;
    let (qq, pp, rr) = (c.point_at(q), c.point_at(p), c.point_at(r));
    let cols = [rr.coords(), pp.coords(), qq.coords()];
    let mat: Vec<Vec<Rational>> = (0..3).map(|i| (0..3).map(|j| cols[j][i].clone()).collect()).collect();
    let inv = linalg::inverse(&mat)?.ok_or(Error::CollinearCusps)?;
    let a: Matrix3 = std::array::from_fn(|i| std::array::from_fn(|j| inv[i][j].clone()));
    Ok(c1.transform(&a)?.normalized())
}

/// Identifies the cusps `(2k, 2_k)`, `(3_k)`, `(2)` of a degree `2k + 3`
/// curve and returns its canonical form.
pub fn canonical_form(c: &CurveParameterization) -> Result<CurveParameterization> {
    let d = c.degree();
    if d < 5 || d % 2 == 0 {
        return Err(Error::AmbiguousCusps(format!("degree {d} is not 2k + 3 with k >= 1")));
    }
    let k = (d - 3) / 2;
    let mut found = Vec::new();
    for f in crate::geom::singular_support(c)? {
        if f.degree() != 1 {
            return Err(Error::AmbiguousCusps(format!("irrational singular factor {f}")));
        }
        let p = ParamPoint::root_of(&f)?;
        if let Some(s) = mult_sequence(&germ_at(c, &p)?)? {
            found.push((p, s));
        }
    }
    let want_q = MultiplicitySequence::with_tail(&[2 * k as u32], 2, k)?;
    let want_p = MultiplicitySequence::repeated(3, k)?;
    let want_r = MultiplicitySequence::repeated(2, 1)?;
    let pick = |want: &MultiplicitySequence| -> Result<ParamPoint> {
        let hits: Vec<&ParamPoint> = found.iter().filter(|(_, s)| s == want).map(|(p, _)| p).collect();
        match hits.as_slice() {
            [p] => Ok((*p).clone()),
            _ => Err(Error::AmbiguousCusps(format!("{} cusps of type {want}", hits.len()))),
        }
    };
    let (q, p, r) = (pick(&want_q)?, pick(&want_p)?, pick(&want_r)?);
    if found.len() != 3 {
        return Err(Error::AmbiguousCusps(format!("{} cusps, expected 3", found.len())));
    }
    canonical_form_with(c, &q, &p, &r)
}

pub fn canonical_form_marked(mc: &MarkedCurve) -> Result<CurveParameterization> {
    canonical_form_with(&mc.curve, &mc.q, &mc.p, &mc.r)
}

/// Small rational parameters `0, 1, -1, 2, -2, ...` and `(0:1)`.
fn candidate_params() -> impl Iterator<Item = ParamPoint> {
    std::iter::once(ParamPoint::infinity()).chain((0..200i64).map(|i| {
        let v = if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 };
        ParamPoint::affine(int(v))
    }))
}

/// A map through `b` with tangent `m` and through the image of a candidate
/// parameter, chosen so that the proper transform has degree `want`.
fn lowering_map(c: &CurveParameterization, b: &Point, m: &Line, want: usize) -> Result<(QuadraticMap, CurveParameterization)> {
    for t in candidate_params() {
        let s = c.point_at(&t);
        if s == *b || m.contains(&s) {
            continue;
        }
        let map = quadratic_map(&s, b, m)?;
        if let Ok(next) = apply(&map, c) {
            if next.degree() == want {
                return Ok((map, next));
            }
        }
    }
    Err(Error::ConstructionBrokeDown(format!("no rational base point lowers the degree to {want}")))
}

/// Inverse steps down to the cubic, then cubic to conic and conic to line.
pub fn rectify(mc: &MarkedCurve) -> Result<Rectification> {
    mc.check()?;
    let mut maps = Vec::new();
    let mut cur = mc.clone();
    while cur.k > 0 {
        maps.push(inverse_map(&cur)?);
        cur = inverse_step(&cur)?;
    }
    let cusp = cur.image(&cur.r);
    let cusp_tangent = tangent_line(&cur.curve, &cur.r)?;
    let (m1, conic) = lowering_map(&cur.curve, &cusp, &cusp_tangent, 2)?;
    maps.push(m1);
    let b_param = candidate_params().next().expect("nonempty");
    let b = conic.point_at(&b_param);
    let conic_tangent = tangent_line(&conic, &b_param)?;
    let (m2, line) = lowering_map(&conic, &b, &conic_tangent, 1)?;
    maps.push(m2);
    Ok(Rectification { maps, line })
}

/// Applies a chain of maps in order.
pub fn apply_chain(maps: &[QuadraticMap], c: &CurveParameterization) -> Result<CurveParameterization> {
    maps.iter().try_fold(c.clone(), |acc, m| apply(m, &acc))
}

impl Serialize for QuadraticMap {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Vec<String>> = self.conics.iter().map(|c| c.iter().map(format_rational).collect()).collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QuadraticMap {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v = <[[String; 6]; 3]>::deserialize(de)?;
        let mut conics: [[Rational; 6]; 3] = Default::default();
        for (row, src) in conics.iter_mut().zip(&v) {
            for (x, s) in row.iter_mut().zip(src) {
                *x = parse_rational(s).map_err(serde::de::Error::custom)?;
            }
        }
        Ok(QuadraticMap { conics })
    }
}

#[derive(Serialize, Deserialize)]
struct Marks {
    q: ParamPoint,
    p: ParamPoint,
    r: ParamPoint,
    s: ParamPoint,
}

#[derive(Serialize, Deserialize)]
struct MarkedWire {
    degree: usize,
    k: u32,
    x: BinaryForm,
    y: BinaryForm,
    z: BinaryForm,
    marks: Marks,
    ell: Line,
    tangent: Line,
}

impl Serialize for MarkedCurve {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        MarkedWire {
            degree: self.degree(),
            k: self.k,
            x: self.curve.x().clone(),
            y: self.curve.y().clone(),
            z: self.curve.z().clone(),
            marks: Marks { q: self.q.clone(), p: self.p.clone(), r: self.r.clone(), s: self.s.clone() },
            ell: self.ell.clone(),
            tangent: self.tangent.clone(),
        }
        .serialize(ser)
    }
}

/// Deserialization checks shapes only; call [`MarkedCurve::check`] for the geometry.
impl<'de> Deserialize<'de> for MarkedCurve {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let w = MarkedWire::deserialize(de)?;
        if w.x.degree() != w.degree {
            return Err(serde::de::Error::custom("degree tag disagrees with components"));
        }
        let curve = CurveParameterization::new(w.x, w.y, w.z).map_err(serde::de::Error::custom)?;
        Ok(MarkedCurve {
            k: w.k,
            curve,
            q: w.marks.q,
            p: w.marks.p,
            r: w.marks.r,
            s: w.marks.s,
            ell: w.ell,
            tangent: w.tangent,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::parameterization;
    use crate::exact::rational::rat;

    #[test]
    fn seed() {
        let mc = cubic_seed();
        mc.check().unwrap();
        assert_eq!(mc.image(&mc.q), Point::from_ints(1, 1, 1));
        assert_eq!(mc.image(&mc.s), Point::from_ints(1, -2, -8));
    }

    #[test]
    fn tangents() {
        let c = cuspidal_cubic();
        assert_eq!(tangent_line(&c, &ParamPoint::from_ints(1, 1)).unwrap(), Line::from_ints(2, -3, 1));
        assert_eq!(tangent_line(&c, &ParamPoint::infinity()).unwrap(), Line::from_ints(1, 0, 0));
        assert_eq!(tangent_line(&c, &ParamPoint::from_ints(1, 0)).unwrap(), Line::from_ints(0, 0, 1));
        let tc = parameterization(2).unwrap();
        let t = tangent_line(&tc.curve, &ParamPoint::infinity()).unwrap();
        assert_eq!(t.compose(&tc.curve).order_at(&ParamPoint::infinity()), Some(6));
    }

    #[test]
    fn standard_quadratic_map() {
        let s = Point::from_ints(1, 0, 0);
        let b = Point::from_ints(0, 0, 1);
        let map = quadratic_map(&s, &b, &Line::from_ints(1, 0, 0)).unwrap();
        let unit = |j: usize| std::array::from_fn(|i| if i == j { int(1) } else { int(0) });
        assert_eq!(map.conics, [unit(1), unit(3), unit(4)]);
        assert_eq!(map.eval_point(&Point::from_ints(0, 3, 7)).unwrap(), s);
        let line = CurveParameterization::from_ints(&[1, 0], &[0, 1], &[1, 0]).unwrap();
        let image = apply(&map, &line).unwrap();
        assert_eq!(image, CurveParameterization::from_ints(&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]).unwrap());
        assert_eq!(quadratic_map(&s, &s, &Line::from_ints(0, 1, 0)), Err(Error::DegenerateBaseScheme));
        assert_eq!(quadratic_map(&b, &s, &Line::from_ints(0, 1, 0)), Err(Error::DegenerateBaseScheme));
        assert_eq!(quadratic_map(&s, &b, &Line::from_ints(0, 1, 0)), Err(Error::DegenerateBaseScheme));
    }

    #[test]
    fn orbit() {
        let mut mc = cubic_seed();
        let mut degrees = vec![mc.degree()];
        for k in 1..=3u32 {
            let psi = forward_map(&mc).unwrap();
            let raw = psi.compose_forms(&mc.curve);
            let g = BinaryForm::gcd_all(raw.iter()).unwrap();
            assert_eq!(g.degree(), 2 * (k as usize - 1) + 1);
            mc = forward_step(&mc).unwrap();
            degrees.push(mc.degree());
            let contact = mc.tangent.compose(&mc.curve).order_at(&mc.q);
            assert_eq!(contact, Some(mc.degree() - 1));
        }
        assert_eq!(degrees, vec![3, 5, 7, 9]);
    }

    #[test]
    fn round_trips() {
        let mut mc = cubic_seed();
        for _ in 0..=4 {
            let next = forward_step(&mc).unwrap();
            let back = inverse_step(&next).unwrap();
            assert_eq!(back.k, mc.k);
            assert_eq!(canonical_form_marked(&back).unwrap(), canonical_form_marked(&mc).unwrap());
            mc = next;
        }
        assert_eq!(inverse_step(&cubic_seed()), Err(Error::AlreadyCubic));
    }

    #[test]
    fn canonical_shapes() {
        let tc = parameterization(2).unwrap();
        let cf = canonical_form(&tc.curve).unwrap();
        let half = BinaryForm::new(vec![int(1), rat(1, 2)]);
        let smt2 = BinaryForm::from_ints(&[1, -1]).pow(2);
        let s4 = BinaryForm::s().pow(4);
        let t3 = BinaryForm::t().pow(3);
        assert_eq!(cf.x(), &s4.mul(&t3));
        assert_eq!(cf.y(), &s4.mul(&smt2).mul(&half));
        assert_eq!(cf.z(), &t3.mul(&smt2).mul(&BinaryForm::from_ints(&[1, 2, 3])));
        assert_eq!(canonical_form(&cf).unwrap(), cf);
        assert!(canonical_form(&cuspidal_cubic()).is_err());
    }

    #[test]
    fn rectify_cubic() {
        let r = rectify(&cubic_seed()).unwrap();
        assert_eq!(r.maps.len(), 2);
        assert_eq!(r.line.degree(), 1);
        assert_eq!(apply_chain(&r.maps, &cuspidal_cubic()).unwrap(), r.line);
    }

    #[test]
    fn marked_json_round_trip() {
        let mc = forward_step(&cubic_seed()).unwrap();
        let j = serde_json::to_string(&mc).unwrap();
        let back: MarkedCurve = serde_json::from_str(&j).unwrap();
        assert_eq!(back, mc);
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["marks"]["q"], serde_json::json!(["1", "1"]));
        let map = forward_map(&cubic_seed()).unwrap();
        let j = serde_json::to_string(&map).unwrap();
        assert_eq!(serde_json::from_str::<QuadraticMap>(&j).unwrap(), map);
    }
}
