use super::germ::{germ_at, mult_sequence};
use super::{CurveParameterization, Line};
use crate::error::{Error, Result};
use crate::exact::form::{BinaryForm, ParamPoint};
use crate::exact::rational::Rational;
use crate::exact::unipoly::UniPoly;

pub fn line_divisor(c: &CurveParameterization, l: &Line) -> Result<Vec<(BinaryForm, usize)>> {
    let f = l.compose(c);
    if f.is_zero() {
        return Err(Error::LineContainsCurve);
    }
    f.factor()
}

/// The three forms `x y' - y x'`, `x z' - z x'`, `y z' - z y'`, with
/// derivatives taken in the chart `s = 1` and rehomogenized to degree `2d - 2`.
pub fn wronskians(c: &CurveParameterization) -> Result<[BinaryForm; 3]> {
    let d = c.degree();
    let [x, y, z] = c.components().map(BinaryForm::dehomogenize);
    let w = |a: &UniPoly, b: &UniPoly| -> Result<BinaryForm> {
        let p = &(a * &b.derivative()) - &(b * &a.derivative());
        BinaryForm::homogenize(&p, 2 * d - 2)
    };
    Ok([w(&x, &y)?, w(&x, &z)?, w(&y, &z)?])
}

/// Irreducible factors of the gcd of the Wronskian forms: the parameters
/// where the map fails to be an immersion.
pub fn singular_support(c: &CurveParameterization) -> Result<Vec<BinaryForm>> {
    let g = BinaryForm::gcd_all(wronskians(c)?.iter())?;
    if g.degree() == 0 {
        return Ok(Vec::new());
    }
    Ok(g.factor()?.into_iter().map(|(f, _)| f).collect())
}

/// Rational roots of the singular support, and whether irrational factors remain.
pub(crate) fn rational_singular_params(c: &CurveParameterization) -> Result<(Vec<ParamPoint>, Vec<BinaryForm>)> {
    let mut rational = Vec::new();
    let mut other = Vec::new();
    for f in singular_support(c)? {
        if f.degree() == 1 {
            rational.push(ParamPoint::root_of(&f)?);
        } else {
            other.push(f);
        }
    }
    Ok((rational, other))
}

/// `(a(u) b(v0) - b(u) a(v0)) / (u - v0)`.
fn chord_quotient(a: &UniPoly, b: &UniPoly, v0: &Rational) -> UniPoly {
    let n = &a.scale(&b.eval(v0)) - &b.scale(&a.eval(v0));
    n.exact_div(&UniPoly::linear_root(v0)).expect("u = v0 is a root")
}

/// True when the map is generically one-to-one onto its image: some
/// affine fiber is the single unramified point `v0`.
fn is_birational(c: &CurveParameterization) -> bool {
    let d = c.degree() as i64;
    let [x, y, z] = c.components().map(BinaryForm::dehomogenize);
    let at_infinity = c.point_at(&ParamPoint::infinity());
    let tries = (d - 1) * (d - 2) + 3 * d + 2;
    for i in 0..tries {
        let v0 = Rational::from_integer(((if i % 2 == 0 { 1 } else { -1 }) * (i + 1) / 2).into());
        if c.point_at(&ParamPoint::affine(v0.clone())) == at_infinity {
            continue;
        }
        let qs = [chord_quotient(&x, &y, &v0), chord_quotient(&x, &z, &v0), chord_quotient(&y, &z, &v0)];
        let g = qs.iter().filter(|q| !q.is_zero()).fold(None::<UniPoly>, |acc, q| match acc {
            None => Some(q.monic()),
            Some(a) => Some(UniPoly::gcd(&a, q)),
        });
        if g.is_some_and(|g| g.degree() == Some(0)) {
            return true;
        }
    }
    false
}

/// Birationality together with saturation of the genus by the branches at
/// the rational non-immersive parameters. Together these exclude nodes,
/// tacnodes and any second branch through a cusp.
pub fn injectivity_certificate(c: &CurveParameterization) -> Result<bool> {
    if !is_birational(c) {
        return Ok(false);
    }
    let d = c.degree() as i64;
    let genus = (d - 1) * (d - 2) / 2;
    let (params, _) = rational_singular_params(c)?;
    let mut delta = 0;
    for p in &params {
        if let Some(s) = mult_sequence(&germ_at(c, p)?)? {
            delta += s.delta();
        }
    }
    Ok(delta == genus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{cuspidal_cubic, germ_intersection, line_germ};

    #[test]
    fn cubic_divisors() {
        let c = cuspidal_cubic();
        assert_eq!(line_divisor(&c, &Line::from_ints(0, 0, 1)).unwrap(), vec![(BinaryForm::t(), 3)]);
        let tangent = line_divisor(&c, &Line::from_ints(2, -3, 1)).unwrap();
        let s_minus_t = BinaryForm::from_ints(&[1, -1]);
        let two_s_plus_t = BinaryForm::from_ints(&[2, 1]).normalized();
        assert_eq!(tangent, vec![(s_minus_t, 2), (two_s_plus_t, 1)]);
        let line = crate::geom::CurveParameterization::from_ints(&[1, 0], &[0, 1], &[1, 0]).unwrap();
        assert_eq!(line_divisor(&line, &Line::from_ints(1, 0, -1)), Err(Error::LineContainsCurve));
    }

    #[test]
    fn wronskians_match_partials() {
        let c = cuspidal_cubic();
        let d = Rational::from_integer(3.into());
        let [wxy, wxz, wyz] = wronskians(&c).unwrap();
        let j = |a: &BinaryForm, b: &BinaryForm| {
            a.partial_s().mul(&b.partial_t()).sub(&a.partial_t().mul(&b.partial_s())).unwrap()
        };
        assert_eq!(j(c.x(), c.y()), wxy.scale(&d));
        assert_eq!(j(c.x(), c.z()), wxz.scale(&d));
        assert_eq!(j(c.y(), c.z()), wyz.scale(&d));
    }

    #[test]
    fn supports() {
        assert_eq!(singular_support(&cuspidal_cubic()).unwrap(), vec![BinaryForm::s()]);
        let conic = CurveParameterization::from_ints(&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]).unwrap();
        assert!(singular_support(&conic).unwrap().is_empty());
    }

    #[test]
    fn injectivity() {
        assert!(injectivity_certificate(&cuspidal_cubic()).unwrap());
        // (s (t^2 - s^2), t (t^2 - s^2), s^3): node at the origin from t = 1 and t = -1.
        let nodal = CurveParameterization::from_ints(&[-1, 0, 1, 0], &[0, -1, 0, 1], &[1, 0, 0, 0]).unwrap();
        assert!(!injectivity_certificate(&nodal).unwrap());
        assert!(is_birational(&nodal));
        // A conic traced twice.
        let double = CurveParameterization::from_ints(&[1, 0, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 0, 1]).unwrap();
        assert!(!is_birational(&double));
    }

    #[test]
    fn divisor_matches_local_intersection() {
        let c = cuspidal_cubic();
        let p = ParamPoint::from_ints(1, 1);
        let tangent = Line::from_ints(2, -3, 1);
        let i = germ_intersection(&germ_at(&c, &p).unwrap(), &line_germ(&c, &p, &tangent).unwrap()).unwrap();
        assert_eq!(i, 2);
        let cusp = ParamPoint::infinity();
        let x0 = Line::from_ints(1, 0, 0);
        let i = germ_intersection(&germ_at(&c, &cusp).unwrap(), &line_germ(&c, &cusp, &x0).unwrap()).unwrap();
        assert_eq!(i, 3);
        assert_eq!(line_divisor(&c, &x0).unwrap(), vec![(BinaryForm::s(), 3)]);
    }

    mod props {
        use super::*;
        use crate::constructor::parameterization;
        use crate::exact::rational::int;
        use crate::geom::{germ_intersection, line_germ, BranchGerm, Point};
        use proptest::prelude::*;

        fn curve() -> impl Strategy<Value = CurveParameterization> {
            prop_oneof![
                Just(cuspidal_cubic()),
                Just(parameterization(1).unwrap().curve),
                Just(parameterization(2).unwrap().curve),
            ]
        }

        fn param() -> impl Strategy<Value = ParamPoint> {
            prop_oneof![Just(ParamPoint::infinity()), (-4i64..5).prop_map(|a| ParamPoint::affine(int(a)))]
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn bezout_and_local_intersections(c in curve(), t0 in param(), x in -3i64..4, y in -3i64..4, z in -3i64..4) {
                let p = c.point_at(&t0);
                let Ok(other) = Point::new([int(x), int(y), int(z)]) else { return Ok(()) };
                prop_assume!(other != p);
                let l = Line::through(&p, &other).unwrap();
                let Ok(div) = line_divisor(&c, &l) else { return Ok(()) };
                prop_assert_eq!(div.iter().map(|(f, m)| f.degree() * m).sum::<usize>(), c.degree());
                let lin = t0.linear_form();
                let m = div.iter().find(|(f, _)| *f == lin).map_or(0, |(_, m)| *m) as i64;
                let i = germ_intersection(&germ_at(&c, &t0).unwrap(), &line_germ(&c, &t0, &l).unwrap()).unwrap();
                prop_assert_eq!(m, i);
            }

            #[test]
            fn resolved_sequences_are_valid(a in 2usize..8, b in 2usize..12, c in -3i64..4) {
                prop_assume!(a != b);
                let t = UniPoly::t();
                let u = t.pow(a as u32);
                let v = &t.pow(b as u32) + &t.pow((a + b) as u32).scale(&int(c));
                if let Ok(Some(s)) = mult_sequence(&BranchGerm::from_polys(u, v).unwrap()) {
                    prop_assert!(s.validate(), "{}", s);
                }
            }
        }
    }
}
