//! Explicit construction of the curves of degree `2k + 3` over the rationals
//! by solving a square linear system for the auxiliary polynomials `f`, `g`.
//!
//! With `lambda = t^3 - 3t + 2 = (t-1)^2 (t+2)` and `tau = t^3`, put
//! `F = f(tau, lambda) + tau^(k-2) g(t)` where `f` is homogeneous of degree
//! `k - 3`. Requiring `lambda^(k-2) | F` and fixing the value and slope of
//! `h = F / lambda^(k-2)` at `t = 1` determines `f` and `g`; then
//! `qhat = (t^3 h + 1) / (t-1)^2` and `q(s,t) = s^(2k-2) qhat(t/s)`.

use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::form::{BinaryForm, ParamPoint};
use crate::exact::linalg::{rank, solve_linear, Solution};
use crate::exact::rational::{int, Rational};
use crate::exact::unipoly::UniPoly;
use crate::geom::CurveParameterization;
use crate::multseq::MultiplicitySequence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FGSolution {
    pub k: u32,
    /// Coefficients `a_0..a_(k-3)` of `f = sum a_i x^i y^(k-3-i)`.
    pub f: Vec<Rational>,
    pub g: UniPoly,
    pub h: UniPoly,
    pub qhat: UniPoly,
}

/// Serialized flat: `{k, q, degree, x, y, z}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCurve {
    pub k: u32,
    pub q: BinaryForm,
    #[serde(flatten)]
    pub curve: CurveParameterization,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Independence {
    pub dimension: usize,
    pub rank: usize,
    pub ok: bool,
}

pub fn lambda() -> UniPoly {
    UniPoly::from_ints(&[2, -3, 0, 1])
}

pub fn tau() -> UniPoly {
    UniPoly::from_ints(&[0, 0, 0, 1])
}

fn pow3(e: i64) -> Rational {
    let three = int(3);
    if e >= 0 {
        Pow::pow(three, e as u32)
    } else {
        Pow::pow(three, e.unsigned_abs() as u32).recip()
    }
}

/// Column basis: `tau^i lambda^(k-3-i)` for the `f` unknowns, then `tau^(k-2) t^j`.
fn unknown_basis(k: u32) -> Vec<UniPoly> {
    let (lam, ta) = (lambda(), tau());
    let mut out = Vec::new();
    if k >= 3 {
        for i in 0..=k - 3 {
            out.push(&ta.pow(i) * &lam.pow(k - 3 - i));
        }
    }
    let tk = ta.pow(k - 2);
    for j in 0..=(2 * k - 3) as usize {
        out.push(tk.shift_up(j));
    }
    out
}

pub fn solve_fg(k: u32) -> Result<FGSolution> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("solve_fg needs k >= 2, got {k}")));
    }
    let basis = unknown_basis(k);
    let n = basis.len();
    debug_assert_eq!(n, (3 * k - 4) as usize);
    let at_one: Vec<UniPoly> = basis.iter().map(|b| b.translate(&int(1))).collect();
    let at_minus_two: Vec<UniPoly> = basis.iter().map(|b| b.translate(&int(-2))).collect();
    let (k2, ki) = ((2 * k) as usize, k as i64);

    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for order in 0..k2 - 4 {
        rows.push(at_one.iter().map(|p| p.coeff(order)).collect::<Vec<_>>());
        rhs.push(Rational::zero());
    }
    for order in 0..(k - 2) as usize {
        rows.push(at_minus_two.iter().map(|p| p.coeff(order)).collect());
        rhs.push(Rational::zero());
    }
    // F(1 + u) = u^(2k-4) (3 + u)^(k-2) h(1 + u) with h(1) = -1, h'(1) = 3.
    rows.push(at_one.iter().map(|p| p.coeff(k2 - 4)).collect());
    rhs.push(-pow3(ki - 2));
    rows.push(at_one.iter().map(|p| p.coeff(k2 - 3)).collect());
    rhs.push(pow3(ki - 3) * int(11 - ki));

    let x = match solve_linear(&rows, &rhs)? {
        Solution::Unique(x) => x,
        other => return Err(Error::NotUniquelySolvable { k, verdict: other.verdict() }),
    };
    let nf = (k - 2) as usize;
    let f = x[..nf].to_vec();
    let g = UniPoly::new(x[nf..].to_vec());
    let big_f = basis
        .iter()
        .zip(&x)
        .fold(UniPoly::zero(), |acc, (b, c)| &acc + &b.scale(c));
    let h = big_f
        .exact_div(&lambda().pow(k - 2))
        .ok_or_else(|| Error::IdentityFailed("lambda^(k-2) does not divide F".into()))?;
    let num = &(&tau() * &h) + &UniPoly::one();
    let qhat = num
        .exact_div(&UniPoly::from_ints(&[1, -2, 1]))
        .ok_or_else(|| Error::IdentityFailed("(t-1)^2 does not divide t^3 h + 1".into()))?;
    let sol = FGSolution { k, f, g, h, qhat };
    sol.check()?;
    Ok(sol)
}

impl FGSolution {
    /// `f(tau, lambda) + tau^(k-2) g`.
    pub fn big_f(&self) -> UniPoly {
        let (lam, ta) = (lambda(), tau());
        let nf = self.f.len();
        let fpart = self.f.iter().enumerate().fold(UniPoly::zero(), |acc, (i, a)| {
            &acc + &(&ta.pow(i as u32) * &lam.pow((nf - 1 - i) as u32)).scale(a)
        });
        &fpart + &(&ta.pow(self.k - 2) * &self.g)
    }

    pub fn check(&self) -> Result<()> {
        let k = self.k;
        let fail = |m: &str| Err(Error::IdentityFailed(m.to_string()));
        if &lambda().pow(k - 2) * &self.h != self.big_f() {
            return fail("lambda^(k-2) h != f(tau, lambda) + tau^(k-2) g");
        }
        if self.g.degree().is_some_and(|d| d > (2 * k - 3) as usize) {
            return fail("deg g > 2k - 3");
        }
        if self.h.degree() != Some((2 * k - 3) as usize) {
            return fail("deg h != 2k - 3");
        }
        let one = int(1);
        if self.h.eval(&one) != int(-1) || self.h.derivative().eval(&one) != int(3) {
            return fail("h(1) = -1, h'(1) = 3");
        }
        let lhs = &UniPoly::from_ints(&[1, -2, 1]) * &self.qhat;
        if lhs != &(&tau() * &self.h) + &UniPoly::one() {
            return fail("(t-1)^2 qhat != t^3 h + 1");
        }
        if self.qhat.degree() != Some((2 * k - 2) as usize) {
            return fail("deg qhat != 2k - 2");
        }
        let zero = Rational::zero();
        let d1 = self.qhat.derivative();
        if self.qhat.eval(&zero) != one || d1.eval(&zero) != int(2) || d1.derivative().eval(&zero) != int(6) {
            return fail("qhat(0) = 1, qhat'(0) = 2, qhat''(0) = 6");
        }
        Ok(())
    }
}

pub fn q_polynomial(k: u32) -> Result<BinaryForm> {
    match k {
        0 => Err(Error::InvalidArgument("q needs k >= 1".into())),
        1 => Ok(BinaryForm::constant(Rational::one())),
        _ => BinaryForm::homogenize(&solve_fg(k)?.qhat, (2 * k - 2) as usize),
    }
}

/// `(s^2k t^3, s^2k (s-t)^2 (2s+t), t^3 (s-t)^2 q(s,t))`.
pub fn parameterization(k: u32) -> Result<TheoremCurve> {
    let q = q_polynomial(k)?;
    let s2k = BinaryForm::s().pow(2 * k as usize);
    let t3 = BinaryForm::t().pow(3);
    let smt2 = BinaryForm::from_ints(&[1, -1]).pow(2);
    let x = s2k.mul(&t3);
    let y = s2k.mul(&smt2).mul(&BinaryForm::from_ints(&[2, 1]));
    let z = t3.mul(&smt2).mul(&q);
    Ok(TheoremCurve { k, q, curve: CurveParameterization::new(x, y, z)? })
}

/// `(2k, 2_k)` at `(0:1)`, `(3_k)` at `(1:0)` and `(2)` at `(1:1)`.
pub fn theorem_cusps(k: u32) -> Result<Vec<(ParamPoint, MultiplicitySequence)>> {
    if k == 0 {
        return Err(Error::InvalidArgument("the theorem curves start at k = 1".into()));
    }
    let k_len = k as usize;
    Ok(vec![
        (ParamPoint::infinity(), MultiplicitySequence::with_tail(&[2 * k], 2, k_len)?),
        (ParamPoint::from_ints(1, 0), MultiplicitySequence::repeated(3, k_len)?),
        (ParamPoint::from_ints(1, 1), MultiplicitySequence::repeated(2, 1)?),
    ])
}

/// Rank of `tau^(k-3-i) lambda^i` (`0 <= i <= k-3`), `(t-1)^(2k-2) (t+2)^i`
/// (`k-2 <= i <= 3k-7`) and `t^i` (`3k-6 <= i <= 5k-9`) against `5k - 8`.
pub fn independence_check(k: u32) -> Result<Independence> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("independence check needs k >= 3, got {k}")));
    }
    let (lam, ta) = (lambda(), tau());
    let mut polys = Vec::new();
    for i in 0..=k - 3 {
        polys.push(&ta.pow(k - 3 - i) * &lam.pow(i));
    }
    let base = UniPoly::from_ints(&[-1, 1]).pow(2 * k - 2);
    let tp2 = UniPoly::from_ints(&[2, 1]);
    for i in k - 2..=3 * k - 7 {
        polys.push(&base * &tp2.pow(i));
    }
    for i in 3 * k - 6..=5 * k - 9 {
        polys.push(UniPoly::monomial(Rational::one(), i as usize));
    }
    let width = polys.iter().filter_map(UniPoly::degree).max().unwrap_or(0) + 1;
    let rows: Vec<Vec<Rational>> = polys.iter().map(|p| (0..width).map(|j| p.coeff(j)).collect()).collect();
    let dimension = (5 * k - 8) as usize;
    debug_assert_eq!(rows.len(), dimension);
    let r = rank(&rows)?;
    Ok(Independence { dimension, rank: r, ok: r == dimension })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{parse_rational, rat};

    fn poly(c: &[&str]) -> UniPoly {
        UniPoly::new(c.iter().map(|s| parse_rational(s).unwrap()).collect())
    }

    #[test]
    fn k2() {
        let s = solve_fg(2).unwrap();
        assert!(s.f.is_empty());
        assert_eq!(s.g, UniPoly::from_ints(&[-4, 3]));
        assert_eq!(s.h, UniPoly::from_ints(&[-4, 3]));
        assert_eq!(s.qhat, UniPoly::from_ints(&[1, 2, 3]));
        assert_eq!(q_polynomial(2).unwrap(), BinaryForm::from_ints(&[1, 2, 3]));
        assert_eq!(q_polynomial(2).unwrap().to_string(), "s^2 + 2*s*t + 3*t^2");
    }

    #[test]
    fn oracle_values() {
        // Frozen from an independent computer-algebra solve of the same conditions.
        let s = solve_fg(3).unwrap();
        assert_eq!(s.f, vec![rat(-16, 11)]);
        assert_eq!(s.g, poly(&["100/11", "-93/11", "-18/11", "27/11"]));
        assert_eq!(s.h, poly(&["-8/11", "-12/11", "-18/11", "27/11"]));
        assert_eq!(s.qhat, poly(&["1", "2", "3", "36/11", "27/11"]));
        let s = solve_fg(4).unwrap();
        assert_eq!(s.f, vec![rat(-128, 169), rat(304, 169)]);
        assert_eq!(s.g, poly(&["-196/13", "2739/169", "828/169", "-1566/169", "0", "243/169"]));
        assert_eq!(s.h, poly(&["-64/169", "-96/169", "-144/169", "-108/169", "0", "243/169"]));
        assert_eq!(s.qhat, poly(&["1", "2", "3", "612/169", "621/169", "486/169", "243/169"]));
    }

    #[test]
    fn identities_hold_up_to_k10() {
        for k in 2..=10 {
            let s = solve_fg(k).unwrap();
            let lhs = &lambda().pow(k - 2) * &s.h;
            assert_eq!(lhs, s.big_f());
            // tau^(k-2) divides f(tau, lambda) - lambda^(k-2) h.
            let fpart = &s.big_f() - &(&tau().pow(k - 2) * &s.g);
            let diff = &fpart - &lhs;
            assert!(diff.is_zero() || diff.order_at_zero().unwrap() >= 3 * (k as usize - 2));
        }
        assert!(solve_fg(1).is_err());
    }

    #[test]
    fn endpoint_conditions_are_equivalent() {
        // t^3 | qhat (t-1)^2 - 1  iff  qhat = 1 + 2t + 3t^2 + O(t^3).
        let sq = UniPoly::from_ints(&[1, -2, 1]);
        let divisible = |q: &UniPoly| {
            let r = &(q * &sq) - &UniPoly::one();
            r.is_zero() || r.order_at_zero().unwrap() >= 3
        };
        for k in 2..=6 {
            assert!(divisible(&solve_fg(k).unwrap().qhat));
        }
        assert!(divisible(&UniPoly::from_ints(&[1, 2, 3, 7, -1])));
        assert!(!divisible(&UniPoly::from_ints(&[1, 2, 4])));
        assert!(!divisible(&UniPoly::from_ints(&[1, 3, 3])));
    }

    #[test]
    fn small_curves_verify() {
        for k in 1..=3 {
            let c = parameterization(k).unwrap();
            let r = crate::geom::verify_curve(&c.curve, &theorem_cusps(k).unwrap()).unwrap();
            assert!(r.passes, "k={k}: {:?}", r.problems);
        }
        assert!(theorem_cusps(0).is_err());
    }

    #[test]
    fn flat_json() {
        let c = parameterization(2).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["degree"], 7);
        assert_eq!(v["q"]["coeffs"], serde_json::json!(["1", "2", "3"]));
        let back: TheoremCurve = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn curves() {
        let c1 = parameterization(1).unwrap();
        assert_eq!(c1.curve.degree(), 5);
        assert_eq!(c1.q, BinaryForm::constant(Rational::one()));
        let c2 = parameterization(2).unwrap();
        assert_eq!(c2.curve.degree(), 7);
        assert_eq!(c2.curve.z(), &BinaryForm::t().pow(3).mul(&BinaryForm::from_ints(&[1, -1]).pow(2)).mul(&c2.q));
        for k in 1..=5 {
            let c = parameterization(k).unwrap();
            let x = c.curve.x();
            assert_eq!(x.coeffs().iter().filter(|v| !v.is_zero()).count(), 1);
            assert_eq!(x.coeffs()[3], Rational::one());
            assert_eq!(c.q.coeffs()[0], Rational::one());
        }
        assert!(q_polynomial(0).is_err());
    }

    #[test]
    fn independence() {
        assert_eq!(independence_check(3).unwrap(), Independence { dimension: 7, rank: 7, ok: true });
        assert_eq!(independence_check(4).unwrap().dimension, 12);
        assert!(independence_check(8).unwrap().ok);
        assert!(independence_check(2).is_err());
    }
}
