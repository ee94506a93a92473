use num_traits::Zero;

use super::{CurveParameterization, Line};
use crate::error::{Error, Result};
use crate::exact::form::ParamPoint;
use crate::exact::ratfunc::RationalFunction;
use crate::exact::rational::Rational;
use crate::exact::unipoly::UniPoly;
use crate::multseq::MultiplicitySequence;

/// A plane branch `(u(t), v(t))` through the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchGerm {
    pub u: RationalFunction,
    pub v: RationalFunction,
}

fn order_or_inf(r: &RationalFunction) -> Option<i64> {
    r.order().ok()
}

impl BranchGerm {
    pub fn new(u: RationalFunction, v: RationalFunction) -> Result<Self> {
        if u.is_zero() && v.is_zero() {
            return Err(Error::InvalidGerm("both coordinates vanish identically".into()));
        }
        for r in [&u, &v] {
            if order_or_inf(r).is_some_and(|o| o < 1) {
                return Err(Error::InvalidGerm(format!("{r} does not vanish at 0")));
            }
        }
        Ok(BranchGerm { u, v })
    }

    /// Germ of `(t^a p(t), t^b q(t))` for polynomial coordinates.
    pub fn from_polys(u: UniPoly, v: UniPoly) -> Result<Self> {
        Self::new(RationalFunction::from_poly(u), RationalFunction::from_poly(v))
    }

    /// `(t^a, t^b)`.
    pub fn monomial(a: usize, b: usize) -> Self {
        let one = Rational::from_integer(1.into());
        Self::from_polys(UniPoly::monomial(one.clone(), a), UniPoly::monomial(one, b)).expect("positive exponents")
    }

    pub fn multiplicity(&self) -> i64 {
        match (order_or_inf(&self.u), order_or_inf(&self.v)) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!("validated germ"),
        }
    }

    fn direction(&self) -> Direction {
        match (order_or_inf(&self.u), order_or_inf(&self.v)) {
            (Some(a), Some(b)) if a <= b => {
                let q = self.v.div(&self.u).expect("nonzero u");
                Direction::Slope(q.value_at_zero().expect("regular quotient"))
            }
            (Some(_), None) => Direction::Slope(Rational::zero()),
            _ => Direction::Vertical,
        }
    }

    fn blow_up(&self, dir: &Direction) -> BranchGerm {
        match dir {
            Direction::Slope(c) => BranchGerm {
                u: self.u.clone(),
                v: self.v.div(&self.u).expect("nonzero u").sub_const(c),
            },
            Direction::Vertical => BranchGerm {
                u: self.u.div(&self.v).expect("nonzero v"),
                v: self.v.clone(),
            },
        }
    }

    fn height(&self) -> i64 {
        (self.u.num().degree().unwrap_or(0)
            + self.u.den().degree().unwrap_or(0)
            + self.v.num().degree().unwrap_or(0)
            + self.v.den().degree().unwrap_or(0)) as i64
            + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Direction {
    Slope(Rational),
    Vertical,
}

/// Index of the first component not vanishing at `p`, followed by the other two.
pub fn affine_chart(c: &CurveParameterization, p: &ParamPoint) -> [usize; 3] {
    let comps = c.components();
    let j = (0..3).find(|&i| !comps[i].eval_at(p).is_zero()).expect("coprime components");
    let mut rest = (0..3).filter(|&i| i != j);
    [j, rest.next().unwrap(), rest.next().unwrap()]
}

/// Local branch of the curve at parameter `p`, centered at its image.
pub fn germ_at(c: &CurveParameterization, p: &ParamPoint) -> Result<BranchGerm> {
    let [j, a, b] = affine_chart(c, p);
    let comps = c.components();
    let den = comps[j].local_at(p);
    let coord = |i: usize| -> Result<RationalFunction> {
        let r = RationalFunction::new(comps[i].local_at(p), den.clone())?;
        let v0 = r.value_at_zero().expect("denominator nonzero at the point");
        Ok(r.sub_const(&v0))
    };
    BranchGerm::new(coord(a)?, coord(b)?)
}

/// The germ of a line through the image of `p`, in the chart of [`germ_at`].
pub fn line_germ(c: &CurveParameterization, p: &ParamPoint, l: &Line) -> Result<BranchGerm> {
    let [_, a, b] = affine_chart(c, p);
    if !l.contains(&c.point_at(p)) {
        return Err(Error::InvalidArgument(format!("{l} misses the point at {p}")));
    }
    let (la, lb) = (&l.coeffs()[a], &l.coeffs()[b]);
    if la.is_zero() && lb.is_zero() {
        return Err(Error::InvalidArgument(format!("{l} is the line at infinity of the chart")));
    }
    let t = UniPoly::t();
    if lb.is_zero() {
        BranchGerm::from_polys(UniPoly::zero(), t)
    } else {
        BranchGerm::from_polys(t.clone(), t.scale(&(-la / lb)))
    }
}

/// Power series in `t` whose coefficients are known exactly below `len`.
#[derive(Clone, Debug)]
struct Series(Vec<Rational>);

impl Series {
    fn from_function(r: &RationalFunction, n: usize) -> Series {
        let num = Series((0..n).map(|i| r.num().coeff(i)).collect());
        let den = Series((0..n).map(|i| r.den().coeff(i)).collect());
        num.div_unit(&den)
    }

    fn order(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// `self / w` for `w(0) != 0`, to the common precision.
    fn div_unit(&self, w: &Series) -> Series {
        let n = self.0.len().min(w.0.len());
        let inv0 = w.0[0].recip();
        let mut q: Vec<Rational> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = self.0[i].clone();
            for j in 1..=i {
                if !w.0[j].is_zero() {
                    acc -= &w.0[j] * &q[i - j];
                }
            }
            q.push(acc * &inv0);
        }
        Series(q)
    }

    /// `self / by` where `by` has order `m` and `self` has order at least `m`.
    fn quotient(&self, by: &Series, m: usize) -> Series {
        Series(self.0[m..].to_vec()).div_unit(&Series(by.0[m..].to_vec()))
    }

    fn sub_const(mut self, c: &Rational) -> Series {
        if let Some(first) = self.0.first_mut() {
            *first -= c;
        }
        self
    }
}

enum SeriesRun {
    Done(Option<MultiplicitySequence>),
    NeedsPrecision,
}

/// The blow-up recursion on truncated series. Every decision reads a
/// coefficient that is known exactly, so a `Done` result is exact.
fn series_sequence(g: &BranchGerm, n: usize, steps: i64) -> Result<SeriesRun> {
    let (mut u, mut v) = (Series::from_function(&g.u, n), Series::from_function(&g.v, n));
    let mut out = Vec::new();
    for _ in 0..steps {
        let (ou, ov) = (u.order(), v.order());
        let (m, u_leads) = match (ou, ov) {
            (Some(a), Some(b)) => (a.min(b), a <= b),
            (Some(a), None) if a < v.0.len() => (a, true),
            (None, Some(b)) if b < u.0.len() => (b, false),
            _ => return Ok(SeriesRun::NeedsPrecision),
        };
        if m == 1 {
            let seq = if out.is_empty() { None } else { Some(MultiplicitySequence::new(out)?) };
            return Ok(SeriesRun::Done(seq));
        }
        out.push(m as u32);
        if u_leads {
            let q = v.quotient(&u, m);
            if q.0.is_empty() {
                return Ok(SeriesRun::NeedsPrecision);
            }
            let c = q.0[0].clone();
            v = q.sub_const(&c);
        } else {
            let q = u.quotient(&v, m);
            if q.0.is_empty() {
                return Ok(SeriesRun::NeedsPrecision);
            }
            u = q;
        }
    }
    Err(Error::ResolutionDidNotTerminate)
}

/// Multiplicity sequence by repeated blow-up; `None` for a smooth branch.
pub fn mult_sequence(g: &BranchGerm) -> Result<Option<MultiplicitySequence>> {
    let steps = step_bound(g);
    if !g.u.is_zero() && !g.v.is_zero() {
        let cap = 64 * (g.height() as usize + 2);
        let mut n = 32;
        while n <= cap {
            if let SeriesRun::Done(s) = series_sequence(g, n, steps)? {
                return Ok(s);
            }
            n *= 2;
        }
    }
    exact_sequence(g, steps)
}

fn step_bound(g: &BranchGerm) -> i64 {
    match (order_or_inf(&g.u), order_or_inf(&g.v)) {
        (Some(a), Some(b)) => 2 * a * b + 2,
        _ => 2 * g.multiplicity() + 2,
    }
}

/// The same recursion on exact rational functions.
fn exact_sequence(g: &BranchGerm, steps: i64) -> Result<Option<MultiplicitySequence>> {
    let mut g = g.clone();
    let mut out = Vec::new();
    for _ in 0..steps {
        let m = g.multiplicity();
        if m == 1 {
            return Ok(if out.is_empty() {
                None
            } else {
                Some(MultiplicitySequence::new(out)?)
            });
        }
        if g.u.is_zero() || g.v.is_zero() {
            // A multiple cover of a smooth branch never resolves.
            return Err(Error::ResolutionDidNotTerminate);
        }
        out.push(m as u32);
        let dir = g.direction();
        g = g.blow_up(&dir);
    }
    Err(Error::ResolutionDidNotTerminate)
}

/// Intersection multiplicity of two branches at the origin.
pub fn germ_intersection(g1: &BranchGerm, g2: &BranchGerm) -> Result<i64> {
    let bound = g1.height() * g2.height();
    let (mut a, mut b) = (g1.clone(), g2.clone());
    let mut total = 0;
    loop {
        if a == b {
            return Err(Error::InfiniteIntersection);
        }
        total += a.multiplicity() * b.multiplicity();
        if total > bound {
            return Err(Error::InfiniteIntersection);
        }
        let (da, db) = (a.direction(), b.direction());
        if da != db {
            return Ok(total);
        }
        a = a.blow_up(&da);
        b = b.blow_up(&db);
    }
}
