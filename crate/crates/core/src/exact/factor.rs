//! Factorization of univariate polynomials over the rationals: squarefree
//! decomposition, rational roots by p-adic lifting, and splitting of the
//! root-free part.

use algebraics::polynomial::Polynomial as IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::form::primitive_integer_coeffs;
use super::rational::Rational;
use super::unipoly::UniPoly;

/// Yun's algorithm. Returns monic squarefree `(g_i, i)` with `p = c * prod g_i^i`.
pub fn squarefree_decomposition(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = p.monic();
    let dp = p.derivative();
    let a0 = UniPoly::gcd(&p, &dp);
    let mut b = p.exact_div(&a0).expect("gcd divides");
    let mut c = dp.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = UniPoly::gcd(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| n > 1 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn eval_mod(c: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| (acc * x + a).mod_floor(m))
}

fn derivative(c: &[BigInt]) -> Vec<BigInt> {
    c.iter().enumerate().skip(1).map(|(i, a)| a * BigInt::from(i)).collect()
}

/// Rational roots of a squarefree polynomial, in increasing order.
pub fn rational_roots(p: &UniPoly) -> Vec<Rational> {
    let mut roots = Vec::new();
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return roots;
    }
    let mut c = primitive_integer_coeffs(p.coeffs());
    // Roots at zero first, so the constant term is nonzero.
    let z = c.iter().take_while(|a| a.is_zero()).count();
    if z > 0 {
        roots.push(Rational::zero());
        c.drain(..z);
    }
    if c.len() < 2 {
        return roots;
    }
    let lead = c.last().expect("nonempty").clone();
    let dc = derivative(&c);
    // Every rational root u/v has v | lead, so lead * root is an integer of
    // absolute value at most |lead| + max |c_i|.
    let bound = lead.abs() + c.iter().map(|a| a.abs()).max().expect("nonempty");
    let prime = primes_from(3)
        .map(BigInt::from)
        .find(|pr| {
            if (&lead % pr).is_zero() {
                return false;
            }
            let n = pr.to_u64().expect("small prime");
            (0..n).map(BigInt::from).all(|x| {
                !eval_mod(&c, &x, pr).is_zero() || !eval_mod(&dc, &x, pr).is_zero()
            })
        })
        .expect("a squarefree polynomial has good primes");
    let n = prime.to_u64().expect("small prime");
    let mut modulus = prime.clone();
    while modulus <= &bound * 2 {
        modulus *= &prime;
    }
    for x0 in (0..n).map(BigInt::from).filter(|x| eval_mod(&c, x, &prime).is_zero()) {
        let mut x = x0;
        let mut m = prime.clone();
        while m < modulus {
            m = (&m * &m).min(modulus.clone());
            let fx = eval_mod(&c, &x, &m);
            let inv = eval_mod(&dc, &x, &m).modinv(&m).expect("simple root");
            x = (x - fx * inv).mod_floor(&m);
        }
        let mut y = (&lead * x).mod_floor(&modulus);
        if &y * 2 > modulus {
            y -= &modulus;
        }
        let r = Rational::new(y, lead.clone());
        if p.eval(&r).is_zero() {
            roots.push(r);
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Splits a polynomial without rational roots. The result is accepted only
/// when its product reproduces the input; otherwise the input is returned whole.
fn split_rootless(p: &UniPoly) -> Vec<UniPoly> {
    if p.degree().unwrap_or(0) < 4 {
        return vec![p.monic()];
    }
    let int_poly = IntPoly::from(primitive_integer_coeffs(p.coeffs()));
    let mut parts = Vec::new();
    for pf in int_poly.factor().polynomial_factors {
        let q = UniPoly::new(pf.polynomial.into_coefficients().into_iter().map(Rational::from_integer).collect());
        if q.degree().unwrap_or(0) > 0 {
            for _ in 0..pf.power {
                parts.push(q.monic());
            }
        }
    }
    let product = parts.iter().fold(UniPoly::one(), |acc, q| &acc * q);
    if product == p.monic() && parts.iter().all(|q| q.degree().unwrap_or(0) >= 2) {
        parts
    } else {
        vec![p.monic()]
    }
}

/// Monic factors with multiplicities; constants are dropped.
pub fn factor(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    let mut out: Vec<(UniPoly, usize)> = Vec::new();
    for (g, mult) in squarefree_decomposition(p) {
        let mut rest = g;
        for r in rational_roots(&rest) {
            let lin = UniPoly::linear_root(&r);
            rest = rest.exact_div(&lin).expect("root divides");
            out.push((lin, mult));
        }
        if rest.degree().unwrap_or(0) > 0 {
            out.extend(split_rootless(&rest).into_iter().map(|q| (q, mult)));
        }
    }
    let mut merged: Vec<(UniPoly, usize)> = Vec::new();
    for (q, m) in out {
        match merged.iter_mut().find(|(r, _)| *r == q) {
            Some((_, n)) => *n += m,
            None => merged.push((q, m)),
        }
    }
    merged
}
