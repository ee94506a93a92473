//! Exact arithmetic: rationals, univariate polynomials, binary forms,
//! rational functions, linear systems and the field Q(sqrt 5).

pub mod factor;
pub mod form;
pub mod linalg;
pub mod ratfunc;
pub mod rational;
pub mod surd;
pub mod unipoly;

use std::fmt;

use num_traits::{One, Signed, Zero};

use rational::Rational;

/// Writes a sum of `(coefficient, monomial)` terms, leading term first.
/// An empty monomial denotes the constant term.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(Rational, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (i, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{mag}*{mono}")?;
        }
    }
    debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
    Ok(())
}
