//! Dense exact linear algebra by Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined,
}

impl Solution {
    pub fn verdict(&self) -> &'static str {
        match self {
            Solution::Unique(_) => "unique",
            Solution::Inconsistent => "inconsistent",
            Solution::Underdetermined => "underdetermined",
        }
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone();
            let (src, dst) = if i < r {
                let (lo, hi) = m.split_at_mut(r);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = m.split_at_mut(i);
                (&lo[r], &mut hi[0])
            };
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                if !s.is_zero() {
                    *d -= &factor * s;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn check_rect(a: &[Vec<Rational>]) -> Result<usize> {
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|row| row.len() != cols) {
        return Err(Error::DimensionMismatch("ragged matrix".into()));
    }
    Ok(cols)
}

pub fn rank(a: &[Vec<Rational>]) -> Result<usize> {
    check_rect(a)?;
    let mut m = a.to_vec();
    Ok(rref(&mut m).len())
}

/// Solves `A x = b` exactly.
pub fn solve_linear(a: &[Vec<Rational>], b: &[Rational]) -> Result<Solution> {
    let cols = check_rect(a)?;
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} rows but right-hand side of length {}",
            a.len(),
            b.len()
        )));
    }
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return Ok(Solution::Inconsistent);
    }
    if pivots.len() < cols {
        return Ok(Solution::Underdetermined);
    }
    let x = (0..cols).map(|i| aug[i][cols].clone()).collect();
    Ok(Solution::Unique(x))
}

/// Basis of the right kernel, one vector per free column in increasing order.
pub fn nullspace(a: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let cols = check_rect(a)?;
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect())
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(a: &[Vec<Rational>]) -> Result<Option<Vec<Vec<Rational>>>> {
    let n = check_rect(a)?;
    if a.len() != n {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Ok(None);
    }
    Ok(Some(aug.into_iter().map(|row| row[n..].to_vec()).collect()))
}

pub fn mat_vec(a: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}
