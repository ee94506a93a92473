//! Multiplicity sequences of cusps and their numerical invariants.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Compressed multiplicity sequence `(m0, m1, ..., mn)` with every entry at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct MultiplicitySequence(Vec<u32>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalInvariants {
    pub eta: i64,
    pub omega: i64,
    pub chi: i64,
    pub delta: i64,
}

impl MultiplicitySequence {
    /// Weakly decreasing, nonempty, entries at least 2.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty()
            || entries.iter().any(|&m| m < 2)
            || entries.windows(2).any(|w| w[0] < w[1])
        {
            return Err(Error::NotCandidateSequence(entries));
        }
        Ok(MultiplicitySequence(entries))
    }

    /// `(head, tail_value repeated count)`, e.g. `(6, 2_3)`.
    pub fn with_tail(head: &[u32], tail: u32, count: usize) -> Result<Self> {
        let mut v = head.to_vec();
        v.extend(std::iter::repeat(tail).take(count));
        Self::new(v)
    }

    pub fn repeated(m: u32, count: usize) -> Result<Self> {
        Self::with_tail(&[], m, count)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self) -> u32 {
        self.0[0]
    }

    /// The second entry, or 1 when the sequence has a single stored entry.
    pub fn second(&self) -> u32 {
        self.0.get(1).copied().unwrap_or(1)
    }

    /// Characteristic property, checked against the sequence extended by enough 1s.
    pub fn validate(&self) -> bool {
        let n = self.0.len();
        let pad = self.0[0] as usize + 1;
        let ext: Vec<u32> = self.0.iter().copied().chain(std::iter::repeat(1).take(pad)).collect();
        (0..n).all(|i| {
            let mi = ext[i];
            let next = ext[i + 1];
            if mi == next {
                return true;
            }
            let mut sum = 0;
            let mut k = 1;
            while i + k + 1 < ext.len() && ext[i + k] == next {
                sum += next;
                if sum + ext[i + k + 1] == mi {
                    return true;
                }
                if sum >= mi {
                    break;
                }
                k += 1;
            }
            false
        })
    }

    /// Sum of `m(m-1)/2` over the stored entries.
    pub fn delta(&self) -> i64 {
        self.0.iter().map(|&m| (m as i64) * (m as i64 - 1) / 2).sum()
    }

    /// Computes eta and omega with a single trailing 1 appended.
    pub fn local_invariants(&self) -> Result<LocalInvariants> {
        if !self.validate() {
            return Err(Error::InvalidSequence(self.0.clone()));
        }
        let ext: Vec<i64> = self.0.iter().map(|&m| m as i64).chain([1]).collect();
        let eta = ext.iter().map(|m| m - 1).sum();
        let omega = ext.windows(2).map(|w| (w[0] + w[1] - 1) / w[1] - 1).sum();
        Ok(LocalInvariants {
            eta,
            omega,
            chi: eta + omega - 1,
            delta: self.delta(),
        })
    }

    /// Runs of equal entries as `(value, count)`.
    pub fn runs(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &m in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == m => *c += 1,
                _ => out.push((m, 1)),
            }
        }
        out
    }
}

pub fn star_condition(d: u32, a: u32) -> bool {
    let e = d as i64 - 3;
    let a = a as i64;
    (e % 2 == 0 && e <= 2 * a) || e == 2 * a + 1
}

impl TryFrom<Vec<u32>> for MultiplicitySequence {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<MultiplicitySequence> for Vec<u32> {
    fn from(s: MultiplicitySequence) -> Vec<u32> {
        s.0
    }
}

impl PartialOrd for MultiplicitySequence {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by multiplicity, then length, then entries.
impl Ord for MultiplicitySequence {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0[0], self.0.len(), &self.0).cmp(&(other.0[0], other.0.len(), &other.0))
    }
}

impl fmt::Display for MultiplicitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .runs()
            .into_iter()
            .map(|(v, c)| if c == 1 { v.to_string() } else { format!("{v}_{c}") })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses `(6,2_3)`, `6,2,2,2` or `[6,2,2,2]`.
impl FromStr for MultiplicitySequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let mut entries = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            let bad = || Error::Parse(format!("bad sequence entry {part:?}"));
            match part.split_once('_') {
                Some((v, c)) => {
                    let v: u32 = v.trim().parse().map_err(|_| bad())?;
                    let c: usize = c.trim().parse().map_err(|_| bad())?;
                    entries.extend(std::iter::repeat(v).take(c));
                }
                None => entries.push(part.parse().map_err(|_| bad())?),
            }
        }
        Self::new(entries)
    }
}
