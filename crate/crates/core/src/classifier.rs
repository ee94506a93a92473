//! Enumeration and screening of numerical data for cuspidal curves of type (d, d-3).

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::rat;
use crate::exact::surd::Surd5;
use crate::multseq::{star_condition, MultiplicitySequence};

/// A degree with its cusps. The cusp of multiplicity `d - 3` comes first,
/// the others follow in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CandidateData {
    degree: u32,
    cusps: Vec<MultiplicitySequence>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Survivor,
    Eliminated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenReport {
    pub bezout_ok: bool,
    pub genus_ok: bool,
    pub hurwitz_ok: bool,
    pub chi: i64,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub matsuoka_sakai: bool,
    pub orevkov: bool,
}

impl CandidateData {
    /// Takes the first cusp of multiplicity `d - 3` as Q and sorts the rest.
    pub fn new(degree: u32, cusps: Vec<MultiplicitySequence>) -> Result<Self> {
        if degree < 6 {
            return Err(Error::DegreeTooSmall(degree));
        }
        let e = degree - 3;
        let qi = cusps
            .iter()
            .position(|c| c.multiplicity() == e)
            .ok_or_else(|| Error::InvalidCandidate(format!("no cusp of multiplicity {e}")))?;
        let mut rest = cusps;
        let q = rest.remove(qi);
        if rest.len() < 2 {
            return Err(Error::InvalidCandidate("fewer than three cusps".into()));
        }
        if let Some(c) = rest.iter().find(|c| c.multiplicity() > 3) {
            return Err(Error::InvalidCandidate(format!("cusp {c} has multiplicity above 3")));
        }
        if let Some(c) = std::iter::once(&q).chain(&rest).find(|c| !c.validate()) {
            return Err(Error::InvalidSequence(c.entries().to_vec()));
        }
        rest.sort_by(|a, b| b.cmp(a));
        let mut all = vec![q];
        all.extend(rest);
        Ok(CandidateData { degree, cusps: all })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn cusps(&self) -> &[MultiplicitySequence] {
        &self.cusps
    }

    pub fn q(&self) -> &MultiplicitySequence {
        &self.cusps[0]
    }

    fn multiset_key(&self) -> Vec<MultiplicitySequence> {
        let mut v = self.cusps.clone();
        v.sort();
        v
    }
}

impl std::fmt::Display for CandidateData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.cusps.iter().map(ToString::to_string).collect();
        write!(f, "d={}: [{}]", self.degree, parts.join(", "))
    }
}

/// Left side minus right side of the Hurwitz inequality for the projection from `z`.
fn hurwitz_excess(d: i64, cusps: &[MultiplicitySequence], z: usize) -> i64 {
    let mz = cusps[z].multiplicity() as i64;
    let lhs = cusps[z].second() as i64 - 1
        + cusps
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != z)
            .map(|(_, c)| c.multiplicity() as i64 - 1)
            .sum::<i64>();
    lhs - (2 * (d - mz) - 2)
}

fn bezout_failures(d: i64, cusps: &[MultiplicitySequence]) -> Vec<String> {
    let mut out = Vec::new();
    for c in cusps {
        let s = c.multiplicity() as i64 + c.second() as i64;
        if s > d {
            out.push(format!("bezout: tangent line at {c} meets it {s} > {d} times"));
        }
    }
    for (i, a) in cusps.iter().enumerate() {
        for b in &cusps[i + 1..] {
            let s = a.multiplicity() as i64 + b.multiplicity() as i64;
            if s > d {
                out.push(format!("bezout: line through {a} and {b} meets it {s} > {d} times"));
            }
        }
    }
    out
}

pub fn screen(c: &CandidateData) -> Result<ScreenReport> {
    let d = c.degree as i64;
    let cusps = &c.cusps;
    let mut reasons = bezout_failures(d, cusps);
    let bezout_ok = reasons.is_empty();

    let delta: i64 = cusps.iter().map(MultiplicitySequence::delta).sum();
    let genus = (d - 1) * (d - 2) / 2;
    let genus_ok = delta == genus;
    if !genus_ok {
        reasons.push(format!("genus: total delta {delta} != {genus}"));
    }

    let mut hurwitz_ok = true;
    for z in 0..cusps.len() {
        let excess = hurwitz_excess(d, cusps, z);
        if excess > 0 {
            hurwitz_ok = false;
            let bound = 2 * (d - cusps[z].multiplicity() as i64) - 2;
            reasons.push(format!(
                "hurwitz: projection from {} needs {} > {bound}",
                cusps[z],
                bound + excess
            ));
        }
    }

    let mut chi = -3 * (d - 3);
    for s in cusps {
        chi += s.local_invariants()?.chi;
    }
    if chi > 0 {
        reasons.push(format!("chi = {chi} > 0"));
    }

    let verdict = if bezout_ok && genus_ok && hurwitz_ok && chi <= 0 {
        Verdict::Survivor
    } else {
        Verdict::Eliminated
    };
    Ok(ScreenReport { bezout_ok, genus_ok, hurwitz_ok, chi, verdict, reasons })
}

/// Sequences `(2_a)`, `(3_a)`, `(3_a,2)` with delta at most `budget`, descending.
fn small_cusps(budget: i64) -> Vec<MultiplicitySequence> {
    let mut out = Vec::new();
    for a in 1..=budget.max(0) as usize {
        let a64 = a as i64;
        if a64 <= budget {
            out.push(MultiplicitySequence::repeated(2, a).expect("valid"));
        }
        if 3 * a64 <= budget {
            out.push(MultiplicitySequence::repeated(3, a).expect("valid"));
        }
        if 3 * a64 + 1 <= budget {
            out.push(MultiplicitySequence::with_tail(&vec![3; a], 2, 1).expect("valid"));
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn branch_weight(s: &MultiplicitySequence) -> i64 {
    s.multiplicity() as i64 - 1
}

/// Nonincreasing selections from `pool[start..]` hitting `delta` exactly within `weight`.
fn selections(
    pool: &[MultiplicitySequence],
    start: usize,
    delta: i64,
    weight: i64,
    current: &mut Vec<MultiplicitySequence>,
    out: &mut Vec<Vec<MultiplicitySequence>>,
) {
    if delta == 0 {
        if current.len() >= 2 {
            out.push(current.clone());
        }
        return;
    }
    for i in start..pool.len() {
        let s = &pool[i];
        let (sd, sw) = (s.delta(), branch_weight(s));
        if sd > delta || sw > weight {
            continue;
        }
        current.push(s.clone());
        selections(pool, i, delta - sd, weight - sw, current, out);
        current.pop();
    }
}

pub fn enumerate(d: u32) -> Result<Vec<CandidateData>> {
    if d < 6 {
        return Err(Error::DegreeTooSmall(d));
    }
    let e = d - 3;
    let di = d as i64;
    let mut qs = vec![MultiplicitySequence::repeated(e, 1)?];
    for a in 1..=2 * d {
        if star_condition(d, a) {
            qs.push(MultiplicitySequence::with_tail(&[e], 2, a as usize)?);
        }
    }
    let genus = (di - 1) * (di - 2) / 2;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for q in qs {
        let budget = genus - q.delta();
        if budget < 0 {
            continue;
        }
        // Branch count bound, tightened by the Hurwitz inequality at Q.
        let weight = 4.min(4 - (q.second() as i64 - 1));
        let pool = small_cusps(budget);
        let mut picks = Vec::new();
        selections(&pool, 0, budget, weight, &mut Vec::new(), &mut picks);
        for others in picks {
            let mut cusps = vec![q.clone()];
            cusps.extend(others);
            let cand = CandidateData::new(d, cusps)?;
            if !bezout_failures(di, &cand.cusps).is_empty() || hurwitz_excess(di, &cand.cusps, 0) > 0 {
                continue;
            }
            if seen.insert(cand.multiset_key()) {
                out.push(cand);
            }
        }
    }
    Ok(out)
}

pub fn classify(dmin: u32, dmax: u32) -> Result<Vec<(CandidateData, ScreenReport)>> {
    if dmin < 6 || dmin > dmax {
        return Err(Error::InvalidRange(format!("need 6 <= dmin <= dmax, got {dmin}..{dmax}")));
    }
    let mut out = Vec::new();
    for d in dmin..=dmax {
        for c in enumerate(d)? {
            let r = screen(&c)?;
            out.push((c, r));
        }
    }
    Ok(out)
}

/// `[(2k, 2_k), (3_k), (2)]` in degree `2k + 3`.
pub fn theorem_data(k: u32) -> Result<CandidateData> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("theorem data needs k >= 2, got {k}")));
    }
    CandidateData::new(
        2 * k + 3,
        vec![
            MultiplicitySequence::with_tail(&[2 * k], 2, k as usize)?,
            MultiplicitySequence::repeated(3, k as usize)?,
            MultiplicitySequence::repeated(2, 1)?,
        ],
    )
}

/// `3m > d`, and `d < alpha*m + beta` with `alpha = (3 + sqrt 5)/2`, `beta = alpha - 1/sqrt 5`.
pub fn bounds_check(d: u32, m: u32) -> Bounds {
    let alpha = Surd5::golden_square();
    let beta = &alpha - &Surd5::new(rat(0, 1), rat(1, 5));
    let ms = Surd5::rational(rat(m as i64, 1));
    let ds = Surd5::rational(rat(d as i64, 1));
    let margin = &(&(&alpha * &ms) + &beta) - &ds;
    Bounds {
        matsuoka_sakai: 3 * m as u64 > d as u64,
        orevkov: margin.signum() == 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> MultiplicitySequence {
        s.parse().unwrap()
    }

    fn cand(d: u32, cusps: &[&str]) -> CandidateData {
        CandidateData::new(d, cusps.iter().map(|s| seq(s)).collect()).unwrap()
    }

    #[test]
    fn theorem_candidate_survives() {
        let r = screen(&cand(9, &["(6,2_3)", "(3_3)", "(2)"])).unwrap();
        assert!(r.bezout_ok && r.genus_ok && r.hurwitz_ok);
        assert_eq!(r.chi, 0);
        assert_eq!(r.verdict, Verdict::Survivor);
        assert!(r.reasons.is_empty());
    }

    #[test]
    fn sextic_needs_projection_from_the_second_cusp() {
        let c = cand(6, &["(3)", "(3,3)", "(2)"]);
        assert_eq!(c.q(), &seq("(3)"));
        let r = screen(&c).unwrap();
        assert!(r.genus_ok);
        assert_eq!(r.chi, 0);
        assert!(!r.hurwitz_ok);
        assert_eq!(hurwitz_excess(6, c.cusps(), 0), -1);
        assert_eq!(hurwitz_excess(6, c.cusps(), 1), 1);
        assert_eq!(r.verdict, Verdict::Eliminated);
    }

    #[test]
    fn positive_chi_eliminates() {
        let r = screen(&cand(7, &["(4)", "(2,2)", "(2_7)"])).unwrap();
        assert!(r.genus_ok);
        assert_eq!(r.chi, 2);
        assert_eq!(r.verdict, Verdict::Eliminated);
        let bad = screen(&cand(7, &["(4)", "(2,2)", "(2_5)"])).unwrap();
        assert!(!bad.genus_ok);
        assert_eq!(bad.chi, 0);
        assert_eq!(bad.verdict, Verdict::Eliminated);
    }

    #[test]
    fn candidate_invariants() {
        assert!(CandidateData::new(5, vec![seq("(2)")]).is_err());
        assert!(CandidateData::new(7, vec![seq("(4)"), seq("(2)")]).is_err());
        assert!(CandidateData::new(8, vec![seq("(4)"), seq("(2)"), seq("(2)")]).is_err());
        assert!(CandidateData::new(9, vec![seq("(6)"), seq("(4)"), seq("(2)")]).is_err());
        assert!(CandidateData::new(9, vec![seq("(6,2_2)"), seq("(2)"), seq("(2)")]).is_err());
        let c = cand(9, &["(2)", "(6,2_3)", "(3_3)"]);
        assert_eq!(c.cusps()[1], seq("(3_3)"));
    }

    #[test]
    fn enumeration_contains_the_listed_cases() {
        assert!(enumerate(9).unwrap().contains(&cand(9, &["(6,2_3)", "(3_3)", "(2)"])));
        assert!(enumerate(7).unwrap().contains(&cand(7, &["(4,2_2)", "(3_2)", "(2)"])));
        assert!(enumerate(6).unwrap().contains(&cand(6, &["(3)", "(3_2)", "(2)"])));
        assert_eq!(enumerate(12).unwrap(), enumerate(12).unwrap());
        assert!(enumerate(5).is_err());
    }

    #[test]
    fn small_range() {
        let surv = |a, b| -> Vec<CandidateData> {
            classify(a, b)
                .unwrap()
                .into_iter()
                .filter(|(_, r)| r.verdict == Verdict::Survivor)
                .map(|(c, _)| c)
                .collect()
        };
        assert_eq!(surv(6, 9), vec![theorem_data(2).unwrap(), theorem_data(3).unwrap()]);
        assert!(surv(6, 6).is_empty());
        assert!(classify(7, 6).is_err());
        assert!(classify(5, 6).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(bounds_check(9, 6), Bounds { matsuoka_sakai: true, orevkov: true });
        assert!(!bounds_check(6, 2).matsuoka_sakai);
        for k in 2..=10 {
            assert_eq!(bounds_check(2 * k + 3, 2 * k), Bounds { matsuoka_sakai: true, orevkov: true });
        }
        // d = 20, m = 6: 6*2.618 + 2.171 = 17.88 < 20
        assert!(!bounds_check(20, 6).orevkov);
    }

    #[test]
    fn closed_forms_for_chi() {
        let chi = |d: u32, c: Vec<String>| {
            let c: Vec<&str> = c.iter().map(String::as_str).collect();
            screen(&cand(d, &c)).unwrap().chi
        };
        let q = |d: u32| format!("({})", d - 3);
        for d in 6..=30u32 {
            let di = d as i64;
            // [(d-3), (3_a), (3_b)], 3a + 3b = 2d - 5
            if (2 * d - 5) % 3 == 0 {
                let b = ((2 * d - 5) / 3 - 1) as usize;
                assert_eq!(chi(d, vec![q(d), "(3)".into(), format!("(3_{b})")]), (di - 4) / 3);
            }
            // [(d-3), (3_a,2), (3_b)], 3a + 3b = 2d - 6
            if (2 * d - 6) % 3 == 0 && d > 6 {
                let b = ((2 * d - 6) / 3 - 1) as usize;
                assert_eq!(chi(d, vec![q(d), "(3,2)".into(), format!("(3_{b})")]), di / 3 - 1);
            }
            // [(d-3), (3_a,2), (3_b,2)], 3a + 3b = 2d - 7
            if (2 * d - 7) % 3 == 0 {
                let b = ((2 * d - 7) / 3 - 1) as usize;
                assert_eq!(chi(d, vec![q(d), "(3,2)".into(), format!("(3_{b},2)")]), (di - 2) / 3);
            }
            // [(d-3), (2_a), (2_b), (2_c)], a + b + c = 2d - 5
            let c = (2 * d - 7) as usize;
            assert_eq!(chi(d, vec![q(d), "(2)".into(), "(2)".into(), format!("(2_{c})")]), di - 5);
        }
    }

    #[test]
    fn enumeration_is_valid_and_deterministic() {
        for d in 6..=31u32 {
            let first = enumerate(d).unwrap();
            assert_eq!(first, enumerate(d).unwrap());
            for c in &first {
                assert!(c.cusps().iter().all(MultiplicitySequence::validate), "{c}");
                assert!(hurwitz_excess(d as i64, c.cusps(), 0) <= 0, "{c}");
                let r = screen(c).unwrap();
                if r.hurwitz_ok {
                    assert!((0..c.cusps().len()).all(|z| hurwitz_excess(d as i64, c.cusps(), z) <= 0));
                }
            }
        }
    }
}
