use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::certify::{injectivity_certificate, rational_singular_params, singular_support};
use super::germ::{germ_at, mult_sequence};
use super::CurveParameterization;
use crate::error::{Error, Result};
use crate::exact::form::{BinaryForm, ParamPoint};
use crate::multseq::MultiplicitySequence;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspRecord {
    pub param: ParamPoint,
    /// `None` when the branch is smooth.
    pub sequence: Option<MultiplicitySequence>,
    pub delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    pub degree: usize,
    pub cusps: Vec<CuspRecord>,
    pub genus_saturated: bool,
    pub injective: bool,
    #[serde(serialize_with = "form_strings")]
    pub singular_support: Vec<BinaryForm>,
    pub passes: bool,
    pub problems: Vec<String>,
}

fn form_strings<S: serde::Serializer>(v: &[BinaryForm], ser: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(ser)
}

fn record(c: &CurveParameterization, p: &ParamPoint) -> Result<CuspRecord> {
    let sequence = mult_sequence(&germ_at(c, p)?)?;
    let delta = sequence.as_ref().map_or(0, MultiplicitySequence::delta);
    Ok(CuspRecord { param: p.clone(), sequence, delta })
}

/// Singular branches at the rational non-immersive parameters.
pub fn detect_cusps(c: &CurveParameterization) -> Result<Vec<(ParamPoint, MultiplicitySequence)>> {
    let (params, _) = rational_singular_params(c)?;
    let mut out = Vec::new();
    for p in params {
        if let Some(s) = mult_sequence(&germ_at(c, &p)?)? {
            out.push((p, s));
        }
    }
    Ok(out)
}

/// Checks the branch at each expected parameter, looks for singular branches
/// elsewhere, and certifies that nothing else is singular.
pub fn verify_curve(
    c: &CurveParameterization,
    expected: &[(ParamPoint, MultiplicitySequence)],
) -> Result<CurveReport> {
    let mut seen = HashSet::new();
    if let Some((p, _)) = expected.iter().find(|(p, _)| !seen.insert(p.clone())) {
        return Err(Error::InvalidArgument(format!("parameter {p} is listed twice")));
    }
    let d = c.degree();
    let mut problems = Vec::new();
    let mut cusps = Vec::new();
    for (p, want) in expected {
        let r = record(c, p)?;
        match &r.sequence {
            Some(got) if got == want => {}
            Some(got) => problems.push(format!("at {p}: expected {want}, found {got}")),
            None => problems.push(format!("at {p}: expected {want}, found a smooth branch")),
        }
        cusps.push(r);
    }

    let support = singular_support(c)?;
    let (rational, irrational) = rational_singular_params(c)?;
    for f in &irrational {
        problems.push(format!("singular support has the irrational factor {f}"));
    }
    for p in rational.iter().filter(|p| !seen.contains(*p)) {
        let r = record(c, p)?;
        if let Some(s) = &r.sequence {
            problems.push(format!("unexpected cusp {s} at {p}"));
        } else {
            problems.push(format!("singular support contains the unexpected parameter {p}"));
        }
        cusps.push(r);
    }

    let delta: i64 = cusps.iter().map(|r| r.delta).sum();
    let genus = ((d as i64) - 1) * ((d as i64) - 2) / 2;
    let genus_saturated = delta == genus;
    if !genus_saturated {
        problems.push(format!("total delta {delta} != {genus}"));
    }
    let injective = injectivity_certificate(c)?;
    if !injective {
        problems.push("injectivity certificate failed".into());
    }
    Ok(CurveReport {
        degree: d,
        cusps,
        genus_saturated,
        injective,
        singular_support: support,
        passes: problems.is_empty(),
        problems,
    })
}
