use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use cuspidal::classifier::{bounds_check, classify};
use cuspidal::cremona::{cubic_seed, forward_step, inverse_step, rectify, Rectification};
use cuspidal::geom::{detect_cusps, verify_curve};
use cuspidal::{
    parameterization, theorem_cusps, CurveParameterization, CurveReport, Error, MarkedCurve, MultiplicitySequence, Verdict,
};

#[derive(Parser)]
#[command(name = "cuspidal", version, about = "Rational cuspidal plane curves of type (d, d-3)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate and screen candidate cusp data for degrees dmin..=dmax.
    Classify {
        #[arg(long)]
        dmin: u32,
        #[arg(long)]
        dmax: u32,
        /// Include eliminated candidates with their reasons.
        #[arg(long)]
        all_candidates: bool,
    },
    /// Build the degree 2k+3 curve.
    Construct {
        #[arg(long)]
        k: u32,
    },
    /// Certify a curve read from JSON.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run Cremona steps from the cuspidal cubic or from a marked curve.
    Cremona {
        #[arg(long)]
        steps: u32,
        #[arg(long)]
        inverse: bool,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Reduce a marked curve to a line.
    Rectify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check m > d/3 and d < alpha m + beta.
    Bounds {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Verification(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

/// Errors that mean the mathematics did not check out, as opposed to bad input.
fn is_verification(e: &Error) -> bool {
    matches!(
        e,
        Error::ConstructionBrokeDown(_)
            | Error::DegenerateBaseScheme
            | Error::DegenerateComposite(_)
            | Error::DegenerateTangent(_)
            | Error::ResolutionDidNotTerminate
            | Error::AmbiguousCusps(_)
            | Error::CollinearCusps
            | Error::IdentityFailed(_)
            | Error::NotUniquelySolvable { .. }
    )
}

fn core(e: Error) -> Failure {
    if is_verification(&e) {
        Failure::Verification(e.into())
    } else {
        Failure::Usage(e.into())
    }
}

#[derive(Serialize)]
struct ClassRow {
    degree: u32,
    cusps: Vec<MultiplicitySequence>,
    chi: i64,
    bezout_ok: bool,
    genus_ok: bool,
    hurwitz_ok: bool,
    verdict: Verdict,
    reasons: Vec<String>,
}

#[derive(Serialize)]
struct BoundsOut {
    d: u32,
    m: u32,
    matsuoka_sakai: bool,
    orevkov: bool,
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?)
}

fn marked(v: Value) -> Result<MarkedCurve, Failure> {
    Ok(serde_json::from_value(v).context("expected a marked curve")?)
}

/// Curve plus the cusps it should carry: from the marks, from `k`, or detected.
fn verify_value(v: Value) -> Result<CurveReport, Failure> {
    if v.get("marks").is_some() {
        let mc = marked(v)?;
        let mut report = verify_curve(&mc.curve, &mc.expected_cusps()).map_err(core)?;
        if report.passes {
            if let Err(e) = mc.check() {
                report.problems.push(e.to_string());
                report.passes = false;
            }
        }
        return Ok(report);
    }
    let k = v.get("k").map(|k| k.as_u64().ok_or_else(|| anyhow!("k must be a nonnegative integer"))).transpose()?;
    let curve: CurveParameterization = serde_json::from_value(v).context("expected a curve")?;
    let expected = match k {
        Some(k) => {
            let k = u32::try_from(k).context("k out of range")?;
            if curve.degree() != 2 * k as usize + 3 {
                return Err(Failure::Usage(anyhow!("degree {} does not match k = {k}", curve.degree())));
            }
            theorem_cusps(k).map_err(core)?
        }
        None => detect_cusps(&curve).map_err(core)?,
    };
    verify_curve(&curve, &expected).map_err(core)
}

fn emit<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).context("serializing output")?;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Usage(e.into())),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Classify { dmin, dmax, all_candidates } => {
            let rows: Vec<ClassRow> = classify(dmin, dmax)
                .map_err(core)?
                .into_iter()
                .filter(|(_, r)| all_candidates || r.verdict == Verdict::Survivor)
                .map(|(c, r)| ClassRow {
                    degree: c.degree(),
                    cusps: c.cusps().to_vec(),
                    chi: r.chi,
                    bezout_ok: r.bezout_ok,
                    genus_ok: r.genus_ok,
                    hurwitz_ok: r.hurwitz_ok,
                    verdict: r.verdict,
                    reasons: r.reasons,
                })
                .collect();
            emit(&rows)?;
        }
        Command::Construct { k } => emit(&parameterization(k).map_err(core)?)?,
        Command::Verify { input } => {
            let report = verify_value(read_json(&input)?)?;
            emit(&report)?;
            return Ok(report.passes);
        }
        Command::Cremona { steps, inverse, input } => {
            let mut mc = match input {
                Some(p) => marked(read_json(&p)?)?,
                None => cubic_seed(),
            };
            mc.check().map_err(core)?;
            for _ in 0..steps {
                mc = if inverse { inverse_step(&mc) } else { forward_step(&mc) }.map_err(core)?;
            }
            emit(&mc)?;
        }
        Command::Rectify { input } => {
            let mc = marked(read_json(&input)?)?;
            let r: Rectification = rectify(&mc).map_err(core)?;
            emit(&r)?;
        }
        Command::Bounds { d, m } => {
            let b = bounds_check(d, m);
            emit(&BoundsOut { d, m, matsuoka_sakai: b.matsuoka_sakai, orevkov: b.orevkov })?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
