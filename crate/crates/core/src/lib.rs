pub mod error;
pub mod exact;
pub mod classifier;
pub mod multseq;
pub mod geom;
pub mod constructor;
pub mod cremona;

pub use classifier::{CandidateData, ScreenReport, Verdict};
pub use constructor::{parameterization, solve_fg, theorem_cusps, TheoremCurve};
pub use cremona::{MarkedCurve, QuadraticMap, Rectification};
pub use error::{Error, Result};
pub use exact::form::{BinaryForm, ParamPoint};
pub use exact::rational::Rational;
pub use geom::{CurveParameterization, CurveReport, Line, Point};
pub use multseq::MultiplicitySequence;
