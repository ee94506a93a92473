use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined gcd")]
    UndefinedGcd,
    #[error("order of zero")]
    OrderOfZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a candidate sequence: {0:?}")]
    NotCandidateSequence(Vec<u32>),
    #[error("sequence {0:?} violates the proximity property")]
    InvalidSequence(Vec<u32>),
    #[error("invalid candidate: {0}")]
    InvalidCandidate(String),
    #[error("degree {0} is below 6")]
    DegreeTooSmall(u32),
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("resolution did not terminate")]
    ResolutionDidNotTerminate,
    #[error("line contains curve")]
    LineContainsCurve,
    #[error("infinite intersection")]
    InfiniteIntersection,
    #[error("invalid germ: {0}")]
    InvalidGerm(String),
    #[error("invalid parameterization: {0}")]
    InvalidParameterization(String),
    #[error("linear system for k = {k} is {verdict}, expected a unique solution")]
    NotUniquelySolvable { k: u32, verdict: &'static str },
    #[error("constructed data fails a required identity: {0}")]
    IdentityFailed(String),
    #[error("degenerate base scheme")]
    DegenerateBaseScheme,
    #[error("degenerate composite: {0}")]
    DegenerateComposite(String),
    #[error("degenerate tangent at parameter {0}")]
    DegenerateTangent(String),
    #[error("construction broke down: {0}")]
    ConstructionBrokeDown(String),
    #[error("already cubic")]
    AlreadyCubic,
    #[error("cannot identify cusps: {0}")]
    AmbiguousCusps(String),
    #[error("collinear cusps")]
    CollinearCusps,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
