use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Variants are grouped by [`ErrorKind`] so front ends can map them to exit
/// codes without matching on every case.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // quiver validation
    #[error("quiver has an oriented cycle through vertex {0}")]
    CyclicQuiver(String),
    #[error("quiver is disconnected (vertex {0} unreachable)")]
    Disconnected(String),
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("vector of length {got} does not match {expected} vertices")]
    IndexMismatch { expected: usize, got: usize },
    #[error("quiver is not affine")]
    NotAffine,

    // linear algebra
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("enumeration budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("interpolated coefficient {0} is not an integer")]
    NonIntegralFit(String),
    #[error("sample at q={q} has count {count}, polynomial predicts {predicted}")]
    InconsistentSamples {
        q: u64,
        count: i128,
        predicted: i128,
    },
    #[error("need at least {needed} samples at distinct primes, got {got}")]
    NotEnoughSamples { needed: usize, got: usize },

    // representations
    #[error("representations live on different quivers")]
    QuiverMismatch,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("witness is not closed under arrow {0}")]
    NotClosedUnderArrows(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("total dimension {total} exceeds cap {cap}")]
    DimensionCap { total: usize, cap: usize },
    #[error("isomorphism undecided after search budget")]
    Undecided,

    // Auslander-Reiten theory
    #[error("module has a projective direct summand")]
    ProjectiveSummand,
    #[error("module has an injective direct summand")]
    InjectiveSummand,
    #[error("Ext^1 has dimension {0} >= 2")]
    ExtTooBig(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("input is projective")]
    ProjectiveInput,
    #[error("module is not a brick: dim End = {0}")]
    NotBrick(usize),
    #[error("quiver is wild; a knitting bound is required")]
    WildQuiver,
    #[error("knitting bound too large: {0}")]
    BoundTooLarge(String),
    #[error("{0} is not a positive root")]
    NotARoot(String),
    #[error("not a regular quasi-simple: {0}")]
    NotQuasiSimple(String),

    // counting
    #[error("stratum formula produced an impossible count: {0}")]
    NegativeCoefficientResult(String),
    #[error("no reduction applies: {0}")]
    PlanFailure(String),
    #[error("cokernel is not a sum of indecomposable injectives: {0}")]
    InjectiveDecompositionFailed(String),

    // plumbing
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

/// Coarse classification of [`Error`] values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Precondition,
    Budget,
    Io,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            BudgetExceeded { .. } => ErrorKind::Budget,
            Io(_) | Parse(_) => ErrorKind::Io,
            NegativeCoefficientResult(_) | InjectiveDecompositionFailed(_) => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
