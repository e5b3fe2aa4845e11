use crate::format::ParseError;
use crate::report::CheckReport;
use crate::scalar::Parity;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("expected a product of arity {expected}, found arity {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("unsupported arity {0} (only 2 and 3 are supported)")]
    UnsupportedArity(usize),
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("grading violation at {location}: {detail}")]
    GradingViolation { location: String, detail: String },
    #[error("vector is not homogeneous")]
    NotHomogeneous,
    #[error("linear map is singular")]
    SingularMap,
    #[error(
        "no invertible map of parity {parity} exists from a {}|{}-dimensional space to a {}|{}-dimensional space",
        domain.0, domain.1, codomain.0, codomain.1
    )]
    ParityObstruction {
        parity: Parity,
        domain: (usize, usize),
        codomain: (usize, usize),
    },
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("precondition failed: {} does not hold", .0.identity)]
    PreconditionFailed(Box<CheckReport>),
    #[error("search space has {candidates} candidates, budget is {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("`{0}` is already defined")]
    DuplicateDefinition(String),
    #[error("unknown declaration `{0}`")]
    UnknownReference(String),
    #[error("`{0}` is not a valid name")]
    InvalidName(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
