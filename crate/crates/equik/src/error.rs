//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("not an element of the group: {0}")]
    NotAnElement(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("parent group mismatch")]
    ParentMismatch,
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("dependent basis vectors")]
    DependentBasis,
    #[error("invalid flag combination: {0}")]
    InvalidFlags(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    /// The stacked linear system has no rational solution at all.
    #[error("inconsistent system: no rational solution")]
    InconsistentSystem,
    /// A rational solution exists but has a negative or non-integral entry.
    #[error("solution exists but is not a vector of natural numbers")]
    NonNaturalSolution,
    /// The coefficient columns fail to be linearly independent.
    #[error("rank deficient: columns are not linearly independent")]
    RankDeficient,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command line tool: solver failures are
    /// distinguished from input validation failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InconsistentSystem | Error::NonNaturalSolution | Error::RankDeficient => 2,
            _ => 3,
        }
    }
}
