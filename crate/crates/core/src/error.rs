use thiserror::Error;

use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("ambient dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },
    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("variable set must not be empty")]
    EmptyVariableSet,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}

/// State of a Buchberger run that hit one of its resource caps.
#[derive(Debug, Clone)]
pub struct LimitExceeded {
    pub reason: String,
    pub pairs_reduced: usize,
    pub partial_basis: Vec<Polynomial>,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("resource limit exceeded: {} after {} pair reductions", .0.reason, .0.pairs_reduced)]
    ResourceLimit(Box<LimitExceeded>),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceLimit(_) => 2,
            Error::Consistency(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
