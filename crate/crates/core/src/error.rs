use thiserror::Error;

use crate::clover::CloverError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial is not accepted here")]
    ZeroPolynomial,

    #[error("degree span {span} exceeds the factorization limit {limit}")]
    DegreeLimit { span: usize, limit: usize },

    #[error("factor recombination exceeded its budget of {budget} candidate subsets")]
    RecombinationBudget { budget: usize },

    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid torus knot parameters ({p}, {q}): need coprime |p|, |q| >= 2")]
    InvalidTorus { p: i64, q: i64 },

    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifert(String),

    #[error("invalid Alexander polynomial {poly}: {reason}")]
    InvalidAlexander { poly: String, reason: String },

    #[error("invalid wheel: {0}")]
    InvalidWheel(String),

    #[error("invalid family index: {0}")]
    InvalidFamily(String),

    #[error("invalid search bounds: {0}")]
    InvalidBounds(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("witness search space of {candidates} candidates exceeds the limit {limit}")]
    SearchOverflow { candidates: usize, limit: usize },

    #[error(transparent)]
    Clover(#[from] CloverError),
}

impl Error {
    /// Resource errors signal exhausted budgets, as opposed to bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::DegreeLimit { .. } | Error::RecombinationBudget { .. } | Error::SearchOverflow { .. }
        )
    }
}
