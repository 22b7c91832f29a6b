//! Error type shared by all engine modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a Laurent polynomial: {0}")]
    NotLaurent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("braid convention mismatch: {0}")]
    ConventionMismatch(String),
    #[error("gram mismatch: {0}")]
    GramMismatch(String),
    #[error("element not in the PBW subalgebra: {0}")]
    NotInSubalgebra(String),
    #[error("bar matrix not triangular: {0}")]
    NotTriangular(String),
    #[error("no canonical solution: {0}")]
    NoSolution(String),
    #[error("elements do not q-commute: {0}")]
    NotQCommuting(String),
    #[error("minor hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("seed incompatible: {0}")]
    SeedIncompatible(String),
    #[error("division failed: {0}")]
    DivisionFailed(String),
    #[error("non-Laurent cluster variable: {0}")]
    NonLaurent(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
}

impl Error {
    /// True for errors that signal a failed internal certification.
    pub fn is_certification(&self) -> bool {
        !matches!(
            self,
            Error::Parse(_) | Error::InvalidInput(_) | Error::ResourceBound(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
