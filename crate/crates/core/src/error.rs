use thiserror::Error;

use crate::fincat::{BuildError, CongruenceError, LawViolation};

/// Malformed input, reported with the position of the offending entry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{location}: {message}")]
pub struct InputError {
    pub location: String,
    pub message: String,
}

impl InputError {
    pub fn new(location: impl Into<String>, message: impl Into<String>) -> Self {
        InputError { location: location.into(), message: message.into() }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("not a category: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    NotACategory(Vec<LawViolation>),
    #[error("size guard: {what} needs a base with at most {limit} morphisms, got {size}")]
    SizeGuard { what: &'static str, size: usize, limit: usize },
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
    #[error("factorisation system violated: {0}")]
    FsViolation(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
