use thiserror::Error;

use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("language mismatch: {0}")]
    Language(String),

    #[error("unknown axiom set `{0}` (expected mipc, ms4 or grz)")]
    UnknownCorpus(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invalid frame:\n{0}")]
    InvalidFrame(ValidationReport),

    #[error("invalid algebra:\n{0}")]
    InvalidAlgebra(ValidationReport),

    #[error("{0} is not a Q-upset")]
    NotQUpset(String),

    #[error("not a monadic filter: {0}")]
    NotMonadicFilter(String),

    #[error("map is not a valid morphism:\n{0}")]
    InvalidMorphism(ValidationReport),

    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    #[error("unassigned variable `{0}`")]
    UnassignedVariable(String),

    #[error("formula has {found} variables, above the limit of {limit}")]
    TooManyVariables { found: usize, limit: usize },

    #[error("algebra is not subdirectly irreducible")]
    NotSubdirectlyIrreducible,

    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
