use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    MalformedDocument(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("incomplete table: missing entry for ({0}, {1})")]
    IncompleteTable(String, String),

    #[error("duplicate entry for ({0}, {1})")]
    DuplicateEntry(String, String),

    #[error("`{0}` is not a permutation of the carrier")]
    NotAPermutation(String),

    #[error("prerequisite failed: {0}")]
    PrerequisiteFailed(String),

    #[error("degree {degree} exceeds truncation bound {max}")]
    DegreeExceeded { degree: usize, max: usize },

    #[error("state budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("ground actions are not regular: {0}")]
    NotRegular(String),

    #[error("carriers overlap on label `{0}`")]
    CarrierOverlap(String),

    #[error("axiom violation: {0}")]
    AxiomViolation(String),

    #[error("search budget exceeded after {0} nodes")]
    SearchBudgetExceeded(u64),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
