use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("degree order violated: deg P = {p} < deg Q = {q}")]
    DegreeOrder { p: usize, q: usize },

    #[error("expected degree {expected}, got {actual}")]
    DegreeMismatch { expected: String, actual: usize },

    #[error("polynomial has no multiple root")]
    NoMultipleRoot,

    #[error("unsupported multiplicity pattern in degree {degree}: {shape}")]
    UnsupportedPattern { degree: usize, shape: String },

    #[error("sign list contains a zero entry at index {0}")]
    ZeroEntry(usize),

    #[error("discriminant vanishes identically: polynomial is not squarefree in y")]
    ZeroDiscriminant,

    #[error("all y-derivatives vanish at the point")]
    DegenerateDirection,

    #[error("ambiguous half-branch assignment on fiber {fiber}: {reason}")]
    AmbiguousAssignment { fiber: usize, reason: String },

    #[error("shear retries exhausted after {attempts} attempts; last failure: {last}")]
    RetriesExhausted { attempts: usize, last: String },

    #[error("not an ellipsoid: {0}")]
    NotAnEllipsoid(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "Parse",
            Error::NotSquarefree => "NotSquarefree",
            Error::DegreeOrder { .. } => "DegreeOrder",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::NoMultipleRoot => "NoMultipleRoot",
            Error::UnsupportedPattern { .. } => "UnsupportedPattern",
            Error::ZeroEntry(_) => "ZeroEntry",
            Error::ZeroDiscriminant => "ZeroDiscriminant",
            Error::DegenerateDirection => "DegenerateDirection",
            Error::AmbiguousAssignment { .. } => "AmbiguousAssignment",
            Error::RetriesExhausted { .. } => "RetriesExhausted",
            Error::NotAnEllipsoid(_) => "NotAnEllipsoid",
            Error::Invalid(_) => "Invalid",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
