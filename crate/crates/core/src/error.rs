use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("infinite-dimensional algebra: {0}")]
    InfiniteDimensional(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("malformed quiver: {0}")]
    MalformedQuiver(String),
    #[error("empty corner: the idempotent selects no vertices")]
    EmptyCorner,
    #[error("zero algebra: the idempotent ideal is the whole algebra")]
    ZeroAlgebra,
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("zero module has no projective cover")]
    ZeroModule,
    #[error("not a split basic algebra: {0}")]
    NotSplitBasic(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("budget exceeded: {what} needs more than {budget} work units")]
    BudgetExceeded { what: String, budget: u64 },
    #[error("enumeration unsupported over an infinite field")]
    EnumerationUnsupported,
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
    #[error("missing cover for simple {0}")]
    MissingCover(String),
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("field modulus {0} is not a supported prime")]
    NonPrimeField(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
