use thiserror::Error;

/// Errors raised by constructors and operations of this crate.
///
/// Failing a mathematical check is never an error: checks return a
/// [`VerificationReport`](crate::report::VerificationReport). Errors are
/// reserved for inputs that cannot be interpreted at all.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: String,
        found: String,
    },
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("ill-typed 2-cell expression: {0}")]
    IllTyped(String),
    #[error("invalid rational {0:?}")]
    ParseRational(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("structure is not strict: l3 is nonzero")]
    NotStrict,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("field `{field}`: {message}")]
    Json { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_mismatch(context: impl Into<String>, expected: impl ToString, found: impl ToString) -> Error {
    Error::DimensionMismatch {
        context: context.into(),
        expected: expected.to_string(),
        found: found.to_string(),
    }
}
