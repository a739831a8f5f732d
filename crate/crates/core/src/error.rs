use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(i128),
    #[error("form is not positive definite: {0}")]
    NotPositiveDefinite(String),
    #[error("form is not primitive: {0}")]
    NotPrimitive(String),
    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(i128, i128),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search exhausted at bound {bound}: {what}")]
    SearchExhausted { what: String, bound: i128 },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn pre(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
