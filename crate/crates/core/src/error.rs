use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    /// An index (degree, zero number, ...) is out of range.
    #[error("index out of range in {func}: {detail}")]
    Index { func: &'static str, detail: String },

    /// An iterative procedure failed to converge.
    #[error("no convergence in {func}: {detail}")]
    Convergence { func: &'static str, detail: String },

    /// A series hit its term budget before reaching the requested tolerance.
    #[error("tolerance {tol:e} not reached after {terms} terms (last term {last:e})")]
    ToleranceNotReached { tol: f64, terms: usize, last: f64 },

    /// Stieltjes produced a non-positive recurrence coefficient.
    #[error(
        "recurrence coefficient b[{k}] = {value:e} is not positive; raise the quadrature size"
    )]
    NonPositiveRecurrence { k: usize, value: f64 },

    /// Invalid weight or configuration.
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        func,
        detail: detail.into(),
    }
}

pub(crate) fn index(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Index {
        func,
        detail: detail.into(),
    }
}
