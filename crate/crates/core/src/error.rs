//! Error type shared by all modules.

use std::fmt;

/// Errors from special-function evaluation, grid handling, operators and
/// the verification suites.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the operation's domain. The message names the parameter.
    Domain(String),
    /// A series or quadrature did not reach the requested tolerance.
    NonConvergent {
        what: String,
        terms: usize,
        err_estimate: f64,
    },
    /// Derivative order not supported without caller-supplied samples.
    UnsupportedOrder { order: usize, max: usize },
    /// A checkable hypothesis of an inequality theorem fails for the input.
    HypothesisViolated(String),
    /// The truncated tail of an improper integral exceeds the tolerance.
    TailTooLarge { estimate: f64, tol: f64 },
    /// Malformed grid data (CSV ingestion, spacing, lengths).
    Grid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NonConvergent {
                what,
                terms,
                err_estimate,
            } => write!(
                f,
                "{what} did not converge after {terms} terms (err estimate {err_estimate:.3e})"
            ),
            Error::UnsupportedOrder { order, max } => write!(
                f,
                "derivative order {order} unsupported without supplied samples (max {max})"
            ),
            Error::HypothesisViolated(msg) => write!(f, "hypothesis violated: {msg}"),
            Error::TailTooLarge { estimate, tol } => write!(
                f,
                "truncated tail estimate {estimate:.3e} exceeds tolerance {tol:.3e}"
            ),
            Error::Grid(msg) => write!(f, "grid error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
