use thiserror::Error;

use crate::distributions::FamilyId;

/// Errors raised by evaluation, inversion and sampling.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter set violates a constraint of its family.
    #[error("invalid parameters for {family}: {message}")]
    Param { family: String, message: String },

    /// The family name is not one of the registered identifiers.
    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    /// The family has no closed-form or Lambert-W quantile.
    #[error("{0} has no analytic quantile; use the numeric path")]
    NoAnalyticForm(FamilyId),

    /// Bracket expansion failed to straddle the target probability.
    #[error("no bracket straddles u = {u} after {doublings} doublings")]
    Bracket { u: f64, doublings: u32 },

    /// Numeric inversion reached floating-point resolution above the requested tolerance.
    #[error("numeric inversion stopped at residual {residual:e} above tolerance {tol:e}")]
    Convergence { residual: f64, tol: f64 },

    /// Malformed record in a reference-parameter fixture.
    #[error("fixture line {line}: {message}")]
    Fixture { line: usize, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn param(family: FamilyId, msg: impl Into<String>) -> Self {
        Error::Param {
            family: family.as_str().to_owned(),
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
