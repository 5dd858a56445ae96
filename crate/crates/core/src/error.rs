//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A scalar argument fell outside its admissible range.
    #[error("value {value} outside domain [{lo}, {hi}] ({what})")]
    OutOfDomain {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// Structural problem with an argument (empty series, length mismatch, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A triple-product table does not cover the degrees required by an operation.
    #[error("coefficient table too small: need max_degree >= {needed}, have {max_degree}")]
    TableTooSmall { needed: usize, max_degree: usize },

    /// Newton iteration for quadrature nodes failed to converge.
    #[error("quadrature root-finding did not converge for {degree} nodes")]
    RootFindDiverged { degree: usize },

    /// A non-finite value appeared where a finite one is required.
    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    /// The adaptive integrator drove the step size below its floor.
    #[error("step size underflow at r = {r} (h = {h:e})")]
    StepUnderflow { r: f64, h: f64 },

    /// The adaptive integrator exceeded its step budget.
    #[error("integration exceeded {max_steps} steps at r = {r}")]
    TooManySteps { r: f64, max_steps: usize },

    /// Division by a quantity that must be nonzero (eps(r), interval width, ...).
    #[error("singular configuration: {0}")]
    Singular(String),

    /// Least-squares solve failed.
    #[error("least squares solve failed: {0}")]
    LeastSquares(String),

    /// (De)serialization of a trajectory or config failed.
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
