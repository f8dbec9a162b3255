use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("point ({x}, {y}) is at distance {distance:e} from the jump interface")]
    PointNotOnInterface { x: f64, y: f64, distance: f64 },

    #[error("no root: {0}")]
    NoRoot(String),

    #[error("convergence failure after {iterations} iterations: {message}")]
    ConvergenceFailure { iterations: u32, message: String },

    #[error("invalid candidate: {0}")]
    InvalidSpec(String),

    #[error("quadrature failed to reach tolerance {tolerance:e} (estimate {estimate:e})")]
    QuadratureFailure { tolerance: f64, estimate: f64 },

    #[error("at least {required} curve points are required, got {got}")]
    InsufficientPoints { required: usize, got: usize },

    #[error("grid point ({x}, {y}) hits a density singularity")]
    SingularPointInWindow { x: f64, y: f64 },

    #[error("invalid corner sample: {0}")]
    InvalidCorner(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn convergence(iterations: u32, msg: impl Into<String>) -> Self {
        Error::ConvergenceFailure {
            iterations,
            message: msg.into(),
        }
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ConvergenceFailure { .. } | Error::QuadratureFailure { .. } => 3,
            _ => 2,
        }
    }
}
