use thiserror::Error;

/// Errors shared across the lab modules.
#[derive(Debug, Error)]
pub enum LabError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("grid/basis mismatch: {0}")]
    GridMismatch(String),

    #[error("aliasing guard violated: {0}")]
    Aliasing(String),

    #[error("under-resolved: {0}")]
    UnderResolved(String),

    #[error("out of analyticity/admissible domain: {0}")]
    OutOfDomain(String),

    #[error("Newton iteration did not converge after {iters} steps (|residual| = {residual:.3e}) at {context}")]
    NewtonDiverged {
        iters: usize,
        residual: f64,
        context: String,
    },

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

impl LabError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        LabError::InvalidArgument(msg.into())
    }
}
