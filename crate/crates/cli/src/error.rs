use std::path::PathBuf;

/// Exit status for a run whose residuals all pass.
pub const EXIT_OK: i32 = 0;
/// Exit status when at least one criterion fails.
pub const EXIT_RESIDUAL: i32 = 1;
/// Exit status for bad flags, failed preconditions and I/O problems.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Geometry(#[from] ccgeom::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),
    #[error("malformed input JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}
