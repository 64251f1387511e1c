//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "angular frequency {omega:.6e} rad/s outside the model validity window \
         [{lo:.6e}, {hi:.6e}] rad/s ({lo_nm:.1}-{hi_nm:.1} nm)"
    )]
    OutOfWindow {
        omega: f64,
        lo: f64,
        hi: f64,
        lo_nm: f64,
        hi_nm: f64,
    },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error(
        "frequency grids do not match: {left_ns}x{left_ni} vs {right_ns}x{right_ni} \
         (or differing axes)"
    )]
    GridMismatch {
        left_ns: usize,
        left_ni: usize,
        right_ns: usize,
        right_ni: usize,
    },

    #[error("estimator undefined: {0}")]
    UndefinedEstimator(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("malformed file {path}: {reason}")]
    Format { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
