//! Verification campaigns over the discrete cube, emitting one JSON report
//! per run.

pub mod commands;
pub mod report;

use cube_iso::{CubeError, IsoError, LexError, MeasureError};
use thiserror::Error;

pub use commands::Scope;
pub use report::Report;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("scope too large: {what} at n = {n} exceeds the limit {limit}")]
    ScopeTooLarge { what: String, n: usize, limit: usize },
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
