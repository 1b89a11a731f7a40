//! Isoperimetric checkers: the weak biased inequality and its excess,
//! nearest-subcube stability, the full edge and monotone limit-family
//! inequalities, monotonization, and the sharpness families.

pub mod deficit;
pub mod full;
pub mod sharpness;
pub mod stability;

use thiserror::Error;

use crate::cube::CubeError;
use crate::lex::LexError;
use crate::measure::MeasureError;

pub use deficit::{
    coordinate_dichotomy, required_constant, restriction_stats, weak_biased_check, Branch,
    CoordinateCase, DeficitReport, DichotomyReport, Regime, RestrictionStats,
};
pub use full::{
    brute_force_min_boundary, full_iso_check, lex_measure_domination_check, monotone_full_check,
    monotonize, monotonize_step, FullIsoOutcome, MonotoneFullOutcome,
};
pub use sharpness::{family_a, family_b};
pub use stability::{nearest_subcube, stability_ratio, StabilityRecord, SubcubeSearch};

/// Slack below `-DEFAULT_TOL` counts as a violation.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IsoError {
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error("function is not monotone increasing")]
    NotMonotone,
    #[error("function has measure zero")]
    ZeroMeasure,
    #[error("need 0 < q < p < 1, got p = {p}, q = {q}")]
    ParameterOrder { p: String, q: String },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("eps' = {0} is not below 1; the stability bound is vacuous")]
    VacuousBound(f64),
    #[error("exhaustive search at n = {n} exceeds the limit n <= {limit}")]
    GuardExceeded { n: usize, limit: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}
