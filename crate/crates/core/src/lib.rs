//! Exact verification of edge-isoperimetric inequalities on the biased cube.
//!
//! Boolean functions are dense truth tables ([`cube`]); measures, influences
//! and measure polynomials are exact rationals ([`measure`]); lexicographic
//! and limit families live in [`lex`]; inequality checkers in [`iso`]; the
//! real-valued lemma functions in [`analysis`].

pub mod analysis;
pub mod cube;
pub mod iso;
pub mod lex;
pub mod measure;
pub mod real;

/// Exact arbitrary-precision rational.
pub type Rational = num::BigRational;

pub use cube::{BooleanFunction, CubeError, Subcube, Symbol};
pub use iso::IsoError;
pub use lex::{BinaryExpansion, KUniformFamily, LexError};
pub use measure::{Bias, EdgeSet, MeasureError, MeasurePolynomial};
