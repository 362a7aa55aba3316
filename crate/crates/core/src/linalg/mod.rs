//! Exact integer linear algebra: big-integer matrices, dense univariate
//! polynomials, determinants and characteristic polynomials.
//!
//! Nothing in here touches floating point. Every division performed by the
//! algorithms is checked for exactness and reported as an error otherwise.

mod charpoly;
mod matrix;
mod poly;
mod wide;

pub use charpoly::{char_poly, char_poly_with_limit, determinant};
pub use matrix::IntMatrix;
pub use poly::{FactoredPoly, IntPolynomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("NotSquare: matrix is {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("InexactDivision: {0}")]
    InexactDivision(String),
    #[error("InternalExactnessViolation: {0}")]
    InternalExactnessViolation(String),
    #[error("BitLimitExceeded: intermediate value needs {bits} bits, limit is {limit}")]
    BitLimitExceeded { bits: u64, limit: u64 },
    #[error("MalformedInput: {0}")]
    MalformedInput(String),
}
