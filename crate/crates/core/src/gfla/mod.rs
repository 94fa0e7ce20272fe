//! Exact dense linear algebra over `F_p` and `F_{p^k}`.

mod field;
mod io;
mod matrix;
mod packed;
pub mod poly;

pub use field::{Elem, FieldSpec, MAX_DEGREE, MAX_ORDER, MAX_PRIME};
pub use io::{parse_matrix, parse_matrix_lines, write_matrix};
pub use matrix::{axpy, CoordBasis, Echelon, GFMatrix, Rref};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("invalid field: {0}")]
    BadField(String),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Convenience: rank of a matrix.
pub fn rank(a: &GFMatrix) -> usize {
    a.rank()
}

/// Sum of the diagonal.
pub fn mat_trace(a: &GFMatrix) -> Result<Elem, GfError> {
    a.trace()
}
