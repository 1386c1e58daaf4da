//! Exact linear algebra over GF(p) and over the integers.
//!
//! [`FpMatrix`] covers ranks, kernels, inverses and solving; [`IntMatrix`]
//! holds unimodular integer matrices. The bridge between the two is
//! [`lift_sl`], which factors a determinant-one matrix over GF(p) into
//! transvections and multiplies their integer lifts.

mod field;
mod fpmatrix;
mod intmatrix;
mod sl;

pub use field::{is_prime, Prime};
pub use fpmatrix::{FpMatrix, FpVector, Rref};
pub use intmatrix::IntMatrix;
pub use sl::{factor_sl_transvections, lift_sl, multiply_transvections, Transvection};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("determinant is {det}, expected 1")]
    NotSL { det: u32 },
    #[error("integer matrix is not unimodular")]
    NotUnimodular,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("cannot multiply {left:?} by {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("entry ({row},{col}) outside a {rows}x{cols} matrix")]
    IndexOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
}

/// Exact inverse of an integer matrix with determinant +1 or -1.
pub fn int_inverse_unimodular(m: &IntMatrix) -> Result<IntMatrix, LinAlgError> {
    m.inverse_unimodular()
}
