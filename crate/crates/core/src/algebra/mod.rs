//! Exact arithmetic: rationals, ℚ(i), Laurent polynomials, symmetric forms and
//! resultants. Nothing in the crate uses floating point.

mod gaussian;
mod laurent;
mod matrix;
mod resultant;

use thiserror::Error;

pub use gaussian::GaussianRational;
pub use laurent::{second_derivative_at_1, t_derivative_at_minus1, Coefficient, IntLaurent, Laurent, LaurentPolynomial};
pub use matrix::{
    congruence_diagonalize, congruence_diagonalize_with, det, det_int, identity, mat_mul, pivot_counts,
    poly_matrix_det, rat, transpose, Diagonalization, PivotOrder, RatMatrix, SymmetricForm,
};
pub use resultant::{resultant, IntPoly};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("evaluation at 0 of a polynomial with negative exponents")]
    ZeroAtNegativeExponent,
    #[error("resultant of a zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
}

/// `laurent_eval` under its descriptive name.
pub fn laurent_eval<C: Coefficient>(p: &Laurent<C>, q0: &GaussianRational) -> Result<GaussianRational, AlgebraError> {
    p.eval(q0)
}
