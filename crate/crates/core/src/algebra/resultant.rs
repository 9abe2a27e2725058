use num_bigint::BigInt;
use num_traits::Zero;

use super::{det_int, AlgebraError};

/// Dense integer polynomial, coefficients from the constant term upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|c| BigInt::from(*c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `1 + t + … + t^{p-1}`.
    pub fn cyclotomic_quotient(p: usize) -> Self {
        Self::new(vec![BigInt::from(1); p])
    }
}

/// Resultant as the determinant of the Sylvester matrix (Bareiss elimination).
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt, AlgebraError> {
    let (Some(m), Some(n)) = (p.degree(), q.degree()) else {
        return Err(AlgebraError::ZeroPolynomial);
    };
    let size = m + n;
    if size == 0 {
        return Ok(BigInt::from(1));
    }
    let mut syl = vec![vec![BigInt::zero(); size]; size];
    for r in 0..n {
        for (k, c) in p.coeffs().iter().rev().enumerate() {
            syl[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in q.coeffs().iter().rev().enumerate() {
            syl[n + r][r + k] = c.clone();
        }
    }
    Ok(det_int(&syl))
}
