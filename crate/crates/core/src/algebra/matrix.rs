use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, IntLaurent, Laurent, Rational};

/// Dense square matrix of exact rationals, row-major.
pub type RatMatrix = Vec<Vec<Rational>>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn identity(n: usize) -> RatMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

pub fn transpose(m: &RatMatrix) -> RatMatrix {
    let n = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| (0..n).map(|i| m[i][j].clone()).collect()).collect()
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

/// Symmetric matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricForm {
    entries: RatMatrix,
}

impl SymmetricForm {
    pub fn new(entries: RatMatrix) -> Result<Self, AlgebraError> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::NotSquare);
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(AlgebraError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        Self::new(rows.iter().map(|r| r.iter().map(|x| rat(*x)).collect()).collect())
    }

    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn zero(n: usize) -> Self {
        Self { entries: vec![vec![Rational::zero(); n]; n] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &RatMatrix {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    /// `P S Pᵀ`.
    pub fn congruent(&self, p: &RatMatrix) -> Self {
        let m = mat_mul(&mat_mul(p, &self.entries), &transpose(p));
        Self { entries: m }
    }

    /// Principal submatrix on `keep` (in the given order).
    pub fn principal(&self, keep: &[usize]) -> Self {
        Self { entries: keep.iter().map(|&i| keep.iter().map(|&j| self.entries[i][j].clone()).collect()).collect() }
    }

    pub fn det(&self) -> Rational {
        det(&self.entries)
    }
}

/// Determinant by Gaussian elimination over ℚ; the empty matrix has determinant 1.
pub fn det(m: &RatMatrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut d = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            d = -d;
        }
        let piv = a[k][k].clone();
        d *= &piv;
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &piv;
            for c in k..n {
                let v = &f * &a[k][c];
                a[r][c] -= v;
            }
        }
    }
    d
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_int(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Pivot selection used by [`congruence_diagonalize_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    /// First nonzero diagonal entry at or after the current step.
    Leading,
    /// Last nonzero diagonal entry (reverse scan), with the hyperbolic device
    /// applied to the last nonzero off-diagonal entry.
    Trailing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagonalization {
    /// Diagonal of `transform · S · transformᵀ`, zeros included.
    pub pivots: Vec<Rational>,
    /// Nonsingular matrix `P` with `P S Pᵀ = diag(pivots)`.
    pub transform: RatMatrix,
}

pub fn congruence_diagonalize(s: &SymmetricForm) -> Diagonalization {
    congruence_diagonalize_with(s, PivotOrder::Leading)
}

/// Symmetric Gaussian elimination `S → P S Pᵀ` down to a diagonal matrix.
///
/// When every remaining diagonal entry is zero but some `(i, j)` entry is not,
/// row/column `j` is added to row/column `i`, which puts `2·s_ij` on the diagonal.
pub fn congruence_diagonalize_with(s: &SymmetricForm, order: PivotOrder) -> Diagonalization {
    let n = s.dim();
    let mut a = s.entries.clone();
    let mut p = identity(n);

    fn add_row_col(a: &mut RatMatrix, p: &mut RatMatrix, dst: usize, src: usize, f: &Rational) {
        // row/col dst += f * row/col src
        let n = a.len();
        for c in 0..n {
            let v = f * &a[src][c];
            a[dst][c] += v;
        }
        for r in 0..n {
            let v = f * &a[r][src];
            a[r][dst] += v;
        }
        for c in 0..n {
            let v = f * &p[src][c];
            p[dst][c] += v;
        }
    }

    fn swap(a: &mut RatMatrix, p: &mut RatMatrix, i: usize, j: usize) {
        if i == j {
            return;
        }
        a.swap(i, j);
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        p.swap(i, j);
    }

    for k in 0..n {
        let rest: Vec<usize> = match order {
            PivotOrder::Leading => (k..n).collect(),
            PivotOrder::Trailing => (k..n).rev().collect(),
        };
        let diag = rest.iter().copied().find(|&i| !a[i][i].is_zero());
        let pivot = match diag {
            Some(i) => i,
            None => {
                let off = rest.iter().flat_map(|&i| rest.iter().map(move |&j| (i, j))).find(|&(i, j)| i != j && !a[i][j].is_zero());
                let Some((i, j)) = off else {
                    break;
                };
                add_row_col(&mut a, &mut p, i, j, &Rational::one());
                i
            }
        };
        swap(&mut a, &mut p, k, pivot);
        let piv = a[k][k].clone();
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = -(&a[r][k] / &piv);
            add_row_col(&mut a, &mut p, r, k, &f);
        }
    }
    Diagonalization { pivots: (0..n).map(|i| a[i][i].clone()).collect(), transform: p }
}

/// Determinant of a square matrix of integer polynomials, each given by its
/// coefficient list `[c0, c1, ...]` in an auxiliary variable `x`, evaluated at
/// `deg + 1` integer points and recovered by Lagrange interpolation.
pub fn poly_matrix_det(m: &[Vec<Vec<BigInt>>], var: &'static str) -> IntLaurent {
    let n = m.len();
    let max_deg = m.iter().flatten().map(|p| p.len().saturating_sub(1)).max().unwrap_or(0);
    let bound = n * max_deg;
    let xs: Vec<i64> = (0..=bound as i64).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|&x| {
            let xb = BigInt::from(x);
            let num: Vec<Vec<BigInt>> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|p| p.iter().rev().fold(BigInt::zero(), |acc, c| acc * &xb + c))
                        .collect()
                })
                .collect();
            det_int(&num)
        })
        .collect();
    let coeffs = interpolate(&xs, &ys);
    Laurent::from_terms(
        var,
        coeffs.into_iter().enumerate().map(|(e, c)| {
            assert!(c.is_integer(), "interpolated determinant must have integer coefficients");
            (e as i64, c.to_integer())
        }),
    )
}

/// Coefficients (low to high) of the unique polynomial through the points.
fn interpolate(xs: &[i64], ys: &[BigInt]) -> Vec<Rational> {
    let n = xs.len();
    let mut out = vec![Rational::zero(); n];
    for i in 0..n {
        if ys[i].is_zero() {
            continue;
        }
        // basis numerator ∏_{j≠i} (x - x_j)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            let xj = rat(xs[j]);
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xj;
            }
            basis = next;
            denom *= rat(xs[i] - xs[j]);
        }
        let scale = Rational::from_integer(ys[i].clone()) / denom;
        for (k, c) in basis.iter().enumerate() {
            out[k] += c * &scale;
        }
    }
    out
}

/// `(#positive, #negative, #zero)` of a pivot list.
pub fn pivot_counts(pivots: &[Rational]) -> (usize, usize, usize) {
    let pos = pivots.iter().filter(|p| p.is_positive()).count();
    let neg = pivots.iter().filter(|p| p.is_negative()).count();
    (pos, neg, pivots.len() - pos - neg)
}
