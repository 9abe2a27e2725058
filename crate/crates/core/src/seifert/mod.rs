//! Seifert matrices of braid closures on the Bennequin surface, and the
//! Alexander–Conway polynomial.
//!
//! The surface is built from one disk per strand and one twisted band per
//! letter. Its first homology has one basis loop for every two consecutive
//! letters on the same generator. With these conventions the right-handed
//! trefoil `2; 1 1 1` has signature -2.

mod bennequin;
mod diagram;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{poly_matrix_det, second_derivative_at_1, IntLaurent, Rational, SymmetricForm};
use crate::links::{BraidWord, Clasp, TwistedDouble};
use crate::symforms::{inertia, Inertia};

pub use bennequin::{basis_loops, BasisLoop};
pub use diagram::{diagram_inertia, fox_alexander, goeritz, normalize_alexander, GoeritzData};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeifertError {
    #[error("Bennequin surface is disconnected: generators {missing:?} never occur")]
    DisconnectedSurface { missing: Vec<usize> },
    #[error("matrix is not square")]
    NotSquare,
    #[error("diagram is split")]
    SplitDiagram,
    #[error("diagram has {components} components, expected a knot")]
    NotAKnot { components: usize },
}

/// Integer Seifert matrix `E` with `E[a][b] = lk(a, b⁺)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    entries: Vec<Vec<BigInt>>,
}

/// `E + Eᵀ`.
pub type SymmetrizedSeifert = SymmetricForm;

impl SeifertMatrix {
    /// Panics unless `entries` is square.
    pub fn new(entries: Vec<Vec<BigInt>>) -> Self {
        Self::try_new(entries).expect("Seifert matrix must be square")
    }

    pub fn try_new(entries: Vec<Vec<BigInt>>) -> Result<Self, SeifertError> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(SeifertError::NotSquare);
        }
        Ok(Self { entries })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self, SeifertError> {
        Self::try_new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        Self { entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect()).collect() }
    }

    pub fn symmetrized(&self) -> SymmetrizedSeifert {
        let n = self.dim();
        let m = (0..n)
            .map(|i| (0..n).map(|j| Rational::from_integer(&self.entries[i][j] + &self.entries[j][i])).collect())
            .collect();
        SymmetricForm::new(m).expect("E + Eᵀ is symmetric")
    }

    /// Signature, nullity and sign of `E + Eᵀ`.
    pub fn inertia(&self) -> Inertia {
        inertia(&self.symmetrized())
    }

    /// `det(q E - q⁻¹ Eᵀ)` in `q = t^{1/2}`, without sign normalisation.
    pub fn conway_potential(&self) -> IntLaurent {
        let n = self.dim();
        // q·(q E - q⁻¹ Eᵀ) = q² E - Eᵀ
        let m: Vec<Vec<Vec<BigInt>>> = (0..n)
            .map(|i| (0..n).map(|j| vec![-&self.entries[j][i], BigInt::zero(), self.entries[i][j].clone()]).collect())
            .collect();
        poly_matrix_det(&m, "q").shift(-(n as i64))
    }
}

/// Seifert matrix of the closure of `b` on its Bennequin surface.
pub fn seifert_matrix(b: &BraidWord) -> Result<SeifertMatrix, SeifertError> {
    bennequin::seifert_matrix_with(b, &bennequin::CONVENTIONS)
}

/// Seifert matrix of `D_m K` on the genus-1 surface made of the framed
/// annulus around `K` and the clasp band. The basis is the annulus core,
/// whose self-linking is the framing `m`, and a loop through the clasp.
pub fn double_seifert_matrix(d: &TwistedDouble) -> SeifertMatrix {
    double_form(d.twists, d.clasp, &DOUBLE_RULE)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct DoubleRule {
    pub core_sign: i64,
    pub off: (i64, i64),
    /// clasp loop self-linking for a positive clasp
    pub clasp_sign: i64,
}

pub(crate) const DOUBLE_RULE: DoubleRule = DoubleRule { core_sign: 1, off: (1, 0), clasp_sign: 1 };

pub(crate) fn double_form(m: i64, clasp: Clasp, r: &DoubleRule) -> SeifertMatrix {
    let c = if clasp == Clasp::Positive { r.clasp_sign } else { -r.clasp_sign };
    SeifertMatrix::from_ints(&[vec![r.core_sign * m, r.off.0], vec![r.off.1, c]]).expect("2x2")
}

/// The Alexander–Conway polynomial in `q = t^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderConway {
    pub q_poly: IntLaurent,
    /// false when `Δ(1) = 0`, where no sign normalisation is possible
    pub normalized: bool,
}

impl AlexanderConway {
    /// `Δ` in `t`, if all `q`-exponents are even.
    pub fn in_t(&self) -> Option<IntLaurent> {
        self.q_poly.divide_exponents(2).map(|p| p.with_var("t"))
    }
}

/// `Δ(t) = ±det(q E - q⁻¹ Eᵀ)`, the sign chosen so that `Δ(1) = 1` when `Δ(1) = ±1`.
pub fn alexander_conway(e: &SeifertMatrix) -> AlexanderConway {
    let p = e.conway_potential();
    let at_one: BigInt = p.terms().map(|(_, c)| c.clone()).sum();
    if at_one.is_zero() {
        AlexanderConway { q_poly: p, normalized: false }
    } else if at_one.is_negative() {
        AlexanderConway { q_poly: p.scale(&-BigInt::one()), normalized: at_one == -BigInt::one() }
    } else {
        AlexanderConway { q_poly: p, normalized: at_one.is_one() }
    }
}

/// `Δ''(1)`, the second derivative in `t` of a polynomial in `t`.
pub fn delta_second_at_1(delta: &IntLaurent) -> Rational {
    second_derivative_at_1(delta)
}

/// `Δ''(1)` of the closure of a knot braid.
pub fn knot_delta_second(b: &BraidWord) -> Result<Rational, SeifertError> {
    let a = alexander_conway(&seifert_matrix(&b.connected_representative())?);
    Ok(delta_second_at_1(&a.in_t().expect("knots have a polynomial in t")))
}
