//! The Casson–Walker–Lescop invariant of the double branched cover,
//! `λ₂ = λ(Σ²_L)`, from
//!
//! `i^{σ+ν} λ₂ = α + γ` with `α = J'(-1)/6` and `γ = J(-1) σ / 4`,
//!
//! together with the checks that surround it: the order of `H₁(Σ²)`,
//! vanishing at nullity four, p-fold cover homology orders and the affine
//! dependence on `Δ''(1)` along twisted doubles.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{resultant, GaussianRational, IntLaurent, IntPoly, Rational};
use crate::jones::{alpha, jones, jones_at_minus1, jones_sliced, JonesError, JonesJ};
use crate::links::{twisted_double, BraidWord, Clasp, LinkError, TwistedDouble};
use crate::report::{Check, Report};
use crate::seifert::{diagram_inertia, double_seifert_matrix, knot_delta_second, seifert_matrix, SeifertError};
use crate::symforms::Inertia;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("lambda for the double cover is not real: {0}")]
    NonRealLambda(String),
    #[error("need two companions with distinct second Alexander derivatives")]
    DegenerateFit,
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Jones(#[from] JonesError),
    #[error(transparent)]
    Link(#[from] LinkError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverInvariants {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub alpha: GaussianRational,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub gamma: GaussianRational,
    pub sigma: i64,
    pub nu: usize,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub lambda2: Rational,
    /// `J(-1)`
    #[serde(serialize_with = "crate::report::ser_display")]
    pub j_at_minus1: GaussianRational,
}

/// Invariants from a Jones polynomial and the link's signature and nullity.
pub fn cover_invariants_from(j: &JonesJ, inv: &Inertia) -> Result<CoverInvariants, CoverError> {
    let (value, _) = jones_at_minus1(j);
    let a = alpha(j);
    let g = value.scale(&Rational::new(inv.signature.into(), 4.into()));
    let twist = GaussianRational::i_pow(-(inv.signature + inv.nullity as i64));
    let l = &twist * &(&a + &g);
    if !l.is_real() {
        return Err(CoverError::NonRealLambda(l.to_string()));
    }
    Ok(CoverInvariants { alpha: a, gamma: g, sigma: inv.signature, nu: inv.nullity, lambda2: l.re, j_at_minus1: value })
}

/// Requires a connected Bennequin surface; see [`BraidWord::connected_representative`].
pub fn cover_invariants(b: &BraidWord) -> Result<CoverInvariants, CoverError> {
    let inv = seifert_matrix(b)?.inertia();
    cover_invariants_from(&jones(b)?, &inv)
}

/// For a twisted double, with the genus-1 Seifert form.
pub fn double_cover_invariants(d: &TwistedDouble) -> Result<CoverInvariants, CoverError> {
    let inv = double_seifert_matrix(d).inertia();
    cover_invariants_from(&jones_sliced(&d.diagram, 1)?, &inv)
}

/// `i^{-σ-2ν} J(-1)` is a non-negative integer equal to `|det(E + Eᵀ)|`.
pub fn verify_h1(b: &BraidWord) -> Result<Report, CoverError> {
    let e = seifert_matrix(b)?;
    let inv = e.inertia();
    let det = e.symmetrized().det().abs();
    let (value, _) = jones_at_minus1(&jones(b)?);
    Ok(h1_report(&value, &inv, &det))
}

pub(crate) fn h1_report(value: &GaussianRational, inv: &Inertia, det: &Rational) -> Report {
    let twisted = &GaussianRational::i_pow(-(inv.signature + 2 * inv.nullity as i64)) * value;
    let mut r = Report::new();
    let nat = twisted.as_natural();
    r.push(Check::expect("i^(-sigma-2nu) J(-1) is a natural number", nat.is_some(), || twisted.to_string()));
    r.push(Check::expect(
        "i^(-sigma-2nu) J(-1) = |det(E + E^T)|",
        nat.as_ref().is_some_and(|n| Rational::from_integer(n.clone()) == *det),
        || format!("{} vs {}", twisted, det),
    ));
    r
}

/// When `ν ≥ 4`, `J(-1) = J'(-1) = 0`. Otherwise a single passing
/// not-applicable entry.
pub fn verify_corollary1(b: &BraidWord) -> Result<Report, CoverError> {
    let inv = seifert_matrix(b)?.inertia();
    let (value, deriv) = jones_at_minus1(&jones(b)?);
    let mut r = Report::new();
    if inv.nullity < 4 {
        r.push(Check::pass(format!("nullity {} < 4: not applicable", inv.nullity)));
    } else {
        r.push(Check::expect("J(-1) = 0 at nullity >= 4", value.is_zero(), || value.to_string()));
        r.push(Check::expect("J'(-1) = 0 at nullity >= 4", deriv.is_zero(), || deriv.to_string()));
    }
    Ok(r)
}

/// Order of `H₁` of a p-fold cyclic branched cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum H1Order {
    Finite(#[serde(serialize_with = "crate::report::ser_display")] BigInt),
    Infinite,
}

impl std::fmt::Display for H1Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            H1Order::Finite(n) => write!(f, "{}", n),
            H1Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// `|∏_{j=1}^{p-1} Δ(ζ_p^j)|` as `|Res(t^k Δ, 1 + t + … + t^{p-1})|`.
pub fn h1_order_pfold(delta: &IntLaurent, p: usize) -> H1Order {
    assert!(p >= 2, "covers of order at least 2");
    let lo = delta.min_exp().unwrap_or(0);
    let hi = delta.max_exp().unwrap_or(0);
    let coeffs: Vec<BigInt> = (lo..=hi).map(|e| delta.coeff(e)).collect();
    let res = resultant(&IntPoly::new(coeffs), &IntPoly::cyclotomic_quotient(p)).expect("nonzero polynomials");
    if res.is_zero() { H1Order::Infinite } else { H1Order::Finite(res.abs()) }
}

/// Companion data and the double's `λ₂` for one point of the affine fit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffinePoint {
    pub companion: String,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub delta_second: Rational,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub lambda2: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineFit {
    pub m: i64,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub a: Rational,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub b: Rational,
    pub points: Vec<AffinePoint>,
    pub report: Report,
}

/// `λ₂(D_m K) = a·Δ''_K(1) + b`: fit from the first two companions with
/// distinct `Δ''(1)`, then check every other companion exactly.
pub fn verify_affine_law(m: i64, knots: &[BraidWord], clasp: Clasp) -> Result<AffineFit, CoverError> {
    let mut points = Vec::with_capacity(knots.len());
    for k in knots {
        let x = knot_delta_second(k)?;
        let d = twisted_double(k, m, clasp)?;
        let y = double_cover_invariants(&d)?.lambda2;
        points.push(AffinePoint { companion: k.to_string(), delta_second: x, lambda2: y });
    }
    fit_affine(m, points)
}

pub fn fit_affine(m: i64, points: Vec<AffinePoint>) -> Result<AffineFit, CoverError> {
    let first = points.first().ok_or(CoverError::DegenerateFit)?;
    let second = points.iter().find(|p| p.delta_second != first.delta_second).ok_or(CoverError::DegenerateFit)?;
    let a = (&second.lambda2 - &first.lambda2) / (&second.delta_second - &first.delta_second);
    let b = &first.lambda2 - &a * &first.delta_second;
    let mut report = Report::new();
    for p in &points {
        let predicted = &a * &p.delta_second + &b;
        report.push(Check::expect(format!("affine law m = {} for {}", m, p.companion), predicted == p.lambda2, || {
            format!("residual {}", &p.lambda2 - &predicted)
        }));
    }
    Ok(AffineFit { m, a, b, points, report })
}

/// Cross-check of the diagram signature against the genus-1 form of a double.
pub fn verify_double_form(d: &TwistedDouble) -> Result<Report, CoverError> {
    let from_form = double_seifert_matrix(d).inertia();
    let from_diagram = diagram_inertia(&d.diagram.to_planar())?;
    let mut r = Report::new();
    r.push(Check::expect(
        "double: genus-1 form and diagram agree on (sigma, nu)",
        (from_form.signature, from_form.nullity) == (from_diagram.signature, from_diagram.nullity),
        || format!("{:?} vs {:?}", from_form, from_diagram),
    ));
    Ok(r)
}
