//! Kauffman bracket, the Jones polynomial `V`, and the normalisation
//! `J_L(t) = (-1)^{|L|-1} V_L(t⁻¹)` with `J_L(1) = 2^{|L|-1}`.
//!
//! All polynomials in this module are in `q = t^{1/2}`, so links with an
//! even number of components have odd `q`-exponents. Evaluation at
//! `t = -1` uses `q = i`.

mod naive;
mod sweep;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{t_derivative_at_minus1, GaussianRational, IntLaurent, Laurent};
use crate::links::{BraidWord, SkeinTriple, SlicedDiagram};
use crate::report::{Check, Report};

pub use naive::{bracket_naive, NAIVE_LIMIT};
pub use sweep::bracket_sweep;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JonesError {
    #[error("{crossings} crossings exceeds the naive evaluator limit of {limit}")]
    TooLarge { crossings: usize, limit: usize },
    #[error("J(1) = {got}, expected 2^(|L|-1) = {want}")]
    Normalization { got: String, want: String },
    #[error("bracket has an exponent incompatible with the writhe")]
    OddExponent,
}

/// Kauffman bracket in the variable `A`.
pub type BracketPolynomial = IntLaurent;

/// `J_L` as a Laurent polynomial in `q = t^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JonesJ {
    pub poly: IntLaurent,
    pub components: usize,
}

/// `V_L` from the bracket: `(-A³)^{-w} ⟨L⟩` read in `s = t^{1/2}` via `A = s^{-1/2}`.
pub fn v_from_bracket(bracket: &BracketPolynomial, writhe: i64) -> Result<IntLaurent, JonesError> {
    let sign = if writhe.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
    let normalized = bracket.shift(-3 * writhe).scale(&sign);
    let v = normalized.divide_exponents(2).ok_or(JonesError::OddExponent)?;
    Ok(v.scale_exponents(-1).with_var("q"))
}

/// `J_L(q) = (-1)^{|L|-1} V_L(q⁻¹)`, checking `J_L(1) = 2^{|L|-1}`.
pub fn j_from_v(v: &IntLaurent, components: usize) -> Result<JonesJ, JonesError> {
    let sign = if components % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let poly = v.scale_exponents(-1).scale(&sign).with_var("q");
    let at_one: BigInt = poly.terms().map(|(_, c)| c.clone()).fold(BigInt::zero(), |a, c| a + c);
    let want = BigInt::one() << (components - 1);
    if at_one != want {
        return Err(JonesError::Normalization { got: at_one.to_string(), want: want.to_string() });
    }
    Ok(JonesJ { poly, components })
}

/// `V_L` in `q = t^{1/2}` for a sliced diagram.
pub fn jones_v_sliced(d: &SlicedDiagram) -> Result<IntLaurent, JonesError> {
    v_from_bracket(&bracket_sweep(d), d.writhe())
}

pub fn jones_sliced(d: &SlicedDiagram, components: usize) -> Result<JonesJ, JonesError> {
    j_from_v(&jones_v_sliced(d)?, components)
}

/// `J_L` of a braid closure, via the planar-matching sweep.
pub fn jones(b: &BraidWord) -> Result<JonesJ, JonesError> {
    jones_sliced(&b.closure_sliced(), b.components())
}

/// `V_L` of a braid closure.
pub fn jones_v(b: &BraidWord) -> Result<IntLaurent, JonesError> {
    jones_v_sliced(&b.closure_sliced())
}

/// `(J(-1), J'(-1))`, the derivative taken in `t`.
pub fn jones_at_minus1(j: &JonesJ) -> (GaussianRational, GaussianRational) {
    let value = j.poly.eval(&GaussianRational::i()).expect("i is invertible");
    (value, t_derivative_at_minus1(&j.poly))
}

/// `α(L) = J'_L(-1) / 6`.
pub fn alpha(j: &JonesJ) -> GaussianRational {
    let (_, d) = jones_at_minus1(j);
    d.scale(&crate::algebra::Rational::new(1.into(), 6.into()))
}

/// Checks `t J₊ - t⁻¹ J₋ = (t^{1/2} - t^{-1/2}) J₀` as polynomials and the
/// derived relation `α₊ - α₋ = -2i α₀ + J₊(-1)/6 + J₋(-1)/6`.
pub fn verify_skein(t: &SkeinTriple) -> Result<Report, JonesError> {
    let (jp, jm, j0) = (jones(&t.plus)?, jones(&t.minus)?, jones(&t.zero)?);
    Ok(verify_skein_values(&jp, &jm, &j0))
}

pub fn verify_skein_values(jp: &JonesJ, jm: &JonesJ, j0: &JonesJ) -> Report {
    let mut r = Report::new();
    let lhs = &jp.poly.shift(2) - &jm.poly.shift(-2);
    let factor: IntLaurent = Laurent::from_terms("q", [(1, BigInt::one()), (-1, -BigInt::one())]);
    let rhs = &factor * &j0.poly;
    r.push(Check::expect("jones skein relation", lhs == rhs, || format!("lhs {} != rhs {}", lhs, rhs)));

    let (vp, _) = jones_at_minus1(jp);
    let (vm, _) = jones_at_minus1(jm);
    let sixth = crate::algebra::Rational::new(1.into(), 6.into());
    let two_i = GaussianRational::new(Default::default(), crate::algebra::rat(2));
    let lhs = &alpha(jp) - &alpha(jm);
    let rhs = &(&(-&two_i) * &alpha(j0)) + &(&vp.scale(&sixth) + &vm.scale(&sixth));
    r.push(Check::expect("alpha skein relation at t = -1", lhs == rhs, || format!("lhs {} != rhs {}", lhs, rhs)));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::{braid_closure, skein_triple, CrossingSite};

    fn q(terms: &[(i64, i64)]) -> IntLaurent {
        Laurent::from_terms("q", terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    fn b(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(crate::algebra::rat(re), crate::algebra::rat(im))
    }

    #[test]
    fn jones_examples() {
        assert_eq!(jones(&b("1;")).unwrap().poly, q(&[(0, 1)]));
        assert_eq!(jones(&b("2;")).unwrap().poly, q(&[(1, 1), (-1, 1)]));
        // right-handed trefoil: V = t + t^3 - t^4
        assert_eq!(jones_v(&b("2; 1 1 1")).unwrap(), q(&[(2, 1), (6, 1), (8, -1)]));
        assert_eq!(jones(&b("2; 1 1 1")).unwrap().poly, q(&[(-2, 1), (-6, 1), (-8, -1)]));
        // figure-eight: V = t^2 - t + 1 - t^-1 + t^-2
        assert_eq!(jones_v(&b("3; 1 -2 1 -2")).unwrap(), q(&[(4, 1), (2, -1), (0, 1), (-2, -1), (-4, 1)]));
    }

    #[test]
    fn values_at_minus_one() {
        assert_eq!(jones_at_minus1(&jones(&b("1;")).unwrap()), (gi(1, 0), gi(0, 0)));
        assert_eq!(jones_at_minus1(&jones(&b("2;")).unwrap()), (gi(0, 0), gi(0, -1)));
        let (v, _) = jones_at_minus1(&jones(&b("2; 1 1 1")).unwrap());
        assert_eq!(v.norm(), crate::algebra::rat(9));
    }

    #[test]
    fn trefoil_skein_triple() {
        let t = skein_triple(&b("2; 1 1 1"), CrossingSite(0)).unwrap();
        assert!(verify_skein(&t).unwrap().all_passed());
    }

    #[test]
    fn evaluators_agree_on_small_braids() {
        for s in ["2; 1 1 1", "3; 1 -2 1 -2", "3; 1 -2 1 -2 1 -2", "4; 1 1 2 -1 -3 2 -3", "3; 1 -1 2 -2", "2; -1 -1"] {
            let br = b(s);
            assert_eq!(bracket_sweep(&br.closure_sliced()), bracket_naive(&braid_closure(&br)).unwrap(), "{}", s);
        }
    }

    #[test]
    fn mirror_inverts_v() {
        let br = b("3; 1 1 1 2 -1 2");
        assert_eq!(jones_v(&br.mirror()).unwrap(), jones_v(&br).unwrap().scale_exponents(-1));
    }
}
