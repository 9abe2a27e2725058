use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, GaussianRational, Rational};

/// Coefficient ring for [`Laurent`].
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + Send + Sync
{
    fn to_gaussian(&self) -> GaussianRational;
    fn from_i64(n: i64) -> Self;
    fn is_negative_coeff(&self) -> bool {
        false
    }
}

impl Coefficient for BigInt {
    fn to_gaussian(&self) -> GaussianRational {
        GaussianRational::from(self.clone())
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
}

impl Coefficient for Rational {
    fn to_gaussian(&self) -> GaussianRational {
        GaussianRational::from(self.clone())
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn is_negative_coeff(&self) -> bool {
        self.is_negative()
    }
}

impl Coefficient for GaussianRational {
    fn to_gaussian(&self) -> GaussianRational {
        self.clone()
    }
    fn from_i64(n: i64) -> Self {
        GaussianRational::from_int(n)
    }
}

/// A Laurent polynomial `Σ c_k x^k` with finitely many nonzero coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    var: &'static str,
    terms: BTreeMap<i64, C>,
}

/// Integer Laurent polynomial (bracket, Jones, Alexander).
pub type IntLaurent = Laurent<BigInt>;
/// Laurent polynomial over ℚ(i).
pub type LaurentPolynomial = Laurent<GaussianRational>;

impl<C: Coefficient> Laurent<C> {
    pub fn zero(var: &'static str) -> Self {
        Self { var, terms: BTreeMap::new() }
    }

    pub fn one(var: &'static str) -> Self {
        Self::monomial(var, C::one(), 0)
    }

    pub fn monomial(var: &'static str, c: C, exp: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(var: &'static str, terms: I) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    pub fn with_var(mut self, var: &'static str) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(C::zero);
        let sum = slot.clone() + c;
        if sum.is_zero() {
            self.terms.remove(&exp);
        } else {
            *slot = sum;
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { var: self.var, terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Map `x → x^k` on exponents (`k = -1` is the substitution `x → 1/x`).
    pub fn scale_exponents(&self, k: i64) -> Self {
        Self::from_terms(self.var, self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    /// Divide every exponent by `d`; `None` if some exponent is not a multiple.
    pub fn divide_exponents(&self, d: i64) -> Option<Self> {
        if self.terms.keys().any(|e| e % d != 0) {
            return None;
        }
        Some(Self { var: self.var, terms: self.terms.iter().map(|(e, c)| (e / d, c.clone())).collect() })
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.var, self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.var, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn to_gaussian(&self) -> LaurentPolynomial {
        self.map_coeffs(C::to_gaussian)
    }

    /// Exact value at `x = x0`.
    pub fn eval(&self, x0: &GaussianRational) -> Result<GaussianRational, AlgebraError> {
        if x0.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(AlgebraError::ZeroAtNegativeExponent);
            }
            return Ok(self.coeff(0).to_gaussian());
        }
        let inv = x0.inv().expect("nonzero");
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let base = if *e >= 0 { x0.pow(*e as u32) } else { inv.pow((-*e) as u32) };
            acc += &(&c.to_gaussian() * &base);
        }
        Ok(acc)
    }

    /// Formal derivative `d/dx`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.var,
            self.terms.iter().filter(|(e, _)| **e != 0).map(|(e, c)| (e - 1, c.clone() * C::from_i64(*e))),
        )
    }
}

impl<C: Coefficient> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, o: &Laurent<C>) -> Laurent<C> {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }
}

impl<C: Coefficient> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, o: &Laurent<C>) -> Laurent<C> {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, -c.clone());
        }
        r
    }
}

impl<C: Coefficient> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, o: &Laurent<C>) -> Laurent<C> {
        let mut r = Laurent::zero(self.var);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        r
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent { var: self.var, terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<C: Coefficient> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<C: Coefficient> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest power first
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_coeff();
            let mag = if neg { -c.clone() } else { c.clone() };
            let body = mag.to_string();
            let body = if body.contains(' ') { format!("({})", body) } else { body };
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            match *e {
                0 => write!(f, "{}", body)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", body)?;
                    }
                    if *e == 1 {
                        write!(f, "{}", self.var)?;
                    } else {
                        write!(f, "{}^{}", self.var, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `(dP/dq) / (2q)` at `q = i`: the derivative with respect to `t = q²` at `t = -1`.
pub fn t_derivative_at_minus1<C: Coefficient>(p: &Laurent<C>) -> GaussianRational {
    let i = GaussianRational::i();
    let dq = p.derivative().eval(&i).expect("i is invertible");
    let two_i = GaussianRational::new(Rational::zero(), Rational::from_integer(2.into()));
    dq / two_i
}

/// Second derivative with respect to `t` at `t = 1`, for a polynomial whose
/// exponents are `t`-exponents.
pub fn second_derivative_at_1(p: &IntLaurent) -> Rational {
    let mut acc = BigInt::zero();
    for (e, c) in p.terms() {
        acc += c * BigInt::from(e) * BigInt::from(e - 1);
    }
    Rational::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(terms: &[(i64, i64)]) -> IntLaurent {
        Laurent::from_terms("q", terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()))
    }

    #[test]
    fn eval_examples() {
        let i = GaussianRational::i();
        assert_eq!(q(&[(1, 1), (-1, 1)]).eval(&i).unwrap(), gi(0, 0));
        assert_eq!(q(&[(0, 1)]).eval(&gi(7, -3)).unwrap(), gi(1, 0));
        assert_eq!(q(&[(2, 1), (0, 2), (-2, 1)]).eval(&i).unwrap(), gi(0, 0));
        assert_eq!(q(&[(-1, 1)]).eval(&gi(0, 0)), Err(AlgebraError::ZeroAtNegativeExponent));
        assert_eq!(q(&[(0, 5), (2, 1)]).eval(&gi(0, 0)).unwrap(), gi(5, 0));
    }

    #[test]
    fn t_derivative_examples() {
        assert_eq!(t_derivative_at_minus1(&q(&[(1, 1), (-1, 1)])), gi(0, -1));
        assert_eq!(t_derivative_at_minus1(&q(&[(0, 1)])), gi(0, 0));
        assert_eq!(t_derivative_at_minus1(&q(&[(2, 1), (0, 2), (-2, 1)])), gi(0, 0));
    }

    #[test]
    fn second_derivative_examples() {
        let t = |terms: &[(i64, i64)]| Laurent::from_terms("t", terms.iter().map(|(e, c)| (*e, BigInt::from(*c))));
        assert_eq!(second_derivative_at_1(&t(&[(1, 1), (0, -1), (-1, 1)])), Rational::from_integer(2.into()));
        assert_eq!(second_derivative_at_1(&t(&[(0, 1)])), Rational::zero());
        assert_eq!(second_derivative_at_1(&t(&[(1, -1), (0, 3), (-1, -1)])), Rational::from_integer((-2).into()));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = q(&[(3, 2)]);
        let r = &p - &p;
        assert!(r.is_zero());
        assert_eq!(r.to_string(), "0");
        assert_eq!(q(&[(2, -1), (0, 3), (-1, 1)]).to_string(), "-q^2 + 3 + q^-1");
    }

    fn arb_poly() -> impl Strategy<Value = IntLaurent> {
        prop::collection::vec((-6i64..6, -5i64..5), 0..6).prop_map(|v| q(&v))
    }

    proptest! {
        #[test]
        fn eval_is_multiplicative(p in arb_poly(), r in arb_poly(), re in -3i64..3, im in -3i64..3) {
            prop_assume!(re != 0 || im != 0);
            let x = gi(re, im);
            let lhs = (&p * &r).eval(&x).unwrap();
            let rhs = &p.eval(&x).unwrap() * &r.eval(&x).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
