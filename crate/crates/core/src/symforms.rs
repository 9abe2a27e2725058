//! Signature, nullity and the sign `sgn′` of symmetric forms, and the
//! relations they satisfy on bordered triples.
//!
//! `sgn′(A)` is the sign of `det A'` where `P A Pᵀ = A' ⊕ 0` with `A'`
//! nonsingular. After diagonalisation `A'` is the diagonal of nonzero
//! pivots, so `sgn′` is the sign of their product (1 for the empty product).

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{congruence_diagonalize_with, pivot_counts, GaussianRational, PivotOrder, Rational, SymmetricForm};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub signature: i64,
    pub nullity: usize,
    /// `sgn′`, either 1 or -1
    pub sign: i8,
}

pub fn inertia(s: &SymmetricForm) -> Inertia {
    inertia_with(s, PivotOrder::Leading)
}

pub fn inertia_with(s: &SymmetricForm, order: PivotOrder) -> Inertia {
    let d = congruence_diagonalize_with(s, order);
    let (pos, neg, zero) = pivot_counts(&d.pivots);
    Inertia { signature: pos as i64 - neg as i64, nullity: zero, sign: if neg % 2 == 0 { 1 } else { -1 } }
}

/// A fourth root of unity, stored as an exponent of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EpsilonUnit(u8);

impl EpsilonUnit {
    pub fn from_power(k: i64) -> Self {
        Self(k.rem_euclid(4) as u8)
    }

    /// `k` with `ε = i^k`, in `0..4`.
    pub fn power(self) -> u8 {
        self.0
    }

    pub fn value(self) -> GaussianRational {
        GaussianRational::i_pow(self.0 as i64)
    }

    pub fn times_i(self) -> Self {
        Self::from_power(self.0 as i64 + 1)
    }
}

impl std::fmt::Display for EpsilonUnit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(["1", "i", "-1", "-i"][self.0 as usize])
    }
}

impl Inertia {
    /// `ε = sgn′ · i^{σ+ν}`.
    pub fn epsilon(&self) -> EpsilonUnit {
        let k = self.signature + self.nullity as i64 + if self.sign < 0 { 2 } else { 0 };
        EpsilonUnit::from_power(k)
    }
}

pub fn epsilon(s: &SymmetricForm) -> EpsilonUnit {
    inertia(s).epsilon()
}

/// `A₊ = [[a, ρ], [ρᵀ, A₀]]` and `A₋ = [[a + 2, ρ], [ρᵀ, A₀]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderedTriple {
    pub a: Rational,
    pub rho: Vec<Rational>,
    pub a0: SymmetricForm,
}

impl BorderedTriple {
    /// Panics if `rho` and `a0` differ in size.
    pub fn new(a: Rational, rho: Vec<Rational>, a0: SymmetricForm) -> Self {
        assert_eq!(rho.len(), a0.dim(), "border length must match A0");
        Self { a, rho, a0 }
    }

    fn bordered(&self, corner: Rational) -> SymmetricForm {
        let d = self.a0.dim();
        let mut m = vec![vec![Rational::zero(); d + 1]; d + 1];
        m[0][0] = corner;
        for j in 0..d {
            m[0][j + 1] = self.rho[j].clone();
            m[j + 1][0] = self.rho[j].clone();
            for k in 0..d {
                m[j + 1][k + 1] = self.a0.get(j, k).clone();
            }
        }
        SymmetricForm::new(m).expect("bordering a symmetric form stays symmetric")
    }

    pub fn plus(&self) -> SymmetricForm {
        self.bordered(self.a.clone())
    }

    pub fn minus(&self) -> SymmetricForm {
        self.bordered(&self.a + Rational::from_integer(2.into()))
    }

    pub fn zero(&self) -> &SymmetricForm {
        &self.a0
    }
}

fn fmt_form(s: &SymmetricForm) -> String {
    let rows: Vec<String> = s.entries().iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
    format!("[{}]", rows.join(","))
}

/// Checks the inertia relations between `x` (one of `A₊`, `A₋`) and `A₀`.
pub fn check_inertia_pair(label: &str, x: &Inertia, x0: &Inertia) -> Report {
    let mut r = Report::new();
    let dn = x.nullity as i64 - x0.nullity as i64;
    let ds = x.signature - x0.signature;
    let prod = (x.sign * x0.sign) as i64;
    let show = || format!("{:?} vs {:?}", x, x0);
    r.push(Check::expect(format!("{label}: |dnu| + |dsigma| = 1"), dn.abs() + ds.abs() == 1, show));
    let want_s = if dn.abs() == 1 { 0 } else { prod };
    r.push(Check::expect(format!("{label}: signature case split"), ds == want_s, show));
    let want_n = if ds.abs() == 1 { 0 } else { prod };
    r.push(Check::expect(format!("{label}: nullity case split"), dn == want_n, show));
    r.push(Check::expect(format!("{label}: epsilon = i epsilon0"), x.epsilon() == x0.epsilon().times_i(), || {
        format!("{} vs i * {}", x.epsilon(), x0.epsilon())
    }));
    r
}

/// The inertia relations for both `A₊` and `A₋`, with the matrices as witness.
pub fn verify_bordered_lemma(t: &BorderedTriple) -> Report {
    let (p, m) = (t.plus(), t.minus());
    let (ip, im, i0) = (inertia(&p), inertia(&m), inertia(t.zero()));
    let mut r = check_inertia_pair("A+", &ip, &i0);
    r.extend(check_inertia_pair("A-", &im, &i0));
    for c in &mut r.checks {
        if let Some(w) = &mut c.witness {
            *w = format!("{w}; A+ = {}, A- = {}, A0 = {}", fmt_form(&p), fmt_form(&m), fmt_form(t.zero()));
        }
    }
    r
}

/// `det A₊ - det A₋ + 2 det A₀ = 0`.
pub fn det_relation(t: &BorderedTriple) -> Report {
    let (dp, dm, d0) = (t.plus().det(), t.minus().det(), t.zero().det());
    let total = &dp - &dm + &d0 * Rational::from_integer(2.into());
    let mut r = Report::new();
    r.push(Check::expect("determinant relation", total.is_zero(), || format!("{} - {} + 2*{} = {}", dp, dm, d0, total)));
    r
}

/// Inertia from both pivot orders, which must agree.
pub fn inertia_both_orders(s: &SymmetricForm) -> (Inertia, Inertia) {
    (inertia_with(s, PivotOrder::Leading), inertia_with(s, PivotOrder::Trailing))
}
