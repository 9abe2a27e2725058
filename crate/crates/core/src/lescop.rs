//! Lescop's surgery formula for the Casson–Walker–Lescop invariant of the
//! manifold obtained by integral surgery on a framed link:
//!
//! `λ = sgn′(F) (D + H₀ + H₁ + H₂)`, with
//! `D = Σ det F(L∖L') ζ(L')`, `H₀ = det F · σ(F) / 4`,
//! `H₁ = -1/6 Σ_j det F(L∖j)` and `H₂ = 1/12 Σ det F(L∖L') (-1)^{|L'|} L₈(L')`,
//! the sums running over nonempty sublinks `L'`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{det_int, Rational, SymmetricForm};
use crate::symforms::inertia;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LescopError {
    #[error("no zeta value for sublink {0:?}")]
    MissingZeta(Vec<usize>),
    #[error("linking matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Components `0..r` with linking matrix `F`: framings on the diagonal,
/// linking numbers off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedLink {
    f: Vec<Vec<i64>>,
}

impl FramedLink {
    pub fn new(f: Vec<Vec<i64>>) -> Result<Self, LescopError> {
        let r = f.len();
        for i in 0..r {
            if f[i].len() != r {
                return Err(LescopError::Parse { line: i + 2, msg: format!("expected {} entries", r) });
            }
            for j in 0..i {
                if f[i][j] != f[j][i] {
                    return Err(LescopError::NotSymmetric(i, j));
                }
            }
        }
        Ok(Self { f })
    }

    pub fn unknot(framing: i64) -> Self {
        Self { f: vec![vec![framing]] }
    }

    pub fn empty() -> Self {
        Self { f: Vec::new() }
    }

    pub fn components(&self) -> usize {
        self.f.len()
    }

    pub fn linking(&self, a: usize, b: usize) -> i64 {
        self.f[a][b]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.f
    }

    /// Restriction to the components in `keep`, in that order.
    pub fn sub(&self, keep: &[usize]) -> Self {
        Self { f: keep.iter().map(|&i| keep.iter().map(|&j| self.f[i][j]).collect()).collect() }
    }

    /// Components reordered so that new component `k` is old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        self.sub(perm)
    }

    /// Distant union with an unknot of the given framing.
    pub fn with_unknot(&self, framing: i64) -> Self {
        let r = self.components();
        let mut f: Vec<Vec<i64>> = self.f.iter().map(|row| row.iter().copied().chain([0]).collect()).collect();
        let mut last = vec![0; r + 1];
        last[r] = framing;
        f.push(last);
        Self { f }
    }

    pub fn form(&self) -> SymmetricForm {
        SymmetricForm::from_ints(&self.f).expect("validated symmetric")
    }

    pub fn det(&self) -> BigInt {
        let m: Vec<Vec<BigInt>> = self.f.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        if m.is_empty() { BigInt::from(1) } else { det_int(&m) }
    }
}

/// ζ values of sublinks, keyed by increasing component index lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZetaProvider {
    values: BTreeMap<Vec<usize>, Rational>,
    fallback: Option<Rational>,
}

impl ZetaProvider {
    /// No values; every lookup fails until values are set.
    pub fn new() -> Self {
        Self::default()
    }

    /// ζ = 0 for every sublink.
    pub fn zero() -> Self {
        Self { values: BTreeMap::new(), fallback: Some(Rational::zero()) }
    }

    /// Single components get `ζ(K) = Δ''_K(1) / 2`; other sublinks must be set.
    pub fn for_knots(delta_second: &[Rational]) -> Self {
        let mut z = Self::new();
        for (k, d) in delta_second.iter().enumerate() {
            z.set(vec![k], d / Rational::from_integer(2.into()));
        }
        z
    }

    pub fn with_fallback(mut self, value: Rational) -> Self {
        self.fallback = Some(value);
        self
    }

    pub fn set(&mut self, mut sublink: Vec<usize>, value: Rational) {
        sublink.sort_unstable();
        self.values.insert(sublink, value);
    }

    pub fn get(&self, sublink: &[usize]) -> Result<Rational, LescopError> {
        match self.values.get(sublink) {
            Some(v) => Ok(v.clone()),
            None => self.fallback.clone().ok_or_else(|| LescopError::MissingZeta(sublink.to_vec())),
        }
    }

    /// Same values with components relabelled: old index `perm[k]` becomes `k`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut inv = vec![0; perm.len()];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        let mut out = Self { values: BTreeMap::new(), fallback: self.fallback.clone() };
        for (s, v) in &self.values {
            out.set(s.iter().map(|&i| inv[i]).collect(), v.clone());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LescopTerms {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub d: Rational,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub h0: Rational,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub h1: Rational,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub h2: Rational,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub lambda: Rational,
}

/// `L₈` of the sublink `s`: closed walks `j → σ(1) → … → σ(r) → j` over all
/// base points `j ∈ s` and orderings `σ` of `s`, weighted by linking numbers.
pub fn l8(link: &FramedLink, s: &[usize]) -> BigInt {
    let r = s.len();
    let mut total = BigInt::zero();
    let mut perm: Vec<usize> = s.to_vec();
    let mut c = vec![0usize; r];
    let walk = |perm: &[usize], total: &mut BigInt| {
        for &j in s {
            let mut prod = BigInt::from(link.linking(j, perm[0]));
            for w in perm.windows(2) {
                prod *= link.linking(w[0], w[1]);
            }
            prod *= link.linking(perm[r - 1], j);
            *total += prod;
        }
    };
    if r == 0 {
        return total;
    }
    // Heap's algorithm
    walk(&perm, &mut total);
    let mut i = 0;
    while i < r {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            walk(&perm, &mut total);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    total
}

fn complement(r: usize, s: &[usize]) -> Vec<usize> {
    (0..r).filter(|i| !s.contains(i)).collect()
}

pub fn lescop_terms(link: &FramedLink, zeta: &ZetaProvider) -> Result<LescopTerms, LescopError> {
    let r = link.components();
    let q = |n: BigInt| Rational::from_integer(n);
    let mut d = Rational::zero();
    let mut h2 = Rational::zero();
    for mask in 1u64..(1u64 << r) {
        let s: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).collect();
        let rest = link.sub(&complement(r, &s)).det();
        d += q(rest.clone()) * zeta.get(&s)?;
        let sign = if s.len() % 2 == 0 { 1 } else { -1 };
        h2 += q(rest * l8(link, &s) * sign);
    }
    h2 /= q(12.into());
    let inv = inertia(&link.form());
    let h0 = q(link.det() * inv.signature) / q(4.into());
    let h1 = -(0..r).map(|j| q(link.sub(&complement(r, &[j])).det())).fold(Rational::zero(), |a, b| a + b) / q(6.into());
    let lambda = (&d + &h0 + &h1 + &h2) * q(inv.sign.into());
    Ok(LescopTerms { d, h0, h1, h2, lambda })
}

pub fn lescop_lambda(link: &FramedLink, zeta: &ZetaProvider) -> Result<Rational, LescopError> {
    Ok(lescop_terms(link, zeta)?.lambda)
}

/// A framed link with its ζ values, as read from a text file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LescopInput {
    pub link: FramedLink,
    pub zeta: ZetaProvider,
}

/// Parses
///
/// ```text
/// r
/// f11 f12 ... f1r
/// ...
/// zeta 1,2 3/4
/// zeta default 0
/// ```
///
/// Component indices in `zeta` lines are 1-based and comma separated;
/// `default` sets the value for every sublink not listed. Blank lines and
/// lines starting with `#` are ignored.
pub fn parse_lescop(text: &str) -> Result<LescopInput, LescopError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, msg: &str| LescopError::Parse { line, msg: msg.to_string() };
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing component count"))?;
    let r: usize = header.parse().map_err(|_| err(hl, "component count must be a natural number"))?;
    let mut f = Vec::with_capacity(r);
    for _ in 0..r {
        let (ln, row) = lines.next().ok_or_else(|| err(hl, "too few matrix rows"))?;
        let vals: Result<Vec<i64>, _> = row.split_whitespace().map(i64::from_str).collect();
        let vals = vals.map_err(|_| err(ln, "matrix entries must be integers"))?;
        if vals.len() != r {
            return Err(err(ln, &format!("expected {} entries", r)));
        }
        f.push(vals);
    }
    let link = FramedLink::new(f)?;
    let mut zeta = ZetaProvider::new();
    for (ln, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 3 || parts[0] != "zeta" {
            return Err(err(ln, "expected `zeta <indices> <rational>`"));
        }
        let value = Rational::from_str(parts[2]).map_err(|_| err(ln, "bad rational"))?;
        if parts[1] == "default" {
            zeta.fallback = Some(value);
            continue;
        }
        let mut idx = Vec::new();
        for t in parts[1].trim_matches(|c| c == '{' || c == '}').split(',') {
            let k: usize = t.trim().parse().map_err(|_| err(ln, "bad component index"))?;
            if k == 0 || k > r {
                return Err(err(ln, "component index out of range"));
            }
            idx.push(k - 1);
        }
        zeta.set(idx, value);
    }
    Ok(LescopInput { link, zeta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn frac(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn l8_examples() {
        assert_eq!(l8(&FramedLink::unknot(1), &[0]), BigInt::from(1));
        assert_eq!(l8(&FramedLink::unknot(0), &[0]), BigInt::from(0));
        assert_eq!(l8(&FramedLink::unknot(3), &[0]), BigInt::from(9));
        // zero framings: every closed walk through both vertices uses a diagonal entry
        let hopf = FramedLink::new(vec![vec![0, 2], vec![2, 0]]).unwrap();
        assert_eq!(l8(&hopf, &[0, 1]), BigInt::from(0));
    }

    #[test]
    fn l8_two_components_brute_force() {
        // j ∈ {a, b}, σ ∈ {(a b), (b a)}: l_ja l_ab l_bj + l_jb l_ba l_aj
        let (x, y, l) = (3i64, -2i64, 5i64);
        let link = FramedLink::new(vec![vec![x, l], vec![l, y]]).unwrap();
        let want = 2 * l * l * (x + y);
        assert_eq!(l8(&link, &[0, 1]), BigInt::from(want));
    }

    #[test]
    fn terms_examples() {
        let t = lescop_terms(&FramedLink::empty(), &ZetaProvider::new()).unwrap();
        assert_eq!((t.d, t.h0, t.h1, t.h2, t.lambda), (rat(0), rat(0), rat(0), rat(0), rat(0)));

        let t = lescop_terms(&FramedLink::unknot(1), &ZetaProvider::zero()).unwrap();
        assert_eq!((t.d, t.h0.clone(), t.h1.clone(), t.h2.clone()), (rat(0), frac(1, 4), frac(-1, 6), frac(-1, 12)));
        assert_eq!(t.lambda, rat(0));

        assert_eq!(lescop_lambda(&FramedLink::unknot(0), &ZetaProvider::zero()).unwrap(), frac(-1, 6));
        assert_eq!(lescop_lambda(&FramedLink::unknot(-1), &ZetaProvider::zero()).unwrap(), rat(0));
    }

    #[test]
    fn zero_framed_knot() {
        // trefoil: Δ''(1) = 2
        let z = ZetaProvider::for_knots(&[rat(2)]);
        assert_eq!(lescop_lambda(&FramedLink::unknot(0), &z).unwrap(), rat(1) - frac(1, 6));
    }

    #[test]
    fn missing_zeta_is_an_error() {
        let link = FramedLink::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        let z = ZetaProvider::for_knots(&[rat(0), rat(0)]);
        assert_eq!(lescop_lambda(&link, &z), Err(LescopError::MissingZeta(vec![0, 1])));
    }

    #[test]
    fn parses_files() {
        let input = parse_lescop("# Hopf\n2\n1 1\n1 -1\nzeta 1 0\nzeta 2 0\nzeta {1,2} 1/2\n").unwrap();
        assert_eq!(input.link.components(), 2);
        assert_eq!(input.zeta.get(&[0, 1]).unwrap(), frac(1, 2));
        assert!(parse_lescop("2\n1 1\n2 0\n").is_err());
        assert!(matches!(parse_lescop("1\n1\nzeta 2 0\n"), Err(LescopError::Parse { line: 3, .. })));
        let input = parse_lescop("1\n0\nzeta default 0\n").unwrap();
        assert_eq!(lescop_lambda(&input.link, &input.zeta).unwrap(), frac(-1, 6));
    }

    fn link_strategy() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<i64>)> {
        (1usize..=3).prop_flat_map(|r| {
            (proptest::collection::vec(-3i64..=3, r * r), proptest::collection::vec(-4i64..=4, 1 << r)).prop_map(move |(v, z)| {
                let mut m = vec![vec![0; r]; r];
                for i in 0..r {
                    for j in i..r {
                        m[i][j] = v[i * r + j];
                        m[j][i] = v[i * r + j];
                    }
                }
                (m, z)
            })
        })
    }

    fn zeta_from(r: usize, z: &[i64]) -> ZetaProvider {
        let mut out = ZetaProvider::new();
        for mask in 1..(1usize << r) {
            out.set((0..r).filter(|&i| mask >> i & 1 == 1).collect(), frac(z[mask], 2));
        }
        out
    }

    proptest! {
        #[test]
        fn permutation_invariance((m, z) in link_strategy(), rot in 0usize..3, flip in any::<bool>()) {
            let r = m.len();
            let link = FramedLink::new(m).unwrap();
            let zeta = zeta_from(r, &z);
            let mut perm: Vec<usize> = (0..r).collect();
            perm.rotate_left(rot % r);
            if flip {
                perm.reverse();
            }
            let a = lescop_lambda(&link, &zeta).unwrap();
            let b = lescop_lambda(&link.permuted(&perm), &zeta.permuted(&perm)).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn unknot_stabilization_is_neutral((m, z) in link_strategy(), positive in any::<bool>()) {
            let r = m.len();
            let link = FramedLink::new(m).unwrap();
            let zeta = zeta_from(r, &z);
            let mut bigger = zeta.clone();
            for mask in 1..(1usize << (r + 1)) {
                if mask >> r & 1 == 1 {
                    bigger.set((0..=r).filter(|&i| mask >> i & 1 == 1).collect(), Rational::zero());
                }
            }
            let f = if positive { 1 } else { -1 };
            prop_assert_eq!(lescop_lambda(&link, &zeta).unwrap(), lescop_lambda(&link.with_unknot(f), &bigger).unwrap());
        }

        #[test]
        fn denominators((m, z) in link_strategy()) {
            let r = m.len();
            let link = FramedLink::new(m).unwrap();
            let t = lescop_terms(&link, &zeta_from(r, &z)).unwrap();
            for h in [&t.h0, &t.h1, &t.h2] {
                prop_assert!((h * rat(12)).is_integer());
            }
            let det = link.det();
            if !det.is_zero() {
                let scaled = &t.lambda * Rational::from_integer(det) * rat(12);
                prop_assert!(scaled.is_integer());
            }
        }
    }
}
