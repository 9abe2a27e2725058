//! Transfer-matrix evaluation of the Kauffman bracket on a sliced diagram.
//!
//! The state after each slice is a formal sum of crossingless matchings of
//! the points on the sweep line, weighted by Laurent polynomials in `A`.
//! A crossing of `σ` type acts as `A·id + A⁻¹·e_i`, of `σ⁻¹` type as
//! `A⁻¹·id + A·e_i`, where `e_i` caps and re-cups positions `i, i+1`.
//! Each closed loop contributes `δ = -A² - A⁻²`; the last loop is free so
//! that the unknot has bracket 1.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{IntLaurent, Laurent};
use crate::links::{Slice, SlicedDiagram};

/// Coefficients the sweep can run on; `None` signals overflow.
pub(crate) trait SweepCoeff: Clone + Zero + One {
    fn try_add(&self, o: &Self) -> Option<Self>;
    fn try_neg(&self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl SweepCoeff for i64 {
    fn try_add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn try_neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl SweepCoeff for BigInt {
    fn try_add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn try_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// Dense Laurent polynomial `Σ c[k] A^{lo + k}`.
#[derive(Clone, Debug)]
struct Dense<C> {
    lo: i64,
    c: Vec<C>,
}

impl<C: SweepCoeff> Dense<C> {
    fn one() -> Self {
        Self { lo: 0, c: vec![C::one()] }
    }

    fn shifted(&self, k: i64) -> Self {
        Self { lo: self.lo + k, c: self.c.clone() }
    }

    fn add_scaled(&mut self, o: &Self, shift: i64, negate: bool) -> Option<()> {
        let olo = o.lo + shift;
        let ohi = olo + o.c.len() as i64;
        let hi = self.lo + self.c.len() as i64;
        if self.c.is_empty() {
            self.lo = olo;
        }
        let new_lo = self.lo.min(olo);
        let new_hi = hi.max(ohi);
        if new_lo < self.lo {
            let mut pre = vec![C::zero(); (self.lo - new_lo) as usize];
            pre.append(&mut self.c);
            self.c = pre;
            self.lo = new_lo;
        }
        if (self.c.len() as i64) < new_hi - self.lo {
            self.c.resize((new_hi - self.lo) as usize, C::zero());
        }
        for (k, v) in o.c.iter().enumerate() {
            let idx = (olo - self.lo) as usize + k;
            let v = if negate { v.try_neg()? } else { v.clone() };
            self.c[idx] = self.c[idx].try_add(&v)?;
        }
        Some(())
    }

    /// `δ · self`
    fn times_delta(&self) -> Option<Self> {
        let mut out = Self { lo: self.lo, c: Vec::new() };
        out.add_scaled(self, 2, true)?;
        out.add_scaled(self, -2, true)?;
        Some(out)
    }
}

type Matching = Vec<u8>;

fn insert_pair(m: &Matching, pos: usize) -> Matching {
    let mut out = Vec::with_capacity(m.len() + 2);
    let bump = |p: u8| if (p as usize) >= pos { p + 2 } else { p };
    for (i, &p) in m.iter().enumerate() {
        if i == pos {
            out.push(pos as u8 + 1);
            out.push(pos as u8);
        }
        out.push(bump(p));
    }
    if pos == m.len() {
        out.push(pos as u8 + 1);
        out.push(pos as u8);
    }
    out
}

/// Join the points at `pos`, `pos+1`; returns the new matching and whether a loop closed.
fn cap(m: &Matching, pos: usize) -> (Matching, bool) {
    let (a, b) = (pos as u8, pos as u8 + 1);
    let closed = m[pos] == b;
    let mut work = m.clone();
    if !closed {
        let (x, y) = (m[pos], m[pos + 1]);
        work[x as usize] = y;
        work[y as usize] = x;
    }
    let drop = |p: u8| if p > b { p - 2 } else { p };
    let out = work
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != a as usize && *i != b as usize)
        .map(|(_, &p)| drop(p))
        .collect();
    (out, closed)
}

fn accumulate<C: SweepCoeff>(map: &mut HashMap<Matching, Dense<C>>, key: Matching, poly: &Dense<C>, shift: i64) -> Option<()> {
    match map.get_mut(&key) {
        Some(p) => p.add_scaled(poly, shift, false),
        None => {
            map.insert(key, poly.shifted(shift));
            Some(())
        }
    }
}

pub(crate) fn sweep_with<C: SweepCoeff>(d: &SlicedDiagram) -> Option<IntLaurent> {
    let mut states: HashMap<Matching, Dense<C>> = HashMap::new();
    states.insert(Vec::new(), Dense::one());
    let last = d.slices().len().saturating_sub(1);
    for (idx, s) in d.slices().iter().enumerate() {
        let mut next: HashMap<Matching, Dense<C>> = HashMap::with_capacity(states.len() * 2);
        match *s {
            Slice::Cup { pos, .. } => {
                for (m, p) in &states {
                    accumulate(&mut next, insert_pair(m, pos), p, 0)?;
                }
            }
            Slice::Cap { pos } => {
                for (m, p) in &states {
                    let (m2, closed) = cap(m, pos);
                    if closed && idx != last {
                        accumulate(&mut next, m2, &p.times_delta()?, 0)?;
                    } else {
                        accumulate(&mut next, m2, p, 0)?;
                    }
                }
            }
            Slice::Cross { pos, positive } => {
                let s = if positive { 1 } else { -1 };
                for (m, p) in &states {
                    accumulate(&mut next, m.clone(), p, s)?;
                    let (m2, closed) = cap(m, pos);
                    let e = insert_pair(&m2, pos);
                    if closed {
                        accumulate(&mut next, e, &p.times_delta()?, -s)?;
                    } else {
                        accumulate(&mut next, e, p, -s)?;
                    }
                }
            }
        }
        next.retain(|_, p| p.c.iter().any(|c| !c.is_zero()));
        states = next;
    }
    let mut out = Laurent::zero("A");
    if let Some(p) = states.remove(&Vec::new()) {
        for (k, c) in p.c.into_iter().enumerate() {
            out.add_term(p.lo + k as i64, c.into_big());
        }
    }
    Some(out)
}

/// Kauffman bracket of a sliced diagram, normalised so the unknot is 1.
pub fn bracket_sweep(d: &SlicedDiagram) -> IntLaurent {
    sweep_with::<i64>(d).unwrap_or_else(|| sweep_with::<BigInt>(d).expect("big integers do not overflow"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::BraidWord;

    fn a(terms: &[(i64, i64)]) -> IntLaurent {
        Laurent::from_terms("A", terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn small_brackets() {
        let br = |s: &str| bracket_sweep(&BraidWord::parse(s).unwrap().closure_sliced());
        assert_eq!(br("1;"), a(&[(0, 1)]));
        assert_eq!(br("2;"), a(&[(2, -1), (-2, -1)]));
        assert_eq!(br("2; 1 1"), a(&[(4, -1), (-4, -1)]));
        // hand expansion in TL_2: -A^5 - A^-3 + A^-7
        assert_eq!(br("2; 1 1 1"), a(&[(5, -1), (-3, -1), (-7, 1)]));
    }

    #[test]
    fn matching_helpers() {
        let m = insert_pair(&Vec::new(), 0);
        assert_eq!(m, vec![1, 0]);
        let m = insert_pair(&m, 1);
        assert_eq!(m, vec![3, 2, 1, 0]);
        let (c, closed) = cap(&m, 1);
        assert!(closed);
        assert_eq!(c, vec![1, 0]);
        let (c, closed) = cap(&vec![1, 0, 3, 2], 1);
        assert!(!closed);
        assert_eq!(c, vec![1, 0]);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // i64 and BigInt runs agree where both succeed
        let d = BraidWord::parse("3; 1 -2 1 -2 1 -2").unwrap().closure_sliced();
        assert_eq!(sweep_with::<i64>(&d), sweep_with::<BigInt>(&d));
    }
}
