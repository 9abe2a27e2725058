use num_bigint::BigInt;

use crate::links::BraidWord;

use super::{SeifertError, SeifertMatrix};

/// Entry pair `(E[a][b], E[b][a])` for two interacting basis loops.
pub(crate) type EntryPair = (i64, i64);

/// Sign rules for the Bennequin-surface Seifert form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Conventions {
    /// consecutive loops of one generator, shared letter positive / negative
    pub same_pos: EntryPair,
    pub same_neg: EntryPair,
    /// loop `a` on generator `g`, loop `b` on `g+1`, letters ordered a1 < b1 < a2 < b2
    pub adj_lower_first: EntryPair,
    /// ordered b1 < a1 < b2 < a2
    pub adj_upper_first: EntryPair,
}

pub(crate) const CONVENTIONS: Conventions = Conventions {
    same_pos: (1, 0),
    same_neg: (0, -1),
    adj_lower_first: (-1, 0),
    adj_upper_first: (1, 0),
};

/// Basis loop: generator index and the word positions of its two letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisLoop {
    pub generator: usize,
    pub first: usize,
    pub second: usize,
}

/// Homology basis of the Bennequin surface: one loop per pair of
/// consecutive letters on the same generator.
pub fn basis_loops(b: &BraidWord) -> Vec<BasisLoop> {
    let mut out = Vec::new();
    for g in 1..b.strands() {
        let pos: Vec<usize> = b.word().iter().enumerate().filter(|(_, x)| x.unsigned_abs() as usize == g).map(|(i, _)| i).collect();
        for w in pos.windows(2) {
            out.push(BasisLoop { generator: g, first: w[0], second: w[1] });
        }
    }
    out
}

pub(crate) fn seifert_matrix_with(b: &BraidWord, conv: &Conventions) -> Result<SeifertMatrix, SeifertError> {
    let missing = b.missing_generators();
    if !missing.is_empty() {
        return Err(SeifertError::DisconnectedSurface { missing });
    }
    let loops = basis_loops(b);
    let n = loops.len();
    let sign = |i: usize| b.word()[i].signum() as i64;
    let mut e = vec![vec![0i64; n]; n];
    for (i, a) in loops.iter().enumerate() {
        e[i][i] = -(sign(a.first) + sign(a.second)) / 2;
        for (j, c) in loops.iter().enumerate().skip(i + 1) {
            let pair = if c.generator == a.generator && c.first == a.second {
                Some(if sign(a.second) > 0 { conv.same_pos } else { conv.same_neg })
            } else if c.generator == a.generator + 1 {
                if a.first < c.first && c.first < a.second && a.second < c.second {
                    Some(conv.adj_lower_first)
                } else if c.first < a.first && a.first < c.second && c.second < a.second {
                    Some(conv.adj_upper_first)
                } else {
                    None
                }
            } else {
                None
            };
            if let Some((x, y)) = pair {
                e[i][j] = x;
                e[j][i] = y;
            }
        }
    }
    Ok(SeifertMatrix::new(e.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GaussianRational, IntLaurent, Laurent};
    use crate::jones::{jones, jones_at_minus1};
    use crate::links::{skein_triple, CrossingSite};
    use crate::symforms::inertia;
    use num_traits::{One, Signed};
    use rand::{Rng, SeedableRng};

    fn random_braid(rng: &mut impl Rng) -> BraidWord {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(n..=9);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..n as i32);
                if rng.gen_bool(0.5) { g } else { -g }
            })
            .collect();
        BraidWord::new(n, word).unwrap().connected_representative()
    }

    fn h1_holds(b: &BraidWord, conv: &Conventions) -> bool {
        let e = seifert_matrix_with(b, conv).unwrap();
        let s = e.symmetrized();
        let inv = inertia(&s);
        let (j, _) = jones_at_minus1(&jones(b).unwrap());
        let lhs = &GaussianRational::i_pow(-(inv.signature + 2 * inv.nullity as i64)) * &j;
        lhs == GaussianRational::from_rational(s.det().abs())
    }

    fn conway(b: &BraidWord, conv: &Conventions) -> IntLaurent {
        seifert_matrix_with(&b.connected_representative(), conv).unwrap().conway_potential()
    }

    fn skein_sign(b: &BraidWord, site: usize, conv: &Conventions) -> Option<i32> {
        let t = skein_triple(b, CrossingSite(site)).unwrap();
        let diff = &conway(&t.plus, conv) - &conway(&t.minus, conv);
        let z: IntLaurent = Laurent::from_terms("q", [(1, BigInt::one()), (-1, -BigInt::one())]);
        let rhs = &z * &conway(&t.zero, conv);
        if diff.is_zero() && rhs.is_zero() {
            Some(0)
        } else if diff == rhs {
            Some(1)
        } else if diff == -&rhs {
            Some(-1)
        } else {
            None
        }
    }

    fn swap((x, y): EntryPair) -> EntryPair {
        (y, x)
    }

    fn neg((x, y): EntryPair) -> EntryPair {
        (-x, -y)
    }

    /// Images of `c` under transposition, negating the loops of every other
    /// generator, and swapping the slots of the adjacent-generator entries.
    /// None of these changes `Δ`, `σ` or `ν`.
    fn orbit(c: Conventions) -> Vec<Conventions> {
        let mut out = vec![c];
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            let images = [
                Conventions { same_pos: swap(x.same_pos), same_neg: swap(x.same_neg), adj_lower_first: swap(x.adj_lower_first), adj_upper_first: swap(x.adj_upper_first) },
                Conventions { adj_lower_first: neg(x.adj_lower_first), adj_upper_first: neg(x.adj_upper_first), ..x },
                Conventions { adj_lower_first: swap(x.adj_lower_first), adj_upper_first: swap(x.adj_upper_first), ..x },
            ];
            for y in images {
                if !out.contains(&y) {
                    out.push(y);
                }
            }
            k += 1;
        }
        out
    }

    /// Among all 256 candidate rule sets, exactly the orbit of the fixed one
    /// satisfies both the determinant/phase identity with the Jones
    /// polynomial and the Conway skein relation on random braids.
    #[test]
    fn conventions_are_pinned_by_jones_and_conway() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let braids: Vec<BraidWord> = (0..40).map(|_| random_braid(&mut rng)).collect();
        let opts = [(1, 0), (0, 1), (-1, 0), (0, -1)];
        let mut survivors = Vec::new();
        for &sp in &opts {
            for &sn in &opts {
                for &al in &opts {
                    for &au in &opts {
                        let conv = Conventions { same_pos: sp, same_neg: sn, adj_lower_first: al, adj_upper_first: au };
                        if !braids.iter().all(|b| h1_holds(b, &conv)) {
                            continue;
                        }
                        let signs: Vec<Option<i32>> =
                            braids.iter().flat_map(|b| (0..b.len()).map(|k| skein_sign(b, k, &conv)).collect::<Vec<_>>()).collect();
                        let nonzero: Vec<i32> = signs.iter().flatten().copied().filter(|&s| s != 0).collect();
                        if signs.iter().all(|s| s.is_some()) && nonzero.windows(2).all(|w| w[0] == w[1]) {
                            survivors.push(conv);
                        }
                    }
                }
            }
        }
        let mut want = orbit(CONVENTIONS);
        want.sort_by_key(|c| format!("{:?}", c));
        survivors.sort_by_key(|c| format!("{:?}", c));
        assert_eq!(survivors, want);
    }
}
