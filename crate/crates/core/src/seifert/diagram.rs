//! Invariants read directly off a planar diagram: the Goeritz form with the
//! Gordon–Litherland correction, and the Alexander polynomial by Fox
//! calculus on the Wirtinger presentation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{poly_matrix_det, IntLaurent, Rational, SymmetricForm};
use crate::links::PlanarDiagram;
use crate::symforms::{inertia, Inertia};

use super::SeifertError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct GlConventions {
    /// incidence of a crossing whose white corners are `{0, 2}`
    pub eta_02: i64,
    /// type II crossings are those whose white corners lie between one
    /// incoming and one outgoing strand
    pub type2_coherent: bool,
}

pub(crate) const GL: GlConventions = GlConventions { eta_02: 1, type2_coherent: true };

/// Goeritz matrix of one checkerboard colouring and its correction term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzData {
    pub goeritz: SymmetricForm,
    /// `μ = Σ η(c)` over type II crossings
    pub correction: i64,
    /// extra split unknotted components, each adding 1 to the nullity
    pub free_loops: usize,
}

impl GoeritzData {
    /// `σ = sign(G) - μ` and `ν = null(G)`; `sgn′` is that of `G`.
    pub fn inertia(&self) -> Inertia {
        let g = inertia(&self.goeritz);
        Inertia { signature: g.signature - self.correction, nullity: g.nullity + self.free_loops, sign: g.sign }
    }
}

/// Face index of every corner, and a proper 2-colouring of the faces.
fn checkerboard(d: &PlanarDiagram) -> (Vec<[usize; 4]>, Vec<u8>) {
    let faces = d.faces();
    let mut face_of = vec![[0usize; 4]; d.crossings().len()];
    for (f, face) in faces.iter().enumerate() {
        for &(c, j) in face {
            face_of[c][j] = f;
        }
    }
    let mut color = vec![u8::MAX; faces.len()];
    let mut stack = vec![0usize];
    color[0] = 0;
    while let Some(f) = stack.pop() {
        for &(c, j) in &faces[f] {
            for nb in [(j + 1) % 4, (j + 3) % 4] {
                let g = face_of[c][nb];
                if color[g] == u8::MAX {
                    color[g] = 1 - color[f];
                    stack.push(g);
                }
            }
        }
    }
    (face_of, color)
}

pub(crate) fn goeritz_with(d: &PlanarDiagram, white: u8, conv: &GlConventions) -> Result<GoeritzData, SeifertError> {
    if d.crossings().is_empty() {
        return Ok(GoeritzData { goeritz: SymmetricForm::empty(), correction: 0, free_loops: d.free_loops().saturating_sub(1) });
    }
    if !d.is_connected_ignoring_loops() {
        return Err(SeifertError::SplitDiagram);
    }
    let (face_of, color) = checkerboard(d);
    let whites: Vec<usize> = (0..color.len()).filter(|&f| color[f] == white).collect();
    let index = |f: usize| whites.iter().position(|&w| w == f);
    let n = whites.len();
    let mut g = vec![vec![0i64; n]; n];
    let mut mu = 0i64;
    for (c, x) in d.crossings().iter().enumerate() {
        let w02 = color[face_of[c][0]] == white;
        let eta = if w02 { conv.eta_02 } else { -conv.eta_02 };
        let (fa, fb) = if w02 { (face_of[c][0], face_of[c][2]) } else { (face_of[c][1], face_of[c][3]) };
        // corners {0, 2} sit between an incoming and an outgoing strand iff the crossing is positive
        let coherent = w02 == (x.sign > 0);
        if coherent == conv.type2_coherent {
            mu += eta;
        }
        let (i, j) = (index(fa).expect("white face"), index(fb).expect("white face"));
        if i != j {
            g[i][j] -= eta;
            g[j][i] -= eta;
            g[i][i] += eta;
            g[j][j] += eta;
        }
    }
    let keep: Vec<Vec<Rational>> =
        (1..n).map(|i| (1..n).map(|j| Rational::from_integer(BigInt::from(g[i][j]))).collect()).collect();
    Ok(GoeritzData {
        goeritz: SymmetricForm::new(keep).expect("Goeritz matrices are symmetric"),
        correction: mu,
        free_loops: d.free_loops(),
    })
}

/// Goeritz form of the colouring in which the first listed face is white.
pub fn goeritz(d: &PlanarDiagram) -> Result<GoeritzData, SeifertError> {
    goeritz_with(d, 0, &GL)
}

/// `(σ, ν, sgn′)` of the link from the Gordon–Litherland formula.
pub fn diagram_inertia(d: &PlanarDiagram) -> Result<Inertia, SeifertError> {
    Ok(goeritz(d)?.inertia())
}

/// Alexander polynomial of a knot diagram in `t`, normalised so that
/// `Δ(t⁻¹) = Δ(t)` and `Δ(1) = 1`.
pub fn fox_alexander(d: &PlanarDiagram) -> Result<IntLaurent, SeifertError> {
    if d.components() != 1 {
        return Err(SeifertError::NotAKnot { components: d.components() });
    }
    let c = d.crossings().len();
    if c == 0 {
        return Ok(IntLaurent::one("t"));
    }
    // over-arcs: edges glued through the over slots
    let mut parent: Vec<usize> = (0..d.arc_count()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for x in d.crossings() {
        let (a, b) = (find(&mut parent, x.arcs[1]), find(&mut parent, x.arcs[3]));
        parent[a] = b;
    }
    let mut gen = vec![usize::MAX; d.arc_count()];
    let mut count = 0;
    for a in 0..d.arc_count() {
        let r = find(&mut parent, a);
        if gen[r] == usize::MAX {
            gen[r] = count;
            count += 1;
        }
    }
    debug_assert_eq!(count, c);
    // rows: crossings, columns: generators, entries as polynomials [c0, c1] in t
    let mut m = vec![vec![vec![BigInt::zero(), BigInt::zero()]; c]; c];
    for (row, x) in d.crossings().iter().enumerate() {
        let k = gen[find(&mut parent, x.arcs[1])];
        let a = gen[find(&mut parent, x.arcs[0])];
        let b = gen[find(&mut parent, x.arcs[2])];
        let add = |m: &mut Vec<Vec<Vec<BigInt>>>, col: usize, c0: i64, c1: i64| {
            m[row][col][0] += c0;
            m[row][col][1] += c1;
        };
        if x.sign > 0 {
            add(&mut m, k, 1, -1);
            add(&mut m, a, 0, 1);
            add(&mut m, b, -1, 0);
        } else {
            add(&mut m, k, -1, 1);
            add(&mut m, a, 1, 0);
            add(&mut m, b, 0, -1);
        }
    }
    let minor: Vec<Vec<Vec<BigInt>>> = m[1..].iter().map(|r| r[1..].to_vec()).collect();
    Ok(normalize_alexander(&poly_matrix_det(&minor, "t")))
}

/// Shift to a symmetric exponent range and fix the sign by `Δ(1) > 0`.
pub fn normalize_alexander(p: &IntLaurent) -> IntLaurent {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return p.clone();
    };
    let shifted = p.shift(-(lo + hi).div_euclid(2));
    let at_one: BigInt = shifted.terms().map(|(_, c)| c.clone()).sum();
    if at_one.is_negative() {
        shifted.scale(&-BigInt::one())
    } else {
        shifted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::BraidWord;
    use crate::seifert::{alexander_conway, seifert_matrix};
    use rand::{Rng, SeedableRng};

    fn random_braid(rng: &mut impl Rng) -> BraidWord {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(n..=10);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..n as i32);
                if rng.gen_bool(0.5) { g } else { -g }
            })
            .collect();
        BraidWord::new(n, word).unwrap().connected_representative()
    }

    fn braids() -> Vec<BraidWord> {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        (0..80).map(|_| random_braid(&mut rng)).collect()
    }

    /// Of the four candidate rule sets, only the fixed one reproduces the
    /// signature and nullity of the Bennequin Seifert form, for both
    /// checkerboard colourings.
    #[test]
    fn gordon_litherland_conventions_are_pinned() {
        let bs = braids();
        let mut survivors = Vec::new();
        for eta_02 in [1, -1] {
            for type2_coherent in [true, false] {
                let conv = GlConventions { eta_02, type2_coherent };
                let ok = bs.iter().all(|b| {
                    let want = seifert_matrix(b).unwrap().inertia();
                    let d = b.closure_sliced().to_planar();
                    [0, 1].iter().all(|&w| {
                        let got = goeritz_with(&d, w, &conv).unwrap().inertia();
                        (got.signature, got.nullity) == (want.signature, want.nullity)
                    })
                });
                if ok {
                    survivors.push(conv);
                }
            }
        }
        assert_eq!(survivors, vec![GL]);
    }

    #[test]
    fn goeritz_determinant_matches_seifert() {
        for b in braids() {
            let s = seifert_matrix(&b).unwrap().symmetrized().det().abs();
            let g = goeritz(&b.closure_sliced().to_planar()).unwrap().goeritz.det().abs();
            assert_eq!(s, g, "{}", b);
        }
    }

    #[test]
    fn fox_matches_seifert_on_knots() {
        let mut n = 0;
        for b in braids().into_iter().filter(|b| b.components() == 1) {
            let want = alexander_conway(&seifert_matrix(&b).unwrap()).in_t().unwrap();
            assert_eq!(fox_alexander(&b.closure_sliced().to_planar()).unwrap(), want, "{}", b);
            n += 1;
        }
        assert!(n >= 15);
    }

    #[test]
    fn small_examples() {
        let d = |s: &str| BraidWord::parse(s).unwrap().closure_sliced().to_planar();
        let i = diagram_inertia(&d("2; 1 1 1")).unwrap();
        assert_eq!((i.signature, i.nullity), (-2, 0));
        let i = diagram_inertia(&d("2;")).unwrap();
        assert_eq!((i.signature, i.nullity), (0, 1));
        assert_eq!(fox_alexander(&d("1;")).unwrap(), IntLaurent::one("t"));
        assert!(matches!(fox_alexander(&d("2; 1 1")), Err(SeifertError::NotAKnot { components: 2 })));
    }
}
