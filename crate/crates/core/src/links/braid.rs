use std::fmt;
use std::str::FromStr;

use super::{LinkError, Slice, SlicedDiagram};

/// A braid word on `strands` strands. Letter `g` stands for `σ_g` when
/// positive and `σ_{|g|}⁻¹` when negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

/// Index of a letter in a braid word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrossingSite(pub usize);

/// Three braids whose closures agree outside one crossing: positive
/// crossing, negative crossing, oriented smoothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinTriple {
    pub plus: BraidWord,
    pub minus: BraidWord,
    pub zero: BraidWord,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, LinkError> {
        if strands == 0 {
            return Err(LinkError::Syntax("a braid needs at least one strand".into()));
        }
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(LinkError::LetterOutOfRange { letter: g, strands });
            }
        }
        Ok(Self { strands, word })
    }

    /// Parse `"n; g1 g2 ... gk"`.
    pub fn parse(text: &str) -> Result<Self, LinkError> {
        let (head, tail) = text
            .split_once(';')
            .ok_or_else(|| LinkError::Syntax(format!("expected 'n; g1 g2 ...', got {:?}", text.trim())))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| LinkError::Syntax(format!("bad strand count {:?}", head.trim())))?;
        let word = tail
            .split_whitespace()
            .map(|tok| tok.parse::<i32>().map_err(|_| LinkError::Syntax(format!("bad letter {:?}", tok))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, word)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|g| g.signum() as i64).sum()
    }

    /// Underlying permutation: strand starting at bottom position `i` ends at `perm[i]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[pos] = strand id
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of closure components (cycles of the permutation).
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        cycles
    }

    pub fn mirror(&self) -> Self {
        Self { strands: self.strands, word: self.word.iter().map(|g| -g).collect() }
    }

    /// Markov stabilization: one more strand and a letter `±n`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut word = self.word.clone();
        word.push(if positive { n } else { -n });
        Self { strands: self.strands + 1, word }
    }

    /// Generator indices `1..n-1` that never occur in the word.
    pub fn missing_generators(&self) -> Vec<usize> {
        (1..self.strands).filter(|&g| !self.word.iter().any(|x| x.unsigned_abs() as usize == g)).collect()
    }

    /// Same closure, with a cancelling pair `σ_g σ_g⁻¹` appended for every
    /// missing generator so that the Bennequin surface is connected.
    pub fn connected_representative(&self) -> Self {
        let mut word = self.word.clone();
        for g in self.missing_generators() {
            word.push(g as i32);
            word.push(-(g as i32));
        }
        Self { strands: self.strands, word }
    }

    /// Closure as a sliced diagram: braid strands on the left, return
    /// strands nested on the right.
    pub fn closure_sliced(&self) -> SlicedDiagram {
        let n = self.strands;
        let mut slices = Vec::with_capacity(2 * n + self.word.len());
        for k in 0..n {
            slices.push(Slice::Cup { pos: k, left_up: true });
        }
        for &g in &self.word {
            slices.push(Slice::Cross { pos: g.unsigned_abs() as usize - 1, positive: g > 0 });
        }
        for k in (0..n).rev() {
            slices.push(Slice::Cap { pos: k });
        }
        SlicedDiagram::new(slices).expect("braid closures are well formed")
    }
}

impl FromStr for BraidWord {
    type Err = LinkError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.strands)?;
        for g in &self.word {
            write!(f, " {}", g)?;
        }
        Ok(())
    }
}

/// The bordered triple obtained by changing or smoothing the letter at `site`.
pub fn skein_triple(b: &BraidWord, site: CrossingSite) -> Result<SkeinTriple, LinkError> {
    let idx = site.0;
    let g = *b.word.get(idx).ok_or(LinkError::SiteOutOfRange { site: idx, len: b.len() })?;
    let gen = g.abs();
    let with = |letter: Option<i32>| {
        let mut word = b.word.clone();
        match letter {
            Some(l) => word[idx] = l,
            None => {
                word.remove(idx);
            }
        }
        BraidWord { strands: b.strands, word }
    };
    Ok(SkeinTriple { plus: with(Some(gen)), minus: with(Some(-gen)), zero: with(None) })
}

/// `c`-component unlink `σ1 σ1⁻¹ σ2 σ2⁻¹ …` on `c` strands (connected Bennequin surface).
pub fn make_unlink(c: usize) -> BraidWord {
    assert!(c >= 1, "an unlink has at least one component");
    let word = (1..c as i32).flat_map(|g| [g, -g]).collect();
    BraidWord { strands: c, word }
}

/// Parallel 2-cable with both copies oriented alike: `σ_g ↦ σ_{2g} σ_{2g-1} σ_{2g+1} σ_{2g}`.
pub fn cable2(b: &BraidWord) -> BraidWord {
    let word = b
        .word
        .iter()
        .flat_map(|&g| {
            let s = g.signum();
            let a = g.abs();
            [s * 2 * a, s * (2 * a - 1), s * (2 * a + 1), s * 2 * a]
        })
        .collect();
    BraidWord { strands: 2 * b.strands, word }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let t = b("2; 1 1 1");
        assert_eq!((t.strands(), t.word()), (2, &[1, 1, 1][..]));
        assert_eq!(b("3; 1 -2 1 -2").word(), &[1, -2, 1, -2]);
        assert_eq!(BraidWord::parse("2; 3"), Err(LinkError::LetterOutOfRange { letter: 3, strands: 2 }));
        assert!(matches!(BraidWord::parse("2 1 1"), Err(LinkError::Syntax(_))));
        assert!(matches!(BraidWord::parse("2; 1 x"), Err(LinkError::Syntax(_))));
        assert!(matches!(BraidWord::parse("2; 0"), Err(LinkError::LetterOutOfRange { .. })));
        assert_eq!(b("2; ").len(), 0);
        assert_eq!(b("3; 1 -2").to_string(), "3; 1 -2");
    }

    #[test]
    fn closure_components() {
        assert_eq!((b("2; 1").components(), b("2; 1").writhe()), (1, 1));
        assert_eq!(b("2; 1 1").components(), 2);
        assert_eq!(b("2;").components(), 2);
        assert_eq!(b("3; 1 -2 1 -2 1 -2").components(), 3);
    }

    #[test]
    fn skein_examples() {
        let t = skein_triple(&b("2; 1 1 1"), CrossingSite(0)).unwrap();
        assert_eq!(t.plus, b("2; 1 1 1"));
        assert_eq!(t.minus, b("2; -1 1 1"));
        assert_eq!(t.zero, b("2; 1 1"));
        let f = b("3; 1 -2 1 -2");
        assert_eq!(skein_triple(&f, CrossingSite(1)).unwrap().minus, f);
        assert_eq!(
            skein_triple(&f, CrossingSite(4)),
            Err(LinkError::SiteOutOfRange { site: 4, len: 4 })
        );
    }

    #[test]
    fn unlinks() {
        assert_eq!(make_unlink(1), b("1;"));
        assert_eq!(make_unlink(2), b("2; 1 -1"));
        assert_eq!(make_unlink(5).components(), 5);
        assert!(make_unlink(5).missing_generators().is_empty());
    }

    #[test]
    fn connected_representative_adds_cancelling_pairs() {
        let hopf_split = b("3; 1 1");
        assert_eq!(hopf_split.missing_generators(), vec![2]);
        let c = hopf_split.connected_representative();
        assert_eq!(c, b("3; 1 1 2 -2"));
        assert_eq!(c.components(), hopf_split.components());
    }

    fn arb_braid() -> impl Strategy<Value = BraidWord> {
        (2usize..5).prop_flat_map(|n| {
            prop::collection::vec((1..n as i32, any::<bool>()), 0..10)
                .prop_map(move |v| BraidWord::new(n, v.into_iter().map(|(g, s)| if s { g } else { -g }).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn skein_members_and_lengths(br in arb_braid(), pick in 0usize..100) {
            prop_assume!(!br.is_empty());
            let site = CrossingSite(pick % br.len());
            let t = skein_triple(&br, site).unwrap();
            prop_assert!((t.plus == br) != (t.minus == br));
            prop_assert_eq!(t.plus.len(), br.len());
            prop_assert_eq!(t.minus.len(), br.len());
            prop_assert_eq!(t.zero.len() + 1, br.len());
        }

        #[test]
        fn mirror_negates_writhe(br in arb_braid()) {
            prop_assert_eq!(br.mirror().writhe(), -br.writhe());
            prop_assert_eq!(br.mirror().components(), br.components());
        }

        #[test]
        fn display_parse_round_trip(br in arb_braid()) {
            prop_assert_eq!(BraidWord::parse(&br.to_string()).unwrap(), br);
        }
    }
}
