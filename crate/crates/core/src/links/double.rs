use super::{BraidWord, LinkError, Slice, SlicedDiagram};

/// Handedness of the clasp tying the two ribbon strands together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Clasp {
    /// Two `σ`-type letters. The strands they join are oppositely oriented,
    /// so both oriented crossings are negative.
    #[default]
    Positive,
    /// Two `σ⁻¹`-type letters.
    Negative,
}

/// The `m`-twisted double of a knot given as a closed braid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedDouble {
    pub companion: BraidWord,
    pub twists: i64,
    pub clasp: Clasp,
    pub diagram: SlicedDiagram,
}

/// Build `D_m K` as a sliced diagram.
///
/// Every braid strand of `k` becomes a ribbon of two oppositely oriented
/// strands; `σ_g^±` becomes the four-letter block `σ_{2g} σ_{2g-1} σ_{2g+1} σ_{2g}`
/// with the same sign. The closure's blackboard framing of the ribbon is
/// `writhe(k)`, so `2(m - writhe(k))` half-twist letters on the first ribbon
/// bring the annulus framing to `m`. A clasp (a cup, two equal letters
/// hooking it, and a cap) joins the ribbon's strands into one knot.
pub fn twisted_double(k: &BraidWord, m: i64, clasp: Clasp) -> Result<TwistedDouble, LinkError> {
    let comps = k.components();
    if comps != 1 {
        return Err(LinkError::NotAKnot { components: comps });
    }
    let n = k.strands();
    let mut slices = Vec::new();
    // braid-region strands 0..2n-1 with alternating orientation, returns nested on the right
    for pos in 0..2 * n {
        slices.push(Slice::Cup { pos, left_up: pos % 2 == 0 });
    }
    for &g in k.word() {
        let a = g.unsigned_abs() as usize;
        let positive = g > 0;
        // generators 2a, 2a-1, 2a+1, 2a at zero-based positions
        for gen in [2 * a, 2 * a - 1, 2 * a + 1, 2 * a] {
            slices.push(Slice::Cross { pos: gen - 1, positive });
        }
    }
    let extra = 2 * (m - k.writhe());
    for _ in 0..extra.unsigned_abs() {
        slices.push(Slice::Cross { pos: 0, positive: extra > 0 });
    }
    let hook = clasp == Clasp::Positive;
    slices.push(Slice::Cup { pos: 2, left_up: true });
    slices.push(Slice::Cross { pos: 1, positive: hook });
    slices.push(Slice::Cross { pos: 1, positive: hook });
    slices.push(Slice::Cap { pos: 0 });
    for pos in (0..2 * n).rev() {
        slices.push(Slice::Cap { pos });
    }
    let diagram = SlicedDiagram::new(slices)?;
    Ok(TwistedDouble { companion: k.clone(), twists: m, clasp, diagram })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clasp_crossing_signs() {
        let k = BraidWord::parse("2; 1").unwrap();
        let d = twisted_double(&k, 1, Clasp::Positive).unwrap();
        let s = d.diagram.crossing_signs();
        assert_eq!(&s[s.len() - 2..], &[-1, -1]);
        let d = twisted_double(&k, 1, Clasp::Negative).unwrap();
        let s = d.diagram.crossing_signs();
        assert_eq!(&s[s.len() - 2..], &[1, 1]);
    }

    #[test]
    fn doubles_are_knots() {
        let unknot = BraidWord::parse("2; 1").unwrap();
        let d = twisted_double(&unknot, 0, Clasp::Positive).unwrap();
        assert_eq!(d.diagram.to_planar().components(), 1);
        let tref = BraidWord::parse("2; 1 1 1").unwrap();
        for m in -2..=2 {
            for clasp in [Clasp::Positive, Clasp::Negative] {
                let d = twisted_double(&tref, m, clasp).unwrap();
                let p = d.diagram.to_planar();
                assert_eq!(p.components(), 1);
                assert!(p.is_connected());
                // 12 cabled crossings, the twist letters, the clasp
                assert_eq!(p.crossings().len() as i64, 12 + 2 * (m - 3).abs() + 2);
            }
        }
    }

    #[test]
    fn links_are_rejected() {
        let hopf = BraidWord::parse("2; 1 1").unwrap();
        assert_eq!(twisted_double(&hopf, 0, Clasp::Positive), Err(LinkError::NotAKnot { components: 2 }));
    }

    #[test]
    fn cabled_blocks_have_no_net_writhe() {
        // only twists and clasp contribute: twists are opposite-direction crossings
        let tref = BraidWord::parse("2; 1 1 1").unwrap();
        let d = twisted_double(&tref, 3, Clasp::Positive).unwrap();
        assert_eq!(d.diagram.writhe(), -2);
    }
}
