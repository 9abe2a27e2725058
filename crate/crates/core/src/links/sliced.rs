use super::{LinkError, PdCrossing, PlanarDiagram};

/// One horizontal slice of a link diagram in Morse position.
///
/// Positions are counted from the left among the strands currently crossing
/// the sweep line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    /// A minimum: two new endpoints at `pos`, `pos + 1`. The left one is
    /// oriented upward iff `left_up`.
    Cup { pos: usize, left_up: bool },
    /// A maximum joining the endpoints at `pos`, `pos + 1`.
    Cap { pos: usize },
    /// Crossing of the strands at `pos`, `pos + 1`. `positive` means the
    /// crossing looks like the braid generator `σ` (the strand from the
    /// lower left passes over); otherwise like `σ⁻¹`.
    Cross { pos: usize, positive: bool },
}

/// A link diagram as a bottom-to-top sequence of slices, starting and
/// ending with no strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlicedDiagram {
    slices: Vec<Slice>,
    max_width: usize,
}

impl SlicedDiagram {
    /// Validates widths and that every cap joins oppositely oriented ends.
    pub fn new(slices: Vec<Slice>) -> Result<Self, LinkError> {
        let mut dirs: Vec<bool> = Vec::new();
        let mut max_width = 0;
        for (k, s) in slices.iter().enumerate() {
            match *s {
                Slice::Cup { pos, left_up } => {
                    if pos > dirs.len() {
                        return Err(LinkError::BadSlice { index: k, reason: "cup outside the sweep line" });
                    }
                    dirs.insert(pos, !left_up);
                    dirs.insert(pos, left_up);
                }
                Slice::Cap { pos } => {
                    if pos + 1 >= dirs.len() {
                        return Err(LinkError::BadSlice { index: k, reason: "cap outside the sweep line" });
                    }
                    if dirs[pos] == dirs[pos + 1] {
                        return Err(LinkError::BadSlice { index: k, reason: "cap joins equally oriented ends" });
                    }
                    dirs.drain(pos..pos + 2);
                }
                Slice::Cross { pos, .. } => {
                    if pos + 1 >= dirs.len() {
                        return Err(LinkError::BadSlice { index: k, reason: "crossing outside the sweep line" });
                    }
                    dirs.swap(pos, pos + 1);
                }
            }
            max_width = max_width.max(dirs.len());
        }
        if !dirs.is_empty() {
            return Err(LinkError::BadSlice { index: slices.len(), reason: "strands left open at the top" });
        }
        Ok(Self { slices, max_width })
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn max_width(&self) -> usize {
        self.max_width
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| matches!(s, Slice::Cross { .. })).count()
    }

    /// Oriented crossing signs, in slice order.
    pub fn crossing_signs(&self) -> Vec<i8> {
        let mut dirs: Vec<bool> = Vec::new();
        let mut signs = Vec::new();
        for s in &self.slices {
            match *s {
                Slice::Cup { pos, left_up } => {
                    dirs.insert(pos, !left_up);
                    dirs.insert(pos, left_up);
                }
                Slice::Cap { pos } => {
                    dirs.drain(pos..pos + 2);
                }
                Slice::Cross { pos, positive } => {
                    let same = dirs[pos] == dirs[pos + 1];
                    signs.push(if same == positive { 1 } else { -1 });
                    dirs.swap(pos, pos + 1);
                }
            }
        }
        signs
    }

    pub fn writhe(&self) -> i64 {
        self.crossing_signs().iter().map(|&s| s as i64).sum()
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        let slices = self
            .slices
            .iter()
            .map(|s| match *s {
                Slice::Cross { pos, positive } => Slice::Cross { pos, positive: !positive },
                other => other,
            })
            .collect();
        Self { slices, max_width: self.max_width }
    }

    /// Planar diagram with arcs labelled by segment and every crossing
    /// recorded counterclockwise from the incoming under-strand.
    pub fn to_planar(&self) -> PlanarDiagram {
        // Segments are strand pieces between crossings; cups and caps glue them.
        let mut parent: Vec<usize> = Vec::new();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let n = p[y];
                p[y] = r;
                y = n;
            }
            r
        }
        let fresh = |parent: &mut Vec<usize>| {
            parent.push(parent.len());
            parent.len() - 1
        };
        let mut cur: Vec<(usize, bool)> = Vec::new();
        // raw crossings over segment ids: ([slots ccw from incoming under], sign)
        let mut raw: Vec<([usize; 4], i8)> = Vec::new();
        for s in &self.slices {
            match *s {
                Slice::Cup { pos, left_up } => {
                    let seg = fresh(&mut parent);
                    cur.insert(pos, (seg, !left_up));
                    cur.insert(pos, (seg, left_up));
                }
                Slice::Cap { pos } => {
                    let (a, _) = cur[pos];
                    let (b, _) = cur[pos + 1];
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                    cur.drain(pos..pos + 2);
                }
                Slice::Cross { pos, positive } => {
                    let (bl, bl_up) = cur[pos];
                    let (br, br_up) = cur[pos + 1];
                    let tl = fresh(&mut parent);
                    let tr = fresh(&mut parent);
                    let same = bl_up == br_up;
                    let sign = if same == positive { 1 } else { -1 };
                    // σ-type: over BL–TR, under BR–TL. σ⁻¹-type: over BR–TL, under BL–TR.
                    let slots = if positive {
                        if br_up { [br, tr, tl, bl] } else { [tl, bl, br, tr] }
                    } else if bl_up {
                        [bl, br, tr, tl]
                    } else {
                        [tr, tl, bl, br]
                    };
                    raw.push((slots, sign));
                    // strands swap sides
                    cur[pos] = (tl, br_up);
                    cur[pos + 1] = (tr, bl_up);
                }
            }
        }
        let nseg = parent.len();
        let mut label = vec![usize::MAX; nseg];
        let mut next = 0usize;
        let mut crossings = Vec::with_capacity(raw.len());
        for (slots, sign) in &raw {
            let mut arcs = [0usize; 4];
            for (k, &seg) in slots.iter().enumerate() {
                let r = find(&mut parent, seg);
                if label[r] == usize::MAX {
                    label[r] = next;
                    next += 1;
                }
                arcs[k] = label[r];
            }
            crossings.push(PdCrossing { arcs, sign: *sign });
        }
        // segment classes that never touch a crossing are free loops
        let mut touched = vec![false; nseg];
        for (slots, _) in &raw {
            for &seg in slots {
                let r = find(&mut parent, seg);
                touched[r] = true;
            }
        }
        let free_loops = (0..nseg).filter(|&s| find(&mut parent, s) == s && !touched[s]).count();
        PlanarDiagram::from_crossings(crossings, free_loops).expect("sliced diagrams yield consistent planar diagrams")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::BraidWord;

    #[test]
    fn rejects_malformed_slices() {
        assert!(SlicedDiagram::new(vec![Slice::Cup { pos: 0, left_up: true }]).is_err());
        assert!(SlicedDiagram::new(vec![Slice::Cap { pos: 0 }]).is_err());
        assert!(SlicedDiagram::new(vec![
            Slice::Cup { pos: 0, left_up: true },
            Slice::Cup { pos: 2, left_up: true },
            Slice::Cross { pos: 1, positive: true },
            Slice::Cap { pos: 0 },
            Slice::Cap { pos: 0 },
        ])
        .is_err());
    }

    #[test]
    fn braid_closure_signs_follow_letters() {
        let b = BraidWord::parse("3; 1 -2 1 -2").unwrap();
        let d = b.closure_sliced();
        assert_eq!(d.crossing_signs(), vec![1, -1, 1, -1]);
        assert_eq!(d.max_width(), 6);
        let p = d.to_planar();
        assert_eq!(p.components(), 1);
        assert_eq!(p.writhe(), 0);
    }

    #[test]
    fn unknot_closure_is_a_free_loop() {
        let p = BraidWord::parse("1;").unwrap().closure_sliced().to_planar();
        assert_eq!((p.crossings().len(), p.free_loops(), p.components()), (0, 1, 1));
    }
}
