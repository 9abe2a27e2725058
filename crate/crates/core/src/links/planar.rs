use std::collections::VecDeque;
use std::fmt::Write as _;

use super::LinkError;

/// A crossing with its four arcs listed counterclockwise, starting at the
/// incoming under-strand. `sign` is the oriented crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PdCrossing {
    pub arcs: [usize; 4],
    pub sign: i8,
}

impl PdCrossing {
    /// Slots through which strands enter the crossing.
    pub fn incoming(&self) -> [usize; 2] {
        if self.sign > 0 { [0, 3] } else { [0, 1] }
    }

    /// Slot where the strand entering at `slot` leaves.
    pub fn exit_of(&self, slot: usize) -> usize {
        (slot + 2) % 4
    }
}

/// An oriented planar diagram: crossings plus crossingless loop components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<PdCrossing>,
    free_loops: usize,
    arc_count: usize,
    /// arc -> its two slot occurrences (crossing, slot)
    ends: Vec<[(usize, usize); 2]>,
    arc_component: Vec<usize>,
    components: usize,
}

/// A corner of a face: crossing index and corner `j` between slots `j` and `j+1`.
pub type Corner = (usize, usize);

impl PlanarDiagram {
    /// Checks that arcs are labelled `0..E`, each used in exactly two slots,
    /// entered once and left once.
    pub fn from_crossings(crossings: Vec<PdCrossing>, free_loops: usize) -> Result<Self, LinkError> {
        let arc_count = crossings.len() * 2;
        let mut ends: Vec<Vec<(usize, usize)>> = vec![Vec::new(); arc_count];
        for (ci, c) in crossings.iter().enumerate() {
            for (k, &a) in c.arcs.iter().enumerate() {
                if a >= arc_count {
                    return Err(LinkError::BadDiagram(format!("arc {} out of range", a)));
                }
                ends[a].push((ci, k));
            }
        }
        let mut ends2 = Vec::with_capacity(arc_count);
        for (a, e) in ends.iter().enumerate() {
            if e.len() != 2 {
                return Err(LinkError::BadDiagram(format!("arc {} appears {} times", a, e.len())));
            }
            ends2.push([e[0], e[1]]);
        }
        for (a, e) in ends2.iter().enumerate() {
            let ins = e.iter().filter(|&&(c, k)| crossings[c].incoming().contains(&k)).count();
            if ins != 1 {
                return Err(LinkError::BadDiagram(format!("arc {} is not oriented consistently", a)));
            }
        }
        let mut d = Self { crossings, free_loops, arc_count, ends: ends2, arc_component: vec![usize::MAX; arc_count], components: 0 };
        d.label_components();
        Ok(d)
    }

    fn label_components(&mut self) {
        let mut comp = 0;
        for start in 0..self.arc_count {
            if self.arc_component[start] != usize::MAX {
                continue;
            }
            let mut a = start;
            while self.arc_component[a] == usize::MAX {
                self.arc_component[a] = comp;
                a = self.next_arc(a);
            }
            comp += 1;
        }
        self.components = comp;
    }

    /// Following the orientation, the arc after `a`.
    pub fn next_arc(&self, a: usize) -> usize {
        let (c, k) = self.head(a);
        let x = &self.crossings[c];
        x.arcs[x.exit_of(k)]
    }

    /// Slot where arc `a` enters a crossing.
    pub fn head(&self, a: usize) -> (usize, usize) {
        let e = self.ends[a];
        if self.crossings[e[0].0].incoming().contains(&e[0].1) { e[0] } else { e[1] }
    }

    /// Slot where arc `a` leaves a crossing.
    pub fn tail(&self, a: usize) -> (usize, usize) {
        let e = self.ends[a];
        if self.crossings[e[0].0].incoming().contains(&e[0].1) { e[1] } else { e[0] }
    }

    /// The other occurrence of the arc at `(crossing, slot)`.
    pub fn other_end(&self, c: usize, k: usize) -> (usize, usize) {
        let a = self.crossings[c].arcs[k];
        let e = self.ends[a];
        if e[0] == (c, k) { e[1] } else { e[0] }
    }

    pub fn crossings(&self) -> &[PdCrossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn arc_component(&self, a: usize) -> usize {
        self.arc_component[a]
    }

    /// Components, free loops included.
    pub fn components(&self) -> usize {
        self.components + self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Faces of the diagram as cycles of corners, each traversed with the
    /// face on the left.
    pub fn faces(&self) -> Vec<Vec<Corner>> {
        let n = self.crossings.len();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for c0 in 0..n {
            for j0 in 0..4 {
                if seen[c0][j0] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut c, mut j) = (c0, j0);
                while !seen[c][j] {
                    seen[c][j] = true;
                    face.push((c, j));
                    // leave through slot j, arrive at k', land on corner k'-1
                    let (c2, k2) = self.other_end(c, j);
                    c = c2;
                    j = (k2 + 3) % 4;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// True when the crossings form a single connected planar graph and there
    /// are no free loops (Euler characteristic check `F = c + 2`).
    pub fn is_connected(&self) -> bool {
        if self.free_loops > 0 {
            return self.crossings.is_empty() && self.free_loops == 1;
        }
        if self.crossings.is_empty() {
            return false;
        }
        self.faces().len() == self.crossings.len() + 2
    }

    /// True when the crossings form one connected planar graph; free loops
    /// are not considered.
    pub fn is_connected_ignoring_loops(&self) -> bool {
        !self.crossings.is_empty() && self.faces().len() == self.crossings.len() + 2
    }

    /// Parse `PD[X(a,b,c,d), ...]` (also accepts square brackets), with arcs
    /// labelled by positive integers and each `X` listed counterclockwise
    /// from the incoming under-strand.
    pub fn parse_pd(text: &str) -> Result<Self, LinkError> {
        let t = text.trim();
        let body = t
            .strip_prefix("PD[")
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| LinkError::Syntax("PD code must look like PD[X(...),...]".into()))?;
        let mut quads: Vec<[usize; 4]> = Vec::new();
        let mut rest = body.trim();
        while !rest.is_empty() {
            let r = rest.strip_prefix('X').ok_or_else(|| LinkError::Syntax(format!("expected X at {:?}", rest)))?;
            let (open, close) = match r.chars().next() {
                Some('(') => ('(', ')'),
                Some('[') => ('[', ']'),
                _ => return Err(LinkError::Syntax("expected ( or [ after X".into())),
            };
            let r = &r[open.len_utf8()..];
            let end = r.find(close).ok_or_else(|| LinkError::Syntax("unterminated crossing".into()))?;
            let nums = r[..end]
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| LinkError::Syntax(format!("bad arc label {:?}", s.trim()))))
                .collect::<Result<Vec<_>, _>>()?;
            if nums.len() != 4 || nums.contains(&0) {
                return Err(LinkError::Syntax("each crossing needs four positive arc labels".into()));
            }
            quads.push([nums[0], nums[1], nums[2], nums[3]]);
            rest = r[end + 1..].trim_start().trim_start_matches(',').trim_start();
        }
        // compress labels to 0..E
        let mut labels: Vec<usize> = quads.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let idx = |l: usize| labels.binary_search(&l).unwrap();
        let quads: Vec<[usize; 4]> = quads.iter().map(|q| q.map(idx)).collect();
        let signs = infer_signs(&quads)?;
        let crossings = quads.iter().zip(signs).map(|(q, s)| PdCrossing { arcs: *q, sign: s }).collect();
        Self::from_crossings(crossings, 0)
    }

    /// PD text with arcs renumbered `1, 2, …` along each component.
    pub fn to_pd_string(&self) -> String {
        let mut new_label = vec![0usize; self.arc_count];
        let mut next = 1;
        for start in 0..self.arc_count {
            if new_label[start] != 0 {
                continue;
            }
            let mut a = start;
            while new_label[a] == 0 {
                new_label[a] = next;
                next += 1;
                a = self.next_arc(a);
            }
        }
        let mut s = String::from("PD[");
        for (i, c) in self.crossings.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let l = c.arcs.map(|a| new_label[a]);
            write!(s, "X({},{},{},{})", l[0], l[1], l[2], l[3]).unwrap();
        }
        s.push(']');
        s
    }
}

/// Orient the over-strands by propagating along arcs; components that never
/// pass under anything fall back to the label order `d → b` when `b = d + 1`.
fn infer_signs(quads: &[[usize; 4]]) -> Result<Vec<i8>, LinkError> {
    let arcs = quads.iter().flatten().max().map_or(0, |m| m + 1);
    let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); arcs];
    for (ci, q) in quads.iter().enumerate() {
        for (k, &a) in q.iter().enumerate() {
            occ[a].push((ci, k));
        }
    }
    if let Some(a) = occ.iter().position(|o| o.len() != 2) {
        return Err(LinkError::BadDiagram(format!("arc {} appears {} times", a + 1, occ[a].len())));
    }
    // incoming[c][k]: Some(true) if the strand enters at that slot
    let mut incoming: Vec<[Option<bool>; 4]> = vec![[None; 4]; quads.len()];
    let mut queue = VecDeque::new();
    let set = |inc: &mut Vec<[Option<bool>; 4]>, q: &mut VecDeque<(usize, usize)>, c: usize, k: usize, v: bool| -> Result<(), LinkError> {
        match inc[c][k] {
            Some(old) if old != v => Err(LinkError::BadDiagram("inconsistent orientation".into())),
            Some(_) => Ok(()),
            None => {
                inc[c][k] = Some(v);
                q.push_back((c, k));
                Ok(())
            }
        }
    };
    for c in 0..quads.len() {
        set(&mut incoming, &mut queue, c, 0, true)?;
        set(&mut incoming, &mut queue, c, 2, false)?;
    }
    let mut seed = 0;
    loop {
        while let Some((c, k)) = queue.pop_front() {
            let v = incoming[c][k].unwrap();
            // opposite slot of the same strand
            set(&mut incoming, &mut queue, c, (k + 2) % 4, !v)?;
            // other end of the arc
            let a = quads[c][k];
            let (c2, k2) = if occ[a][0] == (c, k) { occ[a][1] } else { occ[a][0] };
            set(&mut incoming, &mut queue, c2, k2, !v)?;
        }
        while seed < quads.len() && incoming[seed][3].is_some() {
            seed += 1;
        }
        if seed == quads.len() {
            break;
        }
        let q = quads[seed];
        let d_in = q[1] == q[3] + 1 || q[3] > q[1] + 1;
        set(&mut incoming, &mut queue, seed, 3, d_in)?;
    }
    Ok(incoming.iter().map(|inc| if inc[3] == Some(true) { 1 } else { -1 }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::BraidWord;

    #[test]
    fn trefoil_pd_parses() {
        // right-handed trefoil in the usual table labelling
        let d = PlanarDiagram::parse_pd("PD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]").unwrap();
        assert_eq!(d.components(), 1);
        assert_eq!(d.writhe().abs(), 3);
        assert_eq!(d.faces().len(), 5);
        assert!(d.is_connected());
    }

    #[test]
    fn malformed_pd_is_rejected() {
        assert!(matches!(PlanarDiagram::parse_pd("X(1,2,3,4)"), Err(LinkError::Syntax(_))));
        assert!(matches!(PlanarDiagram::parse_pd("PD[X(1,2,3)]"), Err(LinkError::Syntax(_))));
        assert!(PlanarDiagram::parse_pd("PD[X(1,2,3,4)]").is_err());
    }

    #[test]
    fn braid_pd_round_trip_keeps_signs() {
        for s in ["2; 1 1", "3; 1 -2 1 -2", "3; 1 -2 1 -2 1 -2", "2; -1 -1 -1", "4; 1 1 2 -1 -3 2 -3"] {
            let p = BraidWord::parse(s).unwrap().closure_sliced().to_planar();
            let q = PlanarDiagram::parse_pd(&p.to_pd_string()).unwrap();
            let mut a: Vec<i8> = p.crossings().iter().map(|c| c.sign).collect();
            let mut b: Vec<i8> = q.crossings().iter().map(|c| c.sign).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{}", s);
            assert_eq!(p.components(), q.components());
            assert_eq!(p.faces().len(), q.faces().len());
        }
    }
}
