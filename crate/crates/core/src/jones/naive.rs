use num_bigint::BigInt;

use crate::algebra::{IntLaurent, Laurent};
use crate::links::PlanarDiagram;

use super::JonesError;

/// Crossing limit for the `2^c` state sum.
pub const NAIVE_LIMIT: usize = 18;

/// Kauffman bracket by summing over all `2^c` smoothings. At a crossing
/// `X(a,b,c,d)` the A-smoothing joins `a–b` and `c–d`.
pub fn bracket_naive(d: &PlanarDiagram) -> Result<IntLaurent, JonesError> {
    let c = d.crossings().len();
    if c > NAIVE_LIMIT {
        return Err(JonesError::TooLarge { crossings: c, limit: NAIVE_LIMIT });
    }
    let arcs = d.arc_count();
    // loops counts to number of A-smoothings
    let mut tally: Vec<Vec<i64>> = vec![vec![0; c + 1]; arcs + d.free_loops() + 2];
    let mut parent = vec![0usize; arcs];
    for state in 0u32..(1u32 << c) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut a_count = 0;
        for (k, x) in d.crossings().iter().enumerate() {
            let [p, q, r, s] = x.arcs;
            if state >> k & 1 == 0 {
                a_count += 1;
                union(&mut parent, p, q);
                union(&mut parent, r, s);
            } else {
                union(&mut parent, p, s);
                union(&mut parent, q, r);
            }
        }
        let loops = (0..arcs).filter(|&i| find(&mut parent, i) == i).count() + d.free_loops();
        tally[loops][a_count] += 1;
    }
    let delta: IntLaurent = Laurent::from_terms("A", [(2, BigInt::from(-1)), (-2, BigInt::from(-1))]);
    let mut out = Laurent::zero("A");
    for (loops, row) in tally.iter().enumerate() {
        if loops == 0 || row.iter().all(|&n| n == 0) {
            continue;
        }
        let mut body = Laurent::zero("A");
        for (a, &n) in row.iter().enumerate() {
            body.add_term(2 * a as i64 - c as i64, BigInt::from(n));
        }
        out = &out + &(&body * &delta.pow(loops as u32 - 1));
    }
    Ok(out)
}

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

fn union(p: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(p, a), find(p, b));
    if ra != rb {
        p[ra] = rb;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::BraidWord;

    #[test]
    fn bracket_examples() {
        let br = |s: &str| bracket_naive(&BraidWord::parse(s).unwrap().closure_sliced().to_planar()).unwrap();
        let a = |t: &[(i64, i64)]| Laurent::from_terms("A", t.iter().map(|(e, c)| (*e, BigInt::from(*c))));
        assert_eq!(br("1;"), a(&[(0, 1)]));
        assert_eq!(br("2;"), a(&[(2, -1), (-2, -1)]));
        assert_eq!(br("2; 1 1"), a(&[(4, -1), (-4, -1)]));
    }

    #[test]
    fn too_large_is_an_error() {
        let b = BraidWord::parse(&format!("2;{}", " 1".repeat(19))).unwrap();
        assert_eq!(
            bracket_naive(&b.closure_sliced().to_planar()),
            Err(JonesError::TooLarge { crossings: 19, limit: 18 })
        );
    }
}
