//! The Lescop invariant of surgery on framed links, from an input file or
//! a few built-in examples.

use knotcover::lescop::{lescop_terms, parse_lescop, FramedLink, ZetaProvider};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inputs: Vec<(String, FramedLink, ZetaProvider)> = match std::env::args().nth(1) {
        Some(path) => {
            let inp = parse_lescop(&std::fs::read_to_string(&path)?)?;
            vec![(path, inp.link, inp.zeta)]
        }
        None => vec![
            ("+1-framed unknot (S^3)".into(), FramedLink::unknot(1), ZetaProvider::zero()),
            ("0-framed unknot (S^2 x S^1)".into(), FramedLink::unknot(0), ZetaProvider::zero()),
            ("2-framed unknot (lens space L(2,1))".into(), FramedLink::unknot(2), ZetaProvider::zero()),
            ("0-framed Hopf link (S^3)".into(), FramedLink::new(vec![vec![0, 1], vec![1, 0]])?, ZetaProvider::zero()),
            ("(1,1)-framed Hopf link".into(), FramedLink::new(vec![vec![1, 1], vec![1, 1]])?, ZetaProvider::zero()),
        ],
    };
    for (name, link, zeta) in inputs {
        let t = lescop_terms(&link, &zeta)?;
        println!("{name}: lambda = {}  (zeta {}, h0 {}, h1 {}, h2 {})", t.lambda, t.d, t.h0, t.h1, t.h2);
    }
    Ok(())
}
