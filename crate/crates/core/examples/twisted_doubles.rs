//! Twisted doubles of knots: the double cover invariant is affine in the
//! companion's second Alexander derivative, for each twisting.

use knotcover::covers::verify_affine_law;
use knotcover::harness::{AFFINE_COMPANIONS, AFFINE_TWISTS};
use knotcover::links::{BraidWord, Clasp};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let knots: Vec<BraidWord> = AFFINE_COMPANIONS.iter().map(|(_, b)| BraidWord::parse(b)).collect::<Result<_, _>>()?;
    for clasp in [Clasp::Positive, Clasp::Negative] {
        println!("{clasp:?} clasp");
        for m in AFFINE_TWISTS {
            let fit = verify_affine_law(m, &knots, clasp)?;
            let values: Vec<String> =
                fit.points.iter().zip(AFFINE_COMPANIONS).map(|(p, (n, _))| format!("{n}:{}", p.lambda2)).collect();
            println!(
                "  m = {m:>2}: a = {}, b = {}   [{}]  exact fit: {}",
                fit.a,
                fit.b,
                values.join(" "),
                fit.report.all_passed()
            );
        }
    }
    Ok(())
}
