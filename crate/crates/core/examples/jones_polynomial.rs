//! Jones polynomials of braid closures, computed two ways.
//!
//! Run with `cargo run --example jones_polynomial -- "3; 1 -2 1 -2"`.

use knotcover::jones::{bracket_naive, bracket_sweep, jones, jones_at_minus1, jones_v};
use knotcover::links::BraidWord;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words = if args.is_empty() { vec!["2; 1 1 1".to_string(), "3; 1 -2 1 -2".into(), "3; 1 -2 1 -2 1 -2".into()] } else { args };
    for w in words {
        let b = BraidWord::parse(&w)?;
        let d = b.closure_sliced();
        let sweep = bracket_sweep(&d);
        let naive = bracket_naive(&d.to_planar())?;
        let j = jones(&b)?;
        let (at, deriv) = jones_at_minus1(&j);
        println!("{b}  ({} components)", b.components());
        println!("  bracket  {sweep}");
        println!("  naive state sum agrees: {}", naive == sweep);
        println!("  V(q)     {}", jones_v(&b)?);
        println!("  J(q)     {}", j.poly);
        println!("  J(-1) = {at}, J'(-1) = {deriv}");
    }
    Ok(())
}
