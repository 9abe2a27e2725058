//! Seifert matrix, signature, nullity and Alexander polynomial of a braid
//! closure, checked against the Goeritz form of its diagram.

use knotcover::links::BraidWord;
use knotcover::seifert::{alexander_conway, diagram_inertia, seifert_matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = std::env::args().nth(1).unwrap_or_else(|| "3; 1 1 1 2 -1 2".into());
    let b = BraidWord::parse(&w)?.connected_representative();
    let e = seifert_matrix(&b)?;
    println!("braid {b}");
    for row in e.entries() {
        println!("  {}", row.iter().map(|x| format!("{x:>3}")).collect::<String>());
    }
    let inv = e.inertia();
    println!("signature {}  nullity {}  sgn' {}", inv.signature, inv.nullity, inv.sign);
    println!("det(E + E^T) = {}", e.symmetrized().det());
    let a = alexander_conway(&e);
    match a.in_t() {
        Some(p) => println!("Alexander polynomial {p}"),
        None => println!("Conway potential in q = t^(1/2): {}", a.q_poly),
    }
    let g = diagram_inertia(&b.closure_sliced().to_planar())?;
    println!("Goeritz form gives signature {} nullity {}", g.signature, g.nullity);
    Ok(())
}
