//! Orders of the first homology of p-fold cyclic branched covers of knots.

use knotcover::covers::h1_order_pfold;
use knotcover::harness::bundled_corpus;
use knotcover::seifert::{alexander_conway, seifert_matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ps = [2usize, 3, 4, 5, 6];
    println!("{:<8} {}", "knot", ps.iter().map(|p| format!("{:>10}", format!("p={p}"))).collect::<String>());
    for e in bundled_corpus().into_iter().filter(|e| e.braid.components() == 1) {
        let delta = alexander_conway(&seifert_matrix(&e.braid.connected_representative())?).in_t().expect("knot");
        let row: String = ps.iter().map(|&p| format!("{:>10}", h1_order_pfold(&delta, p).to_string())).collect();
        println!("{:<8} {row}", e.name);
    }
    Ok(())
}
