//! Braid closures as planar diagrams and PD codes.

use knotcover::jones::bracket_naive;
use knotcover::links::{BraidWord, PlanarDiagram};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = BraidWord::parse("3; 1 -2 1 -2")?;
    let pd = b.closure_sliced().to_planar();
    let text = pd.to_pd_string();
    println!("{b} closes to {text}");
    println!("components {}, writhe {}, faces {}", pd.components(), pd.writhe(), pd.faces().len());

    let back = PlanarDiagram::parse_pd(&text)?;
    println!("reparsed: same bracket {}", bracket_naive(&back)? == bracket_naive(&pd)?);

    let trefoil = PlanarDiagram::parse_pd("PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]")?;
    println!("PD trefoil: writhe {}, bracket {}", trefoil.writhe(), bracket_naive(&trefoil)?);
    Ok(())
}
