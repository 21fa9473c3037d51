//! Deterministic instance generators and the graph text format.
//!
//! ```bash
//! cargo run -p rspq --example generate_graphs
//! ```

use rspq::graph::{GridScheme, LabelMode, LabeledGraph};
use rspq::Alphabet;

fn main() -> rspq::Result<()> {
    let ab = Alphabet::parse("ab")?;

    // seeded random multigraph: same seed, same bytes
    let g1 = LabeledGraph::gen_random(6, 9, &ab, LabelMode::EdgeLabeled, 7)?;
    let g2 = LabeledGraph::gen_random(6, 9, &ab, LabelMode::EdgeLabeled, 7)?;
    assert_eq!(g1.to_text(), g2.to_text());
    println!("random 6-vertex, 9-edge graph (seed 7):\n{}", g1.to_text());

    // the text form round-trips through the parser
    let parsed = LabeledGraph::parse(&g1.to_text())?;
    assert_eq!(parsed.to_text(), g1.to_text());

    // grid with checkerboard labels: every path alternates a and b
    let grid = LabeledGraph::gen_grid(3, 3, &GridScheme::Alternating('a', 'b'), 0);
    println!("3x3 grid, alternating labels:\n{}", grid.to_text());

    // vertex-labeled random graph
    let vg = LabeledGraph::gen_random(4, 5, &ab, LabelMode::VertexLabeled, 3)?;
    println!("vertex-labeled graph (seed 3):\n{}", vg.to_text());
    Ok(())
}
