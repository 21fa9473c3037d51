//! The three labeling models and their word conventions: edge labels,
//! vertex labels, and the interleaving of both. All engines agree on the
//! same convention.
//!
//! ```bash
//! cargo run -p rspq --example vertex_labels
//! ```

use rspq::classify::classify;
use rspq::engines::{brute_query, tractable_query, Want};
use rspq::graph::LabeledGraph;
use rspq::{Alphabet, Caps, Dfa};

fn main() -> rspq::Result<()> {
    let caps = Caps::default();
    let ab = Alphabet::parse("ab")?;

    // the same 3-vertex chain in each model
    let edge = LabeledGraph::parse("graph edge-labeled 3\nedge 0 1 a\nedge 1 2 b\n")?;
    let vertex = LabeledGraph::parse(
        "graph vertex-labeled 3\nnode 0 a\nnode 1 a\nnode 2 b\nedge 0 1\nedge 1 2\n",
    )?;
    let both = LabeledGraph::parse(
        "graph vertex-edge-labeled 3\nnode 0 a\nnode 1 a\nnode 2 b\nedge 0 1 a\nedge 1 2 a\n",
    )?;

    let lang = Dfa::from_regex("a*b", &ab)?;
    for g in [&edge, &vertex, &both] {
        let r = brute_query(g, &lang, 0, 2, Want::Shortest, &caps)?;
        match &r.witness {
            // ℓ edges make a word of length ℓ, ℓ+1 or 2ℓ+1 depending on mode
            Some(w) => println!(
                "{:<22} word {:?} (length {} from {} edges)",
                g.mode().name(),
                w.word,
                w.word.len(),
                w.length
            ),
            None => println!("{:<22} no match", g.mode().name()),
        }
    }

    // tractable certificates transfer to every model: the engine normalizes
    // the instance and maps the witness back
    let verdict = classify(&lang, vertex.mode(), &caps)?;
    let dec = verdict.decomposition().unwrap();
    let fast = tractable_query(&vertex, dec, &lang, 0, 2, Want::Shortest, &caps)?;
    let slow = brute_query(&vertex, &lang, 0, 2, Want::Shortest, &caps)?;
    assert_eq!(fast.length, slow.length);
    println!(
        "\ncertificate-driven engine agrees on the vertex-labeled chain: length {:?}",
        fast.length
    );
    Ok(())
}
