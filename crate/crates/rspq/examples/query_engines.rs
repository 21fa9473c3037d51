//! Evaluate regular simple path queries with the exact oracle and the
//! certificate-driven polynomial engine, for existence and shortest paths.
//!
//! ```bash
//! cargo run -p rspq --example query_engines
//! ```

use rspq::classify::classify;
use rspq::engines::{brute_query, tractable_query, Want};
use rspq::graph::{LabelMode, LabeledGraph};
use rspq::{Alphabet, Caps, Dfa};

fn main() -> rspq::Result<()> {
    let caps = Caps::default();
    let ab = Alphabet::parse("ab")?;

    // a graph with a short b-detour and a long a-corridor
    let graph = LabeledGraph::parse(
        "graph edge-labeled 6
         edge 0 1 a
         edge 1 2 a
         edge 2 3 a
         edge 3 5 b
         edge 0 4 a
         edge 4 5 b
         edge 5 1 a   # a back edge into the corridor
        ",
    )?;
    let lang = Dfa::from_regex("a*b", &ab)?;
    let verdict = classify(&lang, LabelMode::EdgeLabeled, &caps)?;
    let dec = verdict.decomposition().expect("a*b is tractable");

    for want in [Want::Exists, Want::Shortest] {
        println!("== {want:?} ==");
        let exact = brute_query(&graph, &lang, 0, 5, want, &caps)?;
        let fast = tractable_query(&graph, dec, &lang, 0, 5, want, &caps)?;
        for r in [&exact, &fast] {
            let w = r.witness.as_ref().unwrap();
            println!(
                "  {:<10} path {:?}  word {:?}  length {}  ({} expansions)",
                r.engine.name(),
                w.vertices,
                w.word,
                w.length,
                r.stats.expansions
            );
        }
        assert_eq!(exact.length.is_some(), fast.length.is_some());
    }

    // a negative query: the only b-edge into 4 is unreachable without
    // passing through 4 itself
    let trap = LabeledGraph::parse("graph edge-labeled 3\nedge 0 1 a\nedge 1 2 a\nedge 2 1 b\n")?;
    let r = tractable_query(&trap, dec, &lang, 0, 1, Want::Exists, &caps)?;
    println!("trap graph 0 → 1 under a*b: {:?}", r.answer);
    Ok(())
}
