//! The randomized engine: fixed-parameter in the path length, one-sided
//! error. Useful precisely where the language is hard and no certificate
//! exists.
//!
//! ```bash
//! cargo run -p rspq --example color_coding
//! ```

use rspq::engines::{brute_query, color_coding_query, Want};
use rspq::graph::{LabelMode, LabeledGraph};
use rspq::{Alphabet, Caps, Dfa};

fn main() -> rspq::Result<()> {
    let caps = Caps::default();
    let a = Alphabet::parse("a")?;
    let even = Dfa::from_regex("(aa)*", &a)?; // NP_HARD in general

    let graph = LabeledGraph::gen_random(12, 26, &a, LabelMode::EdgeLabeled, 16)?;
    let (x, y) = (0, 11);
    let truth = brute_query(&graph, &even, x, y, Want::Shortest, &caps)?;
    println!(
        "ground truth (exact oracle): {:?}, shortest {:?}",
        truth.answer, truth.length
    );

    // one-sided error: a yes always carries a verified simple path; a no is
    // wrong with probability at most delta. The shortest satisfying path
    // here has 4 edges, so ℓ = 2 is a certain no and ℓ ≥ 4 finds it.
    for (bound, delta) in [(2, 0.01), (4, 0.01), (6, 0.001)] {
        let r = color_coding_query(&graph, &even, x, y, bound, delta, 42, &caps)?;
        match &r.witness {
            Some(w) => {
                w.validate(&graph, &even)?;
                println!(
                    "ℓ={bound} δ={delta}: yes after {} trial(s): path {:?}, word {:?}",
                    r.stats.trials, w.vertices, w.word
                );
            }
            None => println!(
                "ℓ={bound} δ={delta}: no after {} trials (wrong with probability ≤ {delta})",
                r.stats.trials
            ),
        }
    }

    // reproducibility: the same seed replays the same trials
    let r1 = color_coding_query(&graph, &even, x, y, 6, 0.01, 7, &caps)?;
    let r2 = color_coding_query(&graph, &even, x, y, 6, 0.01, 7, &caps)?;
    assert_eq!(r1, r2);
    println!(
        "seeded runs are identical: trials={} answer={:?}",
        r1.stats.trials, r1.answer
    );
    Ok(())
}
