//! Classify query languages into their complexity regimes.
//!
//! ```bash
//! cargo run -p rspq --example classify_basics
//! ```

use rspq::classify::classify;
use rspq::graph::LabelMode;
use rspq::{Alphabet, Caps, Dfa};

fn main() -> rspq::Result<()> {
    let caps = Caps::default();
    let cases = [
        ("(aa)*", "a"),
        ("a*ba*", "ab"),
        ("(ab)*", "ab"),
        ("a*b", "ab"),
        ("a*|a*ba*", "ab"),
        ("ab|ba", "ab"),
        ("(a|b)*a(a|b)*", "ab"),
        ("()", "ab"),
    ];

    println!(
        "{:<16} {:<14} {:<16} {:<10} aperiodic",
        "language", "label", "certificate", "subword"
    );
    println!("{}", "-".repeat(70));
    for (regex, alphabet) in cases {
        let alphabet = Alphabet::parse(alphabet)?;
        let dfa = Dfa::from_regex_with(regex, &alphabet, &caps)?;
        let verdict = classify(&dfa, LabelMode::EdgeLabeled, &caps)?;
        let certificate = match verdict.decomposition() {
            Some(dec) => format!("level {}", dec.level),
            None => {
                let w = verdict.hardness().unwrap();
                format!("p={} m={} m'={}", w.prefix, w.middle, w.middle_subword)
            }
        };
        println!(
            "{:<16} {:<14} {:<16} {:<10} {:?}",
            regex,
            format!("{:?}", verdict.label),
            certificate,
            verdict.diagnostics.subword_closed,
            verdict.diagnostics.aperiodic,
        );
    }

    // the same language can sit in different regimes on different models:
    // (ab)* is hard on edge-labeled graphs, but the hardness argument does
    // not transfer to vertex-labeled graphs
    let dfa = Dfa::from_regex("(ab)*", &Alphabet::parse("ab")?)?;
    let vertex = classify(&dfa, LabelMode::VertexLabeled, &caps)?;
    println!(
        "\n(ab)* on vertex-labeled graphs: {:?}, caveats {:?}",
        vertex.label, vertex.caveats
    );
    Ok(())
}
