//! Certificates are machine-checkable: decompositions verify by automata
//! equivalence, hardness witnesses by plain simulation, and tampering is
//! caught.
//!
//! ```bash
//! cargo run -p rspq --example certificates
//! ```

use rspq::classify::{classify, verify_decomposition};
use rspq::graph::LabelMode;
use rspq::{Alphabet, Caps, Dfa};

fn main() -> rspq::Result<()> {
    let caps = Caps::default();
    let ab = Alphabet::parse("ab")?;

    // a tractable language and its shortcut decomposition
    let lang = Dfa::from_regex("a*b", &ab)?;
    let verdict = classify(&lang, LabelMode::EdgeLabeled, &caps)?;
    let dec = verdict.decomposition().unwrap();
    println!("a*b decomposes at level {}:", dec.level);
    println!("  short words: {:?}", dec.short_words);
    for c in &dec.components {
        println!(
            "  \"{}\" · middle({} words up to length 3: {:?}) · \"{}\"",
            c.prefix,
            c.middle.num_states(),
            c.middle.enumerate_words(3)?,
            c.suffix
        );
    }
    println!("  verifies: {}", verify_decomposition(&lang, dec, &caps)?);

    // tamper with the middle language: verification fails
    let mut tampered = dec.clone();
    tampered.components[0].middle = Dfa::from_regex("(aa)*", &ab)?;
    println!(
        "  with middle swapped to (aa)*: {}",
        verify_decomposition(&lang, &tampered, &caps)?
    );

    // a hard language and its witness
    let hard = Dfa::from_regex("a*ba*", &ab)?;
    let verdict = classify(&hard, LabelMode::EdgeLabeled, &caps)?;
    let w = verdict.hardness().unwrap();
    println!("\na*ba* is hard; witness:");
    println!(
        "  {:?} · {:?} · {:?} is accepted",
        w.prefix, w.middle, w.suffix
    );
    println!(
        "  {:?} · {:?} · {:?} is rejected, though {:?} ⊑ {:?}",
        w.prefix, w.middle_subword, w.suffix, w.middle_subword, w.middle
    );
    println!(
        "  pumps: prefix {:?}, suffix {:?}",
        w.prefix_pump, w.suffix_pump
    );
    w.validate(&hard)?;
    println!("  every claim re-checks by simulation");
    Ok(())
}
