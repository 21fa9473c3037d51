//! Polynomial versus exponential regimes, measured: the certificate-driven
//! engine on growing chains, and the exact oracle hitting the combinatorial
//! wall on grid graphs.
//!
//! ```bash
//! cargo run -p rspq --example bench_scaling --release
//! ```

use rspq::classify::classify;
use rspq::engines::{brute_query, tractable_query, Want};
use rspq::graph::{EdgeRec, GridScheme, LabelMode, LabeledGraph};
use rspq::{Alphabet, Caps, Dfa, Error};
use std::time::Instant;

fn main() -> rspq::Result<()> {
    let caps = Caps::default();
    let ab = Alphabet::parse("ab")?;

    println!("chains under a*b: both engines answer yes, one stays linear");
    let lang = Dfa::from_regex("a*b", &ab)?;
    let dec = classify(&lang, LabelMode::EdgeLabeled, &caps)?
        .decomposition()
        .unwrap()
        .clone();
    println!("{:>8} {:>16} {:>16}", "n", "tractable ms", "brute ms");
    for n in [64usize, 128, 256, 512] {
        let edges: Vec<EdgeRec> = (0..n - 1)
            .map(|i| EdgeRec {
                from: i,
                to: i + 1,
                label: Some(if i + 2 == n { 'b' } else { 'a' }),
            })
            .collect();
        let chain = LabeledGraph::new(LabelMode::EdgeLabeled, n, None, edges)?;
        let t = Instant::now();
        let fast = tractable_query(&chain, &dec, &lang, 0, n - 1, Want::Shortest, &caps)?;
        let fast_ms = t.elapsed().as_secs_f64() * 1e3;
        let t = Instant::now();
        let slow = brute_query(&chain, &lang, 0, n - 1, Want::Shortest, &caps)?;
        let slow_ms = t.elapsed().as_secs_f64() * 1e3;
        assert_eq!(fast.length, slow.length);
        println!("{n:>8} {fast_ms:>16.3} {slow_ms:>16.3}");
    }

    println!("\ngrids under (aa)*: the exact oracle enumerates every monotone path");
    let a = Alphabet::parse("a")?;
    let even = Dfa::from_regex("(aa)*", &a)?;
    let mut grid_caps = caps.clone();
    grid_caps.brute_expansions = 2_000_000;
    println!(
        "{:>10} {:>10} {:>14} {:>12}",
        "grid", "answer", "expansions", "ms"
    );
    for (w, h) in [(4usize, 3usize), (6, 5), (8, 7), (10, 9), (12, 11)] {
        let grid = LabeledGraph::gen_grid(w, h, &GridScheme::Constant('a'), 0);
        let t = Instant::now();
        match brute_query(&grid, &even, 0, w * h - 1, Want::Exists, &grid_caps) {
            Ok(r) => println!(
                "{:>10} {:>10} {:>14} {:>12.3}",
                format!("{w}x{h}"),
                if r.is_yes() { "yes" } else { "no" },
                r.stats.expansions,
                t.elapsed().as_secs_f64() * 1e3
            ),
            Err(Error::CapExceeded { .. }) => {
                println!(
                    "{:>10} {:>10} {:>14} {:>12}",
                    format!("{w}x{h}"),
                    "—",
                    "budget!",
                    "—"
                );
            }
            Err(e) => return Err(e),
        }
    }
    println!("\n(expansion counts follow the lattice-path count C(w+h-2, w-1))");
    Ok(())
}
