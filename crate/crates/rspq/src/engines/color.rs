use super::{check_vertex, EngineKind, QueryResult, QueryStats, Stepper};
use crate::automata::Dfa;
use crate::config::Caps;
use crate::error::{CapKind, Error, Result};
use crate::graph::{LabeledGraph, PathWitness};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, VecDeque};

/// Randomized fixed-parameter engine, parameterized by the path length.
///
/// Runs `N = ⌈e^(ℓ+1) · ln(1/δ)⌉` independent trials. Each trial colors the
/// vertices uniformly with ℓ+1 colors (a deterministic stream per trial,
/// derived from the seed) and solves, by dynamic programming over
/// (color set, vertex, automaton state), whether a *colorful* walk of at
/// most ℓ edges from x reaches y in an accepting state. A colorful walk
/// never repeats a color, hence never a vertex, so any hit is already a
/// simple path and is returned as a verified witness.
///
/// One-sided error: `yes` answers are always correct; a `no` is wrong with
/// probability at most δ when a simple path of ≤ ℓ edges exists, because
/// each trial makes the shortest such path colorful with probability at
/// least `(ℓ+1)!/(ℓ+1)^(ℓ+1) ≥ e^-(ℓ+1)`.
#[allow(clippy::too_many_arguments)]
pub fn color_coding_query(
    g: &LabeledGraph,
    d: &Dfa,
    x: usize,
    y: usize,
    max_edges: usize,
    delta: f64,
    seed: u64,
    caps: &Caps,
) -> Result<QueryResult> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::IncompatibleFlags(format!(
            "failure probability must be in (0, 1), got {delta}"
        )));
    }
    let colors = max_edges + 1;
    let trials = (std::f64::consts::E.powi(colors as i32) * (1.0 / delta).ln()).ceil();
    if colors > 31 || !trials.is_finite() || trials as u64 > caps.color_trials {
        return Err(Error::CapExceeded {
            kind: CapKind::ColorTrials,
            limit: caps.color_trials,
        });
    }
    let trials = (trials as u64).max(1);

    let mut stats = QueryStats::default();
    let stepper = Stepper::new(g, d);
    let Some(start_state) = stepper.start(x) else {
        stats.trials = trials;
        return Ok(QueryResult::no(EngineKind::ColorCoding, stats));
    };

    let mut coloring: Vec<u32> = vec![0; g.num_vertices()];
    for trial in 0..trials {
        // same seed, distinct stream per trial: trials are independent and
        // reproducible in any order
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        for c in coloring.iter_mut() {
            *c = rng.random_range(0..colors as u32);
        }
        stats.trials = trial + 1;
        if let Some((vertices, edges)) =
            colorful_walk(g, &stepper, d, x, y, start_state, &coloring, &mut stats)
        {
            let witness = PathWitness::from_path(g, vertices, edges)?;
            witness.validate(g, d)?;
            return Ok(QueryResult::yes(witness, EngineKind::ColorCoding, stats));
        }
    }
    Ok(QueryResult::no(EngineKind::ColorCoding, stats))
}

type Node = (u32, usize, usize); // (color set, vertex, state)

/// Breadth-first dynamic program over (color set, vertex, state): each step
/// may only enter a vertex whose color is not yet in the set.
#[allow(clippy::too_many_arguments)]
fn colorful_walk(
    g: &LabeledGraph,
    stepper: &Stepper<'_>,
    d: &Dfa,
    x: usize,
    y: usize,
    start_state: usize,
    coloring: &[u32],
    stats: &mut QueryStats,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let start: Node = (1 << coloring[x], x, start_state);
    let mut parent: HashMap<Node, Option<(Node, usize)>> = HashMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some(node) = queue.pop_front() {
        let (set, v, q) = node;
        stats.expansions += 1;
        if v == y && d.is_accepting(q) {
            let mut vertices = vec![v];
            let mut edges = Vec::new();
            let mut cur = node;
            while let Some((prev, e)) = parent[&cur] {
                edges.push(e);
                vertices.push(prev.1);
                cur = prev;
            }
            vertices.reverse();
            edges.reverse();
            return Some((vertices, edges));
        }
        for &e in g.out_edges(v) {
            let edge = g.edge(e);
            let color = coloring[edge.to];
            if set & (1 << color) != 0 {
                continue;
            }
            let Some(nq) = stepper.step(q, edge) else {
                continue;
            };
            let next: Node = (set | (1 << color), edge.to, nq);
            if let std::collections::hash_map::Entry::Vacant(slot) = parent.entry(next) {
                slot.insert(Some((node, e)));
                queue.push_back(next);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn single_edge_always_found() {
        let g = LabeledGraph::parse("graph edge-labeled 2\nedge 0 1 a\n").unwrap();
        let d = Dfa::from_regex("a", &ab()).unwrap();
        let r = color_coding_query(&g, &d, 0, 1, 1, 0.01, 7, &Caps::default()).unwrap();
        assert!(r.is_yes());
        let w = r.witness.unwrap();
        assert_eq!(w.word, "a");
        assert_eq!(w.length, 1);
    }

    #[test]
    fn no_path_is_always_no() {
        let g = LabeledGraph::parse("graph edge-labeled 3\nedge 0 1 a\n").unwrap();
        let d = Dfa::from_regex("a*", &ab()).unwrap();
        for seed in 0..20 {
            let r = color_coding_query(&g, &d, 0, 2, 2, 0.2, seed, &Caps::default()).unwrap();
            assert!(!r.is_yes());
        }
    }

    #[test]
    fn respects_the_length_parameter() {
        // the only accepted path needs 3 edges; ℓ = 2 must answer no
        let g = LabeledGraph::parse("graph edge-labeled 4\nedge 0 1 a\nedge 1 2 a\nedge 2 3 a\n")
            .unwrap();
        let a = Alphabet::parse("a").unwrap();
        let d = Dfa::from_regex("aaa", &a).unwrap();
        let r = color_coding_query(&g, &d, 0, 3, 2, 0.05, 3, &Caps::default()).unwrap();
        assert!(!r.is_yes());
        let r = color_coding_query(&g, &d, 0, 3, 3, 0.05, 3, &Caps::default()).unwrap();
        assert!(r.is_yes());
    }

    #[test]
    fn deterministic_per_seed() {
        let g = LabeledGraph::gen_random(8, 14, &ab(), crate::graph::LabelMode::EdgeLabeled, 11)
            .unwrap();
        let d = Dfa::from_regex("a*ba*", &ab()).unwrap();
        let r1 = color_coding_query(&g, &d, 0, 5, 4, 0.01, 42, &Caps::default()).unwrap();
        let r2 = color_coding_query(&g, &d, 0, 5, 4, 0.01, 42, &Caps::default()).unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn trial_cap_fires_loudly() {
        let g = LabeledGraph::parse("graph edge-labeled 2\nedge 0 1 a\n").unwrap();
        let d = Dfa::from_regex("a", &ab()).unwrap();
        let err = color_coding_query(&g, &d, 0, 1, 20, 0.01, 0, &Caps::default()).unwrap_err();
        assert!(matches!(
            err,
            Error::CapExceeded {
                kind: CapKind::ColorTrials,
                ..
            }
        ));
        let err = color_coding_query(&g, &d, 0, 1, 1, 1.5, 0, &Caps::default()).unwrap_err();
        assert!(matches!(err, Error::IncompatibleFlags(_)));
    }

    #[test]
    fn trivial_query_at_source() {
        let g = LabeledGraph::parse("graph edge-labeled 2\nedge 0 1 a\n").unwrap();
        let d = Dfa::from_regex("a*", &ab()).unwrap();
        let r = color_coding_query(&g, &d, 0, 0, 0, 0.1, 0, &Caps::default()).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.length, Some(0));
    }
}
