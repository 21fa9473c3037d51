//! Deterministic instance generators for tests and benchmarks.

use super::{EdgeRec, LabelMode, LabeledGraph};
use crate::automata::Alphabet;
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Edge-labeling scheme for grid graphs.
#[derive(Debug, Clone)]
pub enum GridScheme {
    /// Every edge carries the same label.
    Constant(char),
    /// Checkerboard: an edge leaving the cell (r, c) is labeled by the
    /// parity of r + c, so every path alternates the two labels.
    Alternating(char, char),
    /// Uniform random label per edge, deterministic per seed.
    Random(Alphabet),
}

impl std::str::FromStr for GridScheme {
    type Err = Error;

    /// `constant[:<c>]`, `alternating[:<c1><c2>]`, `random[:<chars>]`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = match s.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (s, None),
        };
        match kind {
            "constant" => {
                let arg = arg.unwrap_or("a");
                let mut chars = arg.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => Ok(GridScheme::Constant(c)),
                    _ => Err(Error::Infeasible(format!(
                        "constant scheme wants one label, got '{arg}'"
                    ))),
                }
            }
            "alternating" => {
                let arg = arg.unwrap_or("ab");
                let chars: Vec<char> = arg.chars().collect();
                if chars.len() != 2 {
                    return Err(Error::Infeasible(format!(
                        "alternating scheme wants two labels, got '{arg}'"
                    )));
                }
                Ok(GridScheme::Alternating(chars[0], chars[1]))
            }
            "random" => Ok(GridScheme::Random(Alphabet::parse(arg.unwrap_or("ab"))?)),
            other => Err(Error::Infeasible(format!(
                "unknown grid labeling scheme '{other}'"
            ))),
        }
    }
}

impl LabeledGraph {
    /// Uniform random graph with `m` distinct labeled edges (no self-loops),
    /// deterministic per seed. For modes with vertex labels, each vertex gets
    /// a uniform label first.
    pub fn gen_random(
        n: usize,
        m: usize,
        alphabet: &Alphabet,
        mode: LabelMode,
        seed: u64,
    ) -> Result<LabeledGraph> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vertex_labels = if mode.has_vertex_labels() {
            Some(
                (0..n)
                    .map(|_| alphabet.chars()[rng.random_range(0..alphabet.len())])
                    .collect(),
            )
        } else {
            None
        };
        let mut candidates: Vec<EdgeRec> = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                if mode.has_edge_labels() {
                    for &c in alphabet.chars() {
                        candidates.push(EdgeRec {
                            from: u,
                            to: v,
                            label: Some(c),
                        });
                    }
                } else {
                    candidates.push(EdgeRec {
                        from: u,
                        to: v,
                        label: None,
                    });
                }
            }
        }
        if m > candidates.len() {
            return Err(Error::Infeasible(format!(
                "{m} edges requested but only {} distinct labeled edges exist",
                candidates.len()
            )));
        }
        candidates.shuffle(&mut rng);
        let mut edges: Vec<EdgeRec> = candidates.into_iter().take(m).collect();
        edges.sort_by_key(|e| (e.from, e.to, e.label));
        LabeledGraph::new(mode, n, vertex_labels, edges)
    }

    /// `w×h` directed grid with right and down edges, edge-labeled per the
    /// scheme. Vertex (r, c) has index `r*w + c`. The seed only matters for
    /// the random scheme.
    pub fn gen_grid(w: usize, h: usize, scheme: &GridScheme, seed: u64) -> LabeledGraph {
        assert!(w >= 1 && h >= 1, "grid needs positive dimensions");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut label = |r: usize, c: usize| -> char {
            match scheme {
                GridScheme::Constant(l) => *l,
                GridScheme::Alternating(even, odd) => {
                    if (r + c).is_multiple_of(2) {
                        *even
                    } else {
                        *odd
                    }
                }
                GridScheme::Random(alpha) => alpha.chars()[rng.random_range(0..alpha.len())],
            }
        };
        let mut edges = Vec::new();
        for r in 0..h {
            for c in 0..w {
                if c + 1 < w {
                    edges.push(EdgeRec {
                        from: r * w + c,
                        to: r * w + c + 1,
                        label: Some(label(r, c)),
                    });
                }
                if r + 1 < h {
                    edges.push(EdgeRec {
                        from: r * w + c,
                        to: (r + 1) * w + c,
                        label: Some(label(r, c)),
                    });
                }
            }
        }
        LabeledGraph::new(LabelMode::EdgeLabeled, w * h, None, edges)
            .expect("grid construction is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolated_vertex() {
        let a = Alphabet::parse("ab").unwrap();
        let g = LabeledGraph::gen_random(1, 0, &a, LabelMode::EdgeLabeled, 1).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (1, 0));
    }

    #[test]
    fn deterministic_per_seed() {
        let a = Alphabet::parse("ab").unwrap();
        for mode in [
            LabelMode::EdgeLabeled,
            LabelMode::VertexLabeled,
            LabelMode::VertexEdgeLabeled,
        ] {
            let g1 = LabeledGraph::gen_random(10, 20, &a, mode, 7).unwrap();
            let g2 = LabeledGraph::gen_random(10, 20, &a, mode, 7).unwrap();
            assert_eq!(g1.to_text(), g2.to_text());
            let g3 = LabeledGraph::gen_random(10, 20, &a, mode, 8).unwrap();
            assert_ne!(g1.to_text(), g3.to_text());
        }
    }

    #[test]
    fn random_graph_structure() {
        let a = Alphabet::parse("ab").unwrap();
        let g = LabeledGraph::gen_random(10, 20, &a, LabelMode::EdgeLabeled, 7).unwrap();
        assert_eq!(g.num_edges(), 20);
        assert!(g
            .edges()
            .iter()
            .all(|e| e.from < 10 && e.to < 10 && e.from != e.to));
        // infeasible m is an error
        assert!(LabeledGraph::gen_random(2, 100, &a, LabelMode::VertexLabeled, 0).is_err());
    }

    #[test]
    fn grid_shapes() {
        let g = LabeledGraph::gen_grid(1, 1, &GridScheme::Constant('a'), 0);
        assert_eq!((g.num_vertices(), g.num_edges()), (1, 0));
        let g = LabeledGraph::gen_grid(2, 2, &GridScheme::Constant('a'), 0);
        assert_eq!((g.num_vertices(), g.num_edges()), (4, 4));
        assert!(g.edges().iter().all(|e| e.label == Some('a')));
    }

    #[test]
    fn grid_alternating_checkerboard() {
        let g = LabeledGraph::gen_grid(3, 3, &GridScheme::Alternating('a', 'b'), 0);
        for e in g.edges() {
            let (r, c) = (e.from / 3, e.from % 3);
            let want = if (r + c).is_multiple_of(2) { 'a' } else { 'b' };
            assert_eq!(e.label, Some(want));
        }
        // round-trip through the text format
        let back = LabeledGraph::parse(&g.to_text()).unwrap();
        assert_eq!(back.to_text(), g.to_text());
    }

    #[test]
    fn scheme_parsing() {
        assert!(matches!(
            "constant".parse::<GridScheme>().unwrap(),
            GridScheme::Constant('a')
        ));
        assert!(matches!(
            "constant:x".parse::<GridScheme>().unwrap(),
            GridScheme::Constant('x')
        ));
        assert!(matches!(
            "alternating:xy".parse::<GridScheme>().unwrap(),
            GridScheme::Alternating('x', 'y')
        ));
        assert!("alternating:xyz".parse::<GridScheme>().is_err());
        assert!("randomish".parse::<GridScheme>().is_err());
    }
}
