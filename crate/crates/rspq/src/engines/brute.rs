use super::{check_vertex, EngineKind, QueryResult, QueryStats, Stepper, Want};
use crate::automata::Dfa;
use crate::config::Caps;
use crate::error::{CapKind, Error, Result};
use crate::graph::{LabeledGraph, PathWitness};

/// Exact backtracking evaluation: depth-first search over (current vertex,
/// automaton state, visited set). Never wrong, worst-case exponential; the
/// expansion budget turns blowups into an explicit resource error, distinct
/// from any "no". Shortest mode exhausts by iterative deepening on path
/// length, so the first hit is minimal. Vertices are explored in ascending
/// index order, making witnesses reproducible. Doubles as the test oracle
/// for the other engines.
pub fn brute_query(
    g: &LabeledGraph,
    d: &Dfa,
    x: usize,
    y: usize,
    want: Want,
    caps: &Caps,
) -> Result<QueryResult> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    let stepper = Stepper::new(g, d);
    let mut stats = QueryStats::default();
    let Some(start) = stepper.start(x) else {
        // the word of every path from x starts with a label outside the
        // query alphabet
        return Ok(QueryResult::no(EngineKind::Brute, stats));
    };

    let mut search = Search {
        g,
        d,
        stepper,
        y,
        budget: caps.brute_expansions,
        expansions: &mut stats.expansions,
        visited: vec![false; g.num_vertices()],
        path_v: vec![x],
        path_e: Vec::new(),
    };
    search.visited[x] = true;

    let found = match want {
        Want::Exists => search.dfs(x, start, g.num_vertices().saturating_sub(1))?,
        Want::Shortest => {
            // deepen on edge count; a hit at limit L after a miss at L-1 has
            // exactly L edges
            let mut found = None;
            for limit in 0..g.num_vertices() {
                if let Some(hit) = search.dfs(x, start, limit)? {
                    found = Some(hit);
                    break;
                }
            }
            found
        }
    };

    match found {
        Some((vertices, edges)) => {
            let witness = PathWitness::from_path(g, vertices, edges)?;
            witness.validate(g, d)?;
            Ok(QueryResult::yes(witness, EngineKind::Brute, stats))
        }
        None => Ok(QueryResult::no(EngineKind::Brute, stats)),
    }
}

struct Search<'a> {
    g: &'a LabeledGraph,
    d: &'a Dfa,
    stepper: Stepper<'a>,
    y: usize,
    budget: u64,
    expansions: &'a mut u64,
    visited: Vec<bool>,
    path_v: Vec<usize>,
    path_e: Vec<usize>,
}

impl Search<'_> {
    /// Explore simple paths of at most `limit` edges from (v, q); returns
    /// the first accepted path ending at the destination.
    fn dfs(
        &mut self,
        v: usize,
        q: usize,
        limit: usize,
    ) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        *self.expansions += 1;
        if *self.expansions > self.budget {
            return Err(Error::CapExceeded {
                kind: CapKind::BruteExpansions,
                limit: self.budget,
            });
        }
        if v == self.y {
            if self.d.is_accepting(q) {
                return Ok(Some((self.path_v.clone(), self.path_e.clone())));
            }
            // no extension can return to the destination
            return Ok(None);
        }
        if self.path_e.len() == limit {
            return Ok(None);
        }
        for &e in self.g.out_edges(v) {
            let edge = self.g.edge(e);
            if self.visited[edge.to] {
                continue;
            }
            let Some(nq) = self.stepper.step(q, edge) else {
                continue;
            };
            self.visited[edge.to] = true;
            self.path_v.push(edge.to);
            self.path_e.push(e);
            let hit = self.dfs(edge.to, nq, limit)?;
            self.visited[edge.to] = false;
            self.path_v.pop();
            self.path_e.pop();
            if hit.is_some() {
                return Ok(hit);
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn trivial_path_convention() {
        let g = LabeledGraph::parse("graph edge-labeled 2\nedge 0 1 a\n").unwrap();
        let d = Dfa::from_regex("a*", &ab()).unwrap();
        let r = brute_query(&g, &d, 0, 0, Want::Shortest, &Caps::default()).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.length, Some(0));
        assert_eq!(r.witness.unwrap().word, "");
    }

    #[test]
    fn two_cycle_even_a_has_no_simple_path() {
        let a = Alphabet::parse("a").unwrap();
        let g = LabeledGraph::parse("graph edge-labeled 2\nedge 0 1 a\nedge 1 0 a\n").unwrap();
        let d = Dfa::from_regex("(aa)*", &a).unwrap();
        // the only simple 0→1 path spells "a" ∉ (aa)*; longer walks revisit
        let r = brute_query(&g, &d, 0, 1, Want::Exists, &Caps::default()).unwrap();
        assert!(!r.is_yes());
    }

    #[test]
    fn chain_ab_word() {
        let g = LabeledGraph::parse("graph edge-labeled 3\nedge 0 1 a\nedge 1 2 b\n").unwrap();
        let d = Dfa::from_regex("a*ba*", &ab()).unwrap();
        let r = brute_query(&g, &d, 0, 2, Want::Shortest, &Caps::default()).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.length, Some(2));
        assert_eq!(r.witness.unwrap().word, "ab");
        // reverse direction has no edges at all
        let r = brute_query(&g, &d, 2, 0, Want::Exists, &Caps::default()).unwrap();
        assert!(!r.is_yes());
    }

    #[test]
    fn budget_exhaustion_is_an_error_not_a_no() {
        let mut text = String::from("graph edge-labeled 8\n");
        for u in 0..8 {
            for v in 0..8 {
                if u != v {
                    text.push_str(&format!("edge {u} {v} a\n"));
                }
            }
        }
        let g = LabeledGraph::parse(&text).unwrap();
        let a = Alphabet::parse("a").unwrap();
        let d = Dfa::from_regex("aaaaaaaaaaaa", &a).unwrap(); // unsatisfiable: needs 12 edges
        let caps = Caps {
            brute_expansions: 50,
            ..Caps::default()
        };
        let err = brute_query(&g, &d, 0, 7, Want::Exists, &caps).unwrap_err();
        assert!(matches!(
            err,
            Error::CapExceeded {
                kind: CapKind::BruteExpansions,
                ..
            }
        ));
    }

    #[test]
    fn vertex_mode_uses_vertex_words() {
        let g = LabeledGraph::parse(
            "graph vertex-labeled 3\nnode 0 a\nnode 1 b\nnode 2 a\nedge 0 1\nedge 1 2\n",
        )
        .unwrap();
        let d = Dfa::from_regex("aba", &ab()).unwrap();
        let r = brute_query(&g, &d, 0, 2, Want::Shortest, &Caps::default()).unwrap();
        assert!(r.is_yes());
        let w = r.witness.unwrap();
        assert_eq!(w.word, "aba");
        assert_eq!(w.length, 2);
        // λ(x) not in the alphabet: no word can match
        let z = Dfa::from_regex("b", &Alphabet::parse("b").unwrap()).unwrap();
        let r = brute_query(&g, &z, 0, 1, Want::Exists, &Caps::default()).unwrap();
        assert!(!r.is_yes());
    }

    #[test]
    fn vertex_edge_mode_interleaves() {
        let g =
            LabeledGraph::parse("graph vertex-edge-labeled 2\nnode 0 a\nnode 1 b\nedge 0 1 c\n")
                .unwrap();
        let d = Dfa::from_regex("acb", &Alphabet::parse("abc").unwrap()).unwrap();
        let r = brute_query(&g, &d, 0, 1, Want::Exists, &Caps::default()).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.witness.unwrap().word, "acb");
    }
}
