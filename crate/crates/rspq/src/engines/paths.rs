use crate::bitset::BitSet;
use crate::graph::LabeledGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// A simple path as (vertices, edge indices), always in forward order.
pub type SimplePath = (Vec<usize>, Vec<usize>);

/// Stream all simple paths with exactly `exact_edges` edges starting at
/// `from` (forward) or ending at `from` (backward), avoiding the vertices
/// in `avoid` (the anchor itself is exempt). Paths are produced in
/// ascending vertex order and the iterator holds only the current branch,
/// bounding memory.
pub fn bounded_simple_paths<'a>(
    g: &'a LabeledGraph,
    from: usize,
    exact_edges: usize,
    avoid: &BitSet,
    direction: Direction,
) -> impl Iterator<Item = SimplePath> + 'a {
    assert!(from < g.num_vertices(), "path anchor {from} out of range");
    SimplePaths {
        g,
        exact: exact_edges,
        avoid: avoid.clone(),
        direction,
        stack: vec![(from, 0)],
        path_v: vec![from],
        path_e: Vec::new(),
        visited: BitSet::singleton(g.num_vertices(), from),
        emitted_trivial: false,
    }
}

struct SimplePaths<'a> {
    g: &'a LabeledGraph,
    exact: usize,
    avoid: BitSet,
    direction: Direction,
    /// One frame per path vertex: (vertex, next adjacency position).
    stack: Vec<(usize, usize)>,
    path_v: Vec<usize>,
    path_e: Vec<usize>,
    visited: BitSet,
    emitted_trivial: bool,
}

impl SimplePaths<'_> {
    fn neighbor(&self, e: usize) -> usize {
        match self.direction {
            Direction::Forward => self.g.edge(e).to,
            Direction::Backward => self.g.edge(e).from,
        }
    }

    fn emit(&self, last_vertex: usize, last_edge: usize) -> SimplePath {
        let mut vs = self.path_v.clone();
        let mut es = self.path_e.clone();
        vs.push(last_vertex);
        es.push(last_edge);
        if self.direction == Direction::Backward {
            vs.reverse();
            es.reverse();
        }
        (vs, es)
    }
}

impl Iterator for SimplePaths<'_> {
    type Item = SimplePath;

    fn next(&mut self) -> Option<SimplePath> {
        if self.exact == 0 {
            if self.emitted_trivial {
                return None;
            }
            self.emitted_trivial = true;
            return Some((self.path_v.clone(), Vec::new()));
        }
        loop {
            let &(v, pos) = self.stack.last()?;
            let g = self.g;
            let adjacency = match self.direction {
                Direction::Forward => g.out_edges(v),
                Direction::Backward => g.in_edges(v),
            };
            if pos >= adjacency.len() {
                self.stack.pop();
                if !self.stack.is_empty() {
                    let dropped = self.path_v.pop().unwrap();
                    self.visited.remove(dropped);
                    self.path_e.pop();
                }
                continue;
            }
            self.stack.last_mut().unwrap().1 += 1;
            let e = adjacency[pos];
            let w = self.neighbor(e);
            if self.visited.contains(w) || self.avoid.contains(w) {
                continue;
            }
            if self.path_e.len() + 1 == self.exact {
                return Some(self.emit(w, e));
            }
            self.stack.push((w, 0));
            self.visited.insert(w);
            self.path_v.push(w);
            self.path_e.push(e);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete4() -> LabeledGraph {
        let mut text = String::from("graph edge-labeled 4\n");
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    text.push_str(&format!("edge {u} {v} a\n"));
                }
            }
        }
        LabeledGraph::parse(&text).unwrap()
    }

    #[test]
    fn zero_edges_is_the_single_vertex() {
        let g = complete4();
        let paths: Vec<_> =
            bounded_simple_paths(&g, 2, 0, &BitSet::empty(4), Direction::Forward).collect();
        assert_eq!(paths, vec![(vec![2], vec![])]);
    }

    #[test]
    fn star_out_edges() {
        let g = LabeledGraph::parse("graph edge-labeled 4\nedge 0 1 a\nedge 0 2 a\nedge 0 3 a\n")
            .unwrap();
        let paths: Vec<_> =
            bounded_simple_paths(&g, 0, 1, &BitSet::empty(4), Direction::Forward).collect();
        assert_eq!(paths.len(), 3);
        // ascending target order
        assert_eq!(paths[0].0, vec![0, 1]);
        assert_eq!(paths[2].0, vec![0, 3]);
    }

    #[test]
    fn complete_graph_two_edge_paths() {
        // 3 choices for the first hop × 2 remaining for the second
        let g = complete4();
        let paths: Vec<_> =
            bounded_simple_paths(&g, 0, 2, &BitSet::empty(4), Direction::Forward).collect();
        assert_eq!(paths.len(), 6);
        for (vs, es) in &paths {
            assert_eq!(vs.len(), 3);
            assert_eq!(es.len(), 2);
            let mut sorted = vs.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), 3, "paths are simple");
        }
    }

    #[test]
    fn backward_paths_end_at_anchor() {
        let g = LabeledGraph::parse("graph edge-labeled 4\nedge 0 2 a\nedge 1 2 a\nedge 2 3 a\n")
            .unwrap();
        let paths: Vec<_> =
            bounded_simple_paths(&g, 3, 2, &BitSet::empty(4), Direction::Backward).collect();
        assert_eq!(paths.len(), 2);
        for (vs, _) in &paths {
            assert_eq!(*vs.last().unwrap(), 3);
            assert_eq!(vs[1], 2);
        }
        // edges are reported in forward order
        let (vs, es) = &paths[0];
        assert_eq!(g.edge(es[0]).from, vs[0]);
        assert_eq!(g.edge(es[1]).to, 3);
    }

    #[test]
    fn avoid_set_excludes_interiors() {
        let g = complete4();
        let avoid = BitSet::from_iter(4, [1]);
        let paths: Vec<_> = bounded_simple_paths(&g, 0, 2, &avoid, Direction::Forward).collect();
        // middle and endpoint must dodge vertex 1: 2 × 1 remaining... first
        // hop to {2,3}, second to the other of {2,3}
        assert_eq!(paths.len(), 2);
        assert!(paths.iter().all(|(vs, _)| !vs.contains(&1)));
    }
}
