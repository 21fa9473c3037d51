use super::{check_vertex, Stepper};
use crate::automata::{Dfa, StateSet};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use std::collections::VecDeque;

/// A walk found by the product search, shortest in edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductWalk {
    pub distance: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Breadth-first search over (vertex, automaton state) pairs: an edge
/// `u → v` moves the pair `(u, q)` to `(v, δ*(q, labels))` with the
/// mode-appropriate label extraction. Vertices in `forbidden` may serve as
/// endpoints but never as intermediate stops. Returns the shortest walk (in
/// edges) from `start` to the target vertex at any state of the target set;
/// `None` when unreachable. The same search answers pure existence, since
/// breadth-first order finds targets at minimal distance first.
pub fn product_reachable(
    g: &LabeledGraph,
    d: &Dfa,
    start: (usize, usize),
    target_vertex: usize,
    target_states: &StateSet,
    forbidden: &BitSet,
) -> Result<Option<ProductWalk>> {
    let mut expansions = 0;
    product_reachable_counted(
        g,
        d,
        start,
        target_vertex,
        target_states,
        forbidden,
        &mut expansions,
    )
}

pub(crate) fn product_reachable_counted(
    g: &LabeledGraph,
    d: &Dfa,
    start: (usize, usize),
    target_vertex: usize,
    target_states: &StateSet,
    forbidden: &BitSet,
    expansions: &mut u64,
) -> Result<Option<ProductWalk>> {
    let (sv, sq) = start;
    check_vertex(g, sv)?;
    check_vertex(g, target_vertex)?;
    if sq >= d.num_states() {
        return Err(Error::StateOutOfRange {
            state: sq,
            states: d.num_states(),
        });
    }
    if target_states.capacity() != d.num_states() {
        return Err(Error::InvalidAutomaton(
            "target state set does not match the automaton".into(),
        ));
    }
    let stepper = Stepper::new(g, d);
    let states = d.num_states();
    let node = |v: usize, q: usize| v * states + q;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.num_vertices() * states];
    let mut dist: Vec<usize> = vec![usize::MAX; g.num_vertices() * states];
    let mut queue = VecDeque::from([node(sv, sq)]);
    dist[node(sv, sq)] = 0;
    while let Some(at) = queue.pop_front() {
        let (v, q) = (at / states, at % states);
        *expansions += 1;
        if v == target_vertex && target_states.contains(q) {
            let mut vertices = vec![v];
            let mut edges = Vec::new();
            let mut cur = at;
            while let Some((prev, e)) = parent[cur] {
                edges.push(e);
                vertices.push(prev / states);
                cur = prev;
            }
            vertices.reverse();
            edges.reverse();
            return Ok(Some(ProductWalk {
                distance: edges.len(),
                vertices,
                edges,
            }));
        }
        // a forbidden vertex can end a walk but never continues one
        if forbidden.contains(v) && at != node(sv, sq) {
            continue;
        }
        for &e in g.out_edges(v) {
            let edge = g.edge(e);
            if forbidden.contains(edge.to) && edge.to != target_vertex {
                continue;
            }
            let Some(nq) = stepper.step(q, edge) else {
                continue;
            };
            let next = node(edge.to, nq);
            if dist[next] == usize::MAX {
                dist[next] = dist[at] + 1;
                parent[next] = Some((at, e));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}
