//! Query engines: the exact exponential oracle, the certificate-driven
//! polynomial engine, and the randomized color-coding engine, plus their
//! shared product-graph search core.
//!
//! All engines answer the same question (is there a simple path from x to y
//! whose label word belongs to the query language) and agree on the word
//! conventions of all three labeling models.

mod brute;
mod color;
mod paths;
mod product;
mod tractable;

pub use brute::brute_query;
pub use color::color_coding_query;
pub use paths::{bounded_simple_paths, Direction};
pub use product::{product_reachable, ProductWalk};
pub use tractable::tractable_query;

use crate::automata::Dfa;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeRec, LabelMode, LabeledGraph, PathWitness};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Want {
    Exists,
    Shortest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EngineKind {
    #[serde(rename = "brute")]
    Brute,
    #[serde(rename = "tractable")]
    Tractable,
    #[serde(rename = "color-coding")]
    ColorCoding,
}

impl EngineKind {
    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Brute => "brute",
            EngineKind::Tractable => "tractable",
            EngineKind::ColorCoding => "color-coding",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryStats {
    /// Search nodes expanded (DFS visits plus product-BFS pops).
    pub expansions: u64,
    /// Color-coding trials run; 0 for the deterministic engines.
    pub trials: u64,
}

/// Outcome of a query. `answer` is `Yes` iff a witness is present; the
/// witness always re-validates against the graph and the query automaton,
/// and in shortest mode its length is minimal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QueryResult {
    pub answer: Answer,
    pub witness: Option<PathWitness>,
    /// Witness length in edges (minimal in shortest mode).
    pub length: Option<usize>,
    pub engine: EngineKind,
    pub stats: QueryStats,
}

impl QueryResult {
    fn yes(witness: PathWitness, engine: EngineKind, stats: QueryStats) -> Self {
        QueryResult {
            answer: Answer::Yes,
            length: Some(witness.length),
            witness: Some(witness),
            engine,
            stats,
        }
    }

    fn no(engine: EngineKind, stats: QueryStats) -> Self {
        QueryResult {
            answer: Answer::No,
            witness: None,
            length: None,
            engine,
            stats,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

pub(crate) fn check_vertex(g: &LabeledGraph, v: usize) -> Result<()> {
    if v >= g.num_vertices() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            vertices: g.num_vertices(),
        });
    }
    Ok(())
}

/// Per-mode automaton stepping: where the run starts when placed on a
/// vertex, and how it advances along an edge. A `None` means some label is
/// outside the query alphabet, so the run can never match.
pub(crate) struct Stepper<'a> {
    g: &'a LabeledGraph,
    d: &'a Dfa,
}

impl<'a> Stepper<'a> {
    pub fn new(g: &'a LabeledGraph, d: &'a Dfa) -> Self {
        Stepper { g, d }
    }

    /// State after placing the run on `v` (consumes λ(v) in vertex modes).
    pub fn start(&self, v: usize) -> Option<usize> {
        match self.g.mode() {
            LabelMode::EdgeLabeled => Some(self.d.initial()),
            LabelMode::VertexLabeled | LabelMode::VertexEdgeLabeled => self
                .d
                .step(self.d.initial(), self.g.vertex_label(v).unwrap()),
        }
    }

    /// State after traversing `edge` from state `q` (consumes the edge
    /// label and/or the target vertex label, per mode).
    pub fn step(&self, q: usize, edge: &EdgeRec) -> Option<usize> {
        match self.g.mode() {
            LabelMode::EdgeLabeled => self.d.step(q, edge.label.unwrap()),
            LabelMode::VertexLabeled => self.d.step(q, self.g.vertex_label(edge.to).unwrap()),
            LabelMode::VertexEdgeLabeled => self
                .d
                .step(q, edge.label.unwrap())
                .and_then(|q| self.d.step(q, self.g.vertex_label(edge.to).unwrap())),
        }
    }
}

/// Edge-labeled expansion of a query instance. The certificate-driven
/// engine splits paths by word positions, which only line up with edge
/// counts in edge-labeled graphs; the other two models are normalized to an
/// equivalent edge-labeled instance over the *same* language:
///
/// - vertex-labeled: a fresh source vertex with one edge carrying λ(x);
///   every original edge (u, v) becomes (u, v) labeled λ(v);
/// - vertex-edge-labeled: additionally every edge (u, v) with label c is
///   split through a fresh midpoint, u →c→ mid →λ(v)→ v.
///
/// Simple x̂→y paths of the expansion correspond bijectively to simple x→y
/// paths of the original, with equal words and order-preserving lengths, so
/// answers, shortest lengths and witnesses all map back exactly.
pub(crate) struct Expanded {
    pub graph: LabeledGraph,
    pub src: usize,
    pub dst: usize,
    /// Expanded edge index → original edge index; `None` for auxiliary
    /// halves. Exactly the edges that enter an original vertex map back.
    edge_origin: Vec<Option<usize>>,
    /// Expanded vertex index → original vertex index.
    vertex_origin: Vec<Option<usize>>,
}

impl Expanded {
    pub fn build(g: &LabeledGraph, x: usize, y: usize) -> Result<Expanded> {
        check_vertex(g, x)?;
        check_vertex(g, y)?;
        let n = g.num_vertices();
        match g.mode() {
            LabelMode::EdgeLabeled => {
                let edge_origin = (0..g.num_edges()).map(Some).collect();
                let vertex_origin = (0..n).map(Some).collect();
                Ok(Expanded {
                    graph: g.clone(),
                    src: x,
                    dst: y,
                    edge_origin,
                    vertex_origin,
                })
            }
            LabelMode::VertexLabeled => {
                let source = n;
                let mut edges = Vec::with_capacity(g.num_edges() + 1);
                let mut edge_origin = Vec::with_capacity(g.num_edges() + 1);
                for (i, e) in g.edges().iter().enumerate() {
                    edges.push(EdgeRec {
                        from: e.from,
                        to: e.to,
                        label: Some(g.vertex_label(e.to).unwrap()),
                    });
                    edge_origin.push(Some(i));
                }
                edges.push(EdgeRec {
                    from: source,
                    to: x,
                    label: Some(g.vertex_label(x).unwrap()),
                });
                edge_origin.push(None);
                let graph = LabeledGraph::new(LabelMode::EdgeLabeled, n + 1, None, edges)?;
                let mut vertex_origin: Vec<Option<usize>> = (0..n).map(Some).collect();
                vertex_origin.push(None);
                Ok(Expanded {
                    graph,
                    src: source,
                    dst: y,
                    edge_origin,
                    vertex_origin,
                })
            }
            LabelMode::VertexEdgeLabeled => {
                let m = g.num_edges();
                let source = n + m;
                let mut edges = Vec::with_capacity(2 * m + 1);
                let mut edge_origin = Vec::with_capacity(2 * m + 1);
                for (i, e) in g.edges().iter().enumerate() {
                    edges.push(EdgeRec {
                        from: e.from,
                        to: n + i,
                        label: e.label,
                    });
                    edge_origin.push(None);
                    edges.push(EdgeRec {
                        from: n + i,
                        to: e.to,
                        label: Some(g.vertex_label(e.to).unwrap()),
                    });
                    edge_origin.push(Some(i));
                }
                edges.push(EdgeRec {
                    from: source,
                    to: x,
                    label: Some(g.vertex_label(x).unwrap()),
                });
                edge_origin.push(None);
                let graph = LabeledGraph::new(LabelMode::EdgeLabeled, n + m + 1, None, edges)?;
                let mut vertex_origin: Vec<Option<usize>> = (0..n).map(Some).collect();
                vertex_origin.extend(std::iter::repeat_n(None, m + 1));
                Ok(Expanded {
                    graph,
                    src: source,
                    dst: y,
                    edge_origin,
                    vertex_origin,
                })
            }
        }
    }

    /// Map a path of the expanded graph back to a witness of the original.
    pub fn witness_back(
        &self,
        g: &LabeledGraph,
        vertices: &[usize],
        edges: &[usize],
    ) -> Result<PathWitness> {
        let orig_vertices: Vec<usize> = vertices
            .iter()
            .filter_map(|&v| self.vertex_origin[v])
            .collect();
        let orig_edges: Vec<usize> = edges.iter().filter_map(|&e| self.edge_origin[e]).collect();
        PathWitness::from_path(g, orig_vertices, orig_edges)
    }
}

pub(crate) fn vertex_set(g: &LabeledGraph, members: impl IntoIterator<Item = usize>) -> BitSet {
    BitSet::from_iter(g.num_vertices(), members)
}
