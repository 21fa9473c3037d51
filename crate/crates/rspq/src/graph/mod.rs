//! Labeled-graph data model: finite directed multigraphs with labels on
//! edges, vertices, or both, the text format, path/word semantics for all
//! three labeling models, and deterministic instance generators.

mod gen;

pub use gen::GridScheme;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Which graph elements carry labels. Fixed per graph instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LabelMode {
    #[serde(rename = "edge-labeled")]
    EdgeLabeled,
    #[serde(rename = "vertex-labeled")]
    VertexLabeled,
    #[serde(rename = "vertex-edge-labeled")]
    VertexEdgeLabeled,
}

impl LabelMode {
    pub fn has_edge_labels(self) -> bool {
        !matches!(self, LabelMode::VertexLabeled)
    }

    pub fn has_vertex_labels(self) -> bool {
        !matches!(self, LabelMode::EdgeLabeled)
    }

    pub fn name(self) -> &'static str {
        match self {
            LabelMode::EdgeLabeled => "edge-labeled",
            LabelMode::VertexLabeled => "vertex-labeled",
            LabelMode::VertexEdgeLabeled => "vertex-edge-labeled",
        }
    }
}

impl std::str::FromStr for LabelMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-labeled" => Ok(LabelMode::EdgeLabeled),
            "vertex-labeled" => Ok(LabelMode::VertexLabeled),
            "vertex-edge-labeled" => Ok(LabelMode::VertexEdgeLabeled),
            other => Err(Error::GraphFormat {
                line: 0,
                message: format!("unknown label mode '{other}'"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRec {
    pub from: usize,
    pub to: usize,
    /// Present iff the mode has edge labels.
    pub label: Option<char>,
}

/// Finite directed multigraph. Parallel edges are permitted when their
/// labels differ; identical duplicates are rejected. Self-loops are
/// representable but can never appear in a simple path of length ≥ 1.
/// Labels outside a query's alphabet are permitted; they simply never
/// match. Immutable after construction.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    mode: LabelMode,
    n: usize,
    vertex_labels: Option<Vec<char>>,
    edges: Vec<EdgeRec>,
    /// Outgoing edge indices per vertex, sorted by (to, label, index) so
    /// engines explore vertices in ascending order.
    out: Vec<Vec<usize>>,
    /// Incoming edge indices per vertex, sorted by (from, label, index).
    inn: Vec<Vec<usize>>,
}

impl LabeledGraph {
    pub fn new(
        mode: LabelMode,
        n: usize,
        vertex_labels: Option<Vec<char>>,
        edges: Vec<EdgeRec>,
    ) -> Result<Self> {
        match (&vertex_labels, mode.has_vertex_labels()) {
            (Some(labels), true) => {
                if labels.len() != n {
                    return Err(Error::GraphFormat {
                        line: 0,
                        message: format!("expected {n} vertex labels, got {}", labels.len()),
                    });
                }
            }
            (None, false) => {}
            (Some(_), false) => {
                return Err(Error::GraphFormat {
                    line: 0,
                    message: format!("{} graphs have no vertex labels", mode.name()),
                })
            }
            (None, true) => {
                return Err(Error::GraphFormat {
                    line: 0,
                    message: format!("{} graphs need a label on every vertex", mode.name()),
                })
            }
        }
        let mut seen = std::collections::HashSet::new();
        for e in &edges {
            if e.from >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: e.from,
                    vertices: n,
                });
            }
            if e.to >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: e.to,
                    vertices: n,
                });
            }
            if e.label.is_some() != mode.has_edge_labels() {
                return Err(Error::GraphFormat {
                    line: 0,
                    message: format!(
                        "edge {} -> {}: label presence does not match {} mode",
                        e.from,
                        e.to,
                        mode.name()
                    ),
                });
            }
            if !seen.insert((e.from, e.to, e.label)) {
                return Err(Error::GraphFormat {
                    line: 0,
                    message: format!("duplicate identical edge {} -> {}", e.from, e.to),
                });
            }
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            out[e.from].push(i);
            inn[e.to].push(i);
        }
        for v in 0..n {
            out[v].sort_by_key(|&i| (edges[i].to, edges[i].label, i));
            inn[v].sort_by_key(|&i| (edges[i].from, edges[i].label, i));
        }
        Ok(LabeledGraph {
            mode,
            n,
            vertex_labels,
            edges,
            out,
            inn,
        })
    }

    pub fn mode(&self) -> LabelMode {
        self.mode
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeRec] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &EdgeRec {
        &self.edges[i]
    }

    pub fn vertex_label(&self, v: usize) -> Option<char> {
        self.vertex_labels.as_ref().map(|l| l[v])
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    /// Parse the line-oriented text format:
    ///
    /// ```text
    /// graph <mode> <n>
    /// node <v> <char>        # modes with vertex labels
    /// edge <u> <v> [<char>]  # label present iff mode has edge labels
    /// ```
    ///
    /// `#` starts a comment; blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(LabelMode, usize)> = None;
        let mut node_lines: Vec<(usize, usize, char)> = Vec::new();
        let mut edge_lines: Vec<(usize, EdgeRec)> = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |message: String| Error::GraphFormat {
                line: ln + 1,
                message,
            };
            match fields[0] {
                "graph" => {
                    if fields.len() != 3 {
                        return Err(bad("expected: graph <mode> <n>".into()));
                    }
                    let mode: LabelMode = fields[1].parse()?;
                    let n = fields[2]
                        .parse()
                        .map_err(|_| bad("bad vertex count".into()))?;
                    header = Some((mode, n));
                }
                "node" => {
                    if fields.len() != 3 || fields[2].chars().count() != 1 {
                        return Err(bad("expected: node <v> <char>".into()));
                    }
                    let v = fields[1].parse().map_err(|_| bad("bad vertex".into()))?;
                    node_lines.push((ln + 1, v, fields[2].chars().next().unwrap()));
                }
                "edge" => {
                    if header.is_none() {
                        return Err(bad("edge before graph header".into()));
                    }
                    let (mode, _) = header.unwrap();
                    let want = if mode.has_edge_labels() { 4 } else { 3 };
                    if fields.len() != want {
                        return Err(bad(format!(
                            "expected: edge <u> <v>{} for {} mode",
                            if want == 4 { " <char>" } else { "" },
                            mode.name()
                        )));
                    }
                    let u = fields[1].parse().map_err(|_| bad("bad vertex".into()))?;
                    let v = fields[2].parse().map_err(|_| bad("bad vertex".into()))?;
                    let label = if want == 4 {
                        let l = fields[3];
                        if l.chars().count() != 1 {
                            return Err(bad("edge label must be one character".into()));
                        }
                        Some(l.chars().next().unwrap())
                    } else {
                        None
                    };
                    edge_lines.push((
                        ln + 1,
                        EdgeRec {
                            from: u,
                            to: v,
                            label,
                        },
                    ));
                }
                other => return Err(bad(format!("unknown directive '{other}'"))),
            }
        }
        let (mode, n) = header.ok_or(Error::GraphFormat {
            line: 0,
            message: "missing 'graph <mode> <n>' header".into(),
        })?;
        let vertex_labels = if mode.has_vertex_labels() {
            let mut labels = vec![None; n];
            for (ln, v, c) in node_lines {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertices: n,
                    });
                }
                if labels[v].replace(c).is_some() {
                    return Err(Error::GraphFormat {
                        line: ln,
                        message: format!("vertex {v} labeled twice"),
                    });
                }
            }
            let missing = labels.iter().position(|l| l.is_none());
            if let Some(v) = missing {
                return Err(Error::GraphFormat {
                    line: 0,
                    message: format!("vertex {v} has no label in {} mode", mode.name()),
                });
            }
            Some(labels.into_iter().map(|l| l.unwrap()).collect())
        } else {
            if let Some((ln, v, _)) = node_lines.first() {
                return Err(Error::GraphFormat {
                    line: *ln,
                    message: format!("node line for vertex {v} in edge-labeled mode"),
                });
            }
            None
        };
        let edges = edge_lines.into_iter().map(|(_, e)| e).collect();
        Self::new(mode, n, vertex_labels, edges)
    }

    /// Serialize to the text format; `parse` of the result reproduces the
    /// graph byte-for-byte on re-serialization.
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {} {}\n", self.mode.name(), self.n);
        if let Some(labels) = &self.vertex_labels {
            for (v, c) in labels.iter().enumerate() {
                s.push_str(&format!("node {v} {c}\n"));
            }
        }
        for e in &self.edges {
            match e.label {
                Some(c) => s.push_str(&format!("edge {} {} {c}\n", e.from, e.to)),
                None => s.push_str(&format!("edge {} {}\n", e.from, e.to)),
            }
        }
        s
    }

    /// The label word of a walk, by mode: edge labels (length ℓ), vertex
    /// labels (length ℓ+1), or their interleaving λ(v0) e1 λ(v1) … (length
    /// 2ℓ+1). A length-0 walk at v yields ε, λ(v), λ(v) respectively.
    pub fn word_of_path(&self, vertices: &[usize], edges: &[usize]) -> Result<String> {
        if vertices.is_empty() || edges.len() + 1 != vertices.len() {
            return Err(Error::InvalidWalk(format!(
                "{} vertices with {} edges",
                vertices.len(),
                edges.len()
            )));
        }
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertices: self.n,
                });
            }
        }
        for (i, &e) in edges.iter().enumerate() {
            let rec = self
                .edges
                .get(e)
                .ok_or_else(|| Error::InvalidWalk(format!("edge index {e} out of range")))?;
            if rec.from != vertices[i] || rec.to != vertices[i + 1] {
                return Err(Error::InvalidWalk(format!(
                    "edge {e} does not connect {} -> {}",
                    vertices[i],
                    vertices[i + 1]
                )));
            }
        }
        let mut word = String::new();
        if self.mode.has_vertex_labels() {
            word.push(self.vertex_label(vertices[0]).unwrap());
        }
        for (i, &e) in edges.iter().enumerate() {
            if let Some(c) = self.edges[e].label {
                word.push(c);
            }
            if self.mode.has_vertex_labels() {
                word.push(self.vertex_label(vertices[i + 1]).unwrap());
            }
        }
        Ok(word)
    }
}

/// A concrete simple path and its label word: the query's evidence object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    /// Pairwise-distinct vertices, in order.
    pub vertices: Vec<usize>,
    /// Edge index per step, disambiguating parallel edges.
    pub edges: Vec<usize>,
    /// The word of the path under the graph's labeling mode.
    pub word: String,
    /// Length in edges.
    pub length: usize,
}

impl PathWitness {
    pub fn from_path(g: &LabeledGraph, vertices: Vec<usize>, edges: Vec<usize>) -> Result<Self> {
        let word = g.word_of_path(&vertices, &edges)?;
        let w = PathWitness {
            length: edges.len(),
            vertices,
            edges,
            word,
        };
        w.check_simple()?;
        Ok(w)
    }

    fn check_simple(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        if let Some(&v) = self.vertices.iter().find(|&&v| !seen.insert(v)) {
            return Err(Error::InvalidWalk(format!(
                "vertex {v} repeats, not a simple path"
            )));
        }
        Ok(())
    }

    /// Re-validate against the graph and the query automaton, independently
    /// of whichever engine produced the witness: the path must be simple,
    /// use real edges, carry its own word, and that word must be accepted.
    pub fn validate(&self, g: &LabeledGraph, d: &Dfa) -> Result<()> {
        self.check_simple()?;
        let word = g.word_of_path(&self.vertices, &self.edges)?;
        if word != self.word {
            return Err(Error::InvalidWalk(format!(
                "stored word '{}' differs from path word '{word}'",
                self.word
            )));
        }
        if self.length != self.edges.len() {
            return Err(Error::InvalidWalk(
                "stored length differs from edge count".into(),
            ));
        }
        if !d.accepts(&self.word) {
            return Err(Error::InvalidWalk(format!(
                "path word '{}' is not in the query language",
                self.word
            )));
        }
        Ok(())
    }
}
