use super::product::product_reachable_counted;
use super::{vertex_set, EngineKind, Expanded, QueryResult, QueryStats, Want};
use crate::automata::Dfa;
use crate::bitset::BitSet;
use crate::classify::{verify_decomposition, Decomposition};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use std::collections::{HashMap, HashSet};

/// Certificate-driven polynomial evaluation.
///
/// With a verified decomposition at level k, every word of the language
/// either is shorter than 2k (short case) or splits as p·m·s with |p| =
/// |s| = k and m in the subword-closed middle language of the (p, s)
/// component. The engine enumerates prefix paths (exactly k edges from x)
/// and suffix paths (exactly k edges into y), and for each vertex-disjoint
/// pair runs a product reachability search for the middle in the graph
/// minus the two stubs. Any middle *walk* found is excised to a simple path
/// at repeated vertices; the excised word is a subword of the walk's word,
/// hence still in the middle language by subword-closure; that is exactly
/// why a reachability search suffices and the whole evaluation is
/// polynomial for a fixed language.
///
/// Junction corner cases: a total length of exactly 2k is handled by a
/// sweep that lets prefix and suffix share their junction vertex when the
/// middle accepts ε; shorter paths are the short case.
///
/// Vertex-labeled and vertex-edge-labeled instances are normalized to an
/// equivalent edge-labeled expansion first (same language, simple paths in
/// bijection), and witnesses are mapped back.
pub fn tractable_query(
    g: &LabeledGraph,
    dec: &Decomposition,
    d: &Dfa,
    x: usize,
    y: usize,
    want: Want,
    caps: &Caps,
) -> Result<QueryResult> {
    if dec.level > caps.max_level {
        return Err(Error::CapExceeded {
            kind: crate::error::CapKind::ShortcutLevel,
            limit: caps.max_level as u64,
        });
    }
    if !verify_decomposition(d, dec, caps)? {
        return Err(Error::InvalidCertificate(
            "decomposition does not certify the query language".into(),
        ));
    }
    let expanded = Expanded::build(g, x, y)?;
    let eg = &expanded.graph;
    let (sx, sy) = (expanded.src, expanded.dst);
    let k = dec.level;
    let mut stats = QueryStats::default();

    // candidates are compared by expanded length; the mapping back to
    // original length is strictly monotone per mode
    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    let consider =
        |best: &mut Option<(usize, Vec<usize>, Vec<usize>)>, vs: Vec<usize>, es: Vec<usize>| {
            let len = es.len();
            if best.as_ref().is_none_or(|(b, _, _)| len < *b) {
                *best = Some((len, vs, es));
            }
        };

    // --- short case: simple paths with fewer than 2k edges whose word is in
    // the certificate's short-word list
    if k > 0 {
        let shorts: HashSet<&str> = dec.short_words.iter().map(|w| w.as_str()).collect();
        let mut live_prefixes: HashSet<String> = HashSet::new();
        for w in &dec.short_words {
            let chars: Vec<char> = w.chars().collect();
            for i in 0..=chars.len() {
                live_prefixes.insert(chars[..i].iter().collect());
            }
        }
        let mut dfs = ShortDfs {
            g: eg,
            dst: sy,
            max_edges: 2 * k - 1,
            shorts: &shorts,
            live_prefixes: &live_prefixes,
            want,
            visited: vec![false; eg.num_vertices()],
            path_v: vec![sx],
            path_e: Vec::new(),
            word: String::new(),
            expansions: &mut stats.expansions,
            found: None,
        };
        dfs.visited[sx] = true;
        dfs.run(sx);
        if let Some((vs, es)) = dfs.found {
            if want == Want::Exists {
                return finish(g, d, &expanded, vs, es, stats);
            }
            consider(&mut best, vs, es);
        }
    }

    // --- long case: prefix stub + middle search + suffix stub
    if !dec.components.is_empty() {
        let prefix_words: HashSet<&str> =
            dec.components.iter().map(|c| c.prefix.as_str()).collect();
        let suffix_words: HashSet<&str> =
            dec.components.iter().map(|c| c.suffix.as_str()).collect();
        let prefix_stubs = enumerate_stubs(eg, sx, k, &prefix_words, true, &mut stats.expansions);
        let suffix_stubs = enumerate_stubs(eg, sy, k, &suffix_words, false, &mut stats.expansions);

        for comp in &dec.components {
            let Some(pps) = prefix_stubs.get(comp.prefix.as_str()) else {
                continue;
            };
            let Some(sps) = suffix_stubs.get(comp.suffix.as_str()) else {
                continue;
            };
            let middle = &comp.middle;
            let eps_middle = middle.is_accepting(middle.initial());
            for pp in pps {
                for sp in sps {
                    let junction_out = *pp.vertices.last().unwrap();
                    let junction_in = sp.vertices[0];
                    let overlap = pp.vset.intersect(&sp.vset);
                    if overlap.is_empty() {
                        // fully disjoint stubs: search for a middle walk
                        let mut forbidden = pp.vset.clone();
                        forbidden.union_with(&sp.vset);
                        forbidden.remove(junction_out);
                        forbidden.remove(junction_in);
                        let walk = product_reachable_counted(
                            eg,
                            middle,
                            (junction_out, middle.initial()),
                            junction_in,
                            middle.accepting(),
                            &forbidden,
                            &mut stats.expansions,
                        )?;
                        if let Some(walk) = walk {
                            let (mv, me) = shortcut(&walk.vertices, &walk.edges);
                            let mut vs = pp.vertices.clone();
                            vs.extend_from_slice(&mv[1..]);
                            vs.extend_from_slice(&sp.vertices[1..]);
                            let mut es = pp.edges.clone();
                            es.extend_from_slice(&me);
                            es.extend_from_slice(&sp.edges);
                            if want == Want::Exists {
                                return finish(g, d, &expanded, vs, es, stats);
                            }
                            consider(&mut best, vs, es);
                        }
                    } else if junction_out == junction_in
                        && eps_middle
                        && overlap.len() == 1
                        && overlap.contains(junction_out)
                    {
                        // exact-2k sweep: the stubs meet at their junction
                        // and the middle accepts ε
                        let mut vs = pp.vertices.clone();
                        vs.extend_from_slice(&sp.vertices[1..]);
                        let mut es = pp.edges.clone();
                        es.extend_from_slice(&sp.edges);
                        if want == Want::Exists {
                            return finish(g, d, &expanded, vs, es, stats);
                        }
                        consider(&mut best, vs, es);
                    }
                }
            }
        }
    }

    match best {
        Some((_, vs, es)) => finish(g, d, &expanded, vs, es, stats),
        None => Ok(QueryResult::no(EngineKind::Tractable, stats)),
    }
}

fn finish(
    g: &LabeledGraph,
    d: &Dfa,
    expanded: &Expanded,
    vertices: Vec<usize>,
    edges: Vec<usize>,
    stats: QueryStats,
) -> Result<QueryResult> {
    let witness = expanded.witness_back(g, &vertices, &edges)?;
    witness.validate(g, d)?;
    Ok(QueryResult::yes(witness, EngineKind::Tractable, stats))
}

struct Stub {
    vertices: Vec<usize>,
    edges: Vec<usize>,
    vset: BitSet,
}

/// All simple paths with exactly k edges anchored at `from` whose word is
/// one of `words`, grouped by word. `forward` anchors the start, otherwise
/// the end; words are read along the forward direction either way. The
/// search prunes any branch whose partial word is not a prefix (suffix) of
/// a wanted word.
fn enumerate_stubs<'w>(
    g: &LabeledGraph,
    from: usize,
    k: usize,
    words: &HashSet<&'w str>,
    forward: bool,
    expansions: &mut u64,
) -> HashMap<&'w str, Vec<Stub>> {
    let mut partials: HashSet<String> = HashSet::new();
    for w in words {
        let chars: Vec<char> = w.chars().collect();
        for i in 0..=chars.len() {
            if forward {
                partials.insert(chars[..i].iter().collect());
            } else {
                partials.insert(chars[chars.len() - i..].iter().collect());
            }
        }
    }
    let mut out: HashMap<&'w str, Vec<Stub>> = HashMap::new();
    let mut walker = StubDfs {
        g,
        k,
        forward,
        partials: &partials,
        expansions,
        visited: vec![false; g.num_vertices()],
        path_v: vec![from],
        path_e: Vec::new(),
        word: std::collections::VecDeque::new(),
        hits: Vec::new(),
    };
    walker.visited[from] = true;
    walker.run(from);
    for (vs, es, word) in walker.hits {
        if let Some(&w) = words.get(word.as_str()) {
            let vset = vertex_set(g, vs.iter().copied());
            out.entry(w).or_default().push(Stub {
                vertices: vs,
                edges: es,
                vset,
            });
        }
    }
    out
}

struct StubDfs<'a> {
    g: &'a LabeledGraph,
    k: usize,
    forward: bool,
    partials: &'a HashSet<String>,
    expansions: &'a mut u64,
    visited: Vec<bool>,
    path_v: Vec<usize>,
    path_e: Vec<usize>,
    word: std::collections::VecDeque<char>,
    hits: Vec<(Vec<usize>, Vec<usize>, String)>,
}

impl StubDfs<'_> {
    fn run(&mut self, v: usize) {
        *self.expansions += 1;
        if self.path_e.len() == self.k {
            let word: String = self.word.iter().collect();
            let (mut vs, mut es) = (self.path_v.clone(), self.path_e.clone());
            if !self.forward {
                vs.reverse();
                es.reverse();
            }
            self.hits.push((vs, es, word));
            return;
        }
        let g = self.g;
        let adjacency = if self.forward {
            g.out_edges(v)
        } else {
            g.in_edges(v)
        };
        for &e in adjacency {
            let edge = g.edge(e);
            let (next, label) = if self.forward {
                (edge.to, edge.label.unwrap())
            } else {
                (edge.from, edge.label.unwrap())
            };
            if self.visited[next] {
                continue;
            }
            if self.forward {
                self.word.push_back(label);
            } else {
                self.word.push_front(label);
            }
            let partial: String = self.word.iter().collect();
            if self.partials.contains(&partial) {
                self.visited[next] = true;
                self.path_v.push(next);
                self.path_e.push(e);
                self.run(next);
                self.visited[next] = false;
                self.path_v.pop();
                self.path_e.pop();
            }
            if self.forward {
                self.word.pop_back();
            } else {
                self.word.pop_front();
            }
        }
    }
}

struct ShortDfs<'a> {
    g: &'a LabeledGraph,
    dst: usize,
    max_edges: usize,
    shorts: &'a HashSet<&'a str>,
    live_prefixes: &'a HashSet<String>,
    want: Want,
    visited: Vec<bool>,
    path_v: Vec<usize>,
    path_e: Vec<usize>,
    word: String,
    expansions: &'a mut u64,
    found: Option<(Vec<usize>, Vec<usize>)>,
}

impl ShortDfs<'_> {
    fn run(&mut self, v: usize) {
        *self.expansions += 1;
        if v == self.dst {
            if self.shorts.contains(self.word.as_str()) {
                let better = match &self.found {
                    None => true,
                    Some((_, es)) => self.path_e.len() < es.len(),
                };
                if better {
                    self.found = Some((self.path_v.clone(), self.path_e.clone()));
                }
            }
            // extensions cannot return to the destination
            return;
        }
        if self.path_e.len() == self.max_edges {
            return;
        }
        if self.want == Want::Exists && self.found.is_some() {
            return;
        }
        let g = self.g;
        for &e in g.out_edges(v) {
            let edge = g.edge(e);
            if self.visited[edge.to] {
                continue;
            }
            let label = edge.label.unwrap();
            self.word.push(label);
            if self.live_prefixes.contains(&self.word) {
                self.visited[edge.to] = true;
                self.path_v.push(edge.to);
                self.path_e.push(e);
                self.run(edge.to);
                self.visited[edge.to] = false;
                self.path_v.pop();
                self.path_e.pop();
            }
            self.word.pop();
        }
    }
}

/// Excise cycles from a walk: jump from each vertex to its last occurrence.
/// The kept vertices are pairwise distinct and every kept edge is a real
/// edge of the walk, so the result is a simple path whose word is a
/// subword of the walk's word.
fn shortcut(vertices: &[usize], edges: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut out_v = Vec::new();
    let mut out_e = Vec::new();
    let mut i = 0;
    while i < vertices.len() {
        let v = vertices[i];
        let j = vertices.iter().rposition(|&u| u == v).unwrap();
        out_v.push(v);
        if j + 1 < vertices.len() {
            out_e.push(edges[j]);
        }
        i = j + 1;
    }
    (out_v, out_e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::classify::classify;
    use crate::engines::brute_query;
    use crate::graph::LabelMode;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    fn dec_of(re: &str) -> (Dfa, Decomposition) {
        let d = Dfa::from_regex(re, &ab()).unwrap();
        let v = classify(&d, LabelMode::EdgeLabeled, &Caps::default()).unwrap();
        assert!(
            v.label.is_tractable(),
            "{re} must be tractable for this test"
        );
        (d, v.decomposition().unwrap().clone())
    }

    #[test]
    fn shortcut_excises_cycles() {
        // walk 0 1 2 1 3 with edges a b c d: vertex 1 repeats
        let (vs, es) = shortcut(&[0, 1, 2, 1, 3], &[10, 11, 12, 13]);
        assert_eq!(vs, vec![0, 1, 3]);
        assert_eq!(es, vec![10, 13]);
        let (vs, es) = shortcut(&[5], &[]);
        assert_eq!((vs, es), (vec![5], vec![]));
    }

    #[test]
    fn chain_shortest_three() {
        let g = LabeledGraph::parse("graph edge-labeled 4\nedge 0 1 a\nedge 1 2 a\nedge 2 3 b\n")
            .unwrap();
        let (d, dec) = dec_of("a*b");
        let r = tractable_query(&g, &dec, &d, 0, 3, Want::Shortest, &Caps::default()).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.length, Some(3));
        assert_eq!(r.witness.unwrap().word, "aab");
    }

    #[test]
    fn level_zero_is_plain_reachability() {
        let g = LabeledGraph::parse(
            "graph edge-labeled 4\nedge 0 1 a\nedge 1 2 a\nedge 2 3 a\nedge 0 3 b\n",
        )
        .unwrap();
        let (d, dec) = dec_of("a*");
        assert_eq!(dec.level, 0);
        let r = tractable_query(&g, &dec, &d, 0, 3, Want::Shortest, &Caps::default()).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.length, Some(3)); // the b-edge does not match
        let r0 = tractable_query(&g, &dec, &d, 0, 0, Want::Shortest, &Caps::default()).unwrap();
        assert_eq!(r0.length, Some(0));
    }

    #[test]
    fn middle_search_avoids_the_endpoints() {
        // the only b-edge into y hangs off a vertex reachable from x only
        // through y: 0 -a-> 1(y), 1 -a-> 2, 2 -b-> 1
        let g = LabeledGraph::parse("graph edge-labeled 3\nedge 0 1 a\nedge 1 2 a\nedge 2 1 b\n")
            .unwrap();
        let (d, dec) = dec_of("a*b");
        let r = tractable_query(&g, &dec, &d, 0, 1, Want::Exists, &Caps::default()).unwrap();
        assert!(!r.is_yes());
        let brute = brute_query(&g, &d, 0, 1, Want::Exists, &Caps::default()).unwrap();
        assert!(!brute.is_yes());
    }

    #[test]
    fn exact_2k_junction_sweep() {
        // a*b at level 1: the word "ab" needs prefix a and suffix b sharing
        // the junction, with middle ε ∈ a*
        let g = LabeledGraph::parse("graph edge-labeled 3\nedge 0 1 a\nedge 1 2 b\n").unwrap();
        let (d, dec) = dec_of("a*b");
        let r = tractable_query(&g, &dec, &d, 0, 2, Want::Shortest, &Caps::default()).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.length, Some(2));
        assert_eq!(r.witness.unwrap().word, "ab");
    }

    #[test]
    fn short_case_single_b() {
        let g = LabeledGraph::parse("graph edge-labeled 2\nedge 0 1 b\n").unwrap();
        let (d, dec) = dec_of("a*b");
        let r = tractable_query(&g, &dec, &d, 0, 1, Want::Shortest, &Caps::default()).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.length, Some(1));
    }

    #[test]
    fn finite_language_certificates_work() {
        let g = LabeledGraph::parse("graph edge-labeled 3\nedge 0 1 a\nedge 1 2 b\nedge 0 2 b\n")
            .unwrap();
        let (d, dec) = dec_of("ab|ba");
        let r = tractable_query(&g, &dec, &d, 0, 2, Want::Shortest, &Caps::default()).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.witness.unwrap().word, "ab");
        let (d2, dec2) = dec_of("~");
        let r = tractable_query(&g, &dec2, &d2, 0, 2, Want::Exists, &Caps::default()).unwrap();
        assert!(!r.is_yes());
    }

    #[test]
    fn wrong_certificate_is_rejected() {
        let g = LabeledGraph::parse("graph edge-labeled 2\nedge 0 1 b\n").unwrap();
        let (_, dec) = dec_of("a*b");
        let other = Dfa::from_regex("(aa)*", &ab()).unwrap();
        let err =
            tractable_query(&g, &dec, &other, 0, 1, Want::Exists, &Caps::default()).unwrap_err();
        assert!(matches!(err, Error::InvalidCertificate(_)));
    }

    #[test]
    fn parallel_edges_are_disambiguated() {
        // two parallel 0→1 edges; only the b-labeled one matches
        let g = LabeledGraph::parse("graph edge-labeled 2\nedge 0 1 a\nedge 0 1 b\n").unwrap();
        let (d, dec) = dec_of("a*b");
        for r in [
            tractable_query(&g, &dec, &d, 0, 1, Want::Shortest, &Caps::default()).unwrap(),
            brute_query(&g, &d, 0, 1, Want::Shortest, &Caps::default()).unwrap(),
        ] {
            let w = r.witness.unwrap();
            assert_eq!(w.word, "b");
            assert_eq!(g.edge(w.edges[0]).label, Some('b'));
        }
    }

    #[test]
    fn unknown_labels_never_match() {
        // 'z' is a legal graph label but outside the query alphabet {a, b}
        let g = LabeledGraph::parse("graph edge-labeled 3\nedge 0 1 z\nedge 1 2 b\nedge 0 2 z\n")
            .unwrap();
        let (d, dec) = dec_of("a*b");
        let fast = tractable_query(&g, &dec, &d, 0, 2, Want::Exists, &Caps::default()).unwrap();
        let slow = brute_query(&g, &d, 0, 2, Want::Exists, &Caps::default()).unwrap();
        assert!(!fast.is_yes());
        assert!(!slow.is_yes());
        // but a matching route still works when one exists
        let g = LabeledGraph::parse("graph edge-labeled 3\nedge 0 1 a\nedge 1 2 b\nedge 0 2 z\n")
            .unwrap();
        let fast = tractable_query(&g, &dec, &d, 0, 2, Want::Shortest, &Caps::default()).unwrap();
        assert_eq!(fast.length, Some(2));
    }

    #[test]
    fn vertex_labeled_instances_work() {
        // vertex word of 0→1→2 is "aab" ∈ a*b
        let g = LabeledGraph::parse(
            "graph vertex-labeled 3\nnode 0 a\nnode 1 a\nnode 2 b\nedge 0 1\nedge 1 2\n",
        )
        .unwrap();
        let (d, dec) = dec_of("a*b");
        let r = tractable_query(&g, &dec, &d, 0, 2, Want::Shortest, &Caps::default()).unwrap();
        assert!(r.is_yes());
        let w = r.witness.unwrap();
        assert_eq!(w.word, "aab");
        assert_eq!(w.length, 2);
        assert_eq!(w.vertices, vec![0, 1, 2]);
        let brute = brute_query(&g, &d, 0, 2, Want::Shortest, &Caps::default()).unwrap();
        assert_eq!(brute.length, Some(2));
    }

    #[test]
    fn vertex_edge_labeled_instances_work() {
        let g =
            LabeledGraph::parse("graph vertex-edge-labeled 2\nnode 0 a\nnode 1 b\nedge 0 1 a\n")
                .unwrap();
        // interleaved word is "aab"
        let (d, dec) = dec_of("a*b");
        let r = tractable_query(&g, &dec, &d, 0, 1, Want::Shortest, &Caps::default()).unwrap();
        assert!(r.is_yes());
        let w = r.witness.unwrap();
        assert_eq!(w.word, "aab");
        assert_eq!(w.length, 1);
    }
}
