//! # rspq
//!
//! Regular simple path queries (RSPQs) on labeled graphs: given a regular
//! language L, a directed labeled graph, and two vertices x and y, is there
//! a **simple** path from x to y whose label word belongs to L, and what is
//! the shortest one?
//!
//! Unlike plain regular path queries, the simple-path variant is NP-complete
//! in general, yet polynomial for a well-behaved class of languages. This
//! crate decides, from the query language alone, which regime a query falls
//! into, produces a machine-checkable certificate for the decision, and
//! evaluates queries with the engine the regime licenses:
//!
//! - [`classify`](classify::classify) returns a trichotomy verdict,
//!   `AC0_FINITE` (finite language), `NL_TRACTABLE` (infinite, shortcut
//!   decomposable) or `NP_HARD`, with an attached
//!   [`Decomposition`](classify::Decomposition) certificate (verified by
//!   automata equivalence) or a concrete
//!   [`HardnessWitness`](classify::HardnessWitness) (re-checkable by plain
//!   simulation);
//! - [`tractable_query`](engines::tractable_query) evaluates certified
//!   languages in polynomial time via product reachability plus the
//!   shortcutting argument, for existence and shortest-path queries;
//! - [`brute_query`](engines::brute_query) is the exact exponential
//!   backtracking oracle with explicit budgets;
//! - [`color_coding_query`](engines::color_coding_query) is the randomized
//!   engine, fixed-parameter in the path length, with one-sided error.
//!
//! Graphs may carry labels on edges, on vertices, or on both; all engines
//! agree on the word conventions of the three models.
//!
//! ## Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p rspq --example classify_basics      # trichotomy verdicts + diagnostics
//! cargo run -p rspq --example certificates        # build, inspect, verify, tamper
//! cargo run -p rspq --example query_engines       # brute vs certificate-driven evaluation
//! cargo run -p rspq --example color_coding        # randomized FPT engine
//! cargo run -p rspq --example vertex_labels       # the three labeling models
//! cargo run -p rspq --example generate_graphs     # random / grid instance generators
//! cargo run -p rspq --example bench_scaling       # polynomial vs exponential growth
//! ```
//!
//! ## Command line
//!
//! A thin binary exposes the same functionality as subcommands with stable
//! machine-readable output (`--format machine`, one JSON record per line):
//!
//! ```bash
//! cargo run -p rspq -- classify --regex "(aa)*" --alphabet a
//! cargo run -p rspq -- query graph.txt "a*b" 0 7 --engine auto --shortest
//! cargo run -p rspq -- gen grid 3 3 --labels alternating --seed 1
//! cargo run -p rspq -- bench --family chain --regex "a*b" --alphabet ab --sizes 8,16,32
//! ```
//!
//! Exit codes distinguish answers from failures: for `query`, 0 = yes,
//! 1 = no, 2 = bad input, 3 = resource cap.

pub mod automata;
pub mod bitset;
pub mod classify;
pub mod cli;
pub mod config;
pub mod engines;
pub mod error;
pub mod graph;

pub use automata::{Alphabet, Dfa, Nfa, Regex};
pub use classify::{classify, Verdict};
pub use config::{Caps, RunConfig};
pub use error::{Error, Result};
pub use graph::{LabelMode, LabeledGraph, PathWitness};
