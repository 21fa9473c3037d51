//! The trichotomy classifier: decide, from the query language alone, which
//! complexity regime a regular simple path query falls into, and emit a
//! machine-checkable certificate either way: a shortcut decomposition for
//! tractable languages or a concrete hardness witness otherwise.
//!
//! The decision procedure walks the level pairs `(P_k, G_k)` of the minimal
//! DFA, where `P_k` is the set of states reached by length-k words and `G_k`
//! the family of co-reachability sets `Good(s)` over length-k suffixes. A
//! level is *good* when every realized middle language `M(q, T)` with
//! `q ∈ P_k`, `T ∈ G_k` is subword-closed; the walk is eventually periodic,
//! and goodness only has to be checked on the pre-period plus one full
//! cycle. Goodness is upward-closed in k (level-(k+1) middles are one-letter
//! quotients of level-k middles, and quotients preserve subword-closure), so
//! the first good level is the smallest one overall, and the union or
//! intersection of two tractable languages is again tractable at the larger
//! of their levels.

mod decomposition;
mod hardness;

pub use decomposition::{build_decomposition, verify_decomposition, Component, Decomposition};
pub use hardness::{hardness_witness, HardnessWitness};

use crate::automata::{is_aperiodic, Aperiodicity, Dfa, StateSet};
use crate::config::Caps;
use crate::error::{CapKind, Error, Result};
use crate::graph::LabelMode;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

/// Trichotomy label for the data complexity of the query problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Label {
    /// Finite language: bounded-length path checks suffice.
    #[serde(rename = "AC0_FINITE")]
    Ac0Finite,
    /// Infinite but shortcut-decomposable: the polynomial engine applies.
    #[serde(rename = "NL_TRACTABLE")]
    NlTractable,
    /// No good level exists; evaluation is intractable in general.
    #[serde(rename = "NP_HARD")]
    NpHard,
}

impl Label {
    pub fn is_tractable(self) -> bool {
        !matches!(self, Label::NpHard)
    }
}

/// Caveats attached to a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Caveat {
    /// The hardness argument is established for edge-labeled graphs only;
    /// on vertex-labeled or vertex-edge-labeled graphs the same language
    /// may admit a polynomial evaluation.
    #[serde(rename = "edge_model_only")]
    EdgeModelOnly,
}

/// Necessary-condition diagnostics reported alongside every verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub subword_closed: bool,
    pub aperiodic: Aperiodicity,
}

/// The certificate attached to a verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Decomposition(Decomposition),
    HardnessWitness(HardnessWitness),
}

/// Classification result: the label, the graph model it is stated for, the
/// certificate that makes it checkable, and diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub label: Label,
    pub model: LabelMode,
    pub caveats: Vec<Caveat>,
    pub certificate: Certificate,
    pub diagnostics: Diagnostics,
}

impl Verdict {
    pub fn decomposition(&self) -> Option<&Decomposition> {
        match &self.certificate {
            Certificate::Decomposition(d) => Some(d),
            Certificate::HardnessWitness(_) => None,
        }
    }

    pub fn hardness(&self) -> Option<&HardnessWitness> {
        match &self.certificate {
            Certificate::HardnessWitness(w) => Some(w),
            Certificate::Decomposition(_) => None,
        }
    }
}

/// One level of the classifier's state-space walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelPair {
    /// `P_k`: states reached from the initial state by length-k words.
    pub reachable: StateSet,
    /// `G_k`: the family `{Good(s) : |s| = k}` of co-reachability sets.
    pub good_sets: BTreeSet<StateSet>,
}

/// The full pre-period and first cycle of the `(P_k, G_k)` walk. Level
/// `cycle_start + cycle_len` equals level `cycle_start`, so `levels` covers
/// every pair the walk can ever visit.
#[derive(Debug, Clone)]
pub struct LevelWalk {
    pub levels: Vec<LevelPair>,
    pub cycle_start: usize,
    pub cycle_len: usize,
}

/// Iterate the `(P_k, G_k)` pairs from `({q0}, {F})`, memoizing until the
/// first repeat. The iteration cap cannot fire mathematically (the pair
/// space is finite); it guards implementation bugs.
pub fn level_sets(d: &Dfa, caps: &Caps) -> Result<LevelWalk> {
    let mut seen: HashMap<(StateSet, BTreeSet<StateSet>), usize> = HashMap::new();
    let mut levels: Vec<LevelPair> = Vec::new();
    let mut reachable = StateSet::singleton(d.num_states(), d.initial());
    let mut good_sets = BTreeSet::from([d.accepting().clone()]);
    loop {
        if levels.len() >= caps.level_iterations {
            return Err(Error::CapExceeded {
                kind: CapKind::LevelIterations,
                limit: caps.level_iterations as u64,
            });
        }
        let key = (reachable.clone(), good_sets.clone());
        if let Some(&start) = seen.get(&key) {
            return Ok(LevelWalk {
                cycle_start: start,
                cycle_len: levels.len() - start,
                levels,
            });
        }
        seen.insert(key, levels.len());
        levels.push(LevelPair {
            reachable: reachable.clone(),
            good_sets: good_sets.clone(),
        });

        let mut next_reachable = StateSet::empty(d.num_states());
        for q in reachable.iter() {
            for c in 0..d.alphabet().len() {
                next_reachable.insert(d.step_sym(q, c));
            }
        }
        let mut next_good = BTreeSet::new();
        for t in &good_sets {
            for &ch in d.alphabet().chars() {
                next_good.insert(d.suffix_good(t, ch)?);
            }
        }
        reachable = next_reachable;
        good_sets = next_good;
    }
}

/// Shared cache of "is the middle language M(q, T) subword-closed" answers;
/// the same (state, set) pair is realized at many levels.
struct MiddleCache {
    closed: HashMap<(usize, StateSet), bool>,
}

impl MiddleCache {
    fn new() -> Self {
        MiddleCache {
            closed: HashMap::new(),
        }
    }

    fn is_closed(&mut self, d: &Dfa, q: usize, t: &StateSet, caps: &Caps) -> Result<bool> {
        if let Some(&b) = self.closed.get(&(q, t.clone())) {
            return Ok(b);
        }
        let b = d.middle_dfa(q, t)?.is_subword_closed(caps)?;
        self.closed.insert((q, t.clone()), b);
        Ok(b)
    }
}

fn level_is_good(d: &Dfa, pair: &LevelPair, caps: &Caps, cache: &mut MiddleCache) -> Result<bool> {
    for q in pair.reachable.iter() {
        for t in &pair.good_sets {
            if !cache.is_closed(d, q, t, caps)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Length of the longest accepted word, `None` for the empty language.
/// Defined only when the language is finite (the live subgraph is acyclic).
fn longest_accepted_len(d: &Dfa) -> Option<usize> {
    let live = d.co_reachable_set();
    if !live.contains(d.initial()) {
        return None;
    }
    fn rec(d: &Dfa, live: &StateSet, q: usize, memo: &mut [Option<usize>]) -> usize {
        if let Some(v) = memo[q] {
            return v;
        }
        let mut best = 0;
        for c in 0..d.alphabet().len() {
            let t = d.step_sym(q, c);
            if live.contains(t) {
                best = best.max(1 + rec(d, live, t, memo));
            }
        }
        memo[q] = Some(best);
        best
    }
    let mut memo = vec![None; d.num_states()];
    Some(rec(d, &live, d.initial(), &mut memo))
}

/// The degenerate all-short-words certificate for a finite language:
/// level 0 for the empty language, longest word length + 1 otherwise (every
/// length-k prefix is then dead, so there are no components).
fn finite_decomposition(d: &Dfa, caps: &Caps) -> Result<Decomposition> {
    let k = match longest_accepted_len(d) {
        None => 0,
        Some(maxlen) => maxlen + 1,
    };
    build_decomposition(d, k, caps)
}

/// Decide the trichotomy verdict for the language of `d` and attach a
/// verified certificate. Tractable verdicts (both labels) carry a
/// decomposition that has passed `verify_decomposition`; hard verdicts carry
/// a hardness witness whose claims re-check by simulation. For vertex- and
/// vertex-edge-labeled models the hardness label is kept but flagged
/// `edge_model_only`; tractable verdicts stay valid on every model.
pub fn classify(d: &Dfa, model: LabelMode, caps: &Caps) -> Result<Verdict> {
    let d = d.minimize();
    let diagnostics = Diagnostics {
        subword_closed: d.is_subword_closed(caps)?,
        aperiodic: is_aperiodic(&d, caps.monoid_elements),
    };

    let tractable = |dec: Decomposition, label: Label| -> Result<Verdict> {
        if !verify_decomposition(&d, &dec, caps)? {
            return Err(Error::InvalidCertificate(
                "built decomposition failed verification".into(),
            ));
        }
        Ok(Verdict {
            label,
            model,
            caveats: Vec::new(),
            certificate: Certificate::Decomposition(dec),
            diagnostics,
        })
    };

    if d.is_finite() {
        let dec = finite_decomposition(&d, caps)?;
        return tractable(dec, Label::Ac0Finite);
    }

    let walk = level_sets(&d, caps)?;
    let mut cache = MiddleCache::new();
    for k in 0..walk.levels.len() {
        if level_is_good(&d, &walk.levels[k], caps, &mut cache)? {
            let dec = build_decomposition(&d, k, caps)?;
            return tractable(dec, Label::NlTractable);
        }
    }

    let witness = hardness_witness(&d, &walk, caps)?;
    witness.validate(&d)?;
    let caveats = if model == LabelMode::EdgeLabeled {
        Vec::new()
    } else {
        vec![Caveat::EdgeModelOnly]
    };
    Ok(Verdict {
        label: Label::NpHard,
        model,
        caveats,
        certificate: Certificate::HardnessWitness(witness),
        diagnostics,
    })
}
