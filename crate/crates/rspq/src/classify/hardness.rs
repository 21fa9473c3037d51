use super::LevelWalk;
use crate::automata::{is_subword, Dfa, StateSet};
use crate::config::Caps;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, VecDeque};

/// Concrete evidence that a language falls outside the tractable class:
/// words with `prefix · middle · suffix` accepted, `middle_subword` a
/// subword of `middle`, and `prefix · middle_subword · suffix` rejected:
/// exactly the failure of subword-closure that breaks the shortcutting
/// argument. The optional pump words show the prefix and suffix stretch to
/// arbitrary length with the same middle behavior: `δ(q0, prefix·u^i)`
/// stays at the same state and `Good(v^i · suffix)` stays at the same set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HardnessWitness {
    pub prefix: String,
    pub suffix: String,
    pub middle: String,
    pub middle_subword: String,
    pub prefix_pump: Option<String>,
    pub suffix_pump: Option<String>,
}

impl HardnessWitness {
    /// Re-check every membership claim against the automaton by plain
    /// simulation, and the subword claim positionally.
    pub fn validate(&self, d: &Dfa) -> Result<()> {
        let claim = |word: String, accepted: bool| -> Result<()> {
            if d.accepts(&word) != accepted {
                return Err(Error::InvalidCertificate(format!(
                    "hardness witness claims '{word}' is {}",
                    if accepted { "accepted" } else { "rejected" }
                )));
            }
            Ok(())
        };
        if !is_subword(&self.middle_subword, &self.middle) {
            return Err(Error::InvalidCertificate(format!(
                "'{}' is not a subword of '{}'",
                self.middle_subword, self.middle
            )));
        }
        claim(
            format!("{}{}{}", self.prefix, self.middle, self.suffix),
            true,
        )?;
        claim(
            format!("{}{}{}", self.prefix, self.middle_subword, self.suffix),
            false,
        )?;
        if let Some(u) = &self.prefix_pump {
            if u.is_empty() {
                return Err(Error::InvalidCertificate("empty prefix pump".into()));
            }
            claim(
                format!("{}{u}{}{}", self.prefix, self.middle, self.suffix),
                true,
            )?;
            claim(
                format!("{}{u}{u}{}{}", self.prefix, self.middle, self.suffix),
                true,
            )?;
            claim(
                format!("{}{u}{}{}", self.prefix, self.middle_subword, self.suffix),
                false,
            )?;
        }
        if let Some(v) = &self.suffix_pump {
            if v.is_empty() {
                return Err(Error::InvalidCertificate("empty suffix pump".into()));
            }
            claim(
                format!("{}{}{v}{}", self.prefix, self.middle, self.suffix),
                true,
            )?;
            claim(
                format!("{}{}{v}{v}{}", self.prefix, self.middle, self.suffix),
                true,
            )?;
            claim(
                format!("{}{}{v}{}", self.prefix, self.middle_subword, self.suffix),
                false,
            )?;
        }
        Ok(())
    }
}

/// Lexicographically smallest length-j word reaching each state reachable in
/// exactly j letters, for j = 0..=k.
fn canonical_prefixes(d: &Dfa, k: usize) -> HashMap<usize, String> {
    let mut level: HashMap<usize, String> = HashMap::from([(d.initial(), String::new())]);
    for _ in 0..k {
        let mut next: HashMap<usize, String> = HashMap::new();
        for (&q, w) in &level {
            for (c, &ch) in d.alphabet().chars().iter().enumerate() {
                let t = d.step_sym(q, c);
                let mut cand = w.clone();
                cand.push(ch);
                match next.get(&t) {
                    Some(prev) if *prev <= cand => {}
                    _ => {
                        next.insert(t, cand);
                    }
                }
            }
        }
        level = next;
    }
    level
}

/// Lexicographically smallest length-j suffix realizing each co-reachability
/// set in the level-j family, for j = 0..=k.
fn canonical_suffixes(d: &Dfa, k: usize) -> Result<BTreeMap<StateSet, String>> {
    let mut level: BTreeMap<StateSet, String> =
        BTreeMap::from([(d.accepting().clone(), String::new())]);
    for _ in 0..k {
        let mut next: BTreeMap<StateSet, String> = BTreeMap::new();
        for (t, s) in &level {
            for &ch in d.alphabet().chars() {
                let pre = d.suffix_good(t, ch)?;
                let mut cand = ch.to_string();
                cand.push_str(s);
                match next.get(&pre) {
                    Some(prev) if *prev <= cand => {}
                    _ => {
                        next.insert(pre, cand);
                    }
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Shortest pair `(m, m')` with `m` accepted by `middle`, `m'` a subword of
/// `m`, and `m'` rejected, found by a breadth-first search that runs two
/// copies of the automaton, one reading every letter of `m` and one reading
/// only the kept letters. Exists exactly when the language is not
/// subword-closed.
fn violating_pair(middle: &Dfa) -> Option<(String, String)> {
    let n = middle.num_states();
    let idx = |qm: usize, qs: usize| qm * n + qs;
    let start = idx(middle.initial(), middle.initial());
    let mut parent: Vec<Option<(usize, char, bool)>> = vec![None; n * n];
    let mut seen = vec![false; n * n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(node) = queue.pop_front() {
        let (qm, qs) = (node / n, node % n);
        if middle.is_accepting(qm) && !middle.is_accepting(qs) {
            // reconstruct m (all letters) and m' (kept letters)
            let mut m = String::new();
            let mut sub = String::new();
            let mut at = node;
            while let Some((prev, ch, kept)) = parent[at] {
                m.push(ch);
                if kept {
                    sub.push(ch);
                }
                at = prev;
            }
            return Some((m.chars().rev().collect(), sub.chars().rev().collect()));
        }
        for (c, &ch) in middle.alphabet().chars().iter().enumerate() {
            let qm2 = middle.step_sym(qm, c);
            for kept in [true, false] {
                let qs2 = if kept { middle.step_sym(qs, c) } else { qs };
                let next = idx(qm2, qs2);
                if !seen[next] {
                    seen[next] = true;
                    parent[next] = Some((node, ch, kept));
                    queue.push_back(next);
                }
            }
        }
    }
    None
}

/// Shortest nonempty word looping at state `q`.
fn state_loop(d: &Dfa, q: usize) -> Option<String> {
    let mut parent: Vec<Option<(usize, char)>> = vec![None; d.num_states()];
    let mut seen = vec![false; d.num_states()];
    let mut queue = VecDeque::new();
    // seed with the first step so the empty word is excluded
    for (c, &ch) in d.alphabet().chars().iter().enumerate() {
        let t = d.step_sym(q, c);
        if t == q {
            return Some(ch.to_string());
        }
        if !seen[t] {
            seen[t] = true;
            parent[t] = Some((q, ch));
            queue.push_back(t);
        }
    }
    while let Some(v) = queue.pop_front() {
        for (c, &ch) in d.alphabet().chars().iter().enumerate() {
            let t = d.step_sym(v, c);
            if t == q {
                let mut word = ch.to_string();
                let mut at = v;
                while at != q {
                    let (prev, pch) = parent[at].unwrap();
                    word.push(pch);
                    at = prev;
                }
                return Some(word.chars().rev().collect());
            }
            if !seen[t] {
                seen[t] = true;
                parent[t] = Some((v, ch));
                queue.push_back(t);
            }
        }
    }
    None
}

/// Shortest nonempty word `v` with `{q : δ(q, v) ∈ T} = T`, searched over
/// the co-reachability sets generated from `T` (bounded exploration).
fn set_loop(d: &Dfa, t: &StateSet, cap: usize) -> Result<Option<String>> {
    let mut seen: BTreeMap<StateSet, ()> = BTreeMap::new();
    let mut queue: VecDeque<(StateSet, String)> = VecDeque::new();
    for &ch in d.alphabet().chars() {
        let pre = d.suffix_good(t, ch)?;
        let word = ch.to_string();
        if pre == *t {
            return Ok(Some(word));
        }
        if seen.insert(pre.clone(), ()).is_none() {
            queue.push_back((pre, word));
        }
    }
    while let Some((set, word)) = queue.pop_front() {
        if seen.len() > cap {
            return Ok(None);
        }
        for &ch in d.alphabet().chars() {
            let pre = d.suffix_good(&set, ch)?;
            // prepend: reading ch then the current word
            let mut cand = ch.to_string();
            cand.push_str(&word);
            if pre == *t {
                return Ok(Some(cand));
            }
            if seen.insert(pre.clone(), ()).is_none() {
                queue.push_back((pre, cand));
            }
        }
    }
    Ok(None)
}

/// Extract a hardness witness once no good level exists. The level is the
/// cycle length of the level-set walk; the first realized middle that is
/// not subword-closed (states ascending, sets in canonical order) supplies
/// the violating pair.
pub fn hardness_witness(d: &Dfa, walk: &LevelWalk, caps: &Caps) -> Result<HardnessWitness> {
    let k = walk.cycle_len;
    let prefixes = canonical_prefixes(d, k);
    let suffixes = canonical_suffixes(d, k)?;
    let mut states: Vec<usize> = prefixes.keys().copied().collect();
    states.sort_unstable();
    for q in states {
        for (t, s) in &suffixes {
            let middle = d.middle_dfa(q, t)?;
            if middle.is_subword_closed(caps)? {
                continue;
            }
            let (m, sub) = violating_pair(&middle).ok_or_else(|| {
                Error::InvalidCertificate(
                    "middle reported non-closed but no violating pair exists".into(),
                )
            })?;
            return Ok(HardnessWitness {
                prefix: prefixes[&q].clone(),
                suffix: s.clone(),
                middle: m,
                middle_subword: sub,
                prefix_pump: state_loop(d, q),
                suffix_pump: set_loop(d, t, caps.level_enumeration)?,
            });
        }
    }
    Err(Error::InvalidCertificate(format!(
        "no violating middle at level {k}; the language looks tractable"
    )))
}
