use crate::automata::{Dfa, Nfa, StateSet};
use crate::config::Caps;
use crate::error::{CapKind, Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// One piece of a tractability certificate: all words `prefix · m · suffix`
/// with `m` in the middle language belong to the query language, and the
/// middle language is subword-closed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub prefix: String,
    pub middle: Dfa,
    pub suffix: String,
}

/// Tractability certificate: a shortcut level `k`, the finitely many words
/// shorter than `2k`, and one subword-closed middle language per realized
/// `(prefix, suffix)` pair of length-k words. Verifiable by automata
/// equivalence: the union of `p · L(M) · s` over the components plus the
/// short words must reconstruct the language exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub level: usize,
    pub short_words: Vec<String>,
    pub components: Vec<Component>,
}

/// All length-k prefixes that reach a state from which acceptance is still
/// possible, paired with that state. Explored as a tree walk over the DFA
/// with dead branches pruned, so the `|alphabet|^k` worst case is only paid
/// when the automaton realizes it.
fn live_prefixes(d: &Dfa, k: usize, caps: &Caps) -> Result<Vec<(String, usize)>> {
    let live = d.co_reachable_set();
    let mut out = Vec::new();
    let mut explored = 0usize;
    let mut stack: Vec<(usize, String)> = vec![(d.initial(), String::new())];
    while let Some((q, p)) = stack.pop() {
        if !live.contains(q) {
            continue;
        }
        explored += 1;
        if explored > caps.level_enumeration {
            return Err(Error::CapExceeded {
                kind: CapKind::LevelEnumeration,
                limit: caps.level_enumeration as u64,
            });
        }
        if p.len() == k {
            out.push((p, q));
            continue;
        }
        // reverse order: the stack pops in ascending alphabet order
        for (c, &ch) in d.alphabet().chars().iter().enumerate().rev() {
            let mut next = p.clone();
            next.push(ch);
            stack.push((d.step_sym(q, c), next));
        }
    }
    Ok(out)
}

/// All length-k suffixes with a nonempty co-reachability set, paired with
/// `Good(s) = {q : δ(q, s) ∈ F}`. Built by prepending letters; a branch dies
/// as soon as its set becomes empty.
fn live_suffixes(d: &Dfa, k: usize, caps: &Caps) -> Result<Vec<(String, StateSet)>> {
    let mut out = Vec::new();
    let mut explored = 0usize;
    let mut stack: Vec<(StateSet, String)> = vec![(d.accepting().clone(), String::new())];
    while let Some((t, s)) = stack.pop() {
        if t.is_empty() {
            continue;
        }
        explored += 1;
        if explored > caps.level_enumeration {
            return Err(Error::CapExceeded {
                kind: CapKind::LevelEnumeration,
                limit: caps.level_enumeration as u64,
            });
        }
        if s.len() == k {
            out.push((s, t));
            continue;
        }
        for &ch in d.alphabet().chars().iter().rev() {
            let mut next = ch.to_string();
            next.push_str(&s);
            stack.push((d.suffix_good(&t, ch)?, next));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Build the certificate at level `k`. Short words are all words of the
/// language shorter than `2k`; components are stored per concrete
/// `(prefix, suffix)` word pair, with empty middles dropped. Errors with
/// `BadLevel` if some realized middle is not subword-closed (defensive
/// re-check; callers are expected to pass a good level).
pub fn build_decomposition(d: &Dfa, k: usize, caps: &Caps) -> Result<Decomposition> {
    if k > caps.max_level {
        return Err(Error::CapExceeded {
            kind: CapKind::ShortcutLevel,
            limit: caps.max_level as u64,
        });
    }
    let short_words = if k == 0 {
        Vec::new()
    } else {
        d.enumerate_words_with(2 * k - 1, caps)?
    };
    let prefixes = live_prefixes(d, k, caps)?;
    let suffixes = live_suffixes(d, k, caps)?;

    let mut middles: HashMap<(usize, StateSet), Dfa> = HashMap::new();
    let mut closed: HashMap<(usize, StateSet), bool> = HashMap::new();
    let mut components = Vec::new();
    for (p, q) in &prefixes {
        for (s, t) in &suffixes {
            let key = (*q, t.clone());
            let middle = match middles.get(&key) {
                Some(m) => m.clone(),
                None => {
                    let m = d.middle_dfa(*q, t)?;
                    middles.insert(key.clone(), m.clone());
                    m
                }
            };
            if middle.is_empty() {
                continue;
            }
            let is_closed = match closed.get(&key) {
                Some(&b) => b,
                None => {
                    let b = middle.is_subword_closed(caps)?;
                    closed.insert(key, b);
                    b
                }
            };
            if !is_closed {
                return Err(Error::BadLevel(k));
            }
            if components.len() >= caps.level_enumeration {
                return Err(Error::CapExceeded {
                    kind: CapKind::LevelEnumeration,
                    limit: caps.level_enumeration as u64,
                });
            }
            components.push(Component {
                prefix: p.clone(),
                middle,
                suffix: s.clone(),
            });
        }
    }
    Ok(Decomposition {
        level: k,
        short_words,
        components,
    })
}

/// Check a certificate against the language it claims to decompose:
/// every middle must be subword-closed, the shape must be consistent
/// (prefix/suffix lengths equal the level, short words shorter than 2k),
/// and the reconstruction `∪ p·L(M)·s ∪ short-words` must be equivalent to
/// the language. Returns `Ok(false)` on any failed check, reserving errors
/// for resource caps and alphabet mismatches.
pub fn verify_decomposition(d: &Dfa, dec: &Decomposition, caps: &Caps) -> Result<bool> {
    let alphabet = d.alphabet();
    let k = dec.level;
    for w in &dec.short_words {
        // with k = 0 there are no valid short words at all
        if k == 0 || w.chars().count() >= 2 * k {
            return Ok(false);
        }
    }
    for comp in &dec.components {
        if comp.middle.alphabet() != alphabet {
            return Err(Error::AlphabetMismatch {
                left: alphabet.to_string(),
                right: comp.middle.alphabet().to_string(),
            });
        }
        if comp.prefix.chars().count() != k || comp.suffix.chars().count() != k {
            return Ok(false);
        }
        if !comp.middle.is_subword_closed(caps)? {
            return Ok(false);
        }
    }
    let mut parts: Vec<Nfa> = Vec::new();
    for w in &dec.short_words {
        parts.push(Nfa::for_word(w, alphabet)?);
    }
    for comp in &dec.components {
        let part = Nfa::for_word(&comp.prefix, alphabet)?
            .concat(&comp.middle.to_nfa())?
            .concat(&Nfa::for_word(&comp.suffix, alphabet)?)?;
        parts.push(part);
    }
    let reconstruction = Nfa::union_all(&parts, alphabet)?.to_dfa(caps.determinization_states)?;
    reconstruction.equivalent(d)
}
