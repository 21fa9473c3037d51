use super::{check_same_alphabet, Alphabet, Nfa, Regex, StateSet};
use crate::config::Caps;
use crate::error::{CapKind, Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Set operation computed by the product construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    Difference,
}

/// Complete deterministic finite automaton: the canonical form of a query
/// language. The transition function is total; a canonical dead state is
/// added during determinization when needed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DfaRepr", into = "DfaRepr")]
pub struct Dfa {
    alphabet: Alphabet,
    num_states: usize,
    /// Row per state, entry per alphabet symbol (in alphabet order).
    delta: Vec<Vec<usize>>,
    initial: usize,
    accepting: StateSet,
    /// The non-accepting all-self-loop sink, when one exists.
    dead: Option<usize>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        num_states: usize,
        delta: Vec<Vec<usize>>,
        initial: usize,
        accepting: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if num_states == 0 {
            return Err(Error::InvalidAutomaton(
                "a DFA needs at least one state".into(),
            ));
        }
        if delta.len() != num_states {
            return Err(Error::InvalidAutomaton(format!(
                "expected {num_states} transition rows, got {}",
                delta.len()
            )));
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::InvalidAutomaton(format!(
                    "state {q}: expected {} transitions, got {} (delta must be total)",
                    alphabet.len(),
                    row.len()
                )));
            }
            for &t in row {
                if t >= num_states {
                    return Err(Error::StateOutOfRange {
                        state: t,
                        states: num_states,
                    });
                }
            }
        }
        if initial >= num_states {
            return Err(Error::StateOutOfRange {
                state: initial,
                states: num_states,
            });
        }
        let mut acc = StateSet::empty(num_states);
        for q in accepting {
            if q >= num_states {
                return Err(Error::StateOutOfRange {
                    state: q,
                    states: num_states,
                });
            }
            acc.insert(q);
        }
        let mut dfa = Dfa {
            alphabet,
            num_states,
            delta,
            initial,
            accepting: acc,
            dead: None,
        };
        dfa.dead = dfa.detect_dead();
        Ok(dfa)
    }

    fn detect_dead(&self) -> Option<usize> {
        (0..self.num_states)
            .find(|&q| !self.accepting.contains(q) && self.delta[q].iter().all(|&t| t == q))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn accepting(&self) -> &StateSet {
        &self.accepting
    }

    pub fn dead(&self) -> Option<usize> {
        self.dead
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting.contains(q)
    }

    /// Transition on a symbol index (alphabet order).
    pub fn step_sym(&self, q: usize, sym: usize) -> usize {
        self.delta[q][sym]
    }

    /// Transition on a character; `None` when the character is not in the
    /// alphabet (such labels never match).
    pub fn step(&self, q: usize, c: char) -> Option<usize> {
        self.alphabet.index_of(c).map(|s| self.delta[q][s])
    }

    /// Run a word from a state; `None` if any character is outside the
    /// alphabet.
    pub fn run_from(&self, q: usize, word: &str) -> Option<usize> {
        word.chars().try_fold(q, |q, c| self.step(q, c))
    }

    pub fn accepts(&self, word: &str) -> bool {
        self.run_from(self.initial, word)
            .is_some_and(|q| self.accepting.contains(q))
    }

    /// Convenience pipeline: parse → Thompson NFA → subset construction →
    /// minimize, with default caps.
    pub fn from_regex(text: &str, alphabet: &Alphabet) -> Result<Dfa> {
        Self::from_regex_with(text, alphabet, &Caps::default())
    }

    pub fn from_regex_with(text: &str, alphabet: &Alphabet, caps: &Caps) -> Result<Dfa> {
        let re = Regex::parse(text, alphabet)?;
        Ok(re
            .to_nfa(alphabet)
            .to_dfa(caps.determinization_states)?
            .minimize())
    }

    /// Minimal DFA for a finite set of words.
    pub fn from_words<'a>(
        words: impl IntoIterator<Item = &'a str>,
        alphabet: &Alphabet,
        caps: &Caps,
    ) -> Result<Dfa> {
        let parts: Vec<Nfa> = words
            .into_iter()
            .map(|w| Nfa::for_word(w, alphabet))
            .collect::<Result<_>>()?;
        let union = Nfa::union_all(&parts, alphabet)?;
        Ok(union.to_dfa(caps.determinization_states)?.minimize())
    }

    fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.num_states];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for &t in &self.delta[q] {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        order
    }

    /// States from which some accepting state is reachable.
    fn co_reachable(&self) -> StateSet {
        let k = self.alphabet.len();
        let mut inv: Vec<Vec<usize>> = vec![Vec::new(); self.num_states];
        for q in 0..self.num_states {
            for c in 0..k {
                inv[self.delta[q][c]].push(q);
            }
        }
        let mut live = self.accepting.clone();
        let mut queue: VecDeque<usize> = live.iter().collect();
        while let Some(q) = queue.pop_front() {
            for &p in &inv[q] {
                if !live.contains(p) {
                    live.insert(p);
                    queue.push_back(p);
                }
            }
        }
        live
    }

    /// States from which some accepting state is reachable.
    pub(crate) fn co_reachable_set(&self) -> StateSet {
        self.co_reachable()
    }

    /// Minimal complete DFA for the same language: unreachable states are
    /// dropped, then language-equivalent states are merged by partition
    /// refinement. States of the result are numbered in breadth-first order
    /// from the initial state (symbol order), so equal languages minimize to
    /// structurally equal automata.
    pub fn minimize(&self) -> Dfa {
        let reach = self.reachable();
        let n = reach.len();
        let k = self.alphabet.len();
        let mut compact = vec![usize::MAX; self.num_states];
        for (i, &q) in reach.iter().enumerate() {
            compact[q] = i;
        }
        // restricted automaton over reachable states
        let delta: Vec<Vec<usize>> = reach
            .iter()
            .map(|&q| self.delta[q].iter().map(|&t| compact[t]).collect())
            .collect();
        let accepting: Vec<bool> = reach.iter().map(|&q| self.accepting.contains(q)).collect();

        // partition refinement: split blocks against the preimage of each
        // processed (block, symbol) until stable
        let mut inv: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); k]; n];
        for (q, row) in delta.iter().enumerate() {
            for (c, &t) in row.iter().enumerate() {
                inv[t][c].push(q);
            }
        }
        let mut block_of: Vec<usize> = accepting.iter().map(|&a| usize::from(!a)).collect();
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(), Vec::new()];
        for (q, &b) in block_of.iter().enumerate() {
            blocks[b].push(q);
        }
        blocks.retain(|b| !b.is_empty());
        for (b, members) in blocks.iter().enumerate() {
            for &q in members {
                block_of[q] = b;
            }
        }
        let mut worklist: VecDeque<(usize, usize)> = (0..blocks.len())
            .flat_map(|b| (0..k).map(move |c| (b, c)))
            .collect();

        while let Some((b, c)) = worklist.pop_front() {
            // states with a c-transition into block b
            let splitter: Vec<usize> = blocks[b]
                .iter()
                .flat_map(|&q| inv[q][c].iter().copied())
                .collect();
            let mut touched: Vec<usize> = Vec::new();
            let mut hit: Vec<Vec<usize>> = vec![Vec::new(); blocks.len()];
            for &q in &splitter {
                let bq = block_of[q];
                if hit[bq].is_empty() {
                    touched.push(bq);
                }
                hit[bq].push(q);
            }
            for bq in touched {
                if hit[bq].len() == blocks[bq].len() {
                    continue; // block not split
                }
                hit[bq].sort_unstable();
                hit[bq].dedup();
                if hit[bq].len() == blocks[bq].len() {
                    continue;
                }
                let new_id = blocks.len();
                let moved = std::mem::take(&mut hit[bq]);
                blocks[bq].retain(|q| !moved.contains(q));
                for &q in &moved {
                    block_of[q] = new_id;
                }
                blocks.push(moved);
                // both halves may now split other blocks
                for cc in 0..k {
                    worklist.push_back((bq, cc));
                    worklist.push_back((new_id, cc));
                }
            }
        }

        // quotient automaton, then canonical BFS renumbering
        let block_count = blocks.len();
        let quot_delta: Vec<Vec<usize>> = (0..block_count)
            .map(|b| {
                let rep = blocks[b][0];
                (0..k).map(|c| block_of[delta[rep][c]]).collect()
            })
            .collect();
        let quot_initial = block_of[compact[self.initial]];

        let mut order = vec![usize::MAX; block_count];
        let mut next_id = 0;
        let mut queue = VecDeque::from([quot_initial]);
        order[quot_initial] = next_id;
        next_id += 1;
        while let Some(b) = queue.pop_front() {
            for &t in &quot_delta[b] {
                if order[t] == usize::MAX {
                    order[t] = next_id;
                    next_id += 1;
                    queue.push_back(t);
                }
            }
        }
        debug_assert_eq!(next_id, block_count);

        let mut new_delta = vec![Vec::new(); block_count];
        for b in 0..block_count {
            new_delta[order[b]] = quot_delta[b].iter().map(|&t| order[t]).collect();
        }
        let new_accepting = (0..block_count)
            .filter(|&b| accepting[blocks[b][0]])
            .map(|b| order[b]);
        Dfa::new(
            self.alphabet.clone(),
            block_count,
            new_delta,
            0,
            new_accepting,
        )
        .expect("quotient of a valid DFA is valid")
    }

    /// Language equivalence via reachability in the pair product: the
    /// languages differ iff a pair with mismatched acceptance is reachable.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool> {
        check_same_alphabet(&self.alphabet, &other.alphabet)?;
        let k = self.alphabet.len();
        let mut seen = vec![false; self.num_states * other.num_states];
        let pair = |a: usize, b: usize| a * other.num_states + b;
        let mut queue = VecDeque::from([(self.initial, other.initial)]);
        seen[pair(self.initial, other.initial)] = true;
        while let Some((a, b)) = queue.pop_front() {
            if self.accepting.contains(a) != other.accepting.contains(b) {
                return Ok(false);
            }
            for c in 0..k {
                let (na, nb) = (self.delta[a][c], other.delta[b][c]);
                if !seen[pair(na, nb)] {
                    seen[pair(na, nb)] = true;
                    queue.push_back((na, nb));
                }
            }
        }
        Ok(true)
    }

    /// Product automaton computing union, intersection or difference.
    /// Only reachable pairs are materialized; the result is complete.
    pub fn combine(&self, other: &Dfa, op: SetOp) -> Result<Dfa> {
        check_same_alphabet(&self.alphabet, &other.alphabet)?;
        let k = self.alphabet.len();
        let mut index = std::collections::HashMap::new();
        let mut pairs = Vec::new();
        let mut delta = Vec::new();
        index.insert((self.initial, other.initial), 0);
        pairs.push((self.initial, other.initial));
        let mut at = 0;
        while at < pairs.len() {
            let (a, b) = pairs[at];
            let mut row = Vec::with_capacity(k);
            for c in 0..k {
                let next = (self.delta[a][c], other.delta[b][c]);
                let id = *index.entry(next).or_insert_with(|| {
                    pairs.push(next);
                    pairs.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
            at += 1;
        }
        let accepting = pairs.iter().enumerate().filter_map(|(i, &(a, b))| {
            let (fa, fb) = (self.accepting.contains(a), other.accepting.contains(b));
            let acc = match op {
                SetOp::Union => fa || fb,
                SetOp::Intersection => fa && fb,
                SetOp::Difference => fa && !fb,
            };
            acc.then_some(i)
        });
        Dfa::new(
            self.alphabet.clone(),
            pairs.len(),
            delta,
            0,
            accepting.collect::<Vec<_>>(),
        )
    }

    /// True iff the language is empty: no accepting state is reachable.
    pub fn is_empty(&self) -> bool {
        self.reachable()
            .iter()
            .all(|&q| !self.accepting.contains(q))
    }

    /// True iff the language is finite: no cycle lies on a path from the
    /// initial state to an accepting state. (The dead state is excluded
    /// automatically since it is not co-reachable.)
    pub fn is_finite(&self) -> bool {
        let live_set = self.co_reachable();
        let reach = self.reachable();
        let live: Vec<usize> = reach
            .into_iter()
            .filter(|&q| live_set.contains(q))
            .collect();
        // cycle detection restricted to live states
        let mut color = vec![0u8; self.num_states]; // 0 new, 1 open, 2 done
        for &start in &live {
            if color[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            color[start] = 1;
            while let Some(&mut (q, ref mut ci)) = stack.last_mut() {
                if *ci < self.alphabet.len() {
                    let t = self.delta[q][*ci];
                    *ci += 1;
                    if !live_set.contains(t) {
                        continue;
                    }
                    match color[t] {
                        0 => {
                            color[t] = 1;
                            stack.push((t, 0));
                        }
                        1 => return false, // back edge: live cycle
                        _ => {}
                    }
                } else {
                    color[q] = 2;
                    stack.pop();
                }
            }
        }
        true
    }

    /// All words of the language with length ≤ `max_len`, in
    /// length-then-lexicographic order (lexicographic per the alphabet
    /// order), using default enumeration caps.
    pub fn enumerate_words(&self, max_len: usize) -> Result<Vec<String>> {
        self.enumerate_words_with(max_len, &Caps::default())
    }

    pub fn enumerate_words_with(&self, max_len: usize, caps: &Caps) -> Result<Vec<String>> {
        if max_len > caps.enum_max_len {
            return Err(Error::CapExceeded {
                kind: CapKind::WordLength,
                limit: caps.enum_max_len as u64,
            });
        }
        // distance to the nearest accepting state, for pruning
        let k = self.alphabet.len();
        let mut dist = vec![usize::MAX; self.num_states];
        let mut inv: Vec<Vec<usize>> = vec![Vec::new(); self.num_states];
        for q in 0..self.num_states {
            for c in 0..k {
                inv[self.delta[q][c]].push(q);
            }
        }
        let mut queue = VecDeque::new();
        for q in self.accepting.iter() {
            dist[q] = 0;
            queue.push_back(q);
        }
        while let Some(q) = queue.pop_front() {
            for &p in &inv[q] {
                if dist[p] == usize::MAX {
                    dist[p] = dist[q] + 1;
                    queue.push_back(p);
                }
            }
        }

        let mut out: Vec<String> = Vec::new();
        let mut word = String::new();
        self.enum_rec(self.initial, max_len, &dist, &mut word, &mut out, caps)?;
        out.sort_by_key(|w| w.len()); // stable: keeps lexicographic order per length
        Ok(out)
    }

    fn enum_rec(
        &self,
        q: usize,
        remaining: usize,
        dist: &[usize],
        word: &mut String,
        out: &mut Vec<String>,
        caps: &Caps,
    ) -> Result<()> {
        if dist[q] == usize::MAX || dist[q] > remaining {
            return Ok(());
        }
        if self.accepting.contains(q) {
            if out.len() >= caps.enum_max_words {
                return Err(Error::CapExceeded {
                    kind: CapKind::WordCount,
                    limit: caps.enum_max_words as u64,
                });
            }
            out.push(word.clone());
        }
        if remaining == 0 {
            return Ok(());
        }
        for (c, &ch) in self.alphabet.chars().iter().enumerate() {
            word.push(ch);
            self.enum_rec(self.delta[q][c], remaining - 1, dist, word, out, caps)?;
            word.pop();
        }
        Ok(())
    }

    /// One co-reachability step: the set `{q : δ(q, c) ∈ T}`. Iterating from
    /// `T = F` over a word s, last letter first, yields
    /// `Good(s) = {q : δ(q, s) ∈ F}`.
    pub fn suffix_good(&self, t: &StateSet, c: char) -> Result<StateSet> {
        let sym = self
            .alphabet
            .index_of(c)
            .ok_or(Error::CharOutsideAlphabet(c))?;
        self.check_state_set(t)?;
        Ok(StateSet::from_iter(
            self.num_states,
            (0..self.num_states).filter(|&q| t.contains(self.delta[q][sym])),
        ))
    }

    fn check_state_set(&self, t: &StateSet) -> Result<()> {
        if t.capacity() != self.num_states {
            return Err(Error::InvalidAutomaton(format!(
                "state set capacity {} does not match state count {}",
                t.capacity(),
                self.num_states
            )));
        }
        Ok(())
    }

    /// The middle language `M(q, T) = {m : δ(q, m) ∈ T}` as a minimal DFA:
    /// a copy of the automaton with initial state `q` and accepting set `T`,
    /// minimized.
    pub fn middle_dfa(&self, q: usize, t: &StateSet) -> Result<Dfa> {
        if q >= self.num_states {
            return Err(Error::StateOutOfRange {
                state: q,
                states: self.num_states,
            });
        }
        self.check_state_set(t)?;
        let raw = Dfa::new(
            self.alphabet.clone(),
            self.num_states,
            self.delta.clone(),
            q,
            t.iter(),
        )?;
        Ok(raw.minimize())
    }

    /// True iff the language equals its downward closure, i.e. is closed
    /// under taking scattered subsequences.
    pub fn is_subword_closed(&self, caps: &Caps) -> Result<bool> {
        let closure = self
            .to_nfa()
            .downward_closure()
            .to_dfa(caps.determinization_states)?;
        self.equivalent(&closure)
    }

    pub fn to_nfa(&self) -> Nfa {
        let transitions = (0..self.num_states)
            .flat_map(|q| {
                let row = &self.delta[q];
                self.alphabet
                    .chars()
                    .iter()
                    .enumerate()
                    .map(move |(c, &ch)| (q, Some(ch), row[c]))
                    .collect::<Vec<_>>()
            })
            .collect();
        Nfa::new(
            self.alphabet.clone(),
            self.num_states,
            transitions,
            vec![self.initial],
            self.accepting.iter().collect(),
        )
        .expect("a valid DFA converts to a valid NFA")
    }

    /// Serialize to the line-oriented text form:
    /// `dfa <nstates> <alphabet>` / `init <q0>` / `accept <q...>` /
    /// one `trans <q> <char> <q'>` line per transition.
    pub fn to_text(&self) -> String {
        let mut out = format!("dfa {} {}\n", self.num_states, self.alphabet);
        out.push_str(&format!("init {}\n", self.initial));
        out.push_str("accept");
        for q in self.accepting.iter() {
            out.push_str(&format!(" {q}"));
        }
        out.push('\n');
        for q in 0..self.num_states {
            for (c, &ch) in self.alphabet.chars().iter().enumerate() {
                out.push_str(&format!("trans {q} {ch} {}\n", self.delta[q][c]));
            }
        }
        out
    }

    /// Parse the text form produced by [`Dfa::to_text`]. Blank lines and
    /// `#` comments are permitted.
    pub fn parse_text(text: &str) -> Result<Dfa> {
        let mut header: Option<(usize, Alphabet)> = None;
        let mut init: Option<usize> = None;
        let mut accept: Vec<usize> = Vec::new();
        let mut trans: Vec<(usize, char, usize)> = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |message: String| Error::AutomatonFormat {
                line: ln + 1,
                message,
            };
            match fields[0] {
                "dfa" => {
                    if fields.len() != 3 {
                        return Err(bad("expected: dfa <nstates> <alphabet>".into()));
                    }
                    let n = fields[1]
                        .parse()
                        .map_err(|_| bad("bad state count".into()))?;
                    header = Some((n, Alphabet::parse(fields[2])?));
                }
                "init" => {
                    if fields.len() != 2 {
                        return Err(bad("expected: init <state>".into()));
                    }
                    init = Some(fields[1].parse().map_err(|_| bad("bad state".into()))?);
                }
                "accept" => {
                    for f in &fields[1..] {
                        accept.push(f.parse().map_err(|_| bad("bad state".into()))?);
                    }
                }
                "trans" => {
                    if fields.len() != 4 || fields[2].chars().count() != 1 {
                        return Err(bad("expected: trans <q> <char> <q'>".into()));
                    }
                    let p = fields[1].parse().map_err(|_| bad("bad state".into()))?;
                    let q = fields[3].parse().map_err(|_| bad("bad state".into()))?;
                    trans.push((p, fields[2].chars().next().unwrap(), q));
                }
                other => return Err(bad(format!("unknown directive '{other}'"))),
            }
        }
        let (n, alphabet) = header.ok_or(Error::AutomatonFormat {
            line: 0,
            message: "missing dfa header".into(),
        })?;
        let init = init.ok_or(Error::AutomatonFormat {
            line: 0,
            message: "missing init line".into(),
        })?;
        let mut delta = vec![vec![usize::MAX; alphabet.len()]; n];
        for (p, ch, q) in trans {
            let c = alphabet
                .index_of(ch)
                .ok_or(Error::CharOutsideAlphabet(ch))?;
            if p >= n {
                return Err(Error::StateOutOfRange {
                    state: p,
                    states: n,
                });
            }
            delta[p][c] = q;
        }
        if let Some((q, row)) = delta
            .iter()
            .enumerate()
            .find(|(_, row)| row.contains(&usize::MAX))
        {
            let c = row.iter().position(|&t| t == usize::MAX).unwrap();
            return Err(Error::InvalidAutomaton(format!(
                "missing transition from state {q} on '{}'",
                alphabet.chars()[c]
            )));
        }
        Dfa::new(alphabet, n, delta, init, accept)
    }
}

/// Plain serialization mirror, validated on deserialization.
#[derive(Serialize, Deserialize, Clone)]
struct DfaRepr {
    states: usize,
    alphabet: Alphabet,
    init: usize,
    accept: Vec<usize>,
    trans: Vec<(usize, char, usize)>,
}

impl From<Dfa> for DfaRepr {
    fn from(d: Dfa) -> DfaRepr {
        let mut trans = Vec::with_capacity(d.num_states * d.alphabet.len());
        for q in 0..d.num_states {
            for (c, &ch) in d.alphabet.chars().iter().enumerate() {
                trans.push((q, ch, d.delta[q][c]));
            }
        }
        DfaRepr {
            states: d.num_states,
            alphabet: d.alphabet.clone(),
            init: d.initial,
            accept: d.accepting.iter().collect(),
            trans,
        }
    }
}

impl TryFrom<DfaRepr> for Dfa {
    type Error = Error;
    fn try_from(r: DfaRepr) -> Result<Dfa> {
        let mut delta = vec![vec![usize::MAX; r.alphabet.len()]; r.states];
        for (p, ch, q) in r.trans {
            let c = r
                .alphabet
                .index_of(ch)
                .ok_or(Error::CharOutsideAlphabet(ch))?;
            if p >= r.states {
                return Err(Error::StateOutOfRange {
                    state: p,
                    states: r.states,
                });
            }
            delta[p][c] = q;
        }
        if delta.iter().any(|row| row.contains(&usize::MAX)) {
            return Err(Error::InvalidAutomaton(
                "incomplete transition table".into(),
            ));
        }
        Dfa::new(r.alphabet, r.states, delta, r.init, r.accept)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    fn dfa(re: &str) -> Dfa {
        Dfa::from_regex(re, &ab()).unwrap()
    }

    #[test]
    fn astarb_minimizes_to_three_states() {
        let d = dfa("a*b");
        assert_eq!(d.num_states(), 3);
        assert_eq!(d.initial(), 0);
        // canonical numbering: 0 --a--> 0, 0 --b--> 1 (accept), rest dead
        assert!(d.is_accepting(1));
        assert_eq!(d.dead(), Some(2));
        // oracle: words up to length 6 agree with the recursive definition
        let oracle = Regex::parse("a*b", &ab()).unwrap().words_up_to(6);
        let words: std::collections::BTreeSet<String> =
            d.enumerate_words(6).unwrap().into_iter().collect();
        assert_eq!(words, oracle);
    }

    #[test]
    fn minimize_is_idempotent_and_never_grows() {
        for re in ["a*b", "(aa)*", "a|b", "(a|b)*a", "~", "()"] {
            let d = dfa(re);
            let again = d.minimize();
            assert_eq!(d.num_states(), again.num_states(), "{re}");
            assert!(d.equivalent(&again).unwrap());
        }
    }

    #[test]
    fn even_as_two_states_over_a_three_over_ab() {
        let a = Alphabet::parse("a").unwrap();
        let d = Dfa::from_regex("(aa)*", &a).unwrap();
        assert_eq!(d.num_states(), 2); // Nerode classes: even, odd
        let d2 = dfa("(aa)*");
        assert_eq!(d2.num_states(), 3); // even, odd, dead
                                        // enumeration oracle to length 4
        assert_eq!(d2.enumerate_words(4).unwrap(), vec!["", "aa", "aaaa"]);
    }

    #[test]
    fn equivalence_relation() {
        let d = dfa("a*b");
        assert!(d.equivalent(&d.minimize()).unwrap());
        assert!(d.equivalent(&dfa("aa*b|b")).unwrap());
        assert!(!dfa("(aa)*").equivalent(&dfa("a*")).unwrap());
        let other = Dfa::from_regex("a", &Alphabet::parse("a").unwrap()).unwrap();
        assert!(matches!(
            d.equivalent(&other),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn combine_set_semantics() {
        let empty = dfa("~");
        let astar = dfa("a*");
        assert!(astar
            .combine(&empty, SetOp::Union)
            .unwrap()
            .equivalent(&astar)
            .unwrap());
        let inter = astar.combine(&dfa("a*ba*"), SetOp::Intersection).unwrap();
        assert!(inter.equivalent(&empty).unwrap());
        let union = astar.combine(&dfa("a*ba*"), SetOp::Union).unwrap();
        assert!(union.is_subword_closed(&Caps::default()).unwrap());
        let diff = dfa("a*").combine(&dfa("aa*"), SetOp::Difference).unwrap();
        assert!(diff.equivalent(&dfa("()")).unwrap());
    }

    #[test]
    fn emptiness_and_finiteness() {
        let empty = dfa("~");
        assert!(empty.is_empty() && empty.is_finite());
        let fin = dfa("ab|ba");
        assert!(!fin.is_empty() && fin.is_finite());
        assert!(!dfa("a*b").is_finite()); // the a-loop pumps
    }

    #[test]
    fn enumerate_orders_by_length_then_lex() {
        assert_eq!(
            dfa("a*ba*").enumerate_words(2).unwrap(),
            vec!["b", "ab", "ba"]
        );
        assert_eq!(dfa("~").enumerate_words(9).unwrap(), Vec::<String>::new());
        let err = dfa("a*").enumerate_words(100).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn suffix_good_examples() {
        let d = dfa("a*b"); // 0 = init, 1 = accept, 2 = dead
        let f = d.accepting().clone();
        let good_b = d.suffix_good(&f, 'b').unwrap();
        assert_eq!(good_b.iter().collect::<Vec<_>>(), vec![0]);
        let good_a = d.suffix_good(&f, 'a').unwrap();
        assert!(good_a.is_empty());
        let all = StateSet::full(3);
        assert_eq!(d.suffix_good(&all, 'a').unwrap(), all);
        assert!(matches!(
            d.suffix_good(&f, 'z'),
            Err(Error::CharOutsideAlphabet('z'))
        ));
    }

    #[test]
    fn middle_dfa_examples() {
        let d = dfa("a*b");
        let m = d.middle_dfa(0, &StateSet::singleton(3, 0)).unwrap();
        assert_eq!(
            m.enumerate_words(4).unwrap(),
            vec!["", "a", "aa", "aaa", "aaaa"]
        );
        let empty_mid = d.middle_dfa(0, &StateSet::empty(3)).unwrap();
        assert!(empty_mid.is_empty());
        let d2 = dfa("a*ba*"); // 0 = init, 1 = after b, 2 = dead
        let m2 = d2.middle_dfa(0, &StateSet::singleton(3, 1)).unwrap();
        assert!(m2.equivalent(&d2).unwrap());
    }

    #[test]
    fn subword_closure_checks() {
        let caps = Caps::default();
        let closed = dfa("a*|a*ba*");
        assert!(closed.is_subword_closed(&caps).unwrap());
        assert!(!dfa("a*ba*").is_subword_closed(&caps).unwrap());
        // a finite language with a nonempty word is never subword-closed
        assert!(!dfa("ab").is_subword_closed(&caps).unwrap());
        assert!(dfa("~").is_subword_closed(&caps).unwrap());
        assert!(dfa("()").is_subword_closed(&caps).unwrap());
    }

    #[test]
    fn text_form_round_trips() {
        for re in ["a*b", "(aa)*", "~", "ab|ba"] {
            let d = dfa(re);
            let text = d.to_text();
            let back = Dfa::parse_text(&text).unwrap();
            assert!(d.equivalent(&back).unwrap(), "{re}");
            assert_eq!(text, back.to_text());
        }
        assert!(Dfa::parse_text("dfa 1 ab\ninit 0\naccept\ntrans 0 a 0\n").is_err());
        // incomplete
    }

    #[test]
    fn serde_round_trip() {
        let d = dfa("a*ba*");
        let json = serde_json::to_string(&d).unwrap();
        let back: Dfa = serde_json::from_str(&json).unwrap();
        assert_eq!(d, back);
    }
}
