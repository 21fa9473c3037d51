use super::{check_same_alphabet, Alphabet, Dfa, Regex, StateSet};
use crate::error::{CapKind, Error, Result};
use std::collections::{HashMap, VecDeque};

/// Nondeterministic finite automaton with optional epsilon moves.
///
/// Transitions are `(state, label, state)` where `None` is an epsilon move.
#[derive(Debug, Clone)]
pub struct Nfa {
    alphabet: Alphabet,
    num_states: usize,
    transitions: Vec<(usize, Option<char>, usize)>,
    initial: Vec<usize>,
    accepting: Vec<usize>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        num_states: usize,
        transitions: Vec<(usize, Option<char>, usize)>,
        initial: Vec<usize>,
        accepting: Vec<usize>,
    ) -> Result<Self> {
        let check = |q: usize| {
            if q >= num_states {
                Err(Error::StateOutOfRange {
                    state: q,
                    states: num_states,
                })
            } else {
                Ok(())
            }
        };
        for &(p, label, q) in &transitions {
            check(p)?;
            check(q)?;
            if let Some(c) = label {
                if !alphabet.contains(c) {
                    return Err(Error::CharOutsideAlphabet(c));
                }
            }
        }
        for &q in initial.iter().chain(&accepting) {
            check(q)?;
        }
        let mut initial = initial;
        let mut accepting = accepting;
        initial.sort_unstable();
        initial.dedup();
        accepting.sort_unstable();
        accepting.dedup();
        Ok(Nfa {
            alphabet,
            num_states,
            transitions,
            initial,
            accepting,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn transitions(&self) -> &[(usize, Option<char>, usize)] {
        &self.transitions
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn accepting(&self) -> &[usize] {
        &self.accepting
    }

    /// NFA for the downward closure of the language: every subword (scattered
    /// subsequence) of every accepted word. For each non-epsilon transition
    /// `(q, a, q')` an epsilon transition `(q, q')` is added, letting a run
    /// skip any subset of letters.
    pub fn downward_closure(&self) -> Nfa {
        let mut transitions = self.transitions.clone();
        for &(p, label, q) in &self.transitions {
            if label.is_some() {
                transitions.push((p, None, q));
            }
        }
        Nfa {
            alphabet: self.alphabet.clone(),
            num_states: self.num_states,
            transitions,
            initial: self.initial.clone(),
            accepting: self.accepting.clone(),
        }
    }

    fn epsilon_closure(&self, set: &mut StateSet, eps: &[Vec<usize>]) {
        let mut stack: Vec<usize> = set.iter().collect();
        while let Some(q) = stack.pop() {
            for &r in &eps[q] {
                if !set.contains(r) {
                    set.insert(r);
                    stack.push(r);
                }
            }
        }
    }

    /// Subset construction over reachable subsets only. The result is a
    /// complete DFA; the empty subset, when it arises, becomes the dead
    /// state. Exceeding `state_cap` is a resource error, never a wrong
    /// answer: determinization is the exponential step and is allowed to
    /// blow up beyond desk scale.
    #[allow(clippy::needless_range_loop)]
    pub fn to_dfa(&self, state_cap: usize) -> Result<Dfa> {
        let k = self.alphabet.len();
        let mut eps: Vec<Vec<usize>> = vec![Vec::new(); self.num_states.max(1)];
        let mut sym: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); k]; self.num_states.max(1)];
        for &(p, label, q) in &self.transitions {
            match label {
                None => eps[p].push(q),
                Some(c) => sym[p][self.alphabet.index_of(c).unwrap()].push(q),
            }
        }

        let mut start = StateSet::from_iter(self.num_states.max(1), self.initial.iter().copied());
        self.epsilon_closure(&mut start, &eps);

        let mut index: HashMap<StateSet, usize> = HashMap::new();
        let mut subsets: Vec<StateSet> = Vec::new();
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::new();
        index.insert(start.clone(), 0);
        subsets.push(start);
        queue.push_back(0);

        while let Some(si) = queue.pop_front() {
            let current = subsets[si].clone();
            let mut row = Vec::with_capacity(k);
            for c in 0..k {
                let mut next = StateSet::empty(self.num_states.max(1));
                for q in current.iter() {
                    for &r in &sym[q][c] {
                        next.insert(r);
                    }
                }
                self.epsilon_closure(&mut next, &eps);
                let ti = match index.get(&next) {
                    Some(&ti) => ti,
                    None => {
                        let ti = subsets.len();
                        if ti >= state_cap {
                            return Err(Error::CapExceeded {
                                kind: CapKind::DeterminizationStates,
                                limit: state_cap as u64,
                            });
                        }
                        index.insert(next.clone(), ti);
                        subsets.push(next);
                        queue.push_back(ti);
                        ti
                    }
                };
                row.push(ti);
            }
            delta.push(row);
            debug_assert_eq!(delta.len(), si + 1);
        }

        let accepting = subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| self.accepting.iter().any(|&a| s.contains(a)))
            .map(|(i, _)| i);
        Dfa::new(self.alphabet.clone(), subsets.len(), delta, 0, accepting)
    }

    /// NFA accepting exactly `{word}`.
    pub fn for_word(word: &str, alphabet: &Alphabet) -> Result<Nfa> {
        let chars: Vec<char> = word.chars().collect();
        let transitions = chars
            .iter()
            .enumerate()
            .map(|(i, &c)| (i, Some(c), i + 1))
            .collect();
        Nfa::new(
            alphabet.clone(),
            chars.len() + 1,
            transitions,
            vec![0],
            vec![chars.len()],
        )
    }

    /// Disjoint union: accepts the union of the languages. An empty list
    /// yields the empty language.
    pub fn union_all(parts: &[Nfa], alphabet: &Alphabet) -> Result<Nfa> {
        let mut transitions = Vec::new();
        let mut initial = Vec::new();
        let mut accepting = Vec::new();
        let mut offset = 0;
        for part in parts {
            check_same_alphabet(alphabet, &part.alphabet)?;
            for &(p, label, q) in &part.transitions {
                transitions.push((p + offset, label, q + offset));
            }
            initial.extend(part.initial.iter().map(|&q| q + offset));
            accepting.extend(part.accepting.iter().map(|&q| q + offset));
            offset += part.num_states;
        }
        if parts.is_empty() {
            return Nfa::new(alphabet.clone(), 1, Vec::new(), vec![0], Vec::new());
        }
        Nfa::new(alphabet.clone(), offset, transitions, initial, accepting)
    }

    /// Concatenation: epsilon moves from every accepting state of `self`
    /// into every initial state of `other`.
    pub fn concat(&self, other: &Nfa) -> Result<Nfa> {
        check_same_alphabet(&self.alphabet, &other.alphabet)?;
        let offset = self.num_states;
        let mut transitions = self.transitions.clone();
        for &(p, label, q) in &other.transitions {
            transitions.push((p + offset, label, q + offset));
        }
        for &a in &self.accepting {
            for &i in &other.initial {
                transitions.push((a, None, i + offset));
            }
        }
        Nfa::new(
            self.alphabet.clone(),
            self.num_states + other.num_states,
            transitions,
            self.initial.clone(),
            other.accepting.iter().map(|&q| q + offset).collect(),
        )
    }
}

/// Thompson construction: one fragment per operator with a single entry and
/// a single exit state, glued with epsilon moves.
struct Builder {
    transitions: Vec<(usize, Option<char>, usize)>,
    num_states: usize,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        self.num_states += 1;
        self.num_states - 1
    }

    fn eps(&mut self, from: usize, to: usize) {
        self.transitions.push((from, None, to));
    }

    fn fragment(&mut self, re: &Regex) -> (usize, usize) {
        match re {
            Regex::Empty => (self.fresh(), self.fresh()),
            Regex::Epsilon => {
                let (s, t) = (self.fresh(), self.fresh());
                self.eps(s, t);
                (s, t)
            }
            Regex::Symbol(c) => {
                let (s, t) = (self.fresh(), self.fresh());
                self.transitions.push((s, Some(*c), t));
                (s, t)
            }
            Regex::Concat(a, b) => {
                let (sa, ta) = self.fragment(a);
                let (sb, tb) = self.fragment(b);
                self.eps(ta, sb);
                (sa, tb)
            }
            Regex::Alt(a, b) => {
                let (s, t) = (self.fresh(), self.fresh());
                let (sa, ta) = self.fragment(a);
                let (sb, tb) = self.fragment(b);
                self.eps(s, sa);
                self.eps(s, sb);
                self.eps(ta, t);
                self.eps(tb, t);
                (s, t)
            }
            Regex::Star(r) => {
                let (s, t) = (self.fresh(), self.fresh());
                let (sr, tr) = self.fragment(r);
                self.eps(s, sr);
                self.eps(s, t);
                self.eps(tr, sr);
                self.eps(tr, t);
                (s, t)
            }
            Regex::Plus(r) => {
                let (s, t) = (self.fresh(), self.fresh());
                let (sr, tr) = self.fragment(r);
                self.eps(s, sr);
                self.eps(tr, sr);
                self.eps(tr, t);
                (s, t)
            }
            Regex::Opt(r) => {
                let (s, t) = (self.fresh(), self.fresh());
                let (sr, tr) = self.fragment(r);
                self.eps(s, sr);
                self.eps(s, t);
                self.eps(tr, t);
                (s, t)
            }
        }
    }
}

impl Regex {
    /// Thompson construction; `L(nfa) = L(self)`.
    pub fn to_nfa(&self, alphabet: &Alphabet) -> Nfa {
        let mut b = Builder {
            transitions: Vec::new(),
            num_states: 0,
        };
        let (start, accept) = b.fragment(self);
        Nfa::new(
            alphabet.clone(),
            b.num_states,
            b.transitions,
            vec![start],
            vec![accept],
        )
        .expect("Thompson construction produces a valid NFA")
    }
}
