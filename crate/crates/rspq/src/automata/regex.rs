//! Regular-expression surface syntax.
//!
//! Grammar: symbols are single characters in `[a-z0-9]`; `|` is alternation,
//! juxtaposition is concatenation, and `*`/`+`/`?` are postfix repetition,
//! with precedence repetition > concatenation > alternation. `( )` groups,
//! the two-character token `()` denotes the epsilon-only language, and `~`
//! denotes the empty language.

use super::Alphabet;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Abstract syntax tree of a regular expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    /// The empty language, spelled `~`.
    Empty,
    /// The epsilon-only language, spelled `()`.
    Epsilon,
    Symbol(char),
    Concat(Box<Regex>, Box<Regex>),
    Alt(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
    Plus(Box<Regex>),
    Opt(Box<Regex>),
}

impl Regex {
    /// Parse `text` over the declared alphabet. Every symbol appearing in the
    /// text must belong to the alphabet.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Regex> {
        let chars: Vec<char> = text.chars().collect();
        let mut p = Parser {
            chars: &chars,
            pos: 0,
            alphabet,
        };
        let re = p.alternation()?;
        if p.pos < p.chars.len() {
            return Err(p.unexpected());
        }
        Ok(re)
    }

    /// All words of the language with length at most `max_len`, computed
    /// directly from the recursive definition of the operators. Serves as an
    /// oracle that is independent of any automaton construction.
    pub fn words_up_to(&self, max_len: usize) -> BTreeSet<String> {
        match self {
            Regex::Empty => BTreeSet::new(),
            Regex::Epsilon => BTreeSet::from([String::new()]),
            Regex::Symbol(c) => {
                if max_len >= 1 {
                    BTreeSet::from([c.to_string()])
                } else {
                    BTreeSet::new()
                }
            }
            Regex::Concat(a, b) => {
                let left = a.words_up_to(max_len);
                let right = b.words_up_to(max_len);
                let mut out = BTreeSet::new();
                for u in &left {
                    for v in &right {
                        if u.len() + v.len() <= max_len {
                            out.insert(format!("{u}{v}"));
                        }
                    }
                }
                out
            }
            Regex::Alt(a, b) => {
                let mut out = a.words_up_to(max_len);
                out.extend(b.words_up_to(max_len));
                out
            }
            Regex::Star(r) => closure_words(r.words_up_to(max_len), max_len, true),
            Regex::Plus(r) => closure_words(r.words_up_to(max_len), max_len, false),
            Regex::Opt(r) => {
                let mut out = r.words_up_to(max_len);
                out.insert(String::new());
                out
            }
        }
    }

    /// The symbols that occur in the expression.
    pub fn symbols(&self) -> BTreeSet<char> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<char>) {
        match self {
            Regex::Empty | Regex::Epsilon => {}
            Regex::Symbol(c) => {
                out.insert(*c);
            }
            Regex::Concat(a, b) | Regex::Alt(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
            Regex::Star(r) | Regex::Plus(r) | Regex::Opt(r) => r.collect_symbols(out),
        }
    }
}

/// Words of `base*` (with epsilon, `keep_epsilon`) or `base+` (without the
/// implicit epsilon) up to `max_len`: closure under appending base words.
fn closure_words(base: BTreeSet<String>, max_len: usize, keep_epsilon: bool) -> BTreeSet<String> {
    let mut out: BTreeSet<String> = if keep_epsilon {
        BTreeSet::from([String::new()])
    } else {
        base.clone()
    };
    let mut frontier: Vec<String> = out.iter().cloned().collect();
    while let Some(w) = frontier.pop() {
        for u in &base {
            if w.len() + u.len() <= max_len {
                let next = format!("{w}{u}");
                if out.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
    }
    out
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn unexpected(&self) -> Error {
        match self.peek() {
            Some(c) => Error::Syntax {
                offset: self.pos,
                message: format!("unexpected '{c}'"),
            },
            None => Error::Syntax {
                offset: self.pos,
                message: "unexpected end of input".into(),
            },
        }
    }

    fn alternation(&mut self) -> Result<Regex> {
        let mut re = self.concatenation()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            let rhs = self.concatenation()?;
            re = Regex::Alt(Box::new(re), Box::new(rhs));
        }
        Ok(re)
    }

    fn concatenation(&mut self) -> Result<Regex> {
        let mut re = self.postfix()?;
        while matches!(self.peek(), Some(c) if c != '|' && c != ')') {
            let rhs = self.postfix()?;
            re = Regex::Concat(Box::new(re), Box::new(rhs));
        }
        Ok(re)
    }

    fn postfix(&mut self) -> Result<Regex> {
        let mut re = self.atom()?;
        loop {
            match self.peek() {
                Some('*') => re = Regex::Star(Box::new(re)),
                Some('+') => re = Regex::Plus(Box::new(re)),
                Some('?') => re = Regex::Opt(Box::new(re)),
                _ => break,
            }
            self.pos += 1;
        }
        Ok(re)
    }

    fn atom(&mut self) -> Result<Regex> {
        match self.peek() {
            Some('~') => {
                self.pos += 1;
                Ok(Regex::Empty)
            }
            Some('(') => {
                self.pos += 1;
                if self.peek() == Some(')') {
                    self.pos += 1;
                    return Ok(Regex::Epsilon);
                }
                let inner = self.alternation()?;
                if self.peek() != Some(')') {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_lowercase() || c.is_ascii_digit() => {
                if !self.alphabet.contains(c) {
                    return Err(Error::SymbolOutsideAlphabet {
                        symbol: c,
                        offset: self.pos,
                    });
                }
                self.pos += 1;
                Ok(Regex::Symbol(c))
            }
            _ => Err(self.unexpected()),
        }
    }
}

impl std::fmt::Display for Regex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn atomic(r: &Regex) -> bool {
            matches!(
                r,
                Regex::Empty
                    | Regex::Epsilon
                    | Regex::Symbol(_)
                    | Regex::Star(_)
                    | Regex::Plus(_)
                    | Regex::Opt(_)
            )
        }
        fn wrap(f: &mut std::fmt::Formatter<'_>, r: &Regex, needs: bool) -> std::fmt::Result {
            if needs {
                write!(f, "({r})")
            } else {
                write!(f, "{r}")
            }
        }
        match self {
            Regex::Empty => write!(f, "~"),
            Regex::Epsilon => write!(f, "()"),
            Regex::Symbol(c) => write!(f, "{c}"),
            Regex::Concat(a, b) => {
                wrap(f, a, matches!(**a, Regex::Alt(..)))?;
                wrap(f, b, matches!(**b, Regex::Alt(..)))
            }
            Regex::Alt(a, b) => write!(f, "{a}|{b}"),
            Regex::Star(r) => {
                wrap(f, r, !atomic(r))?;
                write!(f, "*")
            }
            Regex::Plus(r) => {
                wrap(f, r, !atomic(r))?;
                write!(f, "+")
            }
            Regex::Opt(r) => {
                wrap(f, r, !atomic(r))?;
                write!(f, "?")
            }
        }
    }
}
