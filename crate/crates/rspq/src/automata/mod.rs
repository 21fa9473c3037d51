//! Regular-expression parsing and the finite-automata constructions and
//! decision procedures the classifier and the query engines rely on.
//!
//! Every language is represented relative to an explicitly declared
//! [`Alphabet`]; the same expression over different alphabets is a different
//! language. DFAs are always complete (a canonical dead state is added during
//! determinization when needed), which keeps the co-reachability arithmetic
//! below free of partial-function case analysis.

mod dfa;
mod monoid;
mod nfa;
mod regex;

pub use dfa::{Dfa, SetOp};
pub use monoid::{is_aperiodic, Aperiodicity};
pub use nfa::Nfa;
pub use regex::Regex;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A set of DFA states, bit-set semantics. Members are indices `< state count`
/// of the automaton the set belongs to.
pub type StateSet = crate::bitset::BitSet;

/// The characters a regular language is declared over: a nonempty,
/// duplicate-free, ordered set drawn from `[a-z0-9]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Alphabet {
    chars: Vec<char>,
}

impl Alphabet {
    pub fn new(chars: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut chars: Vec<char> = chars.into_iter().collect();
        chars.sort_unstable();
        chars.dedup();
        if chars.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must be nonempty".into()));
        }
        if let Some(&bad) = chars
            .iter()
            .find(|c| !c.is_ascii_lowercase() && !c.is_ascii_digit())
        {
            return Err(Error::InvalidAlphabet(format!(
                "'{bad}' is not a symbol character (expected [a-z0-9])"
            )));
        }
        Ok(Alphabet { chars })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.chars())
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees nonempty
    }

    /// Symbols in ascending order; this order defines "lexicographic" for
    /// word enumeration.
    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    pub fn contains(&self, c: char) -> bool {
        self.chars.binary_search(&c).is_ok()
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.chars.binary_search(&c).ok()
    }
}

impl std::fmt::Display for Alphabet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.chars {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Alphabet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl TryFrom<String> for Alphabet {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Self::parse(&s)
    }
}

impl From<Alphabet> for String {
    fn from(a: Alphabet) -> String {
        a.to_string()
    }
}

pub(crate) fn check_same_alphabet(a: &Alphabet, b: &Alphabet) -> Result<()> {
    if a != b {
        return Err(Error::AlphabetMismatch {
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    Ok(())
}

/// True when `sub` is a scattered subsequence of `sup` (a subword: obtained
/// by deleting any subset of positions, not necessarily contiguous).
pub fn is_subword(sub: &str, sup: &str) -> bool {
    let mut it = sup.chars();
    'outer: for c in sub.chars() {
        for s in it.by_ref() {
            if s == c {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_sorted_dedup() {
        let a = Alphabet::parse("baab").unwrap();
        assert_eq!(a.chars(), &['a', 'b']);
        assert_eq!(a.index_of('b'), Some(1));
        assert!(a.contains('a') && !a.contains('c'));
        assert!(Alphabet::parse("").is_err());
        assert!(Alphabet::parse("aB").is_err());
    }

    #[test]
    fn subword_is_scattered() {
        assert!(is_subword("", "abc"));
        assert!(is_subword("ac", "abc"));
        assert!(is_subword("abc", "abc"));
        assert!(!is_subword("ca", "abc"));
        assert!(!is_subword("a", ""));
        assert!(is_subword("aa", "aba"));
    }
}
