use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Resource limits shared by the automata constructions, the classifier and
/// the engines. Exceeding a cap is a reported error (or `Unknown` for the
/// aperiodicity test), never a silently truncated answer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum number of DFA states the subset construction may create.
    pub determinization_states: usize,
    /// Maximum number of transition-monoid elements before answering `Unknown`.
    pub monoid_elements: usize,
    /// Maximum node expansions for the exact backtracking engine.
    pub brute_expansions: u64,
    /// Maximum shortcut level a certificate may use.
    pub max_level: usize,
    /// Maximum nodes explored when enumerating length-k prefixes/suffixes
    /// (the |alphabet|^k walks) while building a certificate.
    pub level_enumeration: usize,
    /// Iteration guard for the level-set walk (cannot fire mathematically;
    /// guards implementation bugs).
    pub level_iterations: usize,
    /// Maximum number of color-coding trials.
    pub color_trials: u64,
    /// Maximum word length for language enumeration.
    pub enum_max_len: usize,
    /// Maximum number of words language enumeration may produce.
    pub enum_max_words: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            determinization_states: 100_000,
            monoid_elements: 100_000,
            brute_expansions: 10_000_000,
            max_level: 32,
            level_enumeration: 100_000,
            level_iterations: 10_000,
            color_trials: 1_000_000,
            enum_max_len: 32,
            enum_max_words: 1_000_000,
        }
    }
}

impl Caps {
    /// Every cap must be positive; a zero cap could mask a real answer.
    pub fn validate(&self) -> Result<()> {
        let all_positive = self.determinization_states > 0
            && self.monoid_elements > 0
            && self.brute_expansions > 0
            && self.level_enumeration > 0
            && self.level_iterations > 0
            && self.color_trials > 0
            && self.enum_max_len > 0
            && self.enum_max_words > 0;
        if !all_positive {
            return Err(Error::IncompatibleFlags("all caps must be positive".into()));
        }
        Ok(())
    }
}

/// Report style: readable text or one JSON record per line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Human,
    Machine,
}

/// Full run configuration, echoed into machine-format output records so a
/// run can be reproduced from its own report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub caps: Caps,
    /// Default failure probability for the color-coding engine.
    pub delta: f64,
    /// Master seed for randomized components.
    pub seed: u64,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            caps: Caps::default(),
            delta: 0.01,
            seed: 0,
            format: OutputFormat::Human,
        }
    }
}
