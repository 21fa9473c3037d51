use thiserror::Error;

/// Which configured resource limit fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapKind {
    DeterminizationStates,
    MonoidElements,
    BruteExpansions,
    ShortcutLevel,
    LevelEnumeration,
    LevelIterations,
    ColorTrials,
    WordLength,
    WordCount,
}

impl std::fmt::Display for CapKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            CapKind::DeterminizationStates => "determinization-states",
            CapKind::MonoidElements => "monoid-elements",
            CapKind::BruteExpansions => "brute-expansions",
            CapKind::ShortcutLevel => "shortcut-level",
            CapKind::LevelEnumeration => "level-enumeration",
            CapKind::LevelIterations => "level-iterations",
            CapKind::ColorTrials => "color-trials",
            CapKind::WordLength => "word-length",
            CapKind::WordCount => "word-count",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    /// Regex surface-syntax error, with a byte offset into the input.
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    /// A symbol in the input is not part of the declared alphabet.
    #[error("symbol '{symbol}' at offset {offset} is outside the declared alphabet")]
    SymbolOutsideAlphabet { symbol: char, offset: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    /// Two automata with different alphabets were combined or compared.
    #[error("alphabet mismatch: '{left}' vs '{right}'")]
    AlphabetMismatch { left: String, right: String },

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("character '{0}' is outside the automaton's alphabet")]
    CharOutsideAlphabet(char),

    #[error("state {state} out of range (automaton has {states} states)")]
    StateOutOfRange { state: usize, states: usize },

    /// A configured resource cap fired. Distinct from any "no" answer.
    #[error("resource cap exceeded: {kind} (limit {limit})")]
    CapExceeded { kind: CapKind, limit: u64 },

    #[error("graph format error on line {line}: {message}")]
    GraphFormat { line: usize, message: String },

    #[error("automaton format error on line {line}: {message}")]
    AutomatonFormat { line: usize, message: String },

    #[error("vertex {vertex} out of range (graph has {vertices} vertices)")]
    VertexOutOfRange { vertex: usize, vertices: usize },

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),

    /// Defensive re-check: the requested shortcut level is not good.
    #[error("level {0} is not a good shortcut level for this automaton")]
    BadLevel(usize),

    /// A certificate failed its defensive verification.
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("incompatible flags: {0}")]
    IncompatibleFlags(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("serialization failed: {0}")]
    Serialize(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True when the error is a resource/budget failure rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
