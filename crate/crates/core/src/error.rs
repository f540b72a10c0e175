//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("duplicate symbol '{0}' in alphabet")]
    DuplicateSymbol(char),
    #[error("symbol '{0}' is not in the alphabet")]
    UnknownSymbol(char),
    #[error("operands are over different alphabets")]
    AlphabetMismatch,
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("occurrences have different host words")]
    HostMismatch,
    #[error("occurrence out of bounds: start {start} plus length {len} exceeds host length {host_len}")]
    OccurrenceOutOfBounds {
        start: usize,
        len: usize,
        host_len: usize,
    },
    #[error("word '{0}' is not primitive")]
    NotPrimitive(String),
    #[error("operation requires a nonempty language")]
    EmptyLanguage,
    #[error("candidate set is not a separating set of factors of the language")]
    NotSeparating,
    #[error("candidate universe has {size} elements, above the cap of {cap}")]
    UniverseTooLarge { size: usize, cap: usize },
    #[error("instance too large: {words} words with {pairs} pairs (caps {word_cap}/{pair_cap})")]
    InstanceTooLarge {
        words: usize,
        pairs: usize,
        word_cap: usize,
        pair_cap: usize,
    },
    #[error("'{w}' and '{y}' commute, so they certify nothing")]
    CommutingWitness { w: String, y: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("state {0} is not live")]
    DeadState(usize),
    #[error("state index {0} out of range")]
    InvalidState(usize),
    #[error("morphism is not prolongable on seed '{0}'")]
    NonProlongable(char),
}
