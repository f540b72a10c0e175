//! Separating sets of factors.
//!
//! A set of words `X` separates a language `L` when every pair of distinct
//! words in `L` differs in the number of occurrences of some `x ∈ X`. This
//! crate provides the word combinatorics behind that notion (occurrence
//! counting, primitive and Lyndon roots, maximal power runs), k-abelian
//! equivalence and growth functions, construction and enumeration of
//! separating sets for finite languages, a decision procedure for whether a
//! regular language admits a finite separating set (with explicit witnesses
//! when it does not), and factor-complexity tooling for ultimately periodic
//! and morphic infinite words.

pub mod error;
pub mod infinite;
pub mod kabelian;
pub mod regular;
pub mod ssf;
pub mod word;

pub use error::Error;
pub use word::{Alphabet, Occurrence, Word};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
