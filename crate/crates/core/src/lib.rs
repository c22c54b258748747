// SPDX-License-Identifier: Apache-2.0

//! Edit distance from pushdown languages to regular languages.
//!
//! The crate decides whether the edit distance from the language of a
//! pushdown automaton (or context-free grammar) to the language of a finite
//! automaton is below a threshold ([`ted`]), whether it is finite ([`fed`]),
//! and computes it exactly. Language inclusion is the threshold-zero case.
//!
//! The distance between languages is `sup_{u ∈ L1} inf_{v ∈ L2} ed(u, v)`;
//! the supremum of the empty set is 0 and the infimum of the empty set is ∞.

pub mod automata;
pub mod distance;
mod error;
pub mod fed;
pub mod fixtures;
pub mod grammar;
pub mod oracle;
pub mod ted;

pub use automata::{Dfa, Nfa, Pda, PdaTransition};
pub use distance::Distance;
pub use error::{Error, Result};
pub use grammar::Cfg;

/// A word is a sequence of letters.
pub type Word = Vec<char>;

/// Convenience conversion from a string, one letter per `char`.
pub fn word(s: &str) -> Word {
    s.chars().collect()
}

/// Renders a word, `ε` for the empty word.
pub fn display_word(w: &[char]) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.iter().collect()
    }
}
