// SPDX-License-Identifier: Apache-2.0

//! Finite and pushdown automata: data model, runs, prefix closure and
//! pushdown emptiness.

mod dfa;
mod nfa;
mod pda;
pub mod pushdown;

pub use dfa::{determinize, inclusion_counterexample, is_universal, Dfa};
pub use nfa::Nfa;
pub use pda::{fresh_stack_symbols, Pda, PdaConfiguration, PdaTransition, BOTTOM};
pub use pushdown::{pda_emptiness, Emptiness};
