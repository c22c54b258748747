// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the library.
///
/// `Invalid*` variants are input-validation failures (malformed automata,
/// letters outside an alphabet). `Precondition` is raised when an operation
/// is called on a value it is not defined for. `BudgetExceeded` signals that
/// an exploration limit configured by the caller was hit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("state {state} is out of range (automaton has {count} states)")]
    StateOutOfRange { state: usize, count: usize },
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("stack symbol {0:?} is not in the stack alphabet")]
    UnknownStackSymbol(char),
    #[error("{0:?} is reserved and cannot be used as a symbol")]
    ReservedSymbol(char),
    #[error("invalid grammar: {0}")]
    InvalidGrammar(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("exploration budget exceeded: {0}")]
    BudgetExceeded(String),
}

impl Error {
    /// True for validation errors, i.e. problems with the shape of the input
    /// rather than with the operation applied to it.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Precondition(_) | Error::BudgetExceeded(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
