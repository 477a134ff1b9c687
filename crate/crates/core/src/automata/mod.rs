//! Regular expressions, automata construction and the language operations
//! the monoid constructions rely on.

mod dfa;
mod nfa;
mod regex;

use thiserror::Error;

pub use dfa::{Dfa, DfaDump};
pub use regex::{Regex, RegexError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomataError {
    #[error(transparent)]
    Regex(#[from] RegexError),
    #[error("automata are over different alphabets")]
    AlphabetMismatch,
    #[error("automaton exceeds {0} states")]
    TooLarge(usize),
    #[error("malformed automaton: {0}")]
    Malformed(String),
    #[error("no class automaton for congruence `{0}`")]
    Unsupported(String),
}

/// Parses and compiles a regex to its minimal complete DFA.
pub fn compile(text: &str) -> Result<Dfa, AutomataError> {
    Dfa::parse_and_compile(text)
}
