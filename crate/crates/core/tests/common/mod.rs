#![allow(dead_code)]

use proptest::prelude::*;
use synmon::{CongruenceId, Letter, Word};

pub fn letters(text: &str) -> Vec<Letter> {
    text.chars().map(Letter::new).collect()
}

/// Words over `alphabet` of length at most `max_len`.
pub fn word_over(alphabet: &str, max_len: usize) -> impl Strategy<Value = Word> {
    let ls = letters(alphabet);
    prop::collection::vec(0..ls.len(), 0..=max_len)
        .prop_map(move |ix| Word::from_letters(ix.into_iter().map(|i| ls[i]).collect()))
}

pub fn congruences() -> Vec<CongruenceId> {
    ["t1", "gamma", "alpha", "zeta", "beta", "beta-dual", "simq", "t1^gamma", "t1^zeta", "alpha^beta"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

pub fn congruence() -> impl Strategy<Value = CongruenceId> {
    prop::sample::select(congruences())
}
