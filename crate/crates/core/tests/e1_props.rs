//! β is the fully invariant congruence of the variety generated by E1.

use std::collections::{BTreeMap, HashMap};

use synmon::identity::{long_pair, satisfies, sigma_pair};
use synmon::monoid::fixture;
use synmon::word::{parse_alphabet, words_up_to};
use synmon::{CongruenceId, Word};

/// Words over x, y, z up to length 6 share a term function on E1 exactly
/// when they are β-related.
#[test]
fn term_functions_on_e1_match_beta() {
    let e1 = fixture("E1").unwrap();
    let vars = parse_alphabet("xyz").unwrap();
    let n = e1.size();
    let assignments: Vec<BTreeMap<_, _>> = (0..n * n * n)
        .map(|i| vars.iter().copied().zip([i / (n * n), i / n % n, i % n]).collect())
        .collect();
    let mut by_term: HashMap<Vec<usize>, Word> = HashMap::new();
    let mut by_beta = HashMap::new();
    for u in words_up_to(&vars, 6) {
        let term: Vec<usize> = assignments.iter().map(|a| e1.eval_word(a, &u).unwrap()).collect();
        let t = by_term.entry(term).or_insert_with(|| u.clone()).clone();
        let b = by_beta.entry(CongruenceId::Beta.canonical(&u)).or_insert_with(|| u.clone()).clone();
        assert_eq!(t, b, "{u}");
    }
    assert_eq!(by_term.len(), by_beta.len());
}

#[test]
fn sigma_chain_is_proper_in_e1() {
    let e1 = fixture("E1").unwrap();
    for n in 0..=3 {
        assert!(!satisfies(&e1, &sigma_pair(n)).unwrap().passed(), "sigma {n}");
    }
    for n in 1..=3 {
        assert!(satisfies(&e1, &long_pair(n)).unwrap().passed(), "long {n}");
    }
}
