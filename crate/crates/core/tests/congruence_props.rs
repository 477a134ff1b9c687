mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{congruence, congruences, letters, word_over};
use proptest::prelude::*;
use synmon::word::w;
use synmon::{CongruenceId, Word};

/// A member of the class of `u`, chosen by `pick`.
fn class_member(c: &CongruenceId, u: &Word, pick: usize) -> Word {
    let class = c.enumerate_class(u, u.len() + 1);
    class[pick % class.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn equivalence_laws(c in congruence(), u in word_over("abt", 6), i in 0usize..1000, j in 0usize..1000) {
        prop_assert!(c.equivalent(&u, &u));
        let (v, x) = (class_member(&c, &u, i), class_member(&c, &u, j));
        prop_assert!(c.equivalent(&u, &v) && c.equivalent(&v, &u));
        prop_assert!(c.equivalent(&v, &x));
    }

    #[test]
    fn compatible_with_concatenation(
        c in congruence(),
        u in word_over("abt", 6),
        i in 0usize..1000,
        p in word_over("abt", 3),
        q in word_over("abt", 3),
    ) {
        let v = class_member(&c, &u, i);
        prop_assert!(c.equivalent(&p.concat(&u).concat(&q), &p.concat(&v).concat(&q)));
    }

    #[test]
    fn dual_law(c in congruence(), u in word_over("abt", 7), v in word_over("abt", 7)) {
        if let Some(d) = c.dual() {
            prop_assert_eq!(d.equivalent(&u, &v), c.equivalent(&u.reverse(), &v.reverse()));
            prop_assert_eq!(d.dual(), Some(c.clone()));
        }
    }

    #[test]
    fn beta_dual_is_beta_of_the_reverse(u in word_over("abt", 8), v in word_over("abt", 8)) {
        prop_assert_eq!(
            CongruenceId::BetaDual.equivalent(&u, &v),
            CongruenceId::Beta.equivalent(&u.reverse(), &v.reverse())
        );
    }

    #[test]
    fn fully_invariant_congruences_respect_substitution(
        u in word_over("xy", 6),
        i in 0usize..1000,
        ix in word_over("ab", 3).prop_filter("non-empty", |x| !x.is_empty()),
        iy in word_over("ab", 3).prop_filter("non-empty", |x| !x.is_empty()),
    ) {
        let theta: BTreeMap<_, _> = letters("xy").into_iter().zip([ix, iy]).collect();
        for c in [CongruenceId::Gamma, CongruenceId::Alpha, CongruenceId::Beta, CongruenceId::SimQ] {
            let v = class_member(&c, &u, i);
            prop_assert!(c.equivalent(&u.substitute(&theta).unwrap(), &v.substitute(&theta).unwrap()), "{} {} {}", c, u, v);
        }
    }

    #[test]
    fn class_automaton_accepts_exactly_the_class(c in congruence(), rep in word_over("abt", 4), u in word_over("abt", 8)) {
        let d = c.class_dfa(&rep).unwrap();
        let inside = u.content().is_subset(&rep.content());
        prop_assert_eq!(inside && d.accepts(&u), c.equivalent(&rep, &u));
    }

    #[test]
    fn minimization_is_a_fixpoint(c in congruence(), rep in word_over("abt", 5)) {
        let d = c.class_dfa(&rep).unwrap();
        prop_assert_eq!(d.minimize(), d.clone());
        prop_assert_eq!(d.reversed().reversed().minimize(), d);
    }

    #[test]
    fn factor_language_is_factor_closed(c in congruence(), rep in word_over("abt", 5), cut in 0usize..100, len in 0usize..100) {
        let d = c.class_dfa(&rep).unwrap();
        let f = d.factor_language();
        for u in d.words_up_to(rep.len() + 2) {
            let start = cut % (u.len() + 1);
            let end = start + len % (u.len() - start + 1);
            let piece = Word::from_letters(u.letters()[start..end].to_vec());
            prop_assert!(f.accepts(&piece), "{} of {}", piece, u);
        }
    }
}

#[test]
fn class_automata_agree_with_enumeration() {
    for c in congruences() {
        for rep in ["ab", "ata", "abab", "atb^2a", "ab^2ta"] {
            let rep = w(rep);
            let len = 2 * rep.len() + 2;
            let d = c.class_dfa(&rep).unwrap();
            let from_dfa: BTreeSet<Word> = d.words_up_to(len).into_iter().collect();
            let listed: BTreeSet<Word> = c.enumerate_class(&rep, len).into_iter().collect();
            assert_eq!(from_dfa, listed, "{c} [{rep}] up to length {len}");
        }
    }
}

#[test]
fn two_classes_up_to_length_eight() {
    let (u, u2) = (w("atab^2"), w("atbab^2"));
    let q: BTreeSet<Word> = CongruenceId::SimQ.enumerate_class(&u, 8).into_iter().collect();
    let b1: BTreeSet<Word> = CongruenceId::Beta.enumerate_class(&u, 8).into_iter().collect();
    let b2: BTreeSet<Word> = CongruenceId::Beta.enumerate_class(&u2, 8).into_iter().collect();
    assert!(b1.is_disjoint(&b2));
    assert!(!b1.is_empty() && !b2.is_empty());
    assert_eq!(q, b1.union(&b2).cloned().collect());
}

#[test]
fn beta_example_from_the_definition() {
    assert!(CongruenceId::Beta.equivalent(&w("x^2y^3xtyx^2"), &w("xyty^3xy")));
}
