mod common;

use std::collections::BTreeMap;

use common::{letters, word_over};
use proptest::prelude::*;
use synmon::word::w;
use synmon::Word;

proptest! {
    #[test]
    fn blocks_reassemble(u in word_over("abtxy", 12)) {
        let b = u.blocks();
        prop_assert_eq!(b.blocks.len(), b.skeleton.len() + 1);
        prop_assert_eq!(b.reassemble(), u.clone());
        let simple = u.stats().simple;
        prop_assert!(b.skeleton.iter().all(|l| simple.contains(l)));
        prop_assert!(b.blocks.iter().all(|x| x.letters().iter().all(|l| !simple.contains(l))));
    }

    #[test]
    fn ini2_is_idempotent(u in word_over("abt", 12)) {
        let v = u.ini2();
        prop_assert_eq!(v.ini2(), v.clone());
        prop_assert_eq!(v.content(), u.content());
        prop_assert!(v.occurrences().values().all(|&n| n <= 2));
    }

    #[test]
    fn reverse_is_an_involution(u in word_over("abt", 12), v in word_over("abt", 12)) {
        prop_assert_eq!(u.reverse().reverse(), u.clone());
        prop_assert_eq!(u.concat(&v).reverse(), v.reverse().concat(&u.reverse()));
    }

    #[test]
    fn substitution_distributes(
        u in word_over("xy", 8),
        v in word_over("xy", 8),
        ix in word_over("ab", 3).prop_filter("non-empty", |x| !x.is_empty()),
        iy in word_over("ab", 3).prop_filter("non-empty", |x| !x.is_empty()),
    ) {
        let theta: BTreeMap<_, _> = letters("xy").into_iter().zip([ix, iy]).collect();
        let whole = u.concat(&v).substitute(&theta).unwrap();
        prop_assert_eq!(whole, u.substitute(&theta).unwrap().concat(&v.substitute(&theta).unwrap()));
    }

    #[test]
    fn text_form_round_trips(u in word_over("abt", 12)) {
        prop_assert_eq!(Word::parse(&u.to_string()).unwrap(), u);
    }
}

#[test]
fn block_examples() {
    let b = w("x^2y^3xtyx^2").blocks();
    assert_eq!(b.skeleton, letters("t"));
    assert_eq!(b.blocks, [w("x^2y^3x"), w("yx^2")]);
    assert!(w("x^2t1x^3t2y^5t3z^2t4t5y").is_block_simple());
    assert!(w("atbasb").is_xy_limited());
    assert!(!w("abtab").is_xy_limited());
}
