mod common;

use std::collections::{BTreeMap, HashMap};

use common::word_over;
use proptest::prelude::*;
use synmon::identity::satisfies;
use synmon::monoid::{direct_product, fixture, morphism_search, HomKind, MonoidProduct};
use synmon::mtau::{m_tau, onto_synt_check, WSpec};
use synmon::synt::{syntactic_monoid_open, syntactic_of_class};
use synmon::word::{w, words_up_to};
use synmon::{automata, CongruenceId, Dfa, FiniteMonoid, Identity, Letter, Word};

const FIXTURES: [&str; 6] = ["A1", "E1", "A01", "B01", "Q1", "L21"];

fn fixture_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(FIXTURES.to_vec())
}

fn identity_over(vars: &str, max_len: usize) -> impl Strategy<Value = Identity> {
    (word_over(vars, max_len), word_over(vars, max_len)).prop_map(|(u, v)| Identity::new(u, v))
}

/// Element of `m` reached by reading `u` through the generator images.
fn element(m: &FiniteMonoid, u: &Word) -> usize {
    let gens: HashMap<Letter, usize> = m.generators().iter().copied().collect();
    u.letters().iter().fold(m.identity().unwrap(), |x, l| m.mul(x, gens[l]))
}

fn languages() -> Vec<Dfa> {
    let mut out: Vec<Dfa> = ["a+ b {a,b}*", "{a,b} ({a,b} {a,b})*", "a+ t b+ a+", "(ab)* | b a*"]
        .iter()
        .map(|r| automata::compile(r).unwrap())
        .collect();
    out.push(CongruenceId::Beta.class_dfa(&w("atb^2a")).unwrap());
    out.push("t1^gamma".parse::<CongruenceId>().unwrap().class_dfa(&w("ata")).unwrap());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn product_law(a in fixture_name(), b in fixture_name(), id in identity_over("xyt", 5)) {
        let (m, n) = (fixture(a).unwrap(), fixture(b).unwrap());
        let each = satisfies(&m, &id).unwrap().passed() && satisfies(&n, &id).unwrap().passed();
        prop_assert_eq!(satisfies(&MonoidProduct::new(vec![m.clone(), n.clone()]), &id).unwrap().passed(), each);
        prop_assert_eq!(satisfies(&direct_product(&m, &n), &id).unwrap().passed(), each);
    }

    #[test]
    fn opposite_satisfies_reversed_identities(a in fixture_name(), id in identity_over("xyt", 6)) {
        let m = fixture(a).unwrap();
        prop_assert_eq!(satisfies(&m.opposite(), &id).unwrap().passed(), satisfies(&m, &id.reverse()).unwrap().passed());
    }

    #[test]
    fn surjections_preserve_identities(case in 0usize..3, id in identity_over("xyt", 5)) {
        let (c, rep) = [("t1", "ab"), ("alpha", "ab"), ("t1^gamma", "ata")][case];
        let r = onto_synt_check(&c.parse().unwrap(), &w(rep)).unwrap();
        let h = r.hom.as_ref().unwrap();
        prop_assert!(h.is_hom(&r.source, &r.target) && h.is_onto(&r.target));
        if satisfies(&r.source, &id).unwrap().passed() {
            prop_assert!(satisfies(&r.target, &id).unwrap().passed());
        }
    }

    #[test]
    fn syntactic_classes_are_context_closed(
        which in 0usize..6,
        u in word_over("abt", 6),
        v in word_over("abt", 6),
        p in word_over("abt", 4),
        q in word_over("abt", 4),
    ) {
        let d = &languages()[which];
        let alphabet: Vec<Letter> = d.alphabet().to_vec();
        let keep = |x: &Word| Word::from_letters(x.letters().iter().copied().filter(|l| alphabet.contains(l)).collect());
        let (u, v, p, q) = (keep(&u), keep(&v), keep(&p), keep(&q));
        let m = syntactic_monoid_open(d);
        if element(&m, &u) == element(&m, &v) {
            prop_assert_eq!(d.accepts(&p.concat(&u).concat(&q)), d.accepts(&p.concat(&v).concat(&q)));
        }
    }

    #[test]
    fn json_round_trip(a in fixture_name()) {
        let m = fixture(a).unwrap();
        let text = m.to_json();
        let back = FiniteMonoid::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert!(back.validate().is_valid());
    }
}

#[test]
fn syntactic_elements_are_separated_by_some_context() {
    for d in languages() {
        let m = syntactic_monoid_open(&d);
        let alphabet = d.alphabet().to_vec();
        let samples = words_up_to(&alphabet, 5);
        let contexts = words_up_to(&alphabet, 4);
        let mut reps: BTreeMap<usize, Word> = BTreeMap::new();
        for u in &samples {
            reps.entry(element(&m, u)).or_insert_with(|| u.clone());
        }
        let reps: Vec<&Word> = reps.values().collect();
        for (i, u) in reps.iter().enumerate() {
            for v in &reps[i + 1..] {
                let split = contexts.iter().any(|p| {
                    contexts.iter().any(|q| d.accepts(&p.concat(u).concat(q)) != d.accepts(&p.concat(v).concat(q)))
                });
                assert!(split, "{u} and {v} are not separated");
            }
        }
    }
}

#[test]
fn mtau_tables_have_identity_and_zero() {
    let specs = [
        WSpec::parse("class", "t1:ab").unwrap(),
        WSpec::parse("class", "t1^gamma:ata").unwrap(),
        WSpec::parse("class", "beta:atb^2a").unwrap(),
        WSpec::parse("star", "alpha:ab").unwrap(),
        WSpec::parse("star", "gamma:abc").unwrap(),
        WSpec::parse("pred", "beta:xy-limited:ab").unwrap(),
    ];
    for spec in specs {
        let m = m_tau(&spec, 10_000).unwrap();
        assert!(m.validate().is_valid(), "{spec}");
        assert_eq!(m.identity(), Some(0), "{spec}");
        let z = m.zero().unwrap_or_else(|| panic!("{spec} has no zero"));
        assert_eq!(m.label(z), "0");
        assert_eq!(m.find_zero(), Some(z));
    }
}

#[test]
fn mtau_of_a_class_maps_onto_its_syntactic_monoid() {
    for (c, rep) in [("t1", "ab"), ("alpha", "ab"), ("t1^gamma", "ata"), ("t1^gamma", "ab^2ta")] {
        let c: CongruenceId = c.parse().unwrap();
        let source = m_tau(&WSpec::SingleClass { cong: c.clone(), rep: w(rep) }, 10_000).unwrap();
        let target = syntactic_of_class(&c, &w(rep)).unwrap();
        assert!(morphism_search(&source, &target, HomKind::Onto).is_some(), "[{rep}]_{c}");
    }
}
