use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::presentation::Presentation;
use super::product::adjoin_identity;
use super::{FiniteMonoid, MonoidError};

/// Semigroups by presentation: name, generators, relations.
const PRESENTATIONS: [(&str, &str, &str); 6] = [
    ("A", "abc", "a^2=a, b^2=b, ab=ca=0, ac=cb=c"),
    ("E", "abc", "a^2=ab=0, ba=ca=a, b^2=bc=b, c^2=cb=c"),
    ("A0", "ab", "a^2=a, b^2=b, ab=0"),
    ("B0", "efc", "e^2=e, f^2=f, ef=fe=0, ec=cf=c"),
    ("Q", "ebc", "e^2=e, eb=b, ce=c, ec=be=cb=0"),
    ("L2", "ab", "a^2=ab=a, b^2=ba=b"),
];

const CAP: usize = 64;

fn cache() -> &'static BTreeMap<String, FiniteMonoid> {
    static CACHE: OnceLock<BTreeMap<String, FiniteMonoid>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut map = BTreeMap::new();
        for (name, gens, rels) in PRESENTATIONS {
            let s = Presentation::parse(gens, rels)
                .and_then(|p| p.build(CAP))
                .unwrap_or_else(|e| panic!("fixture {name}: {e}"));
            map.insert(format!("{name}1"), adjoin_identity(&s));
            map.insert(name.to_string(), s);
        }
        map
    })
}

/// Presentation text of a semigroup fixture, for display.
pub fn fixture_presentation(name: &str) -> Option<(&'static str, &'static str)> {
    let base = name.strip_suffix('1').unwrap_or(name);
    PRESENTATIONS.iter().find(|(n, _, _)| *n == base).map(|&(_, g, r)| (g, r))
}

/// Fixture names: `A, E, A0, B0, Q, L2` and their monoid versions with a `1` suffix.
pub fn fixture_names() -> Vec<String> {
    PRESENTATIONS.iter().flat_map(|(n, _, _)| [n.to_string(), format!("{n}1")]).collect()
}

pub fn fixture(name: &str) -> Result<FiniteMonoid, MonoidError> {
    cache().get(name).cloned().ok_or_else(|| MonoidError::UnknownFixture(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(name: &str) -> Vec<String> {
        fixture(name).unwrap().labels().to_vec()
    }

    #[test]
    fn listed_element_sets() {
        assert_eq!(labels("A"), ["a", "b", "c", "ba", "bc", "0"]);
        assert_eq!(labels("E"), ["a", "b", "c", "ac", "0"]);
        assert_eq!(labels("A0"), ["a", "b", "ba", "0"]);
        assert_eq!(labels("B0"), ["c", "e", "f", "0"]);
        assert_eq!(labels("Q"), ["b", "c", "e", "bc", "0"]);
        assert_eq!(labels("L2"), ["a", "b"]);
    }

    #[test]
    fn monoid_versions() {
        let sizes: Vec<(String, usize)> = ["A1", "E1", "A01", "B01", "Q1", "L21"]
            .iter()
            .map(|n| (n.to_string(), fixture(n).unwrap().size()))
            .collect();
        assert_eq!(
            sizes,
            [("A1", 7), ("E1", 6), ("A01", 5), ("B01", 5), ("Q1", 6), ("L21", 3)].map(|(n, s)| (n.to_string(), s))
        );
        for name in fixture_names() {
            assert!(fixture(&name).unwrap().validate().is_valid(), "{name}");
        }
    }

    #[test]
    fn unknown_name() {
        assert_eq!(fixture("Z"), Err(MonoidError::UnknownFixture("Z".into())));
    }

    #[test]
    fn e_products_follow_the_relations() {
        let e = fixture("E").unwrap();
        let x = |l: &str| e.element(l).unwrap();
        assert_eq!(e.mul(x("a"), x("a")), x("0"));
        assert_eq!(e.mul(x("b"), x("a")), x("a"));
        assert_eq!(e.mul(x("a"), x("c")), x("ac"));
        // (ac)(ac) = a(ca)c = a·a·c = 0
        assert_eq!(e.mul(x("ac"), x("ac")), x("0"));
    }
}
