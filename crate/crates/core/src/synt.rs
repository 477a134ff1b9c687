//! Syntactic monoids as transition monoids of minimal complete DFAs.
//!
//! Two flavours are provided. The *closed* syntactic monoid treats the
//! automaton's alphabet as the whole world. The *open* one also accounts
//! for letters outside that alphabet, which send every state to the sink;
//! for a language over a finite part of an unbounded alphabet this adds
//! the zero (if the closed monoid lacks it). Class and word constructions
//! use the open flavour.

use std::collections::{HashMap, VecDeque};

use crate::automata::{AutomataError, Dfa};
use crate::congruence::CongruenceId;
use crate::monoid::FiniteMonoid;
use crate::word::{Letter, Word};

/// A letter that sorts after every letter a user can write.
fn foreign_letter() -> Letter {
    Letter::indexed('z', u32::MAX)
}

/// Transition monoid of `d` as given (no minimization). Elements are listed
/// by shortest witness (ties alphabetical), identity `1` first, zero `0`
/// last when it exists. Letters in `hidden` act but are not generators.
fn transition_monoid(d: &Dfa, hidden: &[Letter]) -> FiniteMonoid {
    let n = d.num_states();
    let letters: Vec<usize> = (0..d.alphabet().len()).collect();
    let letter_maps: Vec<Vec<u32>> =
        letters.iter().map(|&a| (0..n).map(|s| d.step(s, a) as u32).collect()).collect();

    let identity: Vec<u32> = (0..n as u32).collect();
    let mut maps = vec![identity.clone()];
    let mut witnesses = vec![Word::empty()];
    let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for &a in &letters {
            let next: Vec<u32> = maps[i].iter().map(|&s| letter_maps[a][s as usize]).collect();
            if !index.contains_key(&next) {
                index.insert(next.clone(), maps.len());
                let mut w = witnesses[i].clone();
                w.push(d.alphabet()[a]);
                witnesses.push(w);
                maps.push(next);
                queue.push_back(maps.len() - 1);
            }
        }
    }

    let size = maps.len();
    let compose = |x: usize, y: usize| -> usize {
        let m: Vec<u32> = maps[x].iter().map(|&s| maps[y][s as usize]).collect();
        index[&m]
    };
    let mut raw = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            raw[x * size + y] = compose(x, y);
        }
    }
    let zero = (0..size).find(|&z| (0..size).all(|x| raw[z * size + x] == z && raw[x * size + z] == z));

    // Move the zero to the end, keeping the remaining order.
    let mut order: Vec<usize> = (0..size).filter(|&x| Some(x) != zero || size == 1).collect();
    if size > 1 {
        order.extend(zero);
    }
    let mut pos = vec![0; size];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let labels = order
        .iter()
        .map(|&old| match old {
            0 => "1".to_string(),
            _ if Some(old) == zero => "0".to_string(),
            _ => witnesses[old].to_string(),
        })
        .collect();
    let mut table = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            table[pos[x] * size + pos[y]] = pos[raw[x * size + y]];
        }
    }
    let generators = d
        .alphabet()
        .iter()
        .enumerate()
        .filter(|(_, l)| !hidden.contains(l))
        .map(|(a, &l)| (l, pos[index[&letter_maps[a]]]))
        .collect();
    FiniteMonoid::from_flat(labels, Some(0), zero.map(|z| pos[z]), table).with_generators(generators)
}

/// Transition monoid of an automaton without minimizing it first.
pub fn transition_monoid_of(d: &Dfa) -> FiniteMonoid {
    transition_monoid(d, &[])
}

/// Syntactic monoid of `L(d)` over exactly `d`'s alphabet.
pub fn syntactic_monoid(d: &Dfa) -> FiniteMonoid {
    transition_monoid(&d.minimize(), &[])
}

/// Syntactic monoid of `L(d)` viewed inside a larger alphabet: letters
/// outside `d`'s alphabet are represented by one extra letter acting as the zero.
pub fn syntactic_monoid_open(d: &Dfa) -> FiniteMonoid {
    let extra = foreign_letter();
    let mut alphabet = d.alphabet().to_vec();
    alphabet.push(extra);
    let extended = d.with_alphabet(&alphabet).expect("superset alphabet");
    transition_monoid(&extended, &[extra])
}

/// Syntactic monoid of the class `[rep]_c`.
pub fn syntactic_of_class(c: &CongruenceId, rep: &Word) -> Result<FiniteMonoid, AutomataError> {
    Ok(syntactic_monoid_open(&c.class_dfa(rep)?))
}

/// Syntactic monoid of the singleton language `{w}`.
pub fn syntactic_of_word(w: &Word) -> FiniteMonoid {
    let alphabet: Vec<Letter> = w.content().into_iter().collect();
    syntactic_monoid_open(&Dfa::singleton(alphabet, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile;
    use crate::word::w;

    #[test]
    fn odd_length_is_z2() {
        let m = syntactic_monoid(&compile("{a,b} ({a,b} {a,b})*").unwrap());
        assert_eq!(m.size(), 2);
        assert_eq!(m.labels(), ["1", "a"]);
        assert_eq!(m.mul(1, 1), 0);
        assert_eq!(m.zero(), None);
    }

    #[test]
    fn alpha_class_language() {
        let d = compile("a+ b {a,b}*").unwrap();
        let open = syntactic_monoid_open(&d);
        assert_eq!(open.size(), 5);
        assert!(open.validate().is_valid());
        assert_eq!(open.labels(), ["1", "a", "b", "ab", "0"]);
        // Over {a,b} alone nothing is absorbing: 1, a, b, ab.
        let closed = syntactic_monoid(&d);
        assert_eq!(closed.size(), 4);
        assert_eq!(closed.zero(), None);
    }

    #[test]
    fn single_letter_word() {
        let m = syntactic_of_word(&w("a"));
        assert_eq!(m.labels(), ["1", "a", "0"]);
    }

    #[test]
    fn a_plus_t_a_plus() {
        let m = syntactic_monoid_open(&compile("a+ t a+").unwrap());
        assert_eq!(m.labels(), ["1", "a", "t", "at", "ta", "ata", "0"]);
        assert_eq!(syntactic_monoid(&compile("a+ t a+").unwrap()).size(), 7);
    }

    #[test]
    fn generators_are_letters() {
        let m = syntactic_of_class(&CongruenceId::T1, &w("ab")).unwrap();
        let gens: Vec<(String, String)> =
            m.generators().iter().map(|(l, e)| (l.to_string(), m.label(*e).to_string())).collect();
        assert_eq!(gens, [("a".to_string(), "a".to_string()), ("b".to_string(), "b".to_string())]);
        assert_eq!(m.size(), 5);
    }
}
