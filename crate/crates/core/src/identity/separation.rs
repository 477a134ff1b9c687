use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{satisfies, Identity, IdentityError, Verdict, Witness};
use crate::monoid::{Factors, FiniteMonoid};
use crate::word::{Letter, Word};

const LETTERS: [char; 10] = ['x', 'y', 'z', 't', 's', 'r', 'p', 'q', 'u', 'v'];
const SEED: u64 = 0x5eed_0f1d;
const RANDOM_ASSIGNMENTS: usize = 24;
/// A factor with at most this many assignments is fingerprinted exhaustively.
const EXHAUSTIVE_LIMIT: usize = 4096;

/// Cap on the work spent in exact satisfaction checks, counted in assignments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparationBudget {
    pub max_assignments: u64,
}

impl Default for SeparationBudget {
    fn default() -> SeparationBudget {
        SeparationBudget { max_assignments: 2_000_000_000 }
    }
}

/// An identity satisfied by one side and failed by the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub identity: Identity,
    /// True when the first argument satisfies the identity and the second fails it.
    pub holds_in_first: bool,
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (yes, no) = if self.holds_in_first { ("first", "second") } else { ("second", "first") };
        write!(f, "{} holds in the {yes} and fails in the {no}", self.identity)
    }
}

/// One monoid (as its factors) with the assignments used to fingerprint words.
struct Side<'a> {
    factors: Vec<&'a FiniteMonoid>,
    /// `(factor, assignment of the k letters)`.
    probes: Vec<(usize, Vec<usize>)>,
    /// Every factor is probed exhaustively, so equal fingerprints mean equal term functions.
    exact: bool,
}

impl Factors for Side<'_> {
    fn factors(&self) -> Vec<&FiniteMonoid> {
        self.factors.clone()
    }
}

impl<'a> Side<'a> {
    fn new(factors: Vec<&'a FiniteMonoid>, k: usize, rng: &mut ChaCha8Rng) -> Side<'a> {
        let mut probes = Vec::new();
        let mut exact = true;
        for (f, m) in factors.iter().enumerate() {
            let n = m.size();
            let total = n.checked_pow(k as u32).filter(|&t| t <= EXHAUSTIVE_LIMIT);
            match total {
                Some(total) => {
                    for mut code in 0..total {
                        let mut a = vec![0; k];
                        for slot in a.iter_mut().rev() {
                            *slot = code % n;
                            code /= n;
                        }
                        probes.push((f, a));
                    }
                }
                None => {
                    exact = false;
                    for _ in 0..RANDOM_ASSIGNMENTS {
                        probes.push((f, (0..k).map(|_| rng.gen_range(0..n)).collect()));
                    }
                }
            }
        }
        Side { factors, probes, exact }
    }

    fn eval(&self, probe: usize, w: &[u8]) -> u32 {
        let (f, a) = &self.probes[probe];
        let m = self.factors[*f];
        let mut it = w.iter();
        let Some(&first) = it.next() else {
            return m.identity().expect("empty word only with identities") as u32;
        };
        it.fold(a[first as usize], |acc, &l| m.mul(acc, a[l as usize])) as u32
    }

    fn fingerprints(&self, words: &[Vec<u8>]) -> Vec<Vec<u32>> {
        words.iter().map(|w| (0..self.probes.len()).map(|p| self.eval(p, w)).collect()).collect()
    }

    /// Adds the assignment from a failing verdict as a new probe; returns its index.
    fn refine(&mut self, witness: &Witness, letters: &[Letter]) -> usize {
        let Witness::Assignment { factor, values, .. } = witness else {
            unreachable!("satisfaction failures carry assignments")
        };
        let mut a = vec![0; letters.len()];
        for (l, e) in values {
            a[letters.iter().position(|x| x == l).expect("separation letter")] = *e;
        }
        self.probes.push((*factor, a));
        self.probes.len() - 1
    }

    fn cost(&self, vars: usize) -> u64 {
        self.factors.iter().map(|m| (m.size() as u64).saturating_pow(vars as u32)).fold(0u64, u64::saturating_add)
    }
}

fn words_over(k: usize, max_len: usize, with_empty: bool) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = if with_empty { vec![Vec::new()] } else { Vec::new() };
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * k);
        for w in &layer {
            for l in 0..k as u8 {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Groups word indices by fingerprint, groups ordered by their first member.
fn group(fps: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let mut index: HashMap<&[u32], usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, fp) in fps.iter().enumerate() {
        match index.get(fp.as_slice()) {
            Some(&g) => groups[g].push(i),
            None => {
                index.insert(fp, groups.len());
                groups.push(vec![i]);
            }
        }
    }
    groups
}

struct Search<'s> {
    letters: Vec<Letter>,
    words: Vec<Vec<u8>>,
    spent: u64,
    budget: &'s SeparationBudget,
}

impl Search<'_> {
    fn identity(&self, u: usize, v: usize) -> Identity {
        let word = |w: &[u8]| Word::from_letters(w.iter().map(|&l| self.letters[l as usize]).collect());
        Identity::new(word(&self.words[u]), word(&self.words[v]))
    }

    fn exact(&mut self, side: &Side, id: &Identity) -> Result<Verdict, IdentityError> {
        self.spent = self.spent.saturating_add(side.cost(id.letters().len()));
        if self.spent > self.budget.max_assignments {
            return Err(IdentityError::Budget(self.budget.max_assignments));
        }
        satisfies(side, id)
    }

    /// Cheap pass: only pairs whose `q`-fingerprints already differ are checked exactly in `p`.
    fn probe_pass(&mut self, p: &mut Side, q: &Side) -> Result<Option<Identity>, IdentityError> {
        let mut fp = p.fingerprints(&self.words);
        let fq = q.fingerprints(&self.words);
        loop {
            let mut refined = false;
            for g in group(&fp).into_iter().filter(|g| g.len() > 1) {
                let r = g[0];
                let Some(&w) = g[1..].iter().find(|&&w| fq[w] != fq[r]) else { continue };
                let id = self.identity(r, w);
                if p.exact {
                    return Ok(Some(id));
                }
                match self.exact(p, &id)? {
                    Verdict::Fails(witness) => {
                        let probe = p.refine(&witness, &self.letters);
                        for (i, row) in fp.iter_mut().enumerate() {
                            row.push(p.eval(probe, &self.words[i]));
                        }
                        refined = true;
                        break;
                    }
                    _ => return Ok(Some(id)),
                }
            }
            if !refined {
                return Ok(None);
            }
        }
    }

    /// Complete pass: every word is compared exactly with its group's first word.
    fn complete_pass(&mut self, p: &mut Side, q: &Side) -> Result<Option<Identity>, IdentityError> {
        let mut fp = p.fingerprints(&self.words);
        let fq = q.fingerprints(&self.words);
        let mut known_equal: HashMap<(usize, usize), ()> = HashMap::new();
        'restart: loop {
            for g in group(&fp).into_iter().filter(|g| g.len() > 1) {
                let r = g[0];
                for &w in &g[1..] {
                    let id = self.identity(r, w);
                    if !p.exact && !known_equal.contains_key(&(r, w)) {
                        match self.exact(p, &id)? {
                            Verdict::Fails(witness) => {
                                let probe = p.refine(&witness, &self.letters);
                                for (i, row) in fp.iter_mut().enumerate() {
                                    row.push(p.eval(probe, &self.words[i]));
                                }
                                continue 'restart;
                            }
                            _ => {
                                known_equal.insert((r, w), ());
                            }
                        }
                    }
                    let q_fails = if fq[w] != fq[r] {
                        true
                    } else if q.exact {
                        false
                    } else {
                        !self.exact(q, &id)?.passed()
                    };
                    if q_fails {
                        return Ok(Some(id));
                    }
                }
            }
            return Ok(None);
        }
    }
}

/// Searches an identity over at most `max_letters` letters and of length at
/// most `max_len` that one side satisfies and the other fails.
///
/// Words are bucketed by their values under probe assignments; candidate
/// pairs are confirmed by exhaustive satisfaction, and false merges add
/// the refuting assignment as a new probe. Shorter lengths are searched
/// first. If the fast pass finds nothing, a complete pass compares every
/// word with its bucket, so `None` means no separating identity exists
/// within the bounds.
pub fn equational_separation<A: Factors + ?Sized, B: Factors + ?Sized>(
    m: &A,
    n: &B,
    max_letters: usize,
    max_len: usize,
) -> Result<Option<Separation>, IdentityError> {
    equational_separation_with_budget(m, n, max_letters, max_len, &SeparationBudget::default())
}

pub fn equational_separation_with_budget<A: Factors + ?Sized, B: Factors + ?Sized>(
    m: &A,
    n: &B,
    max_letters: usize,
    max_len: usize,
    budget: &SeparationBudget,
) -> Result<Option<Separation>, IdentityError> {
    if max_letters > LETTERS.len() {
        return Err(IdentityError::TooManyLetters(max_letters));
    }
    let letters: Vec<Letter> = LETTERS[..max_letters].iter().map(|&c| Letter::new(c)).collect();
    let with_empty = m.factors().iter().chain(n.factors().iter()).all(|f| f.identity().is_some());
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut side_m = Side::new(m.factors(), max_letters, &mut rng);
    let mut side_n = Side::new(n.factors(), max_letters, &mut rng);
    let mut search = Search { letters, words: Vec::new(), spent: 0, budget };

    for len in 1..=max_len {
        search.words = words_over(max_letters, len, with_empty);
        if let Some(identity) = search.probe_pass(&mut side_m, &side_n)? {
            return Ok(Some(Separation { identity, holds_in_first: true }));
        }
        if let Some(identity) = search.probe_pass(&mut side_n, &side_m)? {
            return Ok(Some(Separation { identity, holds_in_first: false }));
        }
    }
    search.words = words_over(max_letters, max_len, with_empty);
    if let Some(identity) = search.complete_pass(&mut side_m, &side_n)? {
        return Ok(Some(Separation { identity, holds_in_first: true }));
    }
    if let Some(identity) = search.complete_pass(&mut side_n, &side_m)? {
        return Ok(Some(Separation { identity, holds_in_first: false }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::fixture;

    #[test]
    fn word_enumeration() {
        let w = words_over(2, 2, true);
        assert_eq!(w, vec![vec![], vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn same_monoid_is_never_separated() {
        let e1 = fixture("E1").unwrap();
        assert_eq!(equational_separation(&e1, &e1, 2, 4).unwrap(), None);
    }

    #[test]
    fn left_zero_versus_trivial() {
        let l21 = fixture("L21").unwrap();
        let sep = equational_separation(&FiniteMonoid::trivial(), &l21, 2, 3).unwrap().unwrap();
        assert!(sep.holds_in_first);
        assert!(satisfies(&FiniteMonoid::trivial(), &sep.identity).unwrap().passed());
        assert!(!satisfies(&l21, &sep.identity).unwrap().passed());
    }

    #[test]
    fn a01_and_its_opposite_are_equivalent() {
        let a01 = fixture("A01").unwrap();
        assert_eq!(equational_separation(&a01, &a01.opposite(), 3, 5).unwrap(), None);
    }

    #[test]
    fn budget_guard() {
        let e1 = fixture("E1").unwrap();
        let a1 = fixture("A1").unwrap();
        let tiny = SeparationBudget { max_assignments: 1 };
        // Five letters put both monoids beyond exhaustive probing, so any confirmation spends budget.
        let r = equational_separation_with_budget(&e1, &a1, 5, 3, &tiny);
        assert_eq!(r, Err(IdentityError::Budget(1)));
    }
}
