use std::collections::{BTreeSet, HashMap, VecDeque};

use super::dfa::Dfa;
use super::regex::Regex;
use crate::word::Letter;

/// Nondeterministic automaton with ε-moves over a fixed alphabet.
#[derive(Debug, Clone)]
pub(crate) struct Nfa {
    alphabet: Vec<Letter>,
    eps: Vec<Vec<usize>>,
    moves: Vec<Vec<(usize, usize)>>,
    starts: Vec<usize>,
    accepting: Vec<bool>,
}

impl Nfa {
    pub(crate) fn new(alphabet: Vec<Letter>) -> Nfa {
        Nfa { alphabet, eps: Vec::new(), moves: Vec::new(), starts: Vec::new(), accepting: Vec::new() }
    }

    pub(crate) fn add_state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.moves.push(Vec::new());
        self.accepting.push(false);
        self.eps.len() - 1
    }

    pub(crate) fn add_eps(&mut self, from: usize, to: usize) {
        self.eps[from].push(to);
    }

    pub(crate) fn add_move(&mut self, from: usize, letter: usize, to: usize) {
        self.moves[from].push((letter, to));
    }

    pub(crate) fn add_start(&mut self, s: usize) {
        self.starts.push(s);
    }

    pub(crate) fn set_accepting(&mut self, s: usize) {
        self.accepting[s] = true;
    }

    /// Thompson construction. `alphabet` must contain every letter of `r`.
    pub(crate) fn thompson(r: &Regex, alphabet: Vec<Letter>) -> Nfa {
        let mut nfa = Nfa::new(alphabet);
        let (s, f) = nfa.build(r);
        nfa.add_start(s);
        nfa.set_accepting(f);
        nfa
    }

    fn build(&mut self, r: &Regex) -> (usize, usize) {
        match r {
            Regex::Epsilon => {
                let s = self.add_state();
                let f = self.add_state();
                self.add_eps(s, f);
                (s, f)
            }
            Regex::Letter(l) => {
                let idx = self.alphabet.binary_search(l).expect("letter outside the automaton alphabet");
                let s = self.add_state();
                let f = self.add_state();
                self.add_move(s, idx, f);
                (s, f)
            }
            Regex::Concat(parts) => {
                let mut iter = parts.iter();
                let Some(first) = iter.next() else {
                    return self.build(&Regex::Epsilon);
                };
                let (s, mut f) = self.build(first);
                for p in iter {
                    let (ps, pf) = self.build(p);
                    self.add_eps(f, ps);
                    f = pf;
                }
                (s, f)
            }
            Regex::Union(alts) => {
                let s = self.add_state();
                let f = self.add_state();
                for a in alts {
                    let (as_, af) = self.build(a);
                    self.add_eps(s, as_);
                    self.add_eps(af, f);
                }
                (s, f)
            }
            Regex::Star(inner) => {
                let s = self.add_state();
                let f = self.add_state();
                let (is, if_) = self.build(inner);
                self.add_eps(s, is);
                self.add_eps(s, f);
                self.add_eps(if_, is);
                self.add_eps(if_, f);
                (s, f)
            }
        }
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &t in &self.eps[s] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }

    /// Subset construction. The empty subset becomes the sink, so the result is complete.
    pub(crate) fn determinize(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut start: BTreeSet<usize> = self.starts.iter().copied().collect();
        self.closure(&mut start);
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta: Vec<usize> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let current = subsets[i].clone();
            debug_assert_eq!(delta.len(), i * k);
            for a in 0..k {
                let mut next = BTreeSet::new();
                for &s in &current {
                    for &(l, t) in &self.moves[s] {
                        if l == a {
                            next.insert(t);
                        }
                    }
                }
                self.closure(&mut next);
                let j = match index.get(&next) {
                    Some(&j) => j,
                    None => {
                        let j = subsets.len();
                        subsets.push(next.clone());
                        index.insert(next, j);
                        queue.push_back(j);
                        j
                    }
                };
                delta.push(j);
            }
        }
        let accepting = subsets.iter().map(|set| set.iter().any(|&s| self.accepting[s])).collect();
        Dfa::from_raw(self.alphabet.clone(), 0, accepting, delta)
    }
}
