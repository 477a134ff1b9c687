use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use super::nfa::Nfa;
use super::regex::Regex;
use super::AutomataError;
use crate::word::{Letter, LetterSet, Word};

/// Complete deterministic automaton over a sorted, duplicate-free alphabet.
///
/// Transitions are stored row-major: `delta[state * k + letter_index]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<Letter>,
    start: usize,
    accepting: Vec<bool>,
    delta: Vec<usize>,
}

/// A state of a product automaton.
type Pair = (usize, usize);

/// JSON dump used for debugging and golden files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfaDump {
    pub alphabet: Vec<Letter>,
    pub states: usize,
    pub start: usize,
    pub accepting: Vec<usize>,
    pub transitions: Vec<Vec<usize>>,
}

impl Dfa {
    pub(crate) fn from_raw(alphabet: Vec<Letter>, start: usize, accepting: Vec<bool>, delta: Vec<usize>) -> Dfa {
        debug_assert!(alphabet.windows(2).all(|p| p[0] < p[1]));
        debug_assert_eq!(delta.len(), accepting.len() * alphabet.len());
        Dfa { alphabet, start, accepting, delta }
    }

    /// Builds a DFA from explicit parts, checking totality and ranges.
    pub fn from_parts(
        alphabet: Vec<Letter>,
        start: usize,
        accepting: &[usize],
        transitions: Vec<Vec<usize>>,
    ) -> Result<Dfa, AutomataError> {
        let n = transitions.len();
        let k = alphabet.len();
        if !alphabet.windows(2).all(|p| p[0] < p[1]) {
            return Err(AutomataError::Malformed("alphabet must be sorted and duplicate-free".into()));
        }
        if start >= n {
            return Err(AutomataError::Malformed(format!("start state {start} out of range")));
        }
        let mut acc = vec![false; n];
        for &a in accepting {
            if a >= n {
                return Err(AutomataError::Malformed(format!("accepting state {a} out of range")));
            }
            acc[a] = true;
        }
        let mut delta = Vec::with_capacity(n * k);
        for (s, row) in transitions.into_iter().enumerate() {
            if row.len() != k {
                return Err(AutomataError::Malformed(format!("state {s} has {} transitions, expected {k}", row.len())));
            }
            if let Some(&t) = row.iter().find(|&&t| t >= n) {
                return Err(AutomataError::Malformed(format!("transition target {t} out of range")));
            }
            delta.extend(row);
        }
        Ok(Dfa { alphabet, start, accepting: acc, delta })
    }

    pub fn from_dump(dump: &DfaDump) -> Result<Dfa, AutomataError> {
        if dump.transitions.len() != dump.states {
            return Err(AutomataError::Malformed("state count does not match transition rows".into()));
        }
        Dfa::from_parts(dump.alphabet.clone(), dump.start, &dump.accepting, dump.transitions.clone())
    }

    pub fn dump(&self) -> DfaDump {
        DfaDump {
            alphabet: self.alphabet.clone(),
            states: self.num_states(),
            start: self.start,
            accepting: (0..self.num_states()).filter(|&s| self.accepting[s]).collect(),
            transitions: (0..self.num_states()).map(|s| self.row(s).to_vec()).collect(),
        }
    }

    /// Explores a profile automaton: states are values of `S`, `step`
    /// returning `None` means the dead state. The result is complete but
    /// not minimized.
    pub fn explore<S, F, A>(alphabet: Vec<Letter>, start: S, step: F, accept: A, max_states: usize) -> Result<Dfa, AutomataError>
    where
        S: Clone + Eq + Hash,
        F: Fn(&S, Letter) -> Option<S>,
        A: Fn(&S) -> bool,
    {
        let k = alphabet.len();
        let mut index: HashMap<S, usize> = HashMap::new();
        let mut states = vec![Some(start.clone())];
        index.insert(start, 0);
        let mut sink: Option<usize> = None;
        let mut delta = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let current = states[i].clone();
            for &l in &alphabet {
                let next = current.as_ref().and_then(|s| step(s, l));
                let j = match next {
                    None => *sink.get_or_insert_with(|| {
                        states.push(None);
                        states.len() - 1
                    }),
                    Some(s) => match index.get(&s) {
                        Some(&j) => j,
                        None => {
                            states.push(Some(s.clone()));
                            index.insert(s, states.len() - 1);
                            states.len() - 1
                        }
                    },
                };
                delta.push(j);
            }
            if states.len() > max_states {
                return Err(AutomataError::TooLarge(max_states));
            }
            i += 1;
        }
        debug_assert_eq!(delta.len(), states.len() * k);
        let accepting = states.iter().map(|s| s.as_ref().is_some_and(&accept)).collect();
        Ok(Dfa { alphabet, start: 0, accepting, delta })
    }

    /// Thompson construction, subset construction, then minimization.
    pub fn compile(r: &Regex) -> Dfa {
        let alphabet: Vec<Letter> = r.alphabet().into_iter().collect();
        Dfa::compile_over(r, alphabet)
    }

    /// Like [`Dfa::compile`], over an explicit alphabet containing the regex's letters.
    pub fn compile_over(r: &Regex, mut alphabet: Vec<Letter>) -> Dfa {
        alphabet.sort();
        alphabet.dedup();
        Nfa::thompson(r, alphabet).determinize().minimize()
    }

    pub fn parse_and_compile(text: &str) -> Result<Dfa, AutomataError> {
        Ok(Dfa::compile(&Regex::parse(text)?))
    }

    /// Σ*.
    pub fn universal(alphabet: Vec<Letter>) -> Dfa {
        let k = alphabet.len();
        Dfa { alphabet, start: 0, accepting: vec![true], delta: vec![0; k] }
    }

    /// The empty language.
    pub fn empty_language(alphabet: Vec<Letter>) -> Dfa {
        let k = alphabet.len();
        Dfa { alphabet, start: 0, accepting: vec![false], delta: vec![0; k] }
    }

    /// The singleton language `{w}` over `alphabet` (which must contain `w`'s letters).
    pub fn singleton(alphabet: Vec<Letter>, w: &Word) -> Dfa {
        let n = w.len();
        let letters = w.letters().to_vec();
        Dfa::explore(alphabet, 0usize, |&i, l| (i < n && letters[i] == l).then_some(i + 1), |&i| i == n, n + 2)
            .expect("chain automaton is small")
            .minimize()
    }

    /// Σ*·v·Σ*: words containing `v` as a factor.
    pub fn containing_factor(alphabet: Vec<Letter>, v: &Word) -> Dfa {
        let mut nfa = Nfa::new(alphabet.clone());
        let states: Vec<usize> = (0..=v.len()).map(|_| nfa.add_state()).collect();
        for a in 0..alphabet.len() {
            nfa.add_move(states[0], a, states[0]);
            nfa.add_move(states[v.len()], a, states[v.len()]);
        }
        for (i, l) in v.letters().iter().enumerate() {
            match alphabet.binary_search(l) {
                Ok(a) => nfa.add_move(states[i], a, states[i + 1]),
                Err(_) => return Dfa::empty_language(alphabet),
            }
        }
        nfa.add_start(states[0]);
        nfa.set_accepting(states[v.len()]);
        nfa.determinize().minimize()
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, s: usize) -> bool {
        self.accepting[s]
    }

    pub fn letter_index(&self, l: Letter) -> Option<usize> {
        self.alphabet.binary_search(&l).ok()
    }

    pub fn step(&self, s: usize, letter_index: usize) -> usize {
        self.delta[s * self.alphabet.len() + letter_index]
    }

    fn row(&self, s: usize) -> &[usize] {
        let k = self.alphabet.len();
        &self.delta[s * k..(s + 1) * k]
    }

    /// State reached from `from` on `w`, or `None` if `w` uses a letter outside the alphabet.
    pub fn run_from(&self, from: usize, w: &Word) -> Option<usize> {
        let mut s = from;
        for &l in w.letters() {
            s = self.step(s, self.letter_index(l)?);
        }
        Some(s)
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run_from(self.start, w).is_some_and(|s| self.accepting[s])
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        seen[self.start] = true;
        let mut stack = vec![self.start];
        while let Some(s) = stack.pop() {
            for &t in self.row(s) {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// States from which some accepting state is reachable.
    pub fn live_states(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for s in 0..n {
            for &t in self.row(s) {
                preds[t].push(s);
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&s| live[s]).collect();
        while let Some(t) = stack.pop() {
            for &s in &preds[t] {
                if !live[s] {
                    live[s] = true;
                    stack.push(s);
                }
            }
        }
        live
    }

    /// The unique dead (non-accepting, absorbing, no path to acceptance) state, if any.
    /// Only meaningful on a minimized automaton.
    pub fn sink(&self) -> Option<usize> {
        let live = self.live_states();
        (0..self.num_states()).find(|&s| !live[s])
    }

    pub fn is_empty_language(&self) -> bool {
        let reach = self.reachable();
        !(0..self.num_states()).any(|s| reach[s] && self.accepting[s])
    }

    /// Minimal complete DFA for the same language, states numbered in
    /// breadth-first order from the start state (letters in alphabet order).
    /// Two automata for the same language over the same alphabet minimize
    /// to identical values.
    pub fn minimize(&self) -> Dfa {
        let k = self.alphabet.len();
        let reach = self.reachable();
        let old: Vec<usize> = (0..self.num_states()).filter(|&s| reach[s]).collect();
        let mut pos = vec![usize::MAX; self.num_states()];
        for (i, &s) in old.iter().enumerate() {
            pos[s] = i;
        }
        // Moore partition refinement on the reachable part.
        let mut class: Vec<usize> = old.iter().map(|&s| usize::from(self.accepting[s])).collect();
        let mut count = renumber(&mut class);
        loop {
            let mut sig_index: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = Vec::with_capacity(old.len());
            for (i, &s) in old.iter().enumerate() {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[i]);
                sig.extend(self.row(s).iter().map(|&t| class[pos[t]]));
                let len = sig_index.len();
                next.push(*sig_index.entry(sig).or_insert(len));
            }
            let new_count = sig_index.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        // Canonical numbering by BFS from the start class.
        let rep_of_class: Vec<usize> = {
            let mut rep = vec![usize::MAX; count];
            for (i, &s) in old.iter().enumerate() {
                if rep[class[i]] == usize::MAX {
                    rep[class[i]] = s;
                }
            }
            rep
        };
        let mut order = vec![usize::MAX; count];
        let start_class = class[pos[self.start]];
        order[start_class] = 0;
        let mut queue = VecDeque::from([start_class]);
        let mut seq = vec![start_class];
        while let Some(c) = queue.pop_front() {
            for &t in self.row(rep_of_class[c]) {
                let tc = class[pos[t]];
                if order[tc] == usize::MAX {
                    order[tc] = seq.len();
                    seq.push(tc);
                    queue.push_back(tc);
                }
            }
        }
        let mut delta = Vec::with_capacity(count * k);
        let mut accepting = Vec::with_capacity(count);
        for &c in &seq {
            let s = rep_of_class[c];
            accepting.push(self.accepting[s]);
            delta.extend(self.row(s).iter().map(|&t| order[class[pos[t]]]));
        }
        Dfa { alphabet: self.alphabet.clone(), start: 0, accepting, delta }
    }

    /// Same language over a larger alphabet; new letters lead to a fresh sink.
    pub fn with_alphabet(&self, alphabet: &[Letter]) -> Result<Dfa, AutomataError> {
        let mut target: Vec<Letter> = alphabet.to_vec();
        target.sort();
        target.dedup();
        let old: LetterSet = self.alphabet.iter().copied().collect();
        let new: LetterSet = target.iter().copied().collect();
        if !old.is_subset(&new) {
            return Err(AutomataError::AlphabetMismatch);
        }
        let n = self.num_states();
        let sink = n;
        let k = target.len();
        let mut delta = Vec::with_capacity((n + 1) * k);
        for s in 0..=n {
            for &l in &target {
                let t = match (s < n, self.letter_index(l)) {
                    (true, Some(a)) => self.step(s, a),
                    _ => sink,
                };
                delta.push(t);
            }
        }
        let mut accepting = self.accepting.clone();
        accepting.push(false);
        Ok(Dfa { alphabet: target, start: self.start, accepting, delta }.minimize())
    }

    pub fn complement(&self) -> Dfa {
        Dfa {
            alphabet: self.alphabet.clone(),
            start: self.start,
            accepting: self.accepting.iter().map(|a| !a).collect(),
            delta: self.delta.clone(),
        }
    }

    fn product(&self, other: &Dfa, combine: impl Fn(bool, bool) -> bool) -> Result<Dfa, AutomataError> {
        if self.alphabet != other.alphabet {
            return Err(AutomataError::AlphabetMismatch);
        }
        let k = self.alphabet.len();
        Dfa::explore(
            self.alphabet.clone(),
            (self.start, other.start),
            |&(p, q), l| {
                let a = self.letter_index(l).expect("shared alphabet");
                Some((self.step(p, a), other.step(q, a)))
            },
            |&(p, q)| combine(self.accepting[p], other.accepting[q]),
            self.num_states() * other.num_states() + 1,
        )
        .map(|d| {
            debug_assert_eq!(d.alphabet.len(), k);
            d.minimize()
        })
    }

    pub fn intersection(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.product(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.product(other, |a, b| a || b)
    }

    /// Language equality: minimize both and compare the canonical forms.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool, AutomataError> {
        if self.alphabet != other.alphabet {
            return Err(AutomataError::AlphabetMismatch);
        }
        Ok(self.minimize() == other.minimize())
    }

    /// A shortest word accepted by both automata (ties broken alphabetically), if any.
    pub fn intersect_witness(&self, other: &Dfa) -> Result<Option<Word>, AutomataError> {
        if self.alphabet != other.alphabet {
            return Err(AutomataError::AlphabetMismatch);
        }
        let k = self.alphabet.len();
        let start = (self.start, other.start);
        let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some(cur @ (p, q)) = queue.pop_front() {
            if self.accepting[p] && other.accepting[q] {
                let mut letters = Vec::new();
                let mut node = cur;
                while let Some(Some((prev, a))) = parent.get(&node) {
                    letters.push(self.alphabet[*a]);
                    node = *prev;
                }
                letters.reverse();
                return Ok(Some(Word::from_letters(letters)));
            }
            for a in 0..k {
                let next = (self.step(p, a), other.step(q, a));
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                    e.insert(Some((cur, a)));
                    queue.push_back(next);
                }
            }
        }
        Ok(None)
    }

    /// Shortest accepted word, if any.
    pub fn shortest_word(&self) -> Option<Word> {
        self.intersect_witness(&Dfa::universal(self.alphabet.clone())).expect("same alphabet")
    }

    /// Words `u` with `p·u·s` accepted for some `p`, `s`.
    pub fn factor_language(&self) -> Dfa {
        let reach = self.reachable();
        let live = self.live_states();
        let useful: Vec<bool> = (0..self.num_states()).map(|s| reach[s] && live[s]).collect();
        if !useful.iter().any(|&u| u) {
            return Dfa::empty_language(self.alphabet.clone());
        }
        let mut nfa = Nfa::new(self.alphabet.clone());
        for _ in 0..self.num_states() {
            nfa.add_state();
        }
        for s in (0..self.num_states()).filter(|&s| useful[s]) {
            nfa.add_start(s);
            nfa.set_accepting(s);
            for (a, &t) in self.row(s).iter().enumerate() {
                if useful[t] {
                    nfa.add_move(s, a, t);
                }
            }
        }
        nfa.determinize().minimize()
    }

    /// Automaton for the reversed language.
    pub fn reversed(&self) -> Dfa {
        let mut nfa = Nfa::new(self.alphabet.clone());
        for _ in 0..self.num_states() {
            nfa.add_state();
        }
        for s in 0..self.num_states() {
            for (a, &t) in self.row(s).iter().enumerate() {
                nfa.add_move(t, a, s);
            }
            if self.accepting[s] {
                nfa.add_start(s);
            }
        }
        nfa.set_accepting(self.start);
        nfa.determinize().minimize()
    }

    /// All accepted words of length at most `max_len`, shortest first then lexicographic.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        crate::word::words_up_to(&self.alphabet, max_len).into_iter().filter(|w| self.accepts(w)).collect()
    }
}

fn renumber(class: &mut [usize]) -> usize {
    let mut map: HashMap<usize, usize> = HashMap::new();
    for c in class.iter_mut() {
        let len = map.len();
        *c = *map.entry(*c).or_insert(len);
    }
    map.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_alphabet, w, words_up_to};

    fn re(text: &str) -> Dfa {
        Dfa::parse_and_compile(text).unwrap()
    }

    #[test]
    fn a_plus_b_plus_is_four_states() {
        let d = re("a+ b+");
        assert_eq!(d.num_states(), 4);
        assert!(d.sink().is_some());
        assert!(d.accepts(&w("aabbb")));
        assert!(!d.accepts(&w("aba")));
        assert!(!d.accepts(&w("b")));
    }

    #[test]
    fn empty_regex_accepts_only_empty_word() {
        let d = re("()");
        assert!(d.alphabet().is_empty());
        assert!(d.accepts(&Word::empty()));
        assert_eq!(d.num_states(), 1);
    }

    #[test]
    fn odd_length() {
        let d = re("({a,b}{a,b})*{a,b}");
        for u in words_up_to(d.alphabet(), 6) {
            assert_eq!(d.accepts(&u), u.len() % 2 == 1, "{u}");
        }
        assert_eq!(d.num_states(), 2);
    }

    #[test]
    fn equivalence() {
        assert!(re("a+").equivalent(&re("a a*")).unwrap());
        assert!(!re("a+ b+").equivalent(&re("a* b*")).unwrap());
        assert_eq!(re("a+").equivalent(&re("b+")), Err(AutomataError::AlphabetMismatch));
    }

    #[test]
    fn factor_language_examples() {
        let f = re("a+ t a+").factor_language();
        for yes in ["ta", "at", "a", "t", "ata", "", "aaat"] {
            assert!(f.accepts(&w(yes)), "{yes}");
        }
        for no in ["tt", "tat"] {
            assert!(!f.accepts(&w(no)), "{no}");
        }
        let empty = Dfa::empty_language(parse_alphabet("a").unwrap()).factor_language();
        assert!(empty.is_empty_language());
        let f = re("ab").factor_language();
        assert_eq!(f.words_up_to(4), vec![Word::empty(), w("a"), w("b"), w("ab")]);
    }

    #[test]
    fn intersect_witnesses() {
        let ab = parse_alphabet("ab").unwrap();
        let d1 = re("a+ b+");
        let d2 = Dfa::compile_over(&Regex::parse("a* b a*").unwrap(), ab);
        assert_eq!(d1.intersect_witness(&d2).unwrap(), Some(w("ab")));

        let at = parse_alphabet("a b").unwrap();
        let d1 = Dfa::compile_over(&Regex::parse("a+").unwrap(), at.clone());
        let d2 = Dfa::compile_over(&Regex::parse("b+").unwrap(), at);
        assert_eq!(d1.intersect_witness(&d2).unwrap(), None);

        let at = parse_alphabet("at").unwrap();
        let contains_a = Dfa::containing_factor(at, &w("a"));
        assert_eq!(contains_a.intersect_witness(&re("a+ t a+")).unwrap(), Some(w("ata")));
    }

    #[test]
    fn reversal() {
        let d = re("a+ b {a,b}*");
        let r = d.reversed();
        for u in words_up_to(d.alphabet(), 6) {
            assert_eq!(r.accepts(&u), d.accepts(&u.reverse()));
        }
    }

    #[test]
    fn alphabet_extension_and_singleton() {
        let d = re("a+").with_alphabet(&parse_alphabet("ab").unwrap()).unwrap();
        assert!(d.accepts(&w("aa")));
        assert!(!d.accepts(&w("ab")));
        let s = Dfa::singleton(parse_alphabet("ab").unwrap(), &w("ab"));
        assert_eq!(s.words_up_to(4), vec![w("ab")]);
    }

    #[test]
    fn dump_round_trip() {
        let d = re("a+ b {a,b}*");
        let json = serde_json::to_string(&d.dump()).unwrap();
        let back: DfaDump = serde_json::from_str(&json).unwrap();
        assert_eq!(Dfa::from_dump(&back).unwrap(), d);
    }

    #[test]
    fn from_parts_rejects_partial() {
        let ab = parse_alphabet("ab").unwrap();
        assert!(Dfa::from_parts(ab.clone(), 0, &[0], vec![vec![0]]).is_err());
        assert!(Dfa::from_parts(ab, 0, &[0], vec![vec![0, 1]]).is_err());
    }
}
