//! Words over a flat letter namespace and their occurrence structure.
//!
//! A [`Letter`] is a lowercase base character with an optional numeric
//! subscript (`a`, `t1`, `y12`). A [`Word`] is a finite sequence of letters;
//! the empty word is the identity of concatenation and prints as `1`.
//!
//! The text form accepted by [`Word::parse`] is a sequence of letter tokens,
//! each optionally followed by `^k` (k ≥ 1), with optional whitespace:
//! `atb^2a`, `b t2 a t1 a^2 b^2`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent 0 at position {pos} is not allowed")]
    ZeroExponent { pos: usize },
    #[error("letter `{0}` has no image under the substitution")]
    MissingLetter(Letter),
    #[error("letter `{0}` is mapped to the empty word")]
    EmptyImage(Letter),
}

/// A letter: one base character `a..=z` and an optional subscript.
///
/// Ordering is alphabetical on the base character, then unsubscripted before
/// subscripted, then numerically on the subscript (`a < a1 < a2 < a10 < b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    base: u8,
    sub: Option<u32>,
}

impl Letter {
    pub fn new(base: char) -> Letter {
        assert!(base.is_ascii_lowercase(), "letter base must be a-z, got {base:?}");
        Letter { base: base as u8, sub: None }
    }

    pub fn indexed(base: char, sub: u32) -> Letter {
        assert!(base.is_ascii_lowercase(), "letter base must be a-z, got {base:?}");
        Letter { base: base as u8, sub: Some(sub) }
    }

    pub fn base(self) -> char {
        self.base as char
    }

    pub fn subscript(self) -> Option<u32> {
        self.sub
    }

    /// Parses a single letter token such as `t2`.
    pub fn parse(text: &str) -> Result<Letter, WordError> {
        let w = Word::parse(text)?;
        match w.letters() {
            [l] if !text.contains('^') => Ok(*l),
            _ => Err(WordError::Syntax { pos: 0, msg: format!("expected a single letter, got {text:?}") }),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sub {
            None => write!(f, "{}", self.base as char),
            Some(i) => write!(f, "{}{}", self.base as char, i),
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Letter, D::Error> {
        let s = String::deserialize(d)?;
        Letter::parse(&s).map_err(serde::de::Error::custom)
    }
}

pub type LetterSet = BTreeSet<Letter>;

/// A finite word. The empty word is allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

/// Content of a word split into simple (once) and multiple (twice or more) letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordStats {
    pub content: LetterSet,
    pub simple: LetterSet,
    pub multiple: LetterSet,
}

/// `a₀ t₁ a₁ … t_m a_m`: the simple letters of a word in order and the
/// maximal factors (blocks) between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub skeleton: Vec<Letter>,
    pub blocks: Vec<Word>,
}

impl BlockDecomposition {
    /// Interleaves blocks and skeleton letters back into a word.
    pub fn reassemble(&self) -> Word {
        let mut out = Vec::new();
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                out.push(self.skeleton[i - 1]);
            }
            out.extend_from_slice(block.letters());
        }
        Word(out)
    }
}

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Parses the word grammar; see the module docs.
    pub fn parse(text: &str) -> Result<Word, WordError> {
        let trimmed = text.trim();
        if trimmed == "1" || trimmed == "ε" {
            return Ok(Word::empty());
        }
        let bytes = text.as_bytes();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() {
                i += 1;
                continue;
            }
            if !c.is_ascii_lowercase() {
                return Err(WordError::Syntax { pos: i, msg: format!("unexpected character {:?}", c as char) });
            }
            let base = c;
            i += 1;
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let sub = if i > digits_start {
                let digits = &text[digits_start..i];
                if digits.len() > 1 && digits.starts_with('0') {
                    return Err(WordError::Syntax { pos: digits_start, msg: "subscript has a leading zero".into() });
                }
                Some(digits.parse::<u32>().map_err(|_| WordError::Syntax {
                    pos: digits_start,
                    msg: "subscript out of range".into(),
                })?)
            } else {
                None
            };
            let letter = Letter { base, sub };
            let mut reps = 1usize;
            if i < bytes.len() && bytes[i] == b'^' {
                let caret = i;
                i += 1;
                let exp_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == exp_start {
                    return Err(WordError::Syntax { pos: caret, msg: "`^` must be followed by an exponent".into() });
                }
                reps = text[exp_start..i].parse::<usize>().map_err(|_| WordError::Syntax {
                    pos: exp_start,
                    msg: "exponent out of range".into(),
                })?;
                if reps == 0 {
                    return Err(WordError::ZeroExponent { pos: exp_start });
                }
            }
            letters.extend(std::iter::repeat_n(letter, reps));
        }
        Ok(Word(letters))
    }

    pub fn content(&self) -> LetterSet {
        self.0.iter().copied().collect()
    }

    /// Occurrence count of every letter of the word.
    pub fn occurrences(&self) -> BTreeMap<Letter, usize> {
        let mut m = BTreeMap::new();
        for &l in &self.0 {
            *m.entry(l).or_insert(0) += 1;
        }
        m
    }

    pub fn stats(&self) -> WordStats {
        let occ = self.occurrences();
        let content: LetterSet = occ.keys().copied().collect();
        let simple: LetterSet = occ.iter().filter(|(_, &n)| n == 1).map(|(&l, _)| l).collect();
        let multiple = content.difference(&simple).copied().collect();
        WordStats { content, simple, multiple }
    }

    pub fn blocks(&self) -> BlockDecomposition {
        let occ = self.occurrences();
        let mut skeleton = Vec::new();
        let mut blocks = Vec::new();
        let mut current = Vec::new();
        for &l in &self.0 {
            if occ[&l] == 1 {
                skeleton.push(l);
                blocks.push(Word(std::mem::take(&mut current)));
            } else {
                current.push(l);
            }
        }
        blocks.push(Word(current));
        BlockDecomposition { skeleton, blocks }
    }

    /// Every block involves at most one letter.
    pub fn is_block_simple(&self) -> bool {
        self.blocks().blocks.iter().all(|b| b.content().len() <= 1)
    }

    /// For every pair of distinct multiple letters, at most one block involves both.
    pub fn is_xy_limited(&self) -> bool {
        let contents: Vec<LetterSet> = self.blocks().blocks.iter().map(Word::content).collect();
        let mul: Vec<Letter> = self.stats().multiple.into_iter().collect();
        for (i, x) in mul.iter().enumerate() {
            for y in &mul[i + 1..] {
                let shared = contents.iter().filter(|c| c.contains(x) && c.contains(y)).count();
                if shared > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// The subsequence keeping the first two occurrences of each letter.
    pub fn ini2(&self) -> Word {
        let mut seen: BTreeMap<Letter, u8> = BTreeMap::new();
        let mut out = Vec::new();
        for &l in &self.0 {
            let n = seen.entry(l).or_insert(0);
            if *n < 2 {
                *n += 1;
                out.push(l);
            }
        }
        Word(out)
    }

    /// Letters in order of first occurrence.
    pub fn first_occurrences(&self) -> Vec<Letter> {
        let mut seen = LetterSet::new();
        self.0.iter().copied().filter(|l| seen.insert(*l)).collect()
    }

    /// Collapses every run `xx…x` to a single `x`.
    pub fn collapse_runs(&self) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for &l in &self.0 {
            if out.last() != Some(&l) {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// True iff `self` occurs contiguously in `w`.
    pub fn is_factor_of(&self, w: &Word) -> bool {
        if self.is_empty() {
            return true;
        }
        w.0.windows(self.len()).any(|win| win == self.0.as_slice())
    }

    /// Homomorphic image under a letter substitution into non-empty words.
    pub fn substitute(&self, theta: &BTreeMap<Letter, Word>) -> Result<Word, WordError> {
        let mut out = Vec::new();
        for &l in &self.0 {
            let img = theta.get(&l).ok_or(WordError::MissingLetter(l))?;
            if img.is_empty() {
                return Err(WordError::EmptyImage(l));
            }
            out.extend_from_slice(&img.0);
        }
        Ok(Word(out))
    }

    /// Deletes every letter outside `keep`.
    pub fn restrict(&self, keep: &LetterSet) -> Word {
        Word(self.0.iter().copied().filter(|l| keep.contains(l)).collect())
    }
}

impl FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Word, WordError> {
        Word::parse(s)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Word {
        Word(v)
    }
}

impl fmt::Display for Word {
    /// Runs of length ≥ 2 use exponent form. Tokens are space-separated
    /// only when some letter carries a subscript.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let spaced = self.0.iter().any(|l| l.sub.is_some());
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            if spaced && !first {
                write!(f, " ")?;
            }
            first = false;
            if j - i >= 2 {
                write!(f, "{}^{}", l, j - i)?;
            } else {
                write!(f, "{l}")?;
            }
            i = j;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses a word, panicking on malformed input. Intended for literals in tests and fixtures.
pub fn w(text: &str) -> Word {
    Word::parse(text).unwrap_or_else(|e| panic!("bad word literal {text:?}: {e}"))
}

/// Parses an alphabet given either as a run of single-character letters
/// (`abt`) or as separated tokens (`a b t1`, `a,b,t1`).
pub fn parse_alphabet(text: &str) -> Result<Vec<Letter>, WordError> {
    let cleaned = text.replace(',', " ");
    let word = Word::parse(&cleaned)?;
    let set: LetterSet = word.content();
    Ok(set.into_iter().collect())
}

/// All words of length exactly `len` over `alphabet`, in lexicographic order
/// of the alphabet as given.
pub fn words_of_length(alphabet: &[Letter], len: usize) -> Vec<Word> {
    if len == 0 {
        return vec![Word::empty()];
    }
    if alphabet.is_empty() {
        return Vec::new();
    }
    let k = alphabet.len();
    let total = k.checked_pow(len as u32).expect("word enumeration too large");
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0usize; len];
    loop {
        out.push(Word(idx.iter().map(|&i| alphabet[i]).collect()));
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < k {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// All words of length at most `max_len` over `alphabet`, shortest first.
pub fn words_up_to(alphabet: &[Letter], max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|n| words_of_length(alphabet, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(text: &str) -> LetterSet {
        parse_alphabet(text).unwrap().into_iter().collect()
    }

    #[test]
    fn parse_expands_exponents() {
        assert_eq!(w("atb^2a").to_string(), "atb^2a");
        assert_eq!(w("atb^2a").len(), 5);
        let u2 = w("b t2 a t1 a^2 b^2");
        assert_eq!(u2.len(), 8);
        assert_eq!(u2.letters()[1], Letter::indexed('t', 2));
        assert_eq!(u2.to_string(), "b t2 a t1 a^2 b^2");
        assert_eq!(w("aab"), w("a^2b"));
        assert_eq!(w(""), Word::empty());
        assert_eq!(w("1"), Word::empty());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(Word::parse("a^0"), Err(WordError::ZeroExponent { pos: 2 })));
        assert!(matches!(Word::parse("aB"), Err(WordError::Syntax { pos: 1, .. })));
        assert!(matches!(Word::parse("a^"), Err(WordError::Syntax { .. })));
        assert!(matches!(Word::parse("t01"), Err(WordError::Syntax { .. })));
        assert!(Word::parse("9a").is_err());
    }

    #[test]
    fn letter_order() {
        let mut ls = [Letter::new('b'), Letter::indexed('a', 10), Letter::indexed('a', 2), Letter::new('a')];
        ls.sort();
        let names: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
        assert_eq!(names, ["a", "a2", "a10", "b"]);
    }

    #[test]
    fn stats() {
        let s = w("atb^2a").stats();
        assert_eq!(s.content, set("abt"));
        assert_eq!(s.simple, set("t"));
        assert_eq!(s.multiple, set("ab"));

        let s = Word::empty().stats();
        assert!(s.content.is_empty() && s.simple.is_empty() && s.multiple.is_empty());

        let s = w("x^2y^3xtyx^2").stats();
        assert_eq!(s.simple, set("t"));
        assert_eq!(s.multiple, set("xy"));
    }

    #[test]
    fn blocks() {
        let u = w("x^2 t1 x^3 t2 y^5 t3 z^2 t4 t5 y");
        let d = u.blocks();
        assert_eq!(d.skeleton, w("t1 t2 t3 t4 t5").into_letters());
        let blocks: Vec<String> = d.blocks.iter().map(|b| b.to_string()).collect();
        assert_eq!(blocks, ["x^2", "x^3", "y^5", "z^2", "1", "y"]);
        assert_eq!(d.reassemble(), u);

        let d = w("a^2b^2").blocks();
        assert!(d.skeleton.is_empty());
        assert_eq!(d.blocks, vec![w("a^2b^2")]);

        let d = w("atb^2a").blocks();
        assert_eq!(d.skeleton, vec![Letter::new('t')]);
        assert_eq!(d.blocks, vec![w("a"), w("b^2a")]);
    }

    #[test]
    fn classify() {
        let u = w("x^2 t1 x^3 t2 y^5 t3 z^2 t4 t5 y");
        assert!(u.is_block_simple() && u.is_xy_limited());
        let u = w("x^2 t1 y t2 x^2 y z^3 t3 z t4 y p^3 t5 x p");
        assert!(!u.is_block_simple());
        assert!(u.is_xy_limited());
        let u = w("xytxy");
        assert!(!u.is_block_simple() && !u.is_xy_limited());
    }

    #[test]
    fn ini2_examples() {
        assert_eq!(w("abab").ini2(), w("abab"));
        assert_eq!(w("atb^2a").ini2(), w("atbba"));
        assert_eq!(w("a^3b").ini2(), w("aab"));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w("atb^2a").reverse(), w("ab^2ta"));
        assert_eq!(Word::empty().reverse(), Word::empty());
        assert_eq!(w("a^2b^2").reverse(), w("b^2a^2"));
    }

    #[test]
    fn factors() {
        assert!(w("a^2b").is_factor_of(&w("a^2b^2")));
        assert!(!w("ab").is_factor_of(&w("ba")));
        assert!(!w("ta").is_factor_of(&w("atb^2a")));
        assert!(Word::empty().is_factor_of(&Word::empty()));
    }

    #[test]
    fn substitution() {
        let theta: BTreeMap<Letter, Word> = [(Letter::new('x'), w("a^2")), (Letter::new('t'), w("b"))].into();
        assert_eq!(w("xtx").substitute(&theta).unwrap(), w("a^2ba^2"));

        let id: BTreeMap<Letter, Word> = [(Letter::new('x'), w("x")), (Letter::new('y'), w("y"))].into();
        assert_eq!(w("xy").substitute(&id).unwrap(), w("xy"));

        let theta: BTreeMap<Letter, Word> = [(Letter::new('x'), w("ab")), (Letter::new('t'), w("t"))].into();
        assert_eq!(w("xtx").substitute(&theta).unwrap(), w("abtab"));

        assert_eq!(w("xz").substitute(&theta), Err(WordError::MissingLetter(Letter::new('z'))));
        let bad: BTreeMap<Letter, Word> = [(Letter::new('x'), Word::empty())].into();
        assert_eq!(w("x").substitute(&bad), Err(WordError::EmptyImage(Letter::new('x'))));
    }

    #[test]
    fn enumeration_counts() {
        let ab = parse_alphabet("ab").unwrap();
        assert_eq!(words_of_length(&ab, 3).len(), 8);
        assert_eq!(words_up_to(&ab, 3).len(), 15);
        assert_eq!(words_up_to(&[], 3), vec![Word::empty()]);
    }
}
