//! Canonical forms and class automata for the word congruences.
//!
//! | id         | congruent iff                                                  |
//! |------------|----------------------------------------------------------------|
//! | `t1`       | equal after collapsing runs (`xx → x`)                         |
//! | `gamma`    | same simple letters and same multiple letters                  |
//! | `alpha`    | same letters in the same order of first occurrence             |
//! | `zeta`     | same [`Word::ini2`]                                            |
//! | `beta`     | same skeleton; corresponding blocks list their letters in the same first-occurrence order |
//! | `beta-dual`| `beta` on the reversed words                                   |
//! | `simq`     | same skeleton; corresponding blocks have the same content      |
//!
//! Meets are written caret-joined, e.g. `t1^gamma`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::automata::{AutomataError, Dfa};
use crate::word::{words_up_to, Letter, LetterSet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown congruence `{0}` (expected t1, gamma, alpha, zeta, beta, beta-dual, simq or a ^-joined meet)")]
pub struct UnknownCongruence(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CongruenceId {
    T1,
    Gamma,
    Alpha,
    Zeta,
    Beta,
    BetaDual,
    SimQ,
    /// Intersection of at least two congruences; never nested.
    Meet(Vec<CongruenceId>),
}

impl CongruenceId {
    /// Meet of the given congruences, flattening nested meets. A single
    /// component is returned as itself.
    pub fn meet(parts: impl IntoIterator<Item = CongruenceId>) -> CongruenceId {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                CongruenceId::Meet(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        assert!(!flat.is_empty(), "meet of no congruences");
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            CongruenceId::Meet(flat)
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }

    /// The congruence relating `u` and `v` exactly when this one relates
    /// their reverses, if it is among the supported ones. α and ζ look at
    /// first occurrences, so their duals are not.
    pub fn dual(&self) -> Option<CongruenceId> {
        match self {
            CongruenceId::Beta => Some(CongruenceId::BetaDual),
            CongruenceId::BetaDual => Some(CongruenceId::Beta),
            CongruenceId::Meet(parts) => parts.iter().map(CongruenceId::dual).collect::<Option<_>>().map(CongruenceId::Meet),
            CongruenceId::T1 | CongruenceId::Gamma | CongruenceId::SimQ => Some(self.clone()),
            CongruenceId::Alpha | CongruenceId::Zeta => None,
        }
    }

    pub fn canonical(&self, w: &Word) -> CanonicalForm {
        match self {
            CongruenceId::T1 => CanonicalForm::T1(w.collapse_runs()),
            CongruenceId::Gamma => {
                let s = w.stats();
                CanonicalForm::Gamma { simple: s.simple, multiple: s.multiple }
            }
            CongruenceId::Alpha => CanonicalForm::Alpha(w.first_occurrences()),
            CongruenceId::Zeta => CanonicalForm::Zeta(w.ini2()),
            CongruenceId::Beta => CanonicalForm::Beta(BlockForm::of(w)),
            CongruenceId::BetaDual => CanonicalForm::BetaDual(BlockForm::of(&w.reverse())),
            CongruenceId::SimQ => {
                let d = w.blocks();
                CanonicalForm::SimQ { skeleton: d.skeleton, blocks: d.blocks.iter().map(Word::content).collect() }
            }
            CongruenceId::Meet(parts) => CanonicalForm::Meet(parts.iter().map(|c| c.canonical(w)).collect()),
        }
    }

    pub fn equivalent(&self, u: &Word, v: &Word) -> bool {
        match self {
            CongruenceId::Meet(parts) => parts.iter().all(|c| c.equivalent(u, v)),
            _ => self.canonical(u) == self.canonical(v),
        }
    }

    /// All words over `content(rep)` of length at most `max_len` congruent to
    /// `rep`, shortest first. Brute force; serves as the oracle for
    /// [`CongruenceId::class_dfa`].
    pub fn enumerate_class(&self, rep: &Word, max_len: usize) -> Vec<Word> {
        let alphabet: Vec<Letter> = rep.content().into_iter().collect();
        let target = self.canonical(rep);
        words_up_to(&alphabet, max_len).into_iter().filter(|u| self.canonical(u) == target).collect()
    }

    /// Minimal complete DFA over `content(rep)` accepting exactly the class of `rep`.
    pub fn class_dfa(&self, rep: &Word) -> Result<Dfa, AutomataError> {
        let alphabet: Vec<Letter> = rep.content().into_iter().collect();
        if alphabet.len() > 64 {
            return Err(AutomataError::TooLarge(64));
        }
        let limit = 1 << 20;
        let dfa = match self {
            CongruenceId::T1 => {
                let target = rep.collapse_runs().into_letters();
                Dfa::explore(
                    alphabet,
                    0usize,
                    |&pos, l| {
                        if pos > 0 && target[pos - 1] == l {
                            Some(pos)
                        } else if pos < target.len() && target[pos] == l {
                            Some(pos + 1)
                        } else {
                            None
                        }
                    },
                    |&pos| pos == target.len(),
                    limit,
                )?
            }
            CongruenceId::Gamma => {
                let occ = rep.occurrences();
                let want: Vec<u8> = alphabet.iter().map(|l| occ[l].min(2) as u8).collect();
                let idx = |l: Letter| alphabet.binary_search(&l).expect("letter in alphabet");
                Dfa::explore(
                    alphabet.clone(),
                    vec![0u8; want.len()],
                    |counts, l| {
                        let i = idx(l);
                        let mut next = counts.clone();
                        next[i] = (next[i] + 1).min(2);
                        (next[i] <= want[i]).then_some(next)
                    },
                    |counts| *counts == want,
                    limit,
                )?
            }
            CongruenceId::Alpha => {
                let target = rep.first_occurrences();
                Dfa::explore(
                    alphabet,
                    0usize,
                    |&pos, l| {
                        if target[..pos].contains(&l) {
                            Some(pos)
                        } else if pos < target.len() && target[pos] == l {
                            Some(pos + 1)
                        } else {
                            None
                        }
                    },
                    |&pos| pos == target.len(),
                    limit,
                )?
            }
            CongruenceId::Zeta => {
                let target = rep.ini2().into_letters();
                Dfa::explore(
                    alphabet,
                    0usize,
                    |&pos, l| {
                        let seen = target[..pos].iter().filter(|&&x| x == l).count();
                        if seen >= 2 {
                            Some(pos)
                        } else if pos < target.len() && target[pos] == l {
                            Some(pos + 1)
                        } else {
                            None
                        }
                    },
                    |&pos| pos == target.len(),
                    limit,
                )?
            }
            CongruenceId::Beta => block_profile_dfa(rep, alphabet, BlockMode::Order, limit)?,
            CongruenceId::SimQ => block_profile_dfa(rep, alphabet, BlockMode::Content, limit)?,
            CongruenceId::BetaDual => CongruenceId::Beta.class_dfa(&rep.reverse())?.reversed(),
            CongruenceId::Meet(parts) => {
                let mut iter = parts.iter();
                let first = iter.next().ok_or_else(|| AutomataError::Unsupported("empty meet".into()))?;
                let mut acc = first.class_dfa(rep)?;
                for c in iter {
                    acc = acc.intersection(&c.class_dfa(rep)?)?;
                }
                acc
            }
        };
        Ok(dfa.minimize())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BlockMode {
    Order,
    Content,
}

/// Profile automaton for β (block first-occurrence order) and ∼_Q (block content).
///
/// State: number of skeleton letters read, a summary of the current block
/// (matched prefix length of its first-occurrence sequence, or a content
/// bitmask), and per-letter occurrence counts capped at 2.
fn block_profile_dfa(rep: &Word, alphabet: Vec<Letter>, mode: BlockMode, limit: usize) -> Result<Dfa, AutomataError> {
    let decomposition = rep.blocks();
    let skeleton = decomposition.skeleton;
    let idx = |l: Letter| alphabet.binary_search(&l).expect("letter in alphabet");
    let block_seqs: Vec<Vec<usize>> =
        decomposition.blocks.iter().map(|b| b.first_occurrences().into_iter().map(idx).collect()).collect();
    let block_masks: Vec<u64> = block_seqs.iter().map(|s| s.iter().fold(0u64, |m, &i| m | (1 << i))).collect();
    let skeleton_idx: Vec<usize> = skeleton.iter().map(|&l| idx(l)).collect();
    let is_simple: Vec<bool> = (0..alphabet.len()).map(|i| skeleton_idx.contains(&i)).collect();
    let multiple: Vec<usize> = (0..alphabet.len()).filter(|&i| !is_simple[i]).collect();

    #[derive(Clone, PartialEq, Eq, Hash)]
    struct Profile {
        skel: usize,
        block: u64,
        counts: Vec<u8>,
    }

    // For `Order`, `block` holds the matched prefix length; for `Content` a bitmask.
    let block_complete = |p: &Profile| match mode {
        BlockMode::Order => p.block as usize == block_seqs[p.skel].len(),
        BlockMode::Content => p.block == block_masks[p.skel],
    };
    let start = Profile { skel: 0, block: 0, counts: vec![0; multiple.len()] };
    Dfa::explore(
        alphabet.clone(),
        start,
        |p, l| {
            let i = idx(l);
            if is_simple[i] {
                if p.skel < skeleton_idx.len() && skeleton_idx[p.skel] == i && block_complete(p) {
                    return Some(Profile { skel: p.skel + 1, block: 0, counts: p.counts.clone() });
                }
                return None;
            }
            let mut next = p.clone();
            let slot = multiple.binary_search(&i).expect("multiple letter");
            next.counts[slot] = (next.counts[slot] + 1).min(2);
            match mode {
                BlockMode::Order => {
                    let seq = &block_seqs[p.skel];
                    let matched = p.block as usize;
                    if seq[..matched].contains(&i) {
                    } else if matched < seq.len() && seq[matched] == i {
                        next.block += 1;
                    } else {
                        return None;
                    }
                }
                BlockMode::Content => {
                    if block_masks[p.skel] & (1 << i) == 0 {
                        return None;
                    }
                    next.block |= 1 << i;
                }
            }
            Some(next)
        },
        |p| p.skel == skeleton_idx.len() && block_complete(p) && p.counts.iter().all(|&c| c == 2),
        limit,
    )
}

impl fmt::Display for CongruenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceId::T1 => write!(f, "t1"),
            CongruenceId::Gamma => write!(f, "gamma"),
            CongruenceId::Alpha => write!(f, "alpha"),
            CongruenceId::Zeta => write!(f, "zeta"),
            CongruenceId::Beta => write!(f, "beta"),
            CongruenceId::BetaDual => write!(f, "beta-dual"),
            CongruenceId::SimQ => write!(f, "simq"),
            CongruenceId::Meet(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "^")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for CongruenceId {
    type Err = UnknownCongruence;

    fn from_str(s: &str) -> Result<CongruenceId, UnknownCongruence> {
        let parts: Result<Vec<CongruenceId>, _> = s
            .split('^')
            .map(|p| match p.trim().to_ascii_lowercase().as_str() {
                "t1" | "tau1" => Ok(CongruenceId::T1),
                "gamma" => Ok(CongruenceId::Gamma),
                "alpha" => Ok(CongruenceId::Alpha),
                "zeta" => Ok(CongruenceId::Zeta),
                "beta" => Ok(CongruenceId::Beta),
                "beta-dual" | "betadual" => Ok(CongruenceId::BetaDual),
                "simq" | "q" => Ok(CongruenceId::SimQ),
                _ => Err(UnknownCongruence(s.to_string())),
            })
            .collect();
        Ok(CongruenceId::meet(parts?))
    }
}

/// Skeleton plus, for every block, its letters in order of first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockForm {
    pub skeleton: Vec<Letter>,
    pub blocks: Vec<Vec<Letter>>,
}

impl BlockForm {
    fn of(w: &Word) -> BlockForm {
        let d = w.blocks();
        BlockForm { skeleton: d.skeleton, blocks: d.blocks.iter().map(Word::first_occurrences).collect() }
    }
}

/// Normal form of a word's class; equal forms ⇔ congruent words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CanonicalForm {
    T1(Word),
    Gamma { simple: LetterSet, multiple: LetterSet },
    Alpha(Vec<Letter>),
    Zeta(Word),
    Beta(BlockForm),
    /// β-form of the reversed word.
    BetaDual(BlockForm),
    SimQ { skeleton: Vec<Letter>, blocks: Vec<LetterSet> },
    Meet(Vec<CanonicalForm>),
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: impl IntoIterator<Item = Letter>) -> fmt::Result {
    let v: Vec<String> = letters.into_iter().map(|l| l.to_string()).collect();
    write!(f, "({})", v.join(","))
}

fn write_block_form(f: &mut fmt::Formatter<'_>, b: &BlockForm) -> fmt::Result {
    write!(f, "skeleton ")?;
    write_letters(f, b.skeleton.iter().copied())?;
    write!(f, "; blocks ")?;
    for (i, blk) in b.blocks.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write_letters(f, blk.iter().copied())?;
    }
    Ok(())
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalForm::T1(w) | CanonicalForm::Zeta(w) => write!(f, "{w}"),
            CanonicalForm::Gamma { simple, multiple } => {
                write!(f, "simple ")?;
                write_letters(f, simple.iter().copied())?;
                write!(f, "; multiple ")?;
                write_letters(f, multiple.iter().copied())
            }
            CanonicalForm::Alpha(seq) => write_letters(f, seq.iter().copied()),
            CanonicalForm::Beta(b) => write_block_form(f, b),
            CanonicalForm::BetaDual(b) => {
                write!(f, "dual of ")?;
                write_block_form(f, b)
            }
            CanonicalForm::SimQ { skeleton, blocks } => {
                write!(f, "skeleton ")?;
                write_letters(f, skeleton.iter().copied())?;
                write!(f, "; blocks ")?;
                for (i, blk) in blocks.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    let v: Vec<String> = blk.iter().map(|l| l.to_string()).collect();
                    write!(f, "{{{}}}", v.join(","))?;
                }
                Ok(())
            }
            CanonicalForm::Meet(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ∧ ")?;
                    }
                    write!(f, "[{p}]")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::compile;
    use crate::word::w;

    fn c(name: &str) -> CongruenceId {
        name.parse().unwrap()
    }

    #[test]
    fn parse_names() {
        assert_eq!(c("t1^gamma"), CongruenceId::Meet(vec![CongruenceId::T1, CongruenceId::Gamma]));
        assert_eq!(c("beta-dual"), CongruenceId::BetaDual);
        assert_eq!(c("t1^gamma").to_string(), "t1^gamma");
        assert!("delta".parse::<CongruenceId>().is_err());
        let nested = CongruenceId::meet([c("t1^gamma"), CongruenceId::Zeta]);
        assert_eq!(nested, CongruenceId::Meet(vec![CongruenceId::T1, CongruenceId::Gamma, CongruenceId::Zeta]));
    }

    #[test]
    fn beta_worked_example() {
        let u = w("x^2y^3xtyx^2");
        let v = w("xyty^3xy");
        assert_eq!(CongruenceId::Beta.canonical(&u), CongruenceId::Beta.canonical(&v));
        let CanonicalForm::Beta(form) = CongruenceId::Beta.canonical(&u) else { unreachable!() };
        assert_eq!(form.skeleton, w("t").into_letters());
        assert_eq!(form.blocks, vec![w("xy").into_letters(), w("yx").into_letters()]);
    }

    #[test]
    fn simple_forms() {
        assert_eq!(CongruenceId::T1.canonical(&w("a^3b^2a")), CanonicalForm::T1(w("aba")));
        assert_eq!(
            CongruenceId::Gamma.canonical(&w("atb^2a")),
            CanonicalForm::Gamma { simple: w("t").content(), multiple: w("ab").content() }
        );
    }

    #[test]
    fn equivalences() {
        assert!(!CongruenceId::Beta.equivalent(&w("a^2b^2"), &w("b^2a^2")));
        assert!(CongruenceId::SimQ.equivalent(&w("atb^2a"), &w("atab^2")));
        assert!(c("t1^gamma").equivalent(&w("ata"), &w("a^2ta^2")));
        assert!(CongruenceId::Zeta.equivalent(&w("atb^2a"), &w("atb^2a^3b")));
        assert!(CongruenceId::Alpha.equivalent(&w("ab"), &w("abba")));
    }

    #[test]
    fn enumerations() {
        assert_eq!(CongruenceId::T1.enumerate_class(&w("ab"), 3), vec![w("ab"), w("aab"), w("abb")]);
        assert_eq!(CongruenceId::Beta.enumerate_class(&w("atb^2a"), 5), vec![w("atbab"), w("atbba")]);
        let meet = c("t1^gamma").enumerate_class(&w("ab^2ta"), 6);
        let re = compile("a+ b b+ t a+").unwrap();
        assert_eq!(meet, re.words_up_to(6));
        assert!(CongruenceId::Beta.enumerate_class(&w("atb^2a"), 4).is_empty());
    }

    #[test]
    fn class_dfas_match_printed_regexes() {
        let beta = CongruenceId::Beta.class_dfa(&w("atb^2a")).unwrap();
        let printed = compile("a+ t b b+ a {a,b}* | a+ t b+ a+ b {a,b}*").unwrap();
        assert!(beta.equivalent(&printed).unwrap());

        let meet = c("t1^gamma").class_dfa(&w("ab^2ta")).unwrap();
        assert!(meet.equivalent(&compile("a+ b b+ t a+").unwrap()).unwrap());

        let alpha = CongruenceId::Alpha.class_dfa(&w("ab")).unwrap();
        assert!(alpha.equivalent(&compile("a+ b {a,b}*").unwrap()).unwrap());

        let zeta = c("t1^zeta").class_dfa(&w("atbasb")).unwrap();
        assert!(zeta.equivalent(&compile("a t b a+ s b+").unwrap()).unwrap());

        let zeta = c("t1^zeta").class_dfa(&w("atb^2a")).unwrap();
        assert!(zeta.equivalent(&compile("a t b b+ a+").unwrap()).unwrap());
    }

    #[test]
    fn class_dfa_of_empty_word() {
        for name in ["t1", "gamma", "alpha", "zeta", "beta", "beta-dual", "simq", "t1^gamma"] {
            let d = c(name).class_dfa(&Word::empty()).unwrap();
            assert!(d.accepts(&Word::empty()), "{name}");
            assert_eq!(d.num_states(), 1, "{name}");
        }
    }

    #[test]
    fn class_dfa_agrees_with_enumeration() {
        let reps = ["atb^2a", "atab^2", "ab^2ta", "ata", "abtab", "xyxtyzy", "a^2b^2"];
        let congs = ["t1", "gamma", "alpha", "zeta", "beta", "beta-dual", "simq", "t1^gamma", "t1^zeta", "alpha^gamma"];
        for rep in reps {
            let rep = w(rep);
            let bound = (2 * rep.len() + 2).min(9);
            for name in congs {
                let cong = c(name);
                let d = cong.class_dfa(&rep).unwrap();
                assert_eq!(d.words_up_to(bound), cong.enumerate_class(&rep, bound), "{name} {rep}");
            }
        }
    }
}
