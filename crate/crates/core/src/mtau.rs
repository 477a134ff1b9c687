//! Rees quotients of the free monoid modulo a congruence over the ideal of
//! classes that contain no factor of a language `W`, and relatively free
//! monoids over finite alphabets.
//!
//! The ambient alphabet is unbounded, so words using a letter outside the
//! finite alphabet of `W` are never factors of `W`; every quotient built
//! here therefore carries a zero.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::automata::{AutomataError, Dfa};
use crate::congruence::{CanonicalForm, CongruenceId};
use crate::monoid::{morphism_search, FiniteMonoid, Hom, HomKind};
use crate::synt::syntactic_of_class;
use crate::word::{parse_alphabet, Letter, LetterSet, Word, WordError};

pub const DEFAULT_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MtauError {
    #[error("more than {0} elements; the quotient is probably infinite")]
    CapExceeded(usize),
    #[error("unsupported predicate `{0}` (known: xy-limited)")]
    UnsupportedPredicate(String),
    #[error("malformed language spec `{0}`")]
    Malformed(String),
    #[error(transparent)]
    Automata(#[from] AutomataError),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    /// At most one block involves any two given multiple letters.
    XyLimited,
}

impl FromStr for Predicate {
    type Err = MtauError;

    fn from_str(s: &str) -> Result<Predicate, MtauError> {
        match s {
            "xy-limited" => Ok(Predicate::XyLimited),
            other => Err(MtauError::UnsupportedPredicate(other.to_string())),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::XyLimited => write!(f, "xy-limited"),
        }
    }
}

/// A language `W` that is a union of classes of `cong`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WSpec {
    /// The single class `[rep]_cong`.
    SingleClass { cong: CongruenceId, rep: Word },
    /// All words over `alphabet`.
    FullStar { cong: CongruenceId, alphabet: Vec<Letter> },
    /// All words over `alphabet` satisfying `predicate`.
    PredicateUnion { cong: CongruenceId, alphabet: Vec<Letter>, predicate: Predicate },
}

impl WSpec {
    pub fn congruence(&self) -> &CongruenceId {
        match self {
            WSpec::SingleClass { cong, .. } | WSpec::FullStar { cong, .. } | WSpec::PredicateUnion { cong, .. } => cong,
        }
    }

    pub fn alphabet(&self) -> Vec<Letter> {
        match self {
            WSpec::SingleClass { rep, .. } => rep.content().into_iter().collect(),
            WSpec::FullStar { alphabet, .. } | WSpec::PredicateUnion { alphabet, .. } => {
                let set: LetterSet = alphabet.iter().copied().collect();
                set.into_iter().collect()
            }
        }
    }

    /// Parses the CLI forms `beta:atab^2` (class), and with `kind` set to
    /// `star` or `pred`: `alpha:ab`, `beta:xy-limited:abt`.
    pub fn parse(kind: &str, text: &str) -> Result<WSpec, MtauError> {
        let malformed = || MtauError::Malformed(text.to_string());
        let mut parts = text.splitn(3, ':');
        let cong: CongruenceId = parts.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
        match kind {
            "class" => Ok(WSpec::SingleClass { cong, rep: Word::parse(parts.next().ok_or_else(malformed)?)? }),
            "star" => Ok(WSpec::FullStar { cong, alphabet: parse_alphabet(parts.next().ok_or_else(malformed)?)? }),
            "pred" => {
                let predicate = parts.next().ok_or_else(malformed)?.parse()?;
                let alphabet = parse_alphabet(parts.next().ok_or_else(malformed)?)?;
                Ok(WSpec::PredicateUnion { cong, alphabet, predicate })
            }
            _ => Err(malformed()),
        }
    }
}

impl fmt::Display for WSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = |a: &[Letter]| a.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("");
        match self {
            WSpec::SingleClass { cong, rep } => write!(f, "[{rep}]_{cong}"),
            WSpec::FullStar { cong, alphabet } => write!(f, "{{{}}}* mod {cong}", letters(alphabet)),
            WSpec::PredicateUnion { cong, alphabet, predicate } => {
                write!(f, "{predicate} words over {{{}}} mod {cong}", letters(alphabet))
            }
        }
    }
}

/// Decides whether the class of a word is a factor class of `W`.
enum FactorTest {
    Automaton(Dfa),
    Everything,
}

impl FactorTest {
    fn new(spec: &WSpec) -> Result<FactorTest, MtauError> {
        match spec {
            // One representative suffices: the class of v meets the factors
            // of W iff v itself is a factor, because W is a union of classes
            // and the relation is a congruence.
            WSpec::SingleClass { cong, rep } => Ok(FactorTest::Automaton(cong.class_dfa(rep)?.factor_language())),
            WSpec::FullStar { .. } => Ok(FactorTest::Everything),
            // Every word v is a factor of the xy-limited word v·x₁x₁⋯xₖxₖ
            // (all letters of v squared), which has no simple letters and
            // hence a single block.
            WSpec::PredicateUnion { predicate: Predicate::XyLimited, .. } => Ok(FactorTest::Everything),
        }
    }

    fn contains(&self, v: &Word) -> bool {
        match self {
            FactorTest::Automaton(d) => d.accepts(v),
            FactorTest::Everything => true,
        }
    }
}

/// Word `v` followed by each of its letters twice; always xy-limited.
pub fn xy_limited_extension(v: &Word) -> Word {
    let mut out = v.clone();
    for l in v.content() {
        out.push(l);
        out.push(l);
    }
    out
}

struct Quotient {
    reps: Vec<Word>,
    forms: HashMap<CanonicalForm, usize>,
}

/// Breadth-first closure of the classes reachable from `1` by right
/// multiplication with letters, keeping only classes accepted by `keep`.
fn close_classes(
    cong: &CongruenceId,
    alphabet: &[Letter],
    cap: usize,
    keep: impl Fn(&Word) -> bool,
) -> Result<Quotient, MtauError> {
    let mut q = Quotient { reps: vec![Word::empty()], forms: HashMap::new() };
    q.forms.insert(cong.canonical(&Word::empty()), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for &l in alphabet {
            let mut v = q.reps[i].clone();
            v.push(l);
            let form = cong.canonical(&v);
            if q.forms.contains_key(&form) || !keep(&v) {
                continue;
            }
            q.forms.insert(form, q.reps.len());
            q.reps.push(v);
            if q.reps.len() > cap {
                return Err(MtauError::CapExceeded(cap));
            }
            queue.push_back(q.reps.len() - 1);
        }
    }
    Ok(q)
}

fn build_table(cong: &CongruenceId, q: &Quotient, alphabet: &[Letter], with_zero: bool) -> FiniteMonoid {
    let n = q.reps.len();
    let size = n + usize::from(with_zero);
    let zero = with_zero.then_some(n);
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        for y in 0..size {
            let e = if x == n || y == n {
                n
            } else {
                let uv = q.reps[x].concat(&q.reps[y]);
                match q.forms.get(&cong.canonical(&uv)) {
                    Some(&e) => e,
                    None => zero.expect("class closure is complete without a zero"),
                }
            };
            table.push(e);
        }
    }
    let mut labels: Vec<String> = q.reps.iter().map(Word::to_string).collect();
    if with_zero {
        labels.push("0".into());
    }
    let generators = alphabet
        .iter()
        .map(|&l| (l, q.forms.get(&cong.canonical(&Word::from_letters(vec![l]))).copied().or(zero).expect("letter class")))
        .collect();
    FiniteMonoid::from_flat(labels, Some(0), zero, table).with_generators(generators)
}

/// `M_τ(W)`: classes of factors of `W` (labelled by their shortlex-least
/// member) plus a zero, with concatenate-then-canonicalize multiplication.
pub fn m_tau(spec: &WSpec, cap: usize) -> Result<FiniteMonoid, MtauError> {
    let cong = spec.congruence();
    let alphabet = spec.alphabet();
    let test = FactorTest::new(spec)?;
    let q = close_classes(cong, &alphabet, cap, |v| test.contains(v))?;
    Ok(build_table(cong, &q, &alphabet, true))
}

/// The free monoid over `alphabet` modulo `cong`: every class, no zero.
pub fn relatively_free(cong: &CongruenceId, alphabet: &[Letter], cap: usize) -> Result<FiniteMonoid, MtauError> {
    let set: LetterSet = alphabet.iter().copied().collect();
    let alphabet: Vec<Letter> = set.into_iter().collect();
    let q = close_classes(cong, &alphabet, cap, |_| true)?;
    Ok(build_table(cong, &q, &alphabet, false))
}

/// Result of comparing `M_τ([rep]_c)` with the syntactic monoid of the class.
#[derive(Debug, Clone)]
pub struct OntoReport {
    pub source: FiniteMonoid,
    pub target: FiniteMonoid,
    pub hom: Option<Hom>,
    pub is_iso: bool,
}

impl OntoReport {
    pub fn passed(&self) -> bool {
        self.hom.is_some()
    }
}

impl fmt::Display for OntoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "M_tau: {} elements; syntactic: {} elements", self.source.size(), self.target.size())?;
        match &self.hom {
            None => writeln!(f, "no surjective homomorphism found"),
            Some(h) => {
                writeln!(f, "surjective homomorphism{}:", if self.is_iso { " (isomorphism)" } else { "" })?;
                for (x, &y) in h.map.iter().enumerate() {
                    writeln!(f, "  {} -> {}", self.source.label(x), self.target.label(y))?;
                }
                Ok(())
            }
        }
    }
}

/// Searches a surjection from `M_τ([rep]_c)` onto the syntactic monoid of `[rep]_c`.
pub fn onto_synt_check(cong: &CongruenceId, rep: &Word) -> Result<OntoReport, MtauError> {
    let source = m_tau(&WSpec::SingleClass { cong: cong.clone(), rep: rep.clone() }, DEFAULT_CAP)?;
    let target = syntactic_of_class(cong, rep)?;
    let hom = morphism_search(&source, &target, HomKind::Onto);
    let is_iso = hom.as_ref().is_some_and(|h| h.is_injective());
    Ok(OntoReport { source, target, hom, is_iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::fixture;
    use crate::word::w;

    fn single(c: &str, rep: &str) -> WSpec {
        WSpec::SingleClass { cong: c.parse().unwrap(), rep: w(rep) }
    }

    #[test]
    fn t1_of_ab_is_a01() {
        let m = m_tau(&single("t1", "ab"), 100).unwrap();
        assert_eq!(m.labels(), ["1", "a", "b", "ab", "0"]);
        assert!(m.validate().is_valid());
        assert!(morphism_search(&m, &fixture("A01").unwrap(), HomKind::Iso).is_some());
    }

    #[test]
    fn meet_of_ata_has_ten_elements() {
        let m = m_tau(&single("t1^gamma", "ata"), 100).unwrap();
        assert_eq!(m.labels(), ["1", "a", "t", "a^2", "at", "ta", "a^2t", "ata", "ta^2", "0"]);
        assert!(m.validate().is_valid());
    }

    #[test]
    fn alpha_star() {
        let spec = WSpec::FullStar { cong: CongruenceId::Alpha, alphabet: parse_alphabet("ab").unwrap() };
        let m = m_tau(&spec, 100).unwrap();
        assert_eq!(m.labels(), ["1", "a", "b", "ab", "ba", "0"]);
        let same = m_tau(&single("alpha", "ab"), 100).unwrap();
        assert_eq!(same, m);
    }

    #[test]
    fn relatively_free_examples() {
        let ab = parse_alphabet("ab").unwrap();
        assert_eq!(relatively_free(&CongruenceId::Alpha, &ab, 100).unwrap().size(), 5);
        let gamma = relatively_free(&CongruenceId::Gamma, &parse_alphabet("a").unwrap(), 100).unwrap();
        assert_eq!(gamma.labels(), ["1", "a", "a^2"]);
        assert_eq!(relatively_free(&CongruenceId::T1, &ab, 200), Err(MtauError::CapExceeded(200)));
    }

    #[test]
    fn predicate_union_matches_full_star() {
        let abt = parse_alphabet("abt").unwrap();
        let pred = WSpec::PredicateUnion { cong: CongruenceId::Beta, alphabet: abt.clone(), predicate: Predicate::XyLimited };
        let star = WSpec::FullStar { cong: CongruenceId::Beta, alphabet: abt };
        let m = m_tau(&pred, 10_000).unwrap();
        assert_eq!(m, m_tau(&star, 10_000).unwrap());
        assert!(!w("xytxy").is_xy_limited() && xy_limited_extension(&w("xytxy")).is_xy_limited());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(WSpec::parse("class", "beta:atab^2").unwrap(), single("beta", "atab^2"));
        assert!(matches!(WSpec::parse("pred", "beta:xy-limited:abt").unwrap(), WSpec::PredicateUnion { .. }));
        assert_eq!(WSpec::parse("pred", "beta:odd:abt"), Err(MtauError::UnsupportedPredicate("odd".into())));
        assert!(WSpec::parse("star", "alpha").is_err());
    }

    #[test]
    fn onto_checks() {
        let r = onto_synt_check(&CongruenceId::T1, &w("ab")).unwrap();
        assert_eq!((r.source.size(), r.target.size()), (5, 5));
        assert!(r.is_iso);
        let r = onto_synt_check(&CongruenceId::Alpha, &w("ab")).unwrap();
        assert_eq!((r.source.size(), r.target.size()), (6, 5));
        assert!(r.passed());
    }
}
