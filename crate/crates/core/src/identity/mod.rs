//! Identities of finite monoids: satisfaction, the two identity families,
//! τ-terms and stability, equational separation and NFB premises.

mod families;
mod nfb;
mod separation;
mod terms;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};
use thiserror::Error;

use crate::monoid::{Factors, FiniteMonoid};
use crate::word::{Letter, LetterSet, Word, WordError};

pub use families::{long_pair, sigma_pair};
pub use nfb::{nfb_premises, nfb_premises_dual, NfbReport, PremiseResult};
pub use separation::{equational_separation, Separation, SeparationBudget};
pub use terms::{stability_check, tau_term_check};

/// Assignments are enumerated exhaustively; this many distinct letters is the limit.
pub const MAX_LETTERS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("identity has {0} letters; at most {MAX_LETTERS} are supported")]
    TooManyLetters(usize),
    #[error("a side is the empty word but a factor has no identity element")]
    NoIdentity,
    #[error("malformed identity `{0}` (expected `u ~ v`)")]
    Syntax(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("search budget of {0} evaluations exhausted")]
    Budget(u64),
}

/// An identity `left ≈ right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Identity {
    pub left: Word,
    pub right: Word,
}

impl Identity {
    pub fn new(left: Word, right: Word) -> Identity {
        Identity { left, right }
    }

    /// Parses `u ~ v` (also accepts `≈`).
    pub fn parse(text: &str) -> Result<Identity, IdentityError> {
        let mut parts = text.split(['~', '≈']);
        let (Some(l), Some(r), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(IdentityError::Syntax(text.to_string()));
        };
        Ok(Identity { left: Word::parse(l.trim())?, right: Word::parse(r.trim())? })
    }

    /// Both sides reversed.
    pub fn reverse(&self) -> Identity {
        Identity { left: self.left.reverse(), right: self.right.reverse() }
    }

    pub fn letters(&self) -> LetterSet {
        let mut set = self.left.content();
        set.extend(self.right.content());
        set
    }

    pub fn is_trivial(&self) -> bool {
        self.left == self.right
    }
}

impl FromStr for Identity {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Identity, IdentityError> {
        Identity::parse(s)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {}", self.left, self.right)
    }
}

/// Evidence attached to a failing verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An assignment (in factor `factor` of a product) under which the sides differ.
    Assignment { factor: usize, values: Vec<(Letter, usize)>, labels: Vec<(Letter, String)>, left: String, right: String },
    /// The monoid satisfies `u ≈ v` although `u` and `v` are not related.
    Identity { u: Word, v: Word },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Assignment { factor, labels, left, right, .. } => {
                let parts: Vec<String> = labels.iter().map(|(l, e)| format!("{l}={e}")).collect();
                write!(f, "{} gives {left} vs {right}", parts.join(", "))?;
                if *factor > 0 {
                    write!(f, " in factor {factor}")?;
                }
                Ok(())
            }
            Witness::Identity { u, v } => write!(f, "{u} ~ {v} holds but the sides are not related"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
    /// No violation among the candidates up to the bound; not a proof.
    HoldsUpToBound(usize),
}

impl Verdict {
    /// `Holds` or `HoldsUpToBound`.
    pub fn passed(&self) -> bool {
        !matches!(self, Verdict::Fails(_))
    }

    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails(_) => "fails",
            Verdict::HoldsUpToBound(_) => "holds-up-to-bound",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Verdict::Holds => json!({ "status": "holds" }),
            Verdict::HoldsUpToBound(b) => json!({ "status": "holds-up-to-bound", "bound": b }),
            Verdict::Fails(Witness::Assignment { factor, labels, left, right, .. }) => {
                let assignment: serde_json::Map<String, Value> =
                    labels.iter().map(|(l, e)| (l.to_string(), Value::String(e.clone()))).collect();
                json!({ "status": "fails", "witness": { "factor": factor, "assignment": assignment, "left": left, "right": right } })
            }
            Verdict::Fails(Witness::Identity { u, v }) => {
                json!({ "status": "fails", "witness": { "u": u.to_string(), "v": v.to_string() } })
            }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails(w) => write!(f, "fails: {w}"),
            Verdict::HoldsUpToBound(b) => write!(f, "holds up to bound {b}"),
        }
    }
}

/// Sentinel for "the empty product" while evaluating.
const ONE: usize = usize::MAX;

#[inline]
fn mul(m: &FiniteMonoid, x: usize, y: usize) -> usize {
    if x == ONE {
        y
    } else {
        m.mul(x, y)
    }
}

/// Identity compiled against an ordered variable list.
struct Compiled {
    vars: Vec<Letter>,
    left: Vec<usize>,
    right: Vec<usize>,
    /// For each variable index `j`, the first position (per side) where some
    /// variable with index `≥ j` occurs.
    left_from: Vec<usize>,
    right_from: Vec<usize>,
}

impl Compiled {
    fn new(id: &Identity) -> Compiled {
        // Variables ordered by first occurrence, so early positions change slowest.
        let mut vars: Vec<Letter> = Vec::new();
        for l in id.left.letters().iter().chain(id.right.letters()) {
            if !vars.contains(l) {
                vars.push(*l);
            }
        }
        let idx = |l: &Letter| vars.iter().position(|v| v == l).expect("collected");
        let left: Vec<usize> = id.left.letters().iter().map(idx).collect();
        let right: Vec<usize> = id.right.letters().iter().map(idx).collect();
        let from = |side: &[usize]| -> Vec<usize> {
            (0..=vars.len()).map(|j| side.iter().position(|&v| v >= j).unwrap_or(side.len())).collect()
        };
        let left_from = from(&left);
        let right_from = from(&right);
        Compiled { vars, left, right, left_from, right_from }
    }

    /// First assignment (odometer order, last variable fastest) separating the sides.
    fn counterexample(&self, m: &FiniteMonoid) -> Result<Option<(Vec<usize>, usize, usize)>, IdentityError> {
        let k = self.vars.len();
        if (self.left.is_empty() || self.right.is_empty()) && m.identity().is_none() {
            return Err(IdentityError::NoIdentity);
        }
        let n = m.size();
        let mut a = vec![0usize; k];
        let mut pl = vec![ONE; self.left.len() + 1];
        let mut pr = vec![ONE; self.right.len() + 1];
        let mut j = 0;
        loop {
            for p in self.left_from[j]..self.left.len() {
                pl[p + 1] = mul(m, pl[p], a[self.left[p]]);
            }
            for p in self.right_from[j]..self.right.len() {
                pr[p + 1] = mul(m, pr[p], a[self.right[p]]);
            }
            let resolve = |v: usize| if v == ONE { m.identity().expect("checked") } else { v };
            let (l, r) = (resolve(pl[self.left.len()]), resolve(pr[self.right.len()]));
            if l != r {
                return Ok(Some((a, l, r)));
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(None);
                }
                i -= 1;
                a[i] += 1;
                if a[i] < n {
                    break;
                }
                a[i] = 0;
            }
            j = i;
        }
    }
}

/// Exhaustive satisfaction check, factor by factor.
pub fn satisfies<F: Factors + ?Sized>(m: &F, id: &Identity) -> Result<Verdict, IdentityError> {
    let compiled = Compiled::new(id);
    if compiled.vars.len() > MAX_LETTERS {
        return Err(IdentityError::TooManyLetters(compiled.vars.len()));
    }
    if id.is_trivial() {
        return Ok(Verdict::Holds);
    }
    for (factor, fm) in m.factors().into_iter().enumerate() {
        if let Some((a, l, r)) = compiled.counterexample(fm)? {
            let values: Vec<(Letter, usize)> = compiled.vars.iter().copied().zip(a.iter().copied()).collect();
            let mut sorted = values.clone();
            sorted.sort();
            let labels = sorted.iter().map(|&(v, e)| (v, fm.label(e).to_string())).collect();
            return Ok(Verdict::Fails(Witness::Assignment {
                factor,
                values: sorted,
                labels,
                left: fm.label(l).to_string(),
                right: fm.label(r).to_string(),
            }));
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{direct_product, fixture, MonoidProduct};
    use crate::word::w;

    fn id(text: &str) -> Identity {
        text.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let i = id("xy^2x ~ x^2y^2");
        assert_eq!(i.left, w("xyyx"));
        assert_eq!(i.to_string(), "xy^2x ~ x^2y^2");
        assert!(Identity::parse("xy").is_err());
        assert!(Identity::parse("x ~ y ~ z").is_err());
        assert_eq!(id("x ≈ 1").right, Word::empty());
    }

    #[test]
    fn e1_basis_and_failures() {
        let e1 = fixture("E1").unwrap();
        for text in ["xtx ~ xtx^2", "xtx ~ x^2tx", "xy^2x ~ x^2y^2"] {
            assert_eq!(satisfies(&e1, &id(text)).unwrap(), Verdict::Holds, "{text}");
        }
        let v = satisfies(&e1, &id("x^2y^2 ~ y^2x^2")).unwrap();
        let Verdict::Fails(Witness::Assignment { values, left, right, .. }) = v else { panic!("expected failure") };
        let assignment = values.into_iter().collect();
        assert_eq!(e1.label(e1.eval_word(&assignment, &w("x^2y^2")).unwrap()), left);
        assert_eq!(e1.label(e1.eval_word(&assignment, &w("y^2x^2")).unwrap()), right);
        assert_ne!(left, right);
    }

    #[test]
    fn trivial_monoid_satisfies_everything() {
        assert_eq!(satisfies(&FiniteMonoid::trivial(), &id("xy ~ yx^3")).unwrap(), Verdict::Holds);
    }

    #[test]
    fn left_zero_law() {
        let l21 = fixture("L21").unwrap();
        assert_eq!(satisfies(&l21, &id("x ~ x^2")).unwrap(), Verdict::Holds);
        assert_eq!(satisfies(&l21, &id("xyx ~ xy")).unwrap(), Verdict::Holds);
        assert!(!satisfies(&l21, &id("xy ~ yx")).unwrap().passed());
    }

    #[test]
    fn letter_guard() {
        let e1 = fixture("E1").unwrap();
        let many = id("abcdefghijk ~ kjihgfedcba");
        assert_eq!(satisfies(&e1, &many), Err(IdentityError::TooManyLetters(11)));
    }

    #[test]
    fn semigroup_without_identity_and_empty_side() {
        let l2 = fixture("L2").unwrap();
        assert_eq!(satisfies(&l2, &id("x^2 ~ 1")), Err(IdentityError::NoIdentity));
        assert_eq!(satisfies(&l2, &id("xy ~ xyx")).unwrap(), Verdict::Holds);
    }

    #[test]
    fn product_is_componentwise() {
        let prod = MonoidProduct::new(vec![fixture("E1").unwrap(), fixture("L21").unwrap()]);
        let table = direct_product(&fixture("E1").unwrap(), &fixture("L21").unwrap());
        for text in ["xtx ~ xtx^2", "x ~ x^2", "xyx ~ xy", "x^2y^2 ~ y^2x^2", "xy ~ yx"] {
            let i = id(text);
            assert_eq!(satisfies(&prod, &i).unwrap().passed(), satisfies(&table, &i).unwrap().passed(), "{text}");
        }
        let Verdict::Fails(Witness::Assignment { factor, .. }) = satisfies(&prod, &id("x ~ x^2")).unwrap() else {
            panic!("E1 does not satisfy x ~ x^2")
        };
        assert_eq!(factor, 0);
    }

    #[test]
    fn verdict_json() {
        assert_eq!(Verdict::HoldsUpToBound(7).to_json(), json!({"status": "holds-up-to-bound", "bound": 7}));
        let e1 = fixture("E1").unwrap();
        let j = satisfies(&e1, &id("x^2y^2 ~ y^2x^2")).unwrap().to_json();
        assert_eq!(j["status"], "fails");
        assert!(j["witness"]["assignment"].is_object());
    }
}
