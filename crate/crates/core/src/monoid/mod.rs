//! Finite monoids (and semigroups) as multiplication tables.

mod fixtures;
mod morphism;
mod presentation;
mod product;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{Letter, Word, WordError};

pub use fixtures::{fixture, fixture_names, fixture_presentation};
pub use morphism::{morphism_search, Hom, HomKind};
pub use presentation::{from_presentation, Presentation, Term};
pub use product::{adjoin_identity, direct_product, Factors, MonoidProduct};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("table is not {0}×{0}")]
    Dimension(usize),
    #[error("table entry {0} out of range")]
    EntryOutOfRange(usize),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("monoid has no elements")]
    Empty,
    #[error("no identity element: cannot evaluate the empty word")]
    NoIdentity,
    #[error("letter `{0}` has no assigned element")]
    Unassigned(Letter),
    #[error("presentation: {0}")]
    Presentation(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("rewriting did not complete within {0} rules")]
    NotConfluent(usize),
    #[error("more than {0} elements; the presented semigroup may be infinite")]
    NotClosed(usize),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid monoid JSON: {0}")]
    Json(String),
}

/// A finite monoid, or a semigroup when `identity` is absent.
///
/// Elements are indices `0..size()`; `table[x * size + y]` is `x·y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    labels: Vec<String>,
    identity: Option<usize>,
    zero: Option<usize>,
    table: Vec<usize>,
    generators: Vec<(Letter, usize)>,
}

/// Outcome of [`FiniteMonoid::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    /// Triples `(x, y, z)` with `(xy)z ≠ x(yz)`.
    pub associativity: Vec<(usize, usize, usize)>,
    /// Elements `x` with `1·x ≠ x` or `x·1 ≠ x`.
    pub identity: Vec<usize>,
    /// Elements `x` with `0·x ≠ 0` or `x·0 ≠ 0`.
    pub zero: Vec<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.associativity.is_empty() && self.identity.is_empty() && self.zero.is_empty()
    }
}

impl FiniteMonoid {
    /// Builds a table, checking shape and label uniqueness. Algebraic laws
    /// are checked separately by [`FiniteMonoid::validate`].
    pub fn new(
        labels: Vec<String>,
        identity: Option<usize>,
        zero: Option<usize>,
        table: Vec<Vec<usize>>,
    ) -> Result<FiniteMonoid, MonoidError> {
        let n = labels.len();
        if n == 0 {
            return Err(MonoidError::Empty);
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(MonoidError::Dimension(n));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        if let Some(&bad) = flat.iter().find(|&&e| e >= n) {
            return Err(MonoidError::EntryOutOfRange(bad));
        }
        for e in identity.iter().chain(zero.iter()) {
            if *e >= n {
                return Err(MonoidError::EntryOutOfRange(*e));
            }
        }
        let mut seen = HashMap::new();
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(MonoidError::DuplicateLabel(l.clone()));
            }
        }
        Ok(FiniteMonoid { labels, identity, zero, table: flat, generators: Vec::new() })
    }

    pub(crate) fn from_flat(labels: Vec<String>, identity: Option<usize>, zero: Option<usize>, table: Vec<usize>) -> FiniteMonoid {
        debug_assert_eq!(table.len(), labels.len() * labels.len());
        FiniteMonoid { labels, identity, zero, table, generators: Vec::new() }
    }

    /// The one-element monoid.
    pub fn trivial() -> FiniteMonoid {
        FiniteMonoid::from_flat(vec!["1".into()], Some(0), Some(0), vec![0])
    }

    pub fn with_generators(mut self, generators: Vec<(Letter, usize)>) -> FiniteMonoid {
        self.generators = generators;
        self
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    /// Named generators (letter ↦ element), when the construction provides them.
    pub fn generators(&self) -> &[(Letter, usize)] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.labels.len() + y]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.size();
        let mut report = ValidationReport::default();
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        report.associativity.push((x, y, z));
                    }
                }
            }
        }
        if let Some(e) = self.identity {
            report.identity = (0..n).filter(|&x| self.mul(e, x) != x || self.mul(x, e) != x).collect();
        }
        if let Some(z) = self.zero {
            report.zero = (0..n).filter(|&x| self.mul(z, x) != z || self.mul(x, z) != z).collect();
        }
        report
    }

    /// Table with multiplication reversed.
    pub fn opposite(&self) -> FiniteMonoid {
        let n = self.size();
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = self.mul(y, x);
            }
        }
        FiniteMonoid { table, ..self.clone() }
    }

    /// The two-sided absorbing element, if there is one.
    pub fn find_zero(&self) -> Option<usize> {
        (0..self.size()).find(|&z| (0..self.size()).all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    /// Product of `w` under `assignment`; the empty word evaluates to the identity.
    pub fn eval_word(&self, assignment: &BTreeMap<Letter, usize>, w: &Word) -> Result<usize, MonoidError> {
        let mut acc: Option<usize> = None;
        for l in w.letters() {
            let v = *assignment.get(l).ok_or(MonoidError::Unassigned(*l))?;
            acc = Some(match acc {
                None => v,
                Some(a) => self.mul(a, v),
            });
        }
        acc.or(self.identity).ok_or(MonoidError::NoIdentity)
    }

    /// Deterministic generating set: the named generators if they generate,
    /// otherwise a greedy choice scanning elements in index order.
    pub fn generating_set(&self) -> Vec<usize> {
        let named: Vec<usize> = self.generators.iter().map(|&(_, e)| e).collect();
        if !named.is_empty() && self.closure_of(&named).iter().all(|&b| b) {
            return named;
        }
        let mut gens = Vec::new();
        let mut covered = self.closure_of(&gens);
        for x in 0..self.size() {
            if !covered[x] {
                gens.push(x);
                covered = self.closure_of(&gens);
            }
        }
        gens
    }

    /// Membership vector of the submonoid (subsemigroup, without identity)
    /// generated by `gens`.
    pub fn closure_of(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.size()];
        let mut stack: Vec<usize> = Vec::new();
        for &g in gens.iter().chain(self.identity.iter()) {
            if !inside[g] {
                inside[g] = true;
                stack.push(g);
            }
        }
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    stack.push(y);
                }
            }
        }
        inside
    }

    pub fn to_json(&self) -> String {
        let json = MonoidJson {
            elements: self.labels.clone(),
            identity: self.identity.map(|e| self.labels[e].clone()),
            zero: self.zero.map(|z| self.labels[z].clone()),
            table: self.table_rows().iter().map(|row| row.iter().map(|&e| self.labels[e].clone()).collect()).collect(),
        };
        let mut text = serde_json::to_string_pretty(&json).expect("serializable");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<FiniteMonoid, MonoidError> {
        let json: MonoidJson = serde_json::from_str(text).map_err(|e| MonoidError::Json(e.to_string()))?;
        let index: HashMap<&str, usize> = json.elements.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let lookup = |l: &str| index.get(l).copied().ok_or_else(|| MonoidError::UnknownLabel(l.to_string()));
        let identity = json.identity.as_deref().map(lookup).transpose()?;
        let zero = json.zero.as_deref().map(lookup).transpose()?;
        let table = json
            .table
            .iter()
            .map(|row| row.iter().map(|l| lookup(l)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        FiniteMonoid::new(json.elements.clone(), identity, zero, table)
    }

    /// Sets one table entry; used to build deliberately corrupted tables.
    pub fn with_entry(mut self, x: usize, y: usize, value: usize) -> FiniteMonoid {
        let n = self.size();
        self.table[x * n + y] = value;
        self
    }
}

#[derive(Serialize, Deserialize)]
struct MonoidJson {
    elements: Vec<String>,
    identity: Option<String>,
    zero: Option<String>,
    table: Vec<Vec<String>>,
}

impl fmt::Display for FiniteMonoid {
    /// Cayley table with row and column headers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.labels.iter().map(|l| l.chars().count()).max().unwrap_or(1);
        write!(f, "{:>width$} |", "·")?;
        for l in &self.labels {
            write!(f, " {l:>width$}")?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat((width + 1) * (self.size() + 1) + 1))?;
        for x in 0..self.size() {
            write!(f, "{:>width$} |", self.labels[x])?;
            for y in 0..self.size() {
                write!(f, " {:>width$}", self.labels[self.mul(x, y)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
