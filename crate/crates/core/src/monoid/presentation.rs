//! Finite semigroups from presentations, closed by Knuth–Bendix completion
//! under the shortlex order.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use super::{FiniteMonoid, MonoidError};
use crate::word::{parse_alphabet, Letter, Word};

/// One side of a relation: a word over the generators or the zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Zero,
    Word(Word),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => write!(f, "0"),
            Term::Word(w) => write!(f, "{w}"),
        }
    }
}

/// Semigroup presentation `⟨generators ∣ relations⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<Letter>,
    pub relations: Vec<(Term, Term)>,
}

impl Presentation {
    /// Parses generators like `abc` and relations like `a^2=ab=0, ba=ca=a`.
    /// A chain `p=q=r` stands for `p=q` and `q=r`.
    pub fn parse(generators: &str, relations: &str) -> Result<Presentation, MonoidError> {
        let generators = parse_alphabet(generators)?;
        let mut rels = Vec::new();
        for chunk in relations.split([',', ';']).map(str::trim).filter(|c| !c.is_empty()) {
            let terms: Vec<Term> = chunk
                .split('=')
                .map(|t| match t.trim() {
                    "0" => Ok(Term::Zero),
                    text => Word::parse(text).map(Term::Word),
                })
                .collect::<Result<_, _>>()?;
            if terms.len() < 2 {
                return Err(MonoidError::Presentation(format!("`{chunk}` is not a relation")));
            }
            for pair in terms.windows(2) {
                rels.push((pair[0].clone(), pair[1].clone()));
            }
        }
        Ok(Presentation { generators, relations: rels })
    }

    pub fn build(&self, cap: usize) -> Result<FiniteMonoid, MonoidError> {
        from_presentation(&self.generators, &self.relations, cap)
    }
}

type Sym = u32;
const ZERO: Sym = 0;

fn shortlex_greater(a: &[Sym], b: &[Sym]) -> bool {
    a.len() > b.len() || (a.len() == b.len() && a > b)
}

fn find(hay: &[Sym], needle: &[Sym]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

#[derive(Default)]
struct Rewriter {
    rules: Vec<(Vec<Sym>, Vec<Sym>)>,
}

impl Rewriter {
    fn reduce(&self, w: &[Sym]) -> Vec<Sym> {
        let mut w = w.to_vec();
        'outer: loop {
            for (l, r) in &self.rules {
                if let Some(pos) = find(&w, l) {
                    w.splice(pos..pos + l.len(), r.iter().copied());
                    continue 'outer;
                }
            }
            return w;
        }
    }

    fn add_and_interreduce(&mut self, pending: &mut VecDeque<(Vec<Sym>, Vec<Sym>)>, a: Vec<Sym>, b: Vec<Sym>) -> bool {
        let (a, b) = (self.reduce(&a), self.reduce(&b));
        if a == b {
            return false;
        }
        let (l, r) = if shortlex_greater(&a, &b) { (a, b) } else { (b, a) };
        let old = std::mem::take(&mut self.rules);
        for (l2, r2) in old {
            if find(&l2, &l).is_some() {
                pending.push_back((l2, r2));
            } else {
                self.rules.push((l2, r2));
            }
        }
        self.rules.push((l, r));
        for i in 0..self.rules.len() {
            let r = self.reduce(&self.rules[i].1.clone());
            self.rules[i].1 = r;
        }
        true
    }

    fn critical_pairs(&self) -> Vec<(Vec<Sym>, Vec<Sym>)> {
        let mut out = Vec::new();
        for (i, (l1, r1)) in self.rules.iter().enumerate() {
            for (j, (l2, r2)) in self.rules.iter().enumerate() {
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let left = [r1.as_slice(), &l2[k..]].concat();
                        let right = [&l1[..l1.len() - k], r2.as_slice()].concat();
                        out.push((left, right));
                    }
                }
                if i != j {
                    if let Some(p) = find(l1, l2) {
                        let right = [&l1[..p], r2.as_slice(), &l1[p + l2.len()..]].concat();
                        out.push((r1.clone(), right));
                    }
                }
            }
        }
        out.into_iter().filter(|(a, b)| self.reduce(a) != self.reduce(b)).collect()
    }
}

/// Closes a presentation into its multiplication table.
///
/// Relations are completed into a confluent shortlex rewriting system
/// (`0` is the smallest symbol and absorbing); elements are the
/// irreducible words, listed in shortlex order with `0` last.
pub fn from_presentation(gens: &[Letter], relations: &[(Term, Term)], cap: usize) -> Result<FiniteMonoid, MonoidError> {
    let sym_of: HashMap<Letter, Sym> = gens.iter().enumerate().map(|(i, &l)| (l, i as Sym + 1)).collect();
    let encode = |t: &Term| -> Result<Vec<Sym>, MonoidError> {
        match t {
            Term::Zero => Ok(vec![ZERO]),
            Term::Word(w) if w.is_empty() => {
                Err(MonoidError::Presentation("empty word in a semigroup relation".into()))
            }
            Term::Word(w) => w
                .letters()
                .iter()
                .map(|l| sym_of.get(l).copied().ok_or_else(|| MonoidError::Presentation(format!("`{l}` is not a generator"))))
                .collect(),
        }
    };
    let mut pending = VecDeque::new();
    let mut uses_zero = false;
    for (a, b) in relations {
        uses_zero |= matches!(a, Term::Zero) || matches!(b, Term::Zero);
        pending.push_back((encode(a)?, encode(b)?));
    }
    if uses_zero {
        pending.push_back((vec![ZERO, ZERO], vec![ZERO]));
        for g in 1..=gens.len() as Sym {
            pending.push_back((vec![ZERO, g], vec![ZERO]));
            pending.push_back((vec![g, ZERO], vec![ZERO]));
        }
    }

    let max_rules = 16 * cap.max(16);
    let mut rw = Rewriter::default();
    loop {
        while let Some((a, b)) = pending.pop_front() {
            rw.add_and_interreduce(&mut pending, a, b);
            if rw.rules.len() > max_rules {
                return Err(MonoidError::NotConfluent(max_rules));
            }
        }
        let critical = rw.critical_pairs();
        if critical.is_empty() {
            break;
        }
        pending.extend(critical);
    }

    // Irreducible words reachable from the generators.
    let mut found: BTreeSet<(usize, Vec<Sym>)> = BTreeSet::new();
    let mut queue: VecDeque<Vec<Sym>> = VecDeque::new();
    for g in 1..=gens.len() as Sym {
        let nf = rw.reduce(&[g]);
        if found.insert((nf.len(), nf.clone())) {
            queue.push_back(nf);
        }
    }
    while let Some(x) = queue.pop_front() {
        for g in 1..=gens.len() as Sym {
            let nf = rw.reduce(&[x.as_slice(), &[g]].concat());
            if found.insert((nf.len(), nf.clone())) {
                if found.len() > cap {
                    return Err(MonoidError::NotClosed(cap));
                }
                queue.push_back(nf);
            }
        }
    }
    // Every product is reached by right multiplication, so zero is an
    // element exactly when the search met it.
    let has_zero = found.contains(&(1, vec![ZERO]));
    let mut elements: Vec<Vec<Sym>> = found.into_iter().map(|(_, w)| w).filter(|w| w != &[ZERO]).collect();
    if has_zero {
        elements.push(vec![ZERO]);
    }
    let index: HashMap<Vec<Sym>, usize> = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for x in &elements {
        for y in &elements {
            let nf = rw.reduce(&[x.as_slice(), y].concat());
            let e = *index.get(&nf).ok_or_else(|| MonoidError::Presentation("product left the element set".into()))?;
            table.push(e);
        }
    }
    let labels: Vec<String> = elements
        .iter()
        .map(|w| {
            if w == &[ZERO] {
                "0".to_string()
            } else {
                Word::from_letters(w.iter().map(|&s| gens[s as usize - 1]).collect()).to_string()
            }
        })
        .collect();
    let generators = gens.iter().enumerate().map(|(i, &l)| (l, index[&rw.reduce(&[i as Sym + 1])])).collect();
    let zero = has_zero.then_some(n - 1);
    Ok(FiniteMonoid::from_flat(labels, None, zero, table).with_generators(generators))
}
