//! Reproduction table: every acceptance criterion as a named, timed check.
//!
//! Each criterion returns a [`CriterionResult`] with a one-line verdict and
//! free-form detail lines. Fixture lookups go through [`Options::monoid`],
//! so a corrupted table can be substituted to see which rows react.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::compile;
use crate::congruence::CongruenceId;
use crate::identity::{
    equational_separation, long_pair, nfb_premises, nfb_premises_dual, satisfies, sigma_pair, stability_check,
    Identity, Verdict,
};
use crate::monoid::{fixture, morphism_search, Factors, FiniteMonoid, HomKind, MonoidError, MonoidProduct};
use crate::mtau::{m_tau, onto_synt_check, relatively_free, WSpec, DEFAULT_CAP};
use crate::synt::{syntactic_monoid, syntactic_monoid_open, syntactic_of_class, syntactic_of_word};
use crate::word::{parse_alphabet, w, words_up_to, Letter, Word};

/// Number of criteria in the table.
pub const CRITERIA: usize = 11;

const SEED: u64 = 0x5eed_0f2a;

#[derive(Debug, Clone, Default)]
pub struct Options {
    /// Smaller bounds everywhere.
    pub quick: bool,
    /// Replacement tables for named fixtures.
    pub overrides: BTreeMap<String, FiniteMonoid>,
}

impl Options {
    pub fn quick() -> Options {
        Options { quick: true, ..Options::default() }
    }

    pub fn with_override(mut self, name: &str, m: FiniteMonoid) -> Options {
        self.overrides.insert(name.to_string(), m);
        self
    }

    /// Fixture `name`, or its override.
    pub fn monoid(&self, name: &str) -> Result<FiniteMonoid, MonoidError> {
        match self.overrides.get(name) {
            Some(m) => Ok(m.clone()),
            None => fixture(name),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub summary: String,
    pub detail: Vec<String>,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} {:>2} {:<34} {:>9.3}s (limit {}s)  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.summary
        )
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub rows: Vec<CriterionResult>,
    pub quick: bool,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn failed(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.passed).map(|r| r.id).collect()
    }

    pub fn total(&self) -> Duration {
        self.rows.iter().map(|r| r.elapsed).sum()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "reproduction table{}", if self.quick { " (quick bounds)" } else { "" })?;
        for r in &self.rows {
            writeln!(f, "{}", r.line())?;
            for d in &r.detail {
                writeln!(f, "        {d}")?;
            }
        }
        let passed = self.rows.iter().filter(|r| r.passed).count();
        writeln!(f, "{passed}/{} passed in {:.3}s", self.rows.len(), self.total().as_secs_f64())
    }
}

/// Outcome of a criterion body before timing is attached.
struct Outcome {
    passed: bool,
    summary: String,
    detail: Vec<String>,
}

impl Outcome {
    fn new(passed: bool, summary: impl Into<String>, detail: Vec<String>) -> Outcome {
        Outcome { passed, summary: summary.into(), detail }
    }

    fn error(e: impl fmt::Display) -> Outcome {
        Outcome::new(false, format!("error: {e}"), Vec::new())
    }
}

type Body = fn(&Options) -> Result<Outcome, String>;

const TABLE: [(&str, u64, Body); CRITERIA] = [
    ("fixture sizes", 1, fixture_sizes),
    ("alpha star vs a+b{a,b}*", 1, alpha_star),
    ("odd-length language is Z2", 1, odd_length),
    ("E1 identities", 5, e1_identities),
    ("beta on the identity families", 1, beta_families),
    ("class automata vs regexes", 1, class_regexes),
    ("E1{sigma2} generator", 120, sigma2_generator),
    ("M_tau onto syntactic monoid", 10, onto_checks),
    ("premises for the limit variety", 300, premises),
    ("table generators and separation", 300, table_rows),
    ("property suites", 300, properties),
];

/// Runs criterion `id` (1-based).
pub fn run_criterion(id: usize, opts: &Options) -> CriterionResult {
    assert!((1..=CRITERIA).contains(&id), "criterion {id} out of range");
    let (title, limit, body) = TABLE[id - 1];
    let limit = Duration::from_secs(limit);
    let start = Instant::now();
    let outcome = body(opts).unwrap_or_else(Outcome::error);
    let elapsed = start.elapsed();
    let mut detail = outcome.detail;
    let in_time = elapsed <= limit;
    if !in_time {
        detail.push(format!("over the time limit of {}s", limit.as_secs()));
    }
    CriterionResult {
        id,
        title,
        passed: outcome.passed && in_time,
        summary: outcome.summary,
        detail,
        elapsed,
        limit,
    }
}

pub fn run_all(opts: &Options) -> Report {
    Report { rows: (1..=CRITERIA).map(|id| run_criterion(id, opts)).collect(), quick: opts.quick }
}

fn cong(text: &str) -> CongruenceId {
    text.parse().expect("congruence names in this module are valid")
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn verdict_line(what: &str, v: &Verdict, ok: bool) -> String {
    format!("{} {what}: {v}", if ok { "ok " } else { "BAD" })
}

fn fixture_sizes(opts: &Options) -> Result<Outcome, String> {
    let expected = [("A1", 7), ("E1", 6), ("A01", 5), ("B01", 5), ("Q1", 6), ("L21", 3)];
    let mut passed = true;
    let mut detail = Vec::new();
    for (name, size) in expected {
        let m = opts.monoid(name).map_err(err)?;
        let report = m.validate();
        let ok = m.size() == size && report.is_valid() && m.is_monoid();
        passed &= ok;
        detail.push(format!(
            "{} {name}: {} elements (expected {size}), associative {}, identity {}",
            if ok { "ok " } else { "BAD" },
            m.size(),
            report.associativity.is_empty(),
            report.identity.is_empty()
        ));
    }
    let summary = if passed { "all six sizes match" } else { "size or validation mismatch" };
    Ok(Outcome::new(passed, summary, detail))
}

fn alpha_star(_: &Options) -> Result<Outcome, String> {
    let target = syntactic_monoid_open(&compile("a+ b {a,b}*").map_err(err)?);
    let ab = parse_alphabet("ab").map_err(err)?;
    let source = m_tau(&WSpec::FullStar { cong: CongruenceId::Alpha, alphabet: ab.clone() }, DEFAULT_CAP).map_err(err)?;
    let free = relatively_free(&CongruenceId::Alpha, &ab, DEFAULT_CAP).map_err(err)?;
    let hom = morphism_search(&source, &target, HomKind::Onto);
    let passed = target.size() == 5 && source.size() == 6 && hom.is_some();
    let detail = vec![
        format!("syntactic monoid of a+b{{a,b}}*: {} elements {:?}", target.size(), target.labels()),
        format!("M_alpha({{a,b}}*): {} elements {:?}", source.size(), source.labels()),
        format!("surjection found: {}", hom.is_some()),
        format!("free object on {{a,b}} without the zero: {} elements", free.size()),
    ];
    Ok(Outcome::new(passed, format!("{} -> {}", source.size(), target.size()), detail))
}

fn odd_length(_: &Options) -> Result<Outcome, String> {
    let m = syntactic_monoid(&compile("{a,b} ({a,b} {a,b})*").map_err(err)?);
    let e = m.identity().ok_or("no identity")?;
    let involutive = (0..m.size()).filter(|&g| g != e).all(|g| m.mul(g, g) == e);
    let passed = m.size() == 2 && involutive;
    let detail = vec![format!("elements {:?}, g*g = 1 for g != 1: {involutive}", m.labels())];
    Ok(Outcome::new(passed, format!("{} elements", m.size()), detail))
}

fn e1_identities(opts: &Options) -> Result<Outcome, String> {
    let e1 = opts.monoid("E1").map_err(err)?;
    let mut passed = true;
    let mut detail = Vec::new();
    let mut check = |id: Identity, want_hold: bool| -> Result<(), String> {
        let v = satisfies(&e1, &id).map_err(err)?;
        let ok = v.passed() == want_hold;
        passed &= ok;
        detail.push(verdict_line(&id.to_string(), &v, ok));
        Ok(())
    };
    for text in ["xtx ~ xtx^2", "xtx ~ x^2tx", "xy^2x ~ x^2y^2"] {
        check(Identity::parse(text).map_err(err)?, true)?;
    }
    for n in 0..=2 {
        check(sigma_pair(n), false)?;
    }
    for n in 1..=3 {
        check(long_pair(n), true)?;
    }
    let summary = if passed { "basis holds, sigma fails, long identities hold" } else { "unexpected verdict" };
    Ok(Outcome::new(passed, summary, detail))
}

fn beta_families(_: &Options) -> Result<Outcome, String> {
    let beta = CongruenceId::Beta;
    let mut passed = true;
    let mut detail = Vec::new();
    for n in 0..=5 {
        let s = sigma_pair(n);
        let sigma_ok = !beta.equivalent(&s.left, &s.right);
        let long_ok = n == 0 || {
            let l = long_pair(n);
            beta.equivalent(&l.left, &l.right)
        };
        passed &= sigma_ok && long_ok;
        detail.push(format!("n={n}: sigma pair separated {sigma_ok}, long pair related {long_ok}"));
    }
    Ok(Outcome::new(passed, "n <= 5", detail))
}

fn class_regexes(_: &Options) -> Result<Outcome, String> {
    let meet = CongruenceId::meet([CongruenceId::T1, CongruenceId::Gamma]);
    let cases = [
        (CongruenceId::Beta, "atb^2a", "a+ t b b+ a {a,b}* | a+ t b+ a+ b {a,b}*"),
        (meet.clone(), "ab^2ta", "a+ b b+ t a+"),
        (meet, "ata", "a+ t a+"),
    ];
    let mut passed = true;
    let mut detail = Vec::new();
    for (c, rep, re) in cases {
        let d = c.class_dfa(&w(rep)).map_err(err)?;
        let ok = d.equivalent(&compile(re).map_err(err)?).map_err(err)?;
        passed &= ok;
        detail.push(format!("{} [{rep}]_{c} = {re}", if ok { "ok " } else { "BAD" }));
    }
    Ok(Outcome::new(passed, "three classes", detail))
}

fn sigma2_generator(opts: &Options) -> Result<Outcome, String> {
    let len = if opts.quick { 5 } else { 7 };
    let g2 = syntactic_of_class(&CongruenceId::Beta, &w("atab^2")).map_err(err)?;
    let s2 = satisfies(&g2, &sigma_pair(2)).map_err(err)?;
    let s1 = satisfies(&g2, &sigma_pair(1)).map_err(err)?;
    let st = stability_check(&g2, &CongruenceId::Beta, &w("atb^2a"), len).map_err(err)?;
    let ok = [s2.passed(), !s1.passed(), st == Verdict::HoldsUpToBound(len)];
    let detail = vec![
        format!("G2 has {} elements", g2.size()),
        verdict_line("sigma pair 2", &s2, ok[0]),
        verdict_line("sigma pair 1", &s1, ok[1]),
        verdict_line(&format!("stability of [atb^2a]_beta at length {len}"), &st, ok[2]),
    ];
    Ok(Outcome::new(ok.iter().all(|&b| b), format!("|G2| = {}", g2.size()), detail))
}

fn onto_checks(opts: &Options) -> Result<Outcome, String> {
    let meet = CongruenceId::meet([CongruenceId::T1, CongruenceId::Gamma]);
    let cases = [(meet, "ata", 10, 5), (CongruenceId::T1, "ab", 5, 5), (CongruenceId::Alpha, "ab", 6, 5)];
    let mut passed = true;
    let mut detail = Vec::new();
    let mut sizes = Vec::new();
    for (c, rep, want_src, want_tgt) in cases {
        let r = onto_synt_check(&c, &w(rep)).map_err(err)?;
        let (src, tgt) = (r.source.size(), r.target.size());
        let mut ok = r.passed() && src == want_src && tgt == want_tgt;
        let mut line = format!("[{rep}]_{c}: {src} -> {tgt} (expected {want_src} -> {want_tgt}), onto {}", r.passed());
        if c == CongruenceId::T1 {
            let a01 = opts.monoid("A01").map_err(err)?;
            let iso_a01 = morphism_search(&r.target, &a01, HomKind::Iso).is_some();
            ok &= r.is_iso && iso_a01;
            line.push_str(&format!(", iso {}, target iso to A01 {iso_a01}", r.is_iso));
        }
        passed &= ok;
        sizes.push(format!("{src}->{tgt}"));
        detail.push(format!("{} {line}", if ok { "ok " } else { "BAD" }));
    }
    Ok(Outcome::new(passed, sizes.join(", "), detail))
}

fn premises(opts: &Options) -> Result<Outcome, String> {
    let (n_max, len) = if opts.quick { (2, 5) } else { (3, 7) };
    let meet = CongruenceId::meet([CongruenceId::T1, CongruenceId::Gamma]);
    let first = syntactic_of_class(&meet, &w("ab^2ta")).map_err(err)?;
    let g2 = syntactic_of_class(&CongruenceId::Beta, &w("atab^2")).map_err(err)?;
    let m = MonoidProduct::new(vec![first, g2]);
    let direct = nfb_premises(&m, n_max, len).map_err(err)?;
    let dual = nfb_premises_dual(&m.opposite(), n_max, len).map_err(err)?;
    let mut detail = vec![format!("factor sizes {:?}, n_max {n_max}, length {len}", sizes_of(&m))];
    for (name, r) in [("direct", &direct), ("dual", &dual)] {
        detail.extend(r.to_string().lines().map(|l| format!("{name} {l}")));
    }
    let passed = direct.passed() && dual.passed();
    Ok(Outcome::new(passed, format!("direct: {}; dual: {}", direct.conclusion(), dual.conclusion()), detail))
}

fn sizes_of<F: Factors + ?Sized>(m: &F) -> Vec<usize> {
    m.factors().iter().map(|f| f.size()).collect()
}

/// Generator monoids of the comparison table, rows 1 to 9.
pub fn table_generators() -> Result<Vec<(usize, MonoidProduct)>, String> {
    let class = |c: &str, rep: &str| syntactic_of_class(&cong(c), &w(rep)).map_err(err);
    let word = |rep: &str| syntactic_of_word(&w(rep));
    Ok(vec![
        (1, MonoidProduct::new(vec![word("abtbsa"), word("atbsba")])),
        (2, MonoidProduct::new(vec![word("atbasb")])),
        (3, MonoidProduct::new(vec![class("t1^zeta", "atbasb")?])),
        (4, MonoidProduct::new(vec![class("t1^zeta", "atb^2a")?])),
        (5, MonoidProduct::new(vec![class("t1^gamma", "atb^2a")?, class("t1^gamma", "ab^2ta")?])),
        (6, MonoidProduct::new(vec![class("t1^gamma", "atb^2a")?, class("beta-dual", "ab^2ta")?])),
        (7, MonoidProduct::new(vec![class("beta", "atb^2a")?, class("beta-dual", "ab^2ta")?, class("t1", "ab")?])),
        (8, MonoidProduct::new(vec![class("zeta", "atbsba")?])),
        (9, MonoidProduct::new(vec![class("zeta", "atb^2a")?])),
    ])
}

fn table_rows(opts: &Options) -> Result<Outcome, String> {
    let (letters, len) = if opts.quick { (3, 6) } else { (4, 8) };
    let rows = table_generators()?;
    let mut passed = true;
    let mut detail = Vec::new();
    for (row, m) in &rows {
        let ok = m.is_valid();
        passed &= ok;
        detail.push(format!("{} row {row}: factor sizes {:?}, valid {ok}", if ok { "ok " } else { "BAD" }, sizes_of(m)));
    }
    let get = |row: usize| &rows.iter().find(|(r, _)| *r == row).expect("rows 1 to 9").1;
    for (i, j) in [(2, 4), (4, 6), (2, 6)] {
        let sep = equational_separation(get(i), get(j), letters, len).map_err(err)?;
        passed &= sep.is_some();
        match sep {
            Some(s) => detail.push(format!("ok  rows {i}/{j}: {s}")),
            None => detail.push(format!("BAD rows {i}/{j}: no separating identity within ({letters}, {len})")),
        }
    }
    Ok(Outcome::new(passed, format!("9 rows, separation at ({letters} letters, length {len})"), detail))
}

/// A property check returning its failures.
type Property = fn(&Options, &mut ChaCha8Rng) -> Result<Vec<String>, String>;

fn properties(opts: &Options) -> Result<Outcome, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let checks: [(&str, Property); 7] = [
        ("equivalence and compatibility laws", prop_laws),
        ("class automaton vs enumeration", prop_dfa_enumeration),
        ("dual law", prop_dual),
        ("product law", prop_product),
        ("homomorphism preservation", prop_hom),
        ("two classes observation", prop_two_classes),
        ("beta exactness on E1", prop_beta_e1),
    ];
    let mut passed = true;
    let mut detail = Vec::new();
    for (name, check) in checks {
        let failures = check(opts, &mut rng)?;
        passed &= failures.is_empty();
        detail.push(format!("{} {name}", if failures.is_empty() { "ok " } else { "BAD" }));
        detail.extend(failures.into_iter().take(3).map(|f| format!("    {f}")));
    }
    Ok(Outcome::new(passed, "seven suites", detail))
}

fn all_congruences() -> Vec<CongruenceId> {
    ["t1", "gamma", "alpha", "zeta", "beta", "beta-dual", "simq", "t1^gamma", "t1^zeta"].map(cong).to_vec()
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &[Letter], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect())
}

fn prop_laws(opts: &Options, rng: &mut ChaCha8Rng) -> Result<Vec<String>, String> {
    let alphabet = parse_alphabet("abt").map_err(err)?;
    let samples = if opts.quick { 20 } else { 60 };
    let mut failures = Vec::new();
    for c in all_congruences() {
        for _ in 0..samples {
            let u = random_word(rng, &alphabet, 6);
            let class = c.enumerate_class(&u, u.len() + 1);
            if !class.contains(&u) || !c.equivalent(&u, &u) {
                failures.push(format!("{c}: {u} not in its own class"));
                continue;
            }
            let v = &class[rng.gen_range(0..class.len())];
            let x = &class[rng.gen_range(0..class.len())];
            if !c.equivalent(v, &u) || !c.equivalent(v, x) {
                failures.push(format!("{c}: symmetry or transitivity fails for {u}, {v}, {x}"));
            }
            let (p, q) = (random_word(rng, &alphabet, 3), random_word(rng, &alphabet, 3));
            if !c.equivalent(&p.concat(&u).concat(&q), &p.concat(v).concat(&q)) {
                failures.push(format!("{c}: {u} ~ {v} but not after wrapping in {p} _ {q}"));
            }
        }
    }
    Ok(failures)
}

fn prop_dfa_enumeration(opts: &Options, _: &mut ChaCha8Rng) -> Result<Vec<String>, String> {
    let reps = if opts.quick { vec!["ab", "ata", "ab^2ta"] } else { vec!["ab", "ata", "abab", "ab^2ta", "atb^2a"] };
    let mut failures = Vec::new();
    for c in all_congruences() {
        for rep in &reps {
            let rep = w(rep);
            let len = if opts.quick { rep.len() + 2 } else { 2 * rep.len() + 2 };
            let d = c.class_dfa(&rep).map_err(err)?;
            let from_dfa: BTreeSet<Word> = d.words_up_to(len).into_iter().collect();
            let listed: BTreeSet<Word> = c.enumerate_class(&rep, len).into_iter().collect();
            if from_dfa != listed {
                failures.push(format!("{c} [{rep}] disagrees up to length {len}"));
            }
        }
    }
    Ok(failures)
}

fn prop_dual(opts: &Options, rng: &mut ChaCha8Rng) -> Result<Vec<String>, String> {
    let alphabet = parse_alphabet("abt").map_err(err)?;
    let samples = if opts.quick { 100 } else { 400 };
    let mut failures = Vec::new();
    for c in all_congruences() {
        let Some(d) = c.dual() else { continue };
        for _ in 0..samples {
            let u = random_word(rng, &alphabet, 7);
            let class = c.enumerate_class(&u, u.len());
            let v = if rng.gen_bool(0.5) { class[rng.gen_range(0..class.len())].clone() } else { random_word(rng, &alphabet, 7) };
            if d.equivalent(&u.reverse(), &v.reverse()) != c.equivalent(&u, &v) {
                failures.push(format!("{c}: dual disagrees on {u}, {v}"));
            }
        }
    }
    let vars = parse_alphabet("xyt").map_err(err)?;
    for name in ["A1", "E1", "Q1", "L21"] {
        let m = opts.monoid(name).map_err(err)?;
        let op = m.opposite();
        for _ in 0..samples / 4 {
            let id = random_identity(rng, &vars, 5);
            if satisfies(&op, &id).map_err(err)?.passed() != satisfies(&m, &id.reverse()).map_err(err)?.passed() {
                failures.push(format!("opposite of {name} disagrees on {id}"));
            }
        }
    }
    Ok(failures)
}

fn random_identity(rng: &mut ChaCha8Rng, alphabet: &[Letter], max_len: usize) -> Identity {
    Identity::new(random_word(rng, alphabet, max_len), random_word(rng, alphabet, max_len))
}

fn prop_product(opts: &Options, rng: &mut ChaCha8Rng) -> Result<Vec<String>, String> {
    let vars = parse_alphabet("xyt").map_err(err)?;
    let names = ["A1", "E1", "A01", "B01", "Q1", "L21"];
    let samples = if opts.quick { 40 } else { 150 };
    let mut failures = Vec::new();
    for _ in 0..samples {
        let id = random_identity(rng, &vars, 5);
        let m = opts.monoid(names[rng.gen_range(0..names.len())]).map_err(err)?;
        let n = opts.monoid(names[rng.gen_range(0..names.len())]).map_err(err)?;
        let each = satisfies(&m, &id).map_err(err)?.passed() && satisfies(&n, &id).map_err(err)?.passed();
        let product = MonoidProduct::new(vec![m, n]);
        let componentwise = satisfies(&product, &id).map_err(err)?.passed();
        let table = satisfies(&product.materialize(), &id).map_err(err)?.passed();
        if each != componentwise || each != table {
            failures.push(format!("{id}: factors {each}, componentwise {componentwise}, table {table}"));
        }
    }
    Ok(failures)
}

fn prop_hom(opts: &Options, rng: &mut ChaCha8Rng) -> Result<Vec<String>, String> {
    let vars = parse_alphabet("xyt").map_err(err)?;
    let samples = if opts.quick { 40 } else { 150 };
    let mut failures = Vec::new();
    for (c, rep) in [("t1", "ab"), ("alpha", "ab"), ("t1^gamma", "ata")] {
        let r = onto_synt_check(&cong(c), &w(rep)).map_err(err)?;
        let Some(h) = &r.hom else {
            failures.push(format!("[{rep}]_{c}: no surjection"));
            continue;
        };
        if !h.is_hom(&r.source, &r.target) || !h.is_onto(&r.target) {
            failures.push(format!("[{rep}]_{c}: map is not a surjective homomorphism"));
        }
        for _ in 0..samples {
            let id = random_identity(rng, &vars, 5);
            if satisfies(&r.source, &id).map_err(err)?.passed() && !satisfies(&r.target, &id).map_err(err)?.passed() {
                failures.push(format!("[{rep}]_{c}: {id} holds in the source but not in the image"));
            }
        }
    }
    Ok(failures)
}

fn prop_two_classes(opts: &Options, _: &mut ChaCha8Rng) -> Result<Vec<String>, String> {
    let len = if opts.quick { 6 } else { 8 };
    let (u, u2) = (w("atab^2"), w("atbab^2"));
    let q: BTreeSet<Word> = CongruenceId::SimQ.enumerate_class(&u, len).into_iter().collect();
    let b1: BTreeSet<Word> = CongruenceId::Beta.enumerate_class(&u, len).into_iter().collect();
    let b2: BTreeSet<Word> = CongruenceId::Beta.enumerate_class(&u2, len).into_iter().collect();
    let mut failures = Vec::new();
    if !b1.is_disjoint(&b2) {
        failures.push("the two beta classes overlap".to_string());
    }
    if q != b1.union(&b2).cloned().collect() {
        failures.push(format!("[{u}]_simq is not the union of [{u}]_beta and [{u2}]_beta up to length {len}"));
    }
    Ok(failures)
}

/// Words over at most three letters, grouped by their term function on
/// `E1`, must be grouped exactly as by `β`.
fn prop_beta_e1(opts: &Options, _: &mut ChaCha8Rng) -> Result<Vec<String>, String> {
    let len = if opts.quick { 4 } else { 6 };
    let e1 = opts.monoid("E1").map_err(err)?;
    let vars = parse_alphabet("xyz").map_err(err)?;
    let n = e1.size();
    let assignments: Vec<BTreeMap<Letter, usize>> = (0..n * n * n)
        .map(|i| vars.iter().zip([i / (n * n), i / n % n, i % n]).map(|(&l, v)| (l, v)).collect())
        .collect();
    let mut by_term: HashMap<Vec<usize>, Word> = HashMap::new();
    let mut by_beta: HashMap<_, Word> = HashMap::new();
    let mut failures = Vec::new();
    for u in words_up_to(&vars, len) {
        let term = assignments.iter().map(|a| e1.eval_word(a, &u)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        let t = by_term.entry(term).or_insert_with(|| u.clone()).clone();
        let b = by_beta.entry(CongruenceId::Beta.canonical(&u)).or_insert_with(|| u.clone()).clone();
        if t != b {
            failures.push(format!("{u}: same term function as {t}, same beta class as {b}"));
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_fixture_fails_its_rows() {
        let e1 = fixture("E1").unwrap();
        let bad = e1.clone().with_entry(1, 1, 0);
        let opts = Options::quick().with_override("E1", bad);
        assert!(!run_criterion(1, &opts).passed);
        assert!(!run_criterion(4, &opts).passed);
        assert!(run_criterion(3, &opts).passed);
    }

    #[test]
    fn table_rows_are_valid() {
        let rows = table_generators().unwrap();
        assert_eq!(rows.len(), 9);
        assert!(rows.iter().all(|(_, m)| m.is_valid()));
    }
}
