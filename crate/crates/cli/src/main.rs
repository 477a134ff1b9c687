//! `synmon`: command-line front end to the workbench.
//!
//! Exit status: 0 on success or when a checked property holds, 1 when it
//! fails (a witness is printed), 2 on usage or input errors.

mod source;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use synmon::automata::{compile, Dfa, Regex};
use synmon::identity::{
    equational_separation, long_pair, nfb_premises, nfb_premises_dual, satisfies, sigma_pair, stability_check,
    tau_term_check,
};
use synmon::monoid::{adjoin_identity, direct_product, MonoidProduct, Presentation};
use synmon::mtau::{m_tau, onto_synt_check, relatively_free, WSpec};
use synmon::repro::{run_all, run_criterion, Options, Report};
use synmon::synt::{syntactic_monoid, syntactic_monoid_open, syntactic_of_class, syntactic_of_word};
use synmon::word::parse_alphabet;
use synmon::{CongruenceId, FiniteMonoid, Identity, Verdict, Word};

#[derive(Parser)]
#[command(name = "synmon", version, about = "Word congruences, syntactic monoids and identities")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Word statistics and decompositions.
    #[command(subcommand)]
    Word(WordCmd),
    /// Congruence classes and canonical forms.
    #[command(subcommand)]
    Cong(CongCmd),
    /// Regular expressions.
    #[command(subcommand)]
    Regex(RegexCmd),
    /// Finite monoids as tables.
    #[command(subcommand)]
    Monoid(MonoidCmd),
    /// Syntactic monoids.
    #[command(subcommand)]
    Synt(SyntCmd),
    /// Rees quotients of free monoids modulo a congruence.
    #[command(subcommand)]
    Mtau(MtauCmd),
    /// Identity checks.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Reproduction table.
    #[command(subcommand)]
    Repro(ReproCmd),
}

#[derive(Subcommand)]
enum WordCmd {
    /// Content split into simple and multiple letters.
    Stats { word: String },
    /// Skeleton of simple letters and the blocks between them.
    Blocks { word: String },
    /// Block-simple and xy-limited tests.
    Classify { word: String },
    /// First two occurrences of each letter.
    Ini2 { word: String },
}

#[derive(Subcommand)]
enum CongCmd {
    /// Exit 0 when the words are congruent, 1 otherwise.
    Eq { cong: String, u: String, v: String },
    /// Canonical form of a word.
    Canon { cong: String, word: String },
    /// Members of a class over the content of the representative.
    Enumerate {
        cong: String,
        rep: String,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Minimal automaton of a class.
    Dfa { cong: String, rep: String },
}

#[derive(Subcommand)]
enum RegexCmd {
    /// Minimal automaton of a regular expression.
    Compile { regex: String },
    /// Exit 0 when both denote the same language, 1 with a distinguishing word otherwise.
    Eq { left: String, right: String },
}

#[derive(Subcommand)]
enum MonoidCmd {
    /// A named fixture.
    Fixture { name: String },
    /// Semigroup given by a presentation, e.g. `--gens ab --rels "a^2=a, b^2=b, ab=0"`.
    Present {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        rels: String,
        #[arg(long, default_value_t = 1000)]
        cap: usize,
        /// Adjoin a fresh identity element.
        #[arg(long)]
        adjoin_identity: bool,
    },
    /// Direct product of the given monoids.
    Product {
        #[arg(required = true, num_args = 2..)]
        sources: Vec<String>,
    },
    /// Opposite monoid.
    Dual { source: String },
    /// Associativity, identity and zero laws; exit 1 on a violation.
    Validate { source: String },
}

#[derive(Subcommand)]
enum SyntCmd {
    /// Syntactic monoid of a regular language.
    Regex {
        regex: String,
        /// Use the regex's own alphabet only, without the zero contributed by foreign letters.
        #[arg(long)]
        closed: bool,
    },
    /// Syntactic monoid of a congruence class.
    Class { cong: String, rep: String },
    /// Syntactic monoid of a one-word language.
    Word { word: String },
}

#[derive(Args)]
struct CapArg {
    #[arg(long, default_value_t = synmon::mtau::DEFAULT_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum MtauCmd {
    /// M_tau of a single class, given as `--cong C --rep W` or `--class C:W`.
    Class {
        #[arg(long, requires = "rep")]
        cong: Option<String>,
        #[arg(long, requires = "cong")]
        rep: Option<String>,
        #[arg(long = "class", conflicts_with_all = ["cong", "rep"], required_unless_present = "cong")]
        spec: Option<String>,
        #[command(flatten)]
        cap: CapArg,
    },
    /// M_tau of all words over an alphabet (`--cong C --alphabet A` or `--star C:A`),
    /// or of those satisfying a predicate (`--pred C:xy-limited:A`).
    Star {
        #[arg(long, requires = "alphabet")]
        cong: Option<String>,
        #[arg(long, requires = "cong")]
        alphabet: Option<String>,
        #[arg(long = "star", conflicts_with_all = ["cong", "alphabet", "pred"])]
        star: Option<String>,
        #[arg(long = "pred", conflicts_with_all = ["cong", "alphabet"])]
        pred: Option<String>,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Free monoid over an alphabet modulo the congruence.
    Free {
        #[arg(long)]
        cong: String,
        #[arg(long)]
        alphabet: String,
        #[command(flatten)]
        cap: CapArg,
    },
    /// Search a surjection from M_tau of a class onto its syntactic monoid.
    OntoCheck {
        #[arg(long)]
        cong: String,
        #[arg(long)]
        rep: String,
    },
}

#[derive(Args)]
struct MonoidArgs {
    /// Monoid source; repeat for a direct product evaluated componentwise.
    #[arg(long = "monoid", required = true)]
    monoids: Vec<String>,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Satisfaction of one identity `u ~ v`.
    Id {
        #[command(flatten)]
        m: MonoidArgs,
        identity: String,
    },
    /// Satisfaction of every identity in a list.
    Basis {
        #[command(flatten)]
        m: MonoidArgs,
        #[arg(required = true)]
        identities: Vec<String>,
    },
    /// The n-th member of the sigma family.
    Sigma {
        #[command(flatten)]
        m: MonoidArgs,
        #[arg(long)]
        n: usize,
    },
    /// The n-th long identity.
    Long {
        #[command(flatten)]
        m: MonoidArgs,
        #[arg(long)]
        n: usize,
    },
    /// Whether a word is a term for the congruence, up to a length bound.
    TauTerm {
        #[command(flatten)]
        m: MonoidArgs,
        #[arg(long)]
        cong: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 7)]
        max_len: usize,
    },
    /// Whether a class is stable, up to a length bound.
    Stable {
        #[command(flatten)]
        m: MonoidArgs,
        #[arg(long)]
        cong: String,
        #[arg(long)]
        rep: String,
        #[arg(long, default_value_t = 7)]
        max_len: usize,
    },
    /// Search an identity holding in one monoid and failing in the other.
    Separate {
        #[arg(long = "monoid", required = true)]
        first: Vec<String>,
        #[arg(long = "other", required = true)]
        second: Vec<String>,
        #[arg(long, default_value_t = 4)]
        letters: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Premises of the non-finite-basis criterion, at bounds.
    Nfb {
        #[command(flatten)]
        m: MonoidArgs,
        /// Check the mirrored premises.
        #[arg(long)]
        dual: bool,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 7)]
        len_max: usize,
    },
}

#[derive(Subcommand)]
enum ReproCmd {
    /// Run every acceptance check and print the table.
    Paper {
        /// Smaller bounds.
        #[arg(long)]
        quick: bool,
        /// Run a single criterion.
        #[arg(long)]
        only: Option<usize>,
        /// Replace a fixture entry before running: `NAME:ROW,COL,VALUE` (0-based indices).
        #[arg(long)]
        corrupt: Vec<String>,
    },
}

/// A command outcome: exit status plus what to print on stdout.
struct Done {
    ok: bool,
    text: String,
}

impl Done {
    fn ok(text: impl Into<String>) -> Done {
        Done { ok: true, text: text.into() }
    }

    fn verdict(ok: bool, text: impl Into<String>) -> Done {
        Done { ok, text: text.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, cli.json) {
        Ok(done) => {
            let mut out = std::io::stdout().lock();
            let newline = if done.text.ends_with('\n') { "" } else { "\n" };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = write!(out, "{}{newline}", done.text).and_then(|_| out.flush());
            if done.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn word(text: &str) -> Result<Word, String> {
    Word::parse(text).map_err(s)
}

fn cong(text: &str) -> Result<CongruenceId, String> {
    text.parse().map_err(s)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn letters<'a>(it: impl IntoIterator<Item = &'a synmon::Letter>) -> Vec<String> {
    it.into_iter().map(|l| l.to_string()).collect()
}

fn show_monoid(m: &FiniteMonoid, json: bool) -> String {
    if json {
        m.to_json()
    } else {
        format!("{} elements\n{m}", m.size())
    }
}

fn show_dfa(d: &Dfa, json: bool) -> String {
    let dump = d.dump();
    if json {
        return pretty(&serde_json::to_value(&dump).expect("serializable"));
    }
    let mut out = format!("{} states, start {}, accepting {:?}\n", dump.states, dump.start, dump.accepting);
    out += &format!("     {}\n", letters(&dump.alphabet).join(" "));
    for (q, row) in dump.transitions.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|t| t.to_string()).collect();
        out += &format!("{q:>4} {}\n", cells.join(" "));
    }
    out
}

fn show_verdict(what: &str, v: &Verdict, json: bool) -> Done {
    let text = if json {
        let mut value = v.to_json();
        value["check"] = json!(what);
        pretty(&value)
    } else {
        format!("{what}: {v}\n")
    };
    Done::verdict(v.passed(), text)
}

/// Notes the candidate space of a bounded term or stability check.
fn bounded(mut done: Done, u: &Word, max_len: usize, json: bool) -> Done {
    let content: String = letters(&u.content()).concat();
    if json {
        let mut v: serde_json::Value = serde_json::from_str(&done.text).expect("own output");
        v["candidates"] = json!({ "alphabet": content, "max_len": max_len });
        done.text = pretty(&v);
    } else {
        done.text += &format!("candidates: words over {{{content}}} up to length {max_len}\n");
    }
    done
}

fn run(command: Command, json: bool) -> Result<Done, String> {
    match command {
        Command::Word(c) => run_word(c, json),
        Command::Cong(c) => run_cong(c, json),
        Command::Regex(c) => run_regex(c, json),
        Command::Monoid(c) => run_monoid(c, json),
        Command::Synt(c) => run_synt(c, json),
        Command::Mtau(c) => run_mtau(c, json),
        Command::Check(c) => run_check(c, json),
        Command::Repro(c) => run_repro(c, json),
    }
}

fn run_word(c: WordCmd, json: bool) -> Result<Done, String> {
    match c {
        WordCmd::Stats { word: text } => {
            let u = word(&text)?;
            let st = u.stats();
            let (content, simple, multiple) = (letters(&st.content), letters(&st.simple), letters(&st.multiple));
            Ok(Done::ok(if json {
                pretty(&json!({ "word": u.to_string(), "length": u.len(), "content": content, "simple": simple, "multiple": multiple }))
            } else {
                format!(
                    "length {}\ncontent {}\nsimple {}\nmultiple {}\n",
                    u.len(),
                    content.join(" "),
                    simple.join(" "),
                    multiple.join(" ")
                )
            }))
        }
        WordCmd::Blocks { word: text } => {
            let b = word(&text)?.blocks();
            let blocks: Vec<String> = b.blocks.iter().map(|x| x.to_string()).collect();
            Ok(Done::ok(if json {
                pretty(&json!({ "skeleton": letters(&b.skeleton), "blocks": blocks }))
            } else {
                let shown: Vec<String> = blocks.iter().map(|x| if x.is_empty() { "1".into() } else { x.clone() }).collect();
                format!("skeleton {}\nblocks {}\n", letters(&b.skeleton).join(" "), shown.join(" | "))
            }))
        }
        WordCmd::Classify { word: text } => {
            let u = word(&text)?;
            let (bs, xy) = (u.is_block_simple(), u.is_xy_limited());
            Ok(Done::ok(if json {
                pretty(&json!({ "block_simple": bs, "xy_limited": xy }))
            } else {
                format!("block-simple {bs}\nxy-limited {xy}\n")
            }))
        }
        WordCmd::Ini2 { word: text } => {
            let v = word(&text)?.ini2();
            Ok(Done::ok(if json { pretty(&json!({ "ini2": v.to_string() })) } else { format!("{v}\n") }))
        }
    }
}

fn run_cong(c: CongCmd, json: bool) -> Result<Done, String> {
    match c {
        CongCmd::Eq { cong: name, u, v } => {
            let (c, u, v) = (cong(&name)?, word(&u)?, word(&v)?);
            let eq = c.equivalent(&u, &v);
            let text = if json {
                pretty(&json!({ "equivalent": eq, "left": c.canonical(&u).to_string(), "right": c.canonical(&v).to_string() }))
            } else if eq {
                format!("equivalent under {c}\n")
            } else {
                format!("not equivalent under {c}: {} vs {}\n", c.canonical(&u), c.canonical(&v))
            };
            Ok(Done::verdict(eq, text))
        }
        CongCmd::Canon { cong: name, word: text } => {
            let form = cong(&name)?.canonical(&word(&text)?).to_string();
            Ok(Done::ok(if json { pretty(&json!({ "canonical": form })) } else { format!("{form}\n") }))
        }
        CongCmd::Enumerate { cong: name, rep, max_len } => {
            let members: Vec<String> =
                cong(&name)?.enumerate_class(&word(&rep)?, max_len).iter().map(|x| x.to_string()).collect();
            Ok(Done::ok(if json {
                pretty(&json!({ "count": members.len(), "members": members }))
            } else {
                format!("{} words\n{}\n", members.len(), members.join("\n"))
            }))
        }
        CongCmd::Dfa { cong: name, rep } => {
            let d = cong(&name)?.class_dfa(&word(&rep)?).map_err(s)?;
            Ok(Done::ok(show_dfa(&d, json)))
        }
    }
}

fn run_regex(c: RegexCmd, json: bool) -> Result<Done, String> {
    match c {
        RegexCmd::Compile { regex } => Ok(Done::ok(show_dfa(&compile(&regex).map_err(s)?, json))),
        RegexCmd::Eq { left, right } => {
            let (l, r) = (Regex::parse(&left).map_err(s)?, Regex::parse(&right).map_err(s)?);
            let alphabet: Vec<_> = l.alphabet().union(&r.alphabet()).copied().collect();
            let (a, b) = (Dfa::compile_over(&l, alphabet.clone()), Dfa::compile_over(&r, alphabet));
            let only_left = a.intersect_witness(&b.complement()).map_err(s)?;
            let only_right = b.intersect_witness(&a.complement()).map_err(s)?;
            let (eq, text) = match (only_left, only_right) {
                (None, None) => (true, "equal\n".to_string()),
                (Some(x), _) => (false, format!("differ: {} is only in the left language\n", show_word(&x))),
                (None, Some(x)) => (false, format!("differ: {} is only in the right language\n", show_word(&x))),
            };
            Ok(Done::verdict(eq, if json { pretty(&json!({ "equal": eq, "detail": text.trim_end() })) } else { text }))
        }
    }
}

fn show_word(u: &Word) -> String {
    if u.is_empty() {
        "the empty word".into()
    } else {
        u.to_string()
    }
}

fn run_monoid(c: MonoidCmd, json: bool) -> Result<Done, String> {
    match c {
        MonoidCmd::Fixture { name } => Ok(Done::ok(show_monoid(&source::load(&format!("fixture:{name}"))?, json))),
        MonoidCmd::Present { gens, rels, cap, adjoin_identity: adjoin } => {
            let m = Presentation::parse(&gens, &rels).and_then(|p| p.build(cap)).map_err(s)?;
            let m = if adjoin { adjoin_identity(&m) } else { m };
            Ok(Done::ok(show_monoid(&m, json)))
        }
        MonoidCmd::Product { sources } => {
            let ms = source::load_all(&sources)?;
            let p = ms[1..].iter().fold(ms[0].clone(), |acc, m| direct_product(&acc, m));
            Ok(Done::ok(show_monoid(&p, json)))
        }
        MonoidCmd::Dual { source: src } => Ok(Done::ok(show_monoid(&source::load(&src)?.opposite(), json))),
        MonoidCmd::Validate { source: src } => {
            let m = source::load(&src)?;
            let r = m.validate();
            let text = if json {
                pretty(&json!({
                    "valid": r.is_valid(),
                    "non_associative": r.associativity.len(),
                    "identity_violations": r.identity.len(),
                    "zero_violations": r.zero.len(),
                }))
            } else if r.is_valid() {
                format!("valid: {} elements\n", m.size())
            } else {
                let mut t = String::from("invalid\n");
                if let Some(&(x, y, z)) = r.associativity.first() {
                    let (lx, ly, lz) = (m.label(x), m.label(y), m.label(z));
                    t += &format!("({lx}·{ly})·{lz} != {lx}·({ly}·{lz}) and {} more\n", r.associativity.len() - 1);
                }
                if !r.identity.is_empty() {
                    t += &format!("identity law fails at {} elements\n", r.identity.len());
                }
                if !r.zero.is_empty() {
                    t += &format!("zero law fails at {} elements\n", r.zero.len());
                }
                t
            };
            Ok(Done::verdict(r.is_valid(), text))
        }
    }
}

fn run_synt(c: SyntCmd, json: bool) -> Result<Done, String> {
    let m = match c {
        SyntCmd::Regex { regex, closed } => {
            let d = compile(&regex).map_err(s)?;
            if closed {
                syntactic_monoid(&d)
            } else {
                syntactic_monoid_open(&d)
            }
        }
        SyntCmd::Class { cong: name, rep } => syntactic_of_class(&cong(&name)?, &word(&rep)?).map_err(s)?,
        SyntCmd::Word { word: text } => syntactic_of_word(&word(&text)?),
    };
    Ok(Done::ok(show_monoid(&m, json)))
}

fn run_mtau(c: MtauCmd, json: bool) -> Result<Done, String> {
    let m = match c {
        MtauCmd::Class { cong, rep, spec, cap } => {
            let text = spec.unwrap_or_else(|| format!("{}:{}", cong.unwrap_or_default(), rep.unwrap_or_default()));
            m_tau(&WSpec::parse("class", &text).map_err(s)?, cap.cap).map_err(s)?
        }
        MtauCmd::Star { cong, alphabet, star, pred, cap } => {
            let spec = match (cong.zip(alphabet), star, pred) {
                (Some((c, a)), None, None) => WSpec::parse("star", &format!("{c}:{a}")),
                (None, Some(text), None) => WSpec::parse("star", &text),
                (None, None, Some(text)) => WSpec::parse("pred", &text),
                _ => return Err("give --cong and --alphabet, or --star, or --pred".into()),
            }
            .map_err(s)?;
            m_tau(&spec, cap.cap).map_err(s)?
        }
        MtauCmd::Free { cong: name, alphabet, cap } => {
            relatively_free(&cong(&name)?, &parse_alphabet(&alphabet).map_err(s)?, cap.cap).map_err(s)?
        }
        MtauCmd::OntoCheck { cong: name, rep } => {
            let r = onto_synt_check(&cong(&name)?, &word(&rep)?).map_err(s)?;
            let text = if json {
                pretty(&json!({
                    "source_size": r.source.size(),
                    "target_size": r.target.size(),
                    "onto": r.passed(),
                    "isomorphism": r.is_iso,
                    "map": r.hom.as_ref().map(|h| h.map.iter().enumerate()
                        .map(|(x, &y)| (r.source.label(x).to_string(), json!(r.target.label(y))))
                        .collect::<serde_json::Map<_, _>>()),
                }))
            } else {
                r.to_string()
            };
            return Ok(Done::verdict(r.passed(), text));
        }
    };
    Ok(Done::ok(show_monoid(&m, json)))
}

fn product(specs: &[String]) -> Result<MonoidProduct, String> {
    Ok(MonoidProduct::new(source::load_all(specs)?))
}

fn run_check(c: CheckCmd, json: bool) -> Result<Done, String> {
    match c {
        CheckCmd::Id { m, identity } => {
            let id = Identity::parse(&identity).map_err(s)?;
            let v = satisfies(&product(&m.monoids)?, &id).map_err(s)?;
            Ok(show_verdict(&id.to_string(), &v, json))
        }
        CheckCmd::Basis { m, identities } => {
            let p = product(&m.monoids)?;
            let mut ok = true;
            let mut lines = Vec::new();
            let mut values = Vec::new();
            for text in &identities {
                let id = Identity::parse(text).map_err(s)?;
                let v = satisfies(&p, &id).map_err(s)?;
                ok &= v.passed();
                lines.push(format!("{id}: {v}"));
                let mut value = v.to_json();
                value["check"] = json!(id.to_string());
                values.push(value);
            }
            let text = if json { pretty(&json!(values)) } else { lines.join("\n") + "\n" };
            Ok(Done::verdict(ok, text))
        }
        CheckCmd::Sigma { m, n } => {
            let id = sigma_pair(n);
            let v = satisfies(&product(&m.monoids)?, &id).map_err(s)?;
            Ok(show_verdict(&id.to_string(), &v, json))
        }
        CheckCmd::Long { m, n } => {
            if n == 0 {
                return Err("the long identities start at n = 1".into());
            }
            let id = long_pair(n);
            let v = satisfies(&product(&m.monoids)?, &id).map_err(s)?;
            Ok(show_verdict(&id.to_string(), &v, json))
        }
        CheckCmd::TauTerm { m, cong: name, word: text, max_len } => {
            let (c, u) = (cong(&name)?, word(&text)?);
            let v = tau_term_check(&product(&m.monoids)?, &u, &c, max_len).map_err(s)?;
            Ok(bounded(show_verdict(&format!("{u} is a {c}-term"), &v, json), &u, max_len, json))
        }
        CheckCmd::Stable { m, cong: name, rep, max_len } => {
            let (c, u) = (cong(&name)?, word(&rep)?);
            let v = stability_check(&product(&m.monoids)?, &c, &u, max_len).map_err(s)?;
            Ok(bounded(show_verdict(&format!("[{u}]_{c} is stable"), &v, json), &u, max_len, json))
        }
        CheckCmd::Separate { first, second, letters, max_len } => {
            let sep = equational_separation(&product(&first)?, &product(&second)?, letters, max_len).map_err(s)?;
            let text = match (&sep, json) {
                (Some(x), true) => pretty(&json!({
                    "separated": true,
                    "identity": x.identity.to_string(),
                    "holds_in": if x.holds_in_first { "first" } else { "second" },
                })),
                (None, true) => pretty(&json!({ "separated": false, "letters": letters, "max_len": max_len })),
                (Some(x), false) => format!("{x}\n"),
                (None, false) => format!("no separating identity with at most {letters} letters and length {max_len}\n"),
            };
            Ok(Done::verdict(sep.is_some(), text))
        }
        CheckCmd::Nfb { m, dual, n_max, len_max } => {
            let p = product(&m.monoids)?;
            let r = if dual { nfb_premises_dual(&p, n_max, len_max) } else { nfb_premises(&p, n_max, len_max) }.map_err(s)?;
            Ok(Done::verdict(r.passed(), if json { pretty(&r.to_json()) } else { r.to_string() }))
        }
    }
}

fn parse_corruption(text: &str) -> Result<(String, FiniteMonoid), String> {
    let bad = || format!("expected NAME:ROW,COL,VALUE, got {text}");
    let (name, rest) = text.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = rest.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
    let [x, y, v] = nums[..] else { return Err(bad()) };
    let m = synmon::monoid::fixture(name).map_err(s)?;
    if x >= m.size() || y >= m.size() || v >= m.size() {
        return Err(format!("{name} has only {} elements", m.size()));
    }
    Ok((name.to_string(), m.with_entry(x, y, v)))
}

fn run_repro(c: ReproCmd, json: bool) -> Result<Done, String> {
    let ReproCmd::Paper { quick, only, corrupt } = c;
    let mut opts = Options { quick, ..Options::default() };
    for text in &corrupt {
        let (name, m) = parse_corruption(text)?;
        opts = opts.with_override(&name, m);
    }
    let report = match only {
        Some(id) if !(1..=synmon::repro::CRITERIA).contains(&id) => {
            return Err(format!("criteria are numbered 1 to {}", synmon::repro::CRITERIA))
        }
        Some(id) => Report { rows: vec![run_criterion(id, &opts)], quick },
        None => run_all(&opts),
    };
    let text = if json {
        let rows: Vec<_> = report
            .rows
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "title": r.title,
                    "passed": r.passed,
                    "summary": r.summary,
                    "detail": r.detail,
                    "seconds": r.elapsed.as_secs_f64(),
                    "limit_seconds": r.limit.as_secs(),
                })
            })
            .collect();
        pretty(&json!({ "quick": quick, "rows": rows, "all_passed": report.all_passed() }))
    } else {
        report.to_string()
    };
    Ok(Done::verdict(report.all_passed(), text))
}
