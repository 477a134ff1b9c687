//! Monoid sources named on the command line.
//!
//! ```text
//! fixture:NAME        named fixture (A1, E1, ...)
//! class:CONG:REP      syntactic monoid of a congruence class
//! word:W              syntactic monoid of {W}
//! regex:RE            syntactic monoid of a regular language
//! mtau:CONG:REP       M_tau of a single class
//! dual:SOURCE         opposite monoid
//! PATH                JSON table
//! ```

use std::fs;

use synmon::mtau::{m_tau, WSpec, DEFAULT_CAP};
use synmon::synt::{syntactic_monoid_open, syntactic_of_class, syntactic_of_word};
use synmon::{automata, monoid, CongruenceId, FiniteMonoid, Word};

pub fn load(spec: &str) -> Result<FiniteMonoid, String> {
    let (kind, rest) = spec.split_once(':').unwrap_or(("", spec));
    match kind {
        "fixture" => monoid::fixture(rest).map_err(|e| e.to_string()),
        "class" | "mtau" => {
            let (c, rep) = rest.split_once(':').ok_or_else(|| format!("expected {kind}:CONG:REP, got {spec}"))?;
            let cong: CongruenceId = c.parse().map_err(|e| format!("{e}"))?;
            let rep = Word::parse(rep).map_err(|e| e.to_string())?;
            if kind == "class" {
                syntactic_of_class(&cong, &rep).map_err(|e| e.to_string())
            } else {
                m_tau(&WSpec::SingleClass { cong, rep }, DEFAULT_CAP).map_err(|e| e.to_string())
            }
        }
        "word" => Ok(syntactic_of_word(&Word::parse(rest).map_err(|e| e.to_string())?)),
        "regex" => Ok(syntactic_monoid_open(&automata::compile(rest).map_err(|e| e.to_string())?)),
        "dual" => Ok(load(rest)?.opposite()),
        _ => {
            let text = fs::read_to_string(spec).map_err(|e| format!("cannot read {spec}: {e}"))?;
            FiniteMonoid::from_json(&text).map_err(|e| format!("{spec}: {e}"))
        }
    }
}

pub fn load_all(specs: &[String]) -> Result<Vec<FiniteMonoid>, String> {
    specs.iter().map(|s| load(s)).collect()
}
