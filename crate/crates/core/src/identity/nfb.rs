use std::fmt;

use serde_json::{json, Value};

use super::{long_pair, satisfies, stability_check, Identity, IdentityError, Verdict};
use crate::congruence::CongruenceId;
use crate::monoid::Factors;
use crate::word::{w, Word};

/// One checked premise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PremiseResult {
    pub description: String,
    pub verdict: Verdict,
}

/// Premises of the sufficient condition for non-finite basability, each
/// checked at a bound. Passing all of them is not a proof of anything
/// beyond the bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfbReport {
    pub dual: bool,
    /// (a) the long identities for `1 ≤ n ≤ n_max`.
    pub long: Vec<PremiseResult>,
    /// (b) stability of the `τ₁ ∧ γ` class.
    pub meet_class: PremiseResult,
    /// (c) stability of the `β` (or dual `β`) class.
    pub beta_class: PremiseResult,
}

impl NfbReport {
    pub fn passed(&self) -> bool {
        self.long.iter().all(|p| p.verdict.passed()) && self.meet_class.verdict.passed() && self.beta_class.verdict.passed()
    }

    pub fn long_passed(&self) -> bool {
        self.long.iter().all(|p| p.verdict.passed())
    }

    pub fn conclusion(&self) -> &'static str {
        if self.passed() {
            "premises verified at bound"
        } else {
            "premises not verified"
        }
    }

    pub fn to_json(&self) -> Value {
        let item = |p: &PremiseResult| json!({ "premise": p.description, "result": p.verdict.to_json() });
        json!({
            "dual": self.dual,
            "long_identities": self.long.iter().map(item).collect::<Vec<_>>(),
            "meet_class_stability": item(&self.meet_class),
            "beta_class_stability": item(&self.beta_class),
            "conclusion": self.conclusion(),
        })
    }
}

impl fmt::Display for NfbReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |v: &Verdict| if v.passed() { "PASS" } else { "FAIL" };
        for p in &self.long {
            writeln!(f, "(a) {} {}: {}", mark(&p.verdict), p.description, p.verdict)?;
        }
        writeln!(f, "(b) {} {}: {}", mark(&self.meet_class.verdict), self.meet_class.description, self.meet_class.verdict)?;
        writeln!(f, "(c) {} {}: {}", mark(&self.beta_class.verdict), self.beta_class.description, self.beta_class.verdict)?;
        writeln!(f, "conclusion: {}", self.conclusion())
    }
}

fn run<F: Factors + ?Sized>(
    m: &F,
    n_max: usize,
    len_max: usize,
    dual: bool,
) -> Result<NfbReport, IdentityError> {
    let long = (1..=n_max)
        .map(|n| {
            let id: Identity = if dual { long_pair(n).reverse() } else { long_pair(n) };
            let verdict = satisfies(m, &id)?;
            Ok(PremiseResult { description: format!("satisfies {id}"), verdict })
        })
        .collect::<Result<Vec<_>, IdentityError>>()?;
    let meet = CongruenceId::meet([CongruenceId::T1, CongruenceId::Gamma]);
    let (meet_rep, beta, beta_rep): (Word, CongruenceId, Word) = if dual {
        (w("atb^2a"), CongruenceId::BetaDual, w("ab^2ta"))
    } else {
        (w("ab^2ta"), CongruenceId::Beta, w("atb^2a"))
    };
    let stability = |c: &CongruenceId, rep: &Word| -> Result<PremiseResult, IdentityError> {
        Ok(PremiseResult {
            description: format!("[{rep}]_{c} stable up to length {len_max}"),
            verdict: stability_check(m, c, rep, len_max)?,
        })
    };
    Ok(NfbReport { dual, long, meet_class: stability(&meet, &meet_rep)?, beta_class: stability(&beta, &beta_rep)? })
}

/// Checks (a) the long identities for `1 ≤ n ≤ n_max`, (b) stability of
/// `[ab²ta]` under `τ₁ ∧ γ` and (c) stability of `[atb²a]` under `β`.
pub fn nfb_premises<F: Factors + ?Sized>(m: &F, n_max: usize, len_max: usize) -> Result<NfbReport, IdentityError> {
    run(m, n_max, len_max, false)
}

/// Mirror image of [`nfb_premises`]: reversed long identities, `[atb²a]`
/// under `τ₁ ∧ γ` and `[ab²ta]` under dual `β`.
pub fn nfb_premises_dual<F: Factors + ?Sized>(m: &F, n_max: usize, len_max: usize) -> Result<NfbReport, IdentityError> {
    run(m, n_max, len_max, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{fixture, FiniteMonoid};

    #[test]
    fn e1_satisfies_long_identities() {
        let r = nfb_premises(&fixture("E1").unwrap(), 3, 5).unwrap();
        assert!(r.long_passed());
    }

    #[test]
    fn trivial_monoid_fails_stability() {
        let r = nfb_premises(&FiniteMonoid::trivial(), 3, 5).unwrap();
        assert!(r.long_passed());
        assert!(!r.meet_class.verdict.passed());
        assert!(!r.beta_class.verdict.passed());
        assert!(!r.passed());
        assert_eq!(r.conclusion(), "premises not verified");
        assert_eq!(r.to_json()["conclusion"], "premises not verified");
    }
}
