use super::{satisfies, Identity, IdentityError, Verdict, Witness};
use crate::congruence::CongruenceId;
use crate::monoid::Factors;
use crate::word::{words_up_to, Letter, Word};

/// Checks that `w` is a `c`-term for the variety of `m` among candidates:
/// every word `v` over `content(w)` with `|v| ≤ max_len` such that `m`
/// satisfies `w ≈ v` must be `c`-related to `w`.
///
/// Candidates are restricted to the letters of `w`.
pub fn tau_term_check<F: Factors + ?Sized>(m: &F, w: &Word, c: &CongruenceId, max_len: usize) -> Result<Verdict, IdentityError> {
    let alphabet: Vec<Letter> = w.content().into_iter().collect();
    for v in words_up_to(&alphabet, max_len) {
        if c.equivalent(w, &v) {
            continue;
        }
        if satisfies(m, &Identity::new(w.clone(), v.clone()))?.passed() {
            return Ok(Verdict::Fails(Witness::Identity { u: w.clone(), v }));
        }
    }
    Ok(Verdict::HoldsUpToBound(max_len))
}

/// Bounded stability of `[rep]_c`: every member up to `max_len` is a `c`-term.
pub fn stability_check<F: Factors + ?Sized>(
    m: &F,
    c: &CongruenceId,
    rep: &Word,
    max_len: usize,
) -> Result<Verdict, IdentityError> {
    for u in c.enumerate_class(rep, max_len) {
        let verdict = tau_term_check(m, &u, c, max_len)?;
        if !verdict.passed() {
            return Ok(verdict);
        }
    }
    Ok(Verdict::HoldsUpToBound(max_len))
}
