use thiserror::Error;

use crate::automata::AutomataError;
use crate::congruence::UnknownCongruence;
use crate::identity::IdentityError;
use crate::monoid::MonoidError;
use crate::mtau::MtauError;
use crate::word::WordError;

/// Umbrella error for callers that mix several modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Automata(#[from] AutomataError),
    #[error(transparent)]
    Congruence(#[from] UnknownCongruence),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Mtau(#[from] MtauError),
    #[error(transparent)]
    Identity(#[from] IdentityError),
}
