//! Computational workbench for word congruences, syntactic monoids and
//! identities of finite monoids.
//!
//! The pieces, bottom-up:
//!
//! - [`word`]: words, blocks, substitutions.
//! - [`congruence`]: canonical forms and class automata for τ₁, γ, α, ζ,
//!   β, its dual, ∼_Q and their meets.
//! - [`automata`]: regex → NFA → minimal DFA, factor languages, witnesses.
//! - [`monoid`]: finite monoids as tables, presentations, products,
//!   morphism search and the named fixtures.
//! - [`synt`]: syntactic monoids as transition monoids of minimal DFAs.
//! - [`mtau`]: Rees quotients M_τ(W) and relatively free monoids.
//! - [`identity`]: satisfaction of identities, τ-terms, stability,
//!   equational separation and NFB premise certification.
//! - [`repro`]: the reproduction table behind `synmon repro paper`.

pub mod automata;
pub mod congruence;
pub mod identity;
pub mod monoid;
pub mod mtau;
pub mod repro;
pub mod synt;
pub mod word;

mod error;

pub use automata::Dfa;
pub use congruence::{CanonicalForm, CongruenceId};
pub use error::Error;
pub use identity::{Identity, Verdict};
pub use monoid::{FiniteMonoid, MonoidProduct};
pub use word::{Letter, Word};
