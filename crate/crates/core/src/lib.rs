//! Finite automata ordered co-lexicographically.
//!
//! The crate implements the machinery around *Wheeler automata*: automata whose
//! states admit a total order compatible with the co-lexicographic order of the
//! strings that reach them. It provides
//!
//! * the carrier types ([`Alphabet`], [`Word`], [`Nfa`], [`Dfa`]) and the
//!   classical constructions (trimming, input-consistency, subset construction,
//!   minimization, products) in [`automaton`];
//! * co-lex state orders and Wheeler-order checking in [`colex`];
//! * the Wheeler *language* decision procedure with explicit non-Wheeler
//!   witnesses in [`lang`];
//! * minimum Wheeler DFA construction through fingerprints in [`minwdfa`];
//! * Wheeler DFA intersection, the tightness families and the
//!   hardness-reduction gadget generators in [`gadgets`];
//! * deliberately naive brute-force ground truth in [`oracle`] (test use only:
//!   the other modules never call into it);
//! * the text file format and DOT export in [`format`].
//!
//! Everything is a pure function over immutable values; all construction
//! results are canonically renumbered so equality tests double as isomorphism
//! tests for deterministic automata.

pub mod alphabet;
pub mod automaton;
pub mod colex;
mod error;
pub mod format;
pub mod gadgets;
pub mod lang;
pub mod minwdfa;
pub mod oracle;

pub use alphabet::{Alphabet, Sym, Word};
pub use automaton::{Dfa, Determinized, Nfa, StateId};
pub use colex::{PartialOrder, StateOrder, TotalOrder, WheelerCertificate, WheelerViolation};
pub use error::{Error, Result};
pub use lang::NonWheelerWitness;

/// Default cap on the number of subsets materialized by determinization.
pub const DEFAULT_DET_CAP: usize = 1 << 20;

/// Default cap on the word length used by bounded enumerations.
pub const DEFAULT_ENUM_CAP: usize = 14;
