//! Crate-wide error type.

use crate::lang::NonWheelerWitness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Syntax or range error in an automaton file.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Two automata were combined but their alphabets differ.
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    /// A configurable resource cap was hit.
    #[error("{what} cap exceeded (limit {limit})")]
    CapExceeded { what: &'static str, limit: usize },

    /// Preconditions violated or malformed input.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// The fingerprint loop did not settle within its iteration cap;
    /// usually means the input language is not Wheeler.
    #[error("fingerprint iteration cap {cap} exceeded; last overlapping pairs: {detail}")]
    FingerprintCap { cap: usize, detail: String },

    /// A construction requiring a Wheeler language was fed a non-Wheeler one.
    #[error("language is not Wheeler: {0}")]
    NotWheeler(Box<NonWheelerWitness>),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Error {
        Error::Invalid(msg.into())
    }

    /// Exit code contract used by the command line tool: resource errors are 3,
    /// everything else here is an input error (2).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::FingerprintCap { .. } => 3,
            _ => 2,
        }
    }
}
