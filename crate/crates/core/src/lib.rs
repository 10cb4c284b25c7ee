//! Token-level greybox fuzzing.
//!
//! Seeds are lexed, normalized (variables renamed into a fixed pool, numbers
//! snapped to a canonical pool) and encoded as arrays of 16-bit token codes.
//! The engine mutates those arrays and decodes them back to program text only
//! right before each execution.

pub mod codec;
pub mod coverage;
pub mod engine;
pub mod executor;
pub mod mutator;
pub mod par;
pub mod preproc;
pub mod stats;
pub mod token_model;
pub mod triage;

pub use codec::{decode, decode_into, encode, normalize_code};
pub use coverage::{CoverageMap, GlobalCoverage, Novelty};
pub use executor::{ExecResult, ExecStatus, Target, TargetConfig};
pub use preproc::{EncodedInput, TokenMap};
pub use token_model::{lex, render, Token, TokenKind, TokenSeq};
