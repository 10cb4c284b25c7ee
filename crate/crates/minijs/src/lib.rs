//! MiniJS: a deterministic interpreter for a small JavaScript subset, built
//! as a fuzzing target. Parser and evaluator are instrumented with edge
//! probes and carry four planted assertion failures ([`Bug`]).
//!
//! ```
//! use minijs::{execute, Options, Outcome};
//!
//! let run = execute(b"let var1 = 1 ; print ( var1 + 1 ) ;", None, &Options::default());
//! assert_eq!(run.outcome, Outcome::Clean);
//! assert_eq!(run.output, b"2\n");
//! ```

pub mod ast;
pub mod bugs;
pub mod interp;
pub mod lexer;
pub mod parser;
pub mod probe;
pub mod serve;

use tlfuzz_core::executor::{ExecStatus, HarnessOutcome};

pub use bugs::{Arming, Bug};
pub use interp::{Limits, RuntimeError};
pub use parser::ParseError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    /// Turns planted assertions into no-ops for this run.
    pub disarm: bool,
    pub limits: Limits,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Clean,
    ParseError(ParseError),
    RuntimeError(RuntimeError),
    Assertion(Bug),
}

impl Outcome {
    pub fn status(&self) -> ExecStatus {
        match self {
            Outcome::Clean => ExecStatus::ParseOk,
            Outcome::ParseError(_) => ExecStatus::ParseError,
            Outcome::RuntimeError(_) => ExecStatus::RuntimeError,
            Outcome::Assertion(_) => ExecStatus::Crash,
        }
    }

    pub fn assertion_id(&self) -> Option<u16> {
        match self {
            Outcome::Assertion(b) => Some(b.id()),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Run {
    pub outcome: Outcome,
    pub output: Vec<u8>,
    pub steps: u64,
}

/// Parses and evaluates `src`, recording edges into `trace` when given.
/// `trace` is not cleared first.
pub fn execute(src: &[u8], trace: Option<&mut [u8]>, opts: &Options) -> Run {
    let mut probe = match trace {
        Some(t) => probe::Probe::new(t),
        None => probe::Probe::disabled(),
    };
    let arming = Arming::new(opts.disarm);
    let program = match parser::parse(src, &mut probe, arming) {
        Ok(p) => p,
        Err(e) => {
            return Run {
                outcome: Outcome::ParseError(e),
                output: Vec::new(),
                steps: 0,
            }
        }
    };
    let mut it = interp::Interp::new(&program, &mut probe, arming, opts.limits);
    let outcome = match it.run(&program) {
        Ok(()) => Outcome::Clean,
        Err(interp::Stop::Error(e)) => Outcome::RuntimeError(e),
        Err(interp::Stop::Assert(b)) => Outcome::Assertion(b),
    };
    Run {
        outcome,
        output: it.output().to_vec(),
        steps: it.steps(),
    }
}

/// A harness for [`tlfuzz_core::executor::InProcessTarget`].
pub fn harness(opts: Options) -> impl FnMut(&[u8], &mut [u8]) -> HarnessOutcome + Send + Clone {
    move |program, trace| {
        let run = execute(program, Some(trace), &opts);
        HarnessOutcome {
            status: run.outcome.status(),
            assertion_id: run.outcome.assertion_id(),
        }
    }
}

/// One line per planted bug: id, name, description.
pub fn list_bugs() -> String {
    let mut out = String::new();
    for b in Bug::ALL {
        out.push_str(&format!("{}\t{}\t{}\n", b.id(), b.name(), b.description()));
    }
    out
}
