//! Token-level mutation strategies.
//!
//! Every strategy works on the code array directly. New codes are drawn
//! uniformly over the token map; decoding wraps anything out of range, so
//! no strategy needs to know what a code means except for `;`, which bounds
//! statements for splicing.

pub mod bytes;

use rand::Rng;
use thiserror::Error;

use crate::preproc::{EncodedInput, TokenMap};

/// The strategy could not apply (e.g. an empty input); the caller falls
/// back to another one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("mutation not applicable")]
pub struct NoOp;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MutationBudget {
    /// Longest run of tokens inserted, overwritten, removed or duplicated.
    pub max_run: usize,
    /// Havoc stacks between 1 and this many operations. Power of two.
    pub havoc_stack_max: usize,
    /// Havoc output is truncated to this many tokens.
    pub max_len: usize,
}

impl Default for MutationBudget {
    fn default() -> Self {
        MutationBudget {
            max_run: 3,
            havoc_stack_max: 2,
            max_len: 4096,
        }
    }
}

impl MutationBudget {
    pub fn validate(&self) -> Result<(), String> {
        if self.max_run == 0 {
            return Err("max_run must be at least 1".into());
        }
        if !self.havoc_stack_max.is_power_of_two() || self.havoc_stack_max < 2 {
            return Err("havoc_stack_max must be a power of two >= 2".into());
        }
        if self.max_len == 0 {
            return Err("max_len must be positive".into());
        }
        Ok(())
    }
}

/// The complete havoc operation set. There is deliberately no arithmetic
/// or interesting-value operation: those only make sense on raw bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenOp {
    RandomInsert,
    RandomOverwrite,
    RandomReplace,
    StatementSplice,
    DeleteRun,
    DuplicateRun,
}

impl TokenOp {
    pub const ALL: [TokenOp; 6] = [
        TokenOp::RandomInsert,
        TokenOp::RandomOverwrite,
        TokenOp::RandomReplace,
        TokenOp::StatementSplice,
        TokenOp::DeleteRun,
        TokenOp::DuplicateRun,
    ];
}

/// Read-only view of the corpus used to pick splice donors.
pub trait CorpusSampler {
    fn count(&self) -> usize;
    fn codes(&self, idx: usize) -> &[u16];
}

impl CorpusSampler for [EncodedInput] {
    fn count(&self) -> usize {
        self.len()
    }

    fn codes(&self, idx: usize) -> &[u16] {
        &self[idx].codes
    }
}

impl CorpusSampler for Vec<Vec<u16>> {
    fn count(&self) -> usize {
        self.len()
    }

    fn codes(&self, idx: usize) -> &[u16] {
        &self[idx]
    }
}

#[derive(Debug, Clone)]
pub struct TokenMutator {
    map_len: usize,
    semicolon: Option<u16>,
    budget: MutationBudget,
}

impl TokenMutator {
    pub fn new(map: &TokenMap, budget: MutationBudget) -> Self {
        TokenMutator {
            map_len: map.len().max(1),
            semicolon: map.semicolon(),
            budget,
        }
    }

    pub fn budget(&self) -> &MutationBudget {
        &self.budget
    }

    #[inline]
    fn random_code<R: Rng + ?Sized>(&self, rng: &mut R) -> u16 {
        rng.gen_range(0..self.map_len) as u16
    }

    fn run_len<R: Rng + ?Sized>(&self, rng: &mut R, limit: usize) -> usize {
        rng.gen_range(1..=self.budget.max_run.min(limit))
    }

    /// Inserts 1..=max_run random codes at a random position.
    pub fn random_insert<R: Rng + ?Sized>(&self, codes: &mut Vec<u16>, rng: &mut R) {
        let r = self.run_len(rng, usize::MAX);
        let pos = rng.gen_range(0..=codes.len());
        let new: Vec<u16> = (0..r).map(|_| self.random_code(rng)).collect();
        codes.splice(pos..pos, new);
    }

    /// Overwrites a run of 1..=max_run codes in place.
    pub fn random_overwrite<R: Rng + ?Sized>(&self, codes: &mut [u16], rng: &mut R) -> Result<(), NoOp> {
        if codes.is_empty() {
            return Err(NoOp);
        }
        let r = self.run_len(rng, codes.len());
        let start = rng.gen_range(0..=codes.len() - r);
        for c in &mut codes[start..start + r] {
            *c = self.random_code(rng);
        }
        Ok(())
    }

    /// Removes a run and inserts an independently sized run of random codes
    /// in its place.
    pub fn random_replace<R: Rng + ?Sized>(&self, codes: &mut Vec<u16>, rng: &mut R) -> Result<(), NoOp> {
        if codes.is_empty() {
            return Err(NoOp);
        }
        let r_out = self.run_len(rng, codes.len());
        let start = rng.gen_range(0..=codes.len() - r_out);
        let r_in = self.run_len(rng, usize::MAX);
        let new: Vec<u16> = (0..r_in).map(|_| self.random_code(rng)).collect();
        codes.splice(start..start + r_out, new);
        Ok(())
    }

    pub fn delete_run<R: Rng + ?Sized>(&self, codes: &mut Vec<u16>, rng: &mut R) -> Result<(), NoOp> {
        if codes.len() < 2 {
            return Err(NoOp);
        }
        let r = self.run_len(rng, codes.len() - 1);
        let start = rng.gen_range(0..=codes.len() - r);
        codes.drain(start..start + r);
        Ok(())
    }

    pub fn duplicate_run<R: Rng + ?Sized>(&self, codes: &mut Vec<u16>, rng: &mut R) -> Result<(), NoOp> {
        if codes.is_empty() {
            return Err(NoOp);
        }
        let r = self.run_len(rng, codes.len());
        let src = rng.gen_range(0..=codes.len() - r);
        let dst = rng.gen_range(0..=codes.len());
        let run: Vec<u16> = codes[src..src + r].to_vec();
        codes.splice(dst..dst, run);
        Ok(())
    }

    /// Replaces one statement of `codes` with one statement of `donor`.
    /// Statements are the non-empty spans between `;` tokens (the ends of
    /// the input count as boundaries); the semicolons themselves stay.
    pub fn statement_splice<R: Rng + ?Sized>(
        &self,
        codes: &mut Vec<u16>,
        donor: &[u16],
        rng: &mut R,
    ) -> Result<(), NoOp> {
        let ours = self.statement_spans(codes);
        let theirs = self.statement_spans(donor);
        if ours.is_empty() || theirs.is_empty() {
            return Err(NoOp);
        }
        let (a, b) = ours[rng.gen_range(0..ours.len())];
        let (c, d) = theirs[rng.gen_range(0..theirs.len())];
        codes.splice(a..b, donor[c..d].iter().copied());
        Ok(())
    }

    /// Half-open, non-empty statement spans.
    pub fn statement_spans(&self, codes: &[u16]) -> Vec<(usize, usize)> {
        statement_spans(codes, self.semicolon, self.map_len)
    }

    /// A stack of 1..=havoc_stack_max operations drawn uniformly.
    /// Returns the operations actually applied.
    pub fn havoc<R, S>(&self, codes: &mut Vec<u16>, corpus: &S, rng: &mut R) -> Vec<TokenOp>
    where
        R: Rng + ?Sized,
        S: CorpusSampler + ?Sized,
    {
        let stack = rng.gen_range(1..=self.budget.havoc_stack_max);
        let mut applied = Vec::with_capacity(stack);
        for _ in 0..stack {
            let op = TokenOp::ALL[rng.gen_range(0..TokenOp::ALL.len())];
            applied.push(self.apply(op, codes, corpus, rng));
        }
        codes.truncate(self.budget.max_len);
        applied
    }

    /// Applies `op`, falling back when it cannot: splice to replace, and
    /// anything on an empty input to insert.
    pub fn apply<R, S>(&self, op: TokenOp, codes: &mut Vec<u16>, corpus: &S, rng: &mut R) -> TokenOp
    where
        R: Rng + ?Sized,
        S: CorpusSampler + ?Sized,
    {
        let result = match op {
            TokenOp::RandomInsert => {
                self.random_insert(codes, rng);
                Ok(op)
            }
            TokenOp::RandomOverwrite => self.random_overwrite(codes, rng).map(|_| op),
            TokenOp::RandomReplace => self.random_replace(codes, rng).map(|_| op),
            TokenOp::DeleteRun => self.delete_run(codes, rng).map(|_| op),
            TokenOp::DuplicateRun => self.duplicate_run(codes, rng).map(|_| op),
            TokenOp::StatementSplice => {
                let spliced = if corpus.count() == 0 {
                    Err(NoOp)
                } else {
                    let donor = corpus.codes(rng.gen_range(0..corpus.count()));
                    self.statement_splice(codes, donor, rng)
                };
                spliced
                    .map(|_| op)
                    .or_else(|_| self.random_replace(codes, rng).map(|_| TokenOp::RandomReplace))
            }
        };
        result.unwrap_or_else(|_| {
            self.random_insert(codes, rng);
            TokenOp::RandomInsert
        })
    }

    pub fn deterministic_walk<'a>(&self, codes: &'a [u16], k: usize) -> DeterministicWalk<'a> {
        DeterministicWalk::new(codes, self.map_len, k)
    }
}

pub(crate) fn statement_spans(codes: &[u16], semicolon: Option<u16>, map_len: usize) -> Vec<(usize, usize)> {
    let is_semi = |c: u16| match semicolon {
        Some(s) => (c as usize % map_len.max(1)) as u16 == s,
        None => false,
    };
    let mut spans = Vec::new();
    let mut start = 0;
    for (i, &c) in codes.iter().enumerate() {
        if is_semi(c) {
            if i > start {
                spans.push((start, i));
            }
            start = i + 1;
        }
    }
    if codes.len() > start {
        spans.push((start, codes.len()));
    }
    spans
}

/// For every position, substitutes `k` evenly spaced map codes
/// (stride `ceil(map_len / k)`), skipping the one equal to the current
/// token. The starting code shifts by one with each position (modulo the
/// stride), so a long enough input sees every code somewhere.
#[derive(Debug, Clone)]
pub struct DeterministicWalk<'a> {
    codes: &'a [u16],
    map_len: usize,
    stride: usize,
    k: usize,
    pos: usize,
    step: usize,
}

impl<'a> DeterministicWalk<'a> {
    pub fn new(codes: &'a [u16], map_len: usize, k: usize) -> Self {
        let k = k.max(1);
        let map_len = map_len.max(1);
        DeterministicWalk {
            codes,
            map_len,
            stride: map_len.div_ceil(k),
            k,
            pos: 0,
            step: 0,
        }
    }

    /// Upper bound on the number of mutants.
    pub fn max_len(&self) -> usize {
        self.k * self.codes.len()
    }

    fn code_at(&self, step: usize) -> usize {
        (self.pos % self.stride + step * self.stride) % self.map_len
    }

    /// None once the position is exhausted; Some(None) for a step whose
    /// code repeats an earlier one after wrapping.
    fn candidate(&self) -> Option<Option<u16>> {
        if self.step >= self.k || self.step * self.stride >= self.map_len {
            return None;
        }
        let code = self.code_at(self.step);
        let repeat = (0..self.step).any(|s| self.code_at(s) == code);
        Some((!repeat).then_some(code as u16))
    }
}

impl Iterator for DeterministicWalk<'_> {
    type Item = (usize, Vec<u16>);

    fn next(&mut self) -> Option<Self::Item> {
        while self.pos < self.codes.len() {
            let current = (self.codes[self.pos] as usize % self.map_len) as u16;
            while let Some(code) = self.candidate() {
                self.step += 1;
                let Some(code) = code else { continue };
                if code != current {
                    let mut mutant = self.codes.to_vec();
                    mutant[self.pos] = code;
                    return Some((self.pos, mutant));
                }
            }
            self.pos += 1;
            self.step = 0;
        }
        None
    }
}
