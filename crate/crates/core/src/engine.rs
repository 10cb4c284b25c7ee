//! The evolutionary loop: dry run, queue scheduling, energy, trimming and
//! novelty-gated corpus growth.
//!
//! Work proceeds in rounds. The scheduler hands each worker one queue entry
//! and an execution budget; workers fuzz against a read-only snapshot of the
//! queue and a private copy of the global coverage, then the scheduler merges
//! their findings in worker order. With one worker every decision depends
//! only on the rng seed and the target's behaviour, so runs are reproducible.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::codec::decode_into;
use crate::coverage::{bucket_signature, matches_signature, GlobalCoverage, Novelty};
use crate::executor::{ExecError, ExecStatus, Target};
use crate::mutator::bytes::ByteHavoc;
use crate::mutator::{CorpusSampler, MutationBudget, TokenMutator};
use crate::par;
use crate::preproc::{queue_file_name, EncodedInput, TokenMap, QUEUE_DIR};
use crate::stats::{unix_millis, CampaignStats, StatsWriter};
use crate::triage::{write_report, CrashSignature, CrashStore, Dedup, CRASHES_DIR};

/// How a campaign represents and mutates inputs.
pub trait Mode: Sync {
    type Unit: Copy + Eq + Send + Sync + std::fmt::Debug + 'static;

    fn name(&self) -> &'static str;
    /// Queue file extension.
    fn extension(&self) -> &'static str;
    /// Program text handed to the target.
    fn render(&self, input: &[Self::Unit], out: &mut Vec<u8>);
    fn havoc(&self, input: &mut Vec<Self::Unit>, donors: &[Arc<Vec<Self::Unit>>], cycle: usize, rng: &mut ChaCha8Rng);
    /// One-time deterministic mutants of a fresh entry; empty if the mode
    /// has none.
    fn walk(&self, input: &[Self::Unit], k: usize) -> Vec<Vec<Self::Unit>>;
    fn to_file(&self, input: &[Self::Unit]) -> Vec<u8>;
    fn from_file(&self, bytes: &[u8]) -> Vec<Self::Unit>;
    fn is_separator(&self, unit: &Self::Unit) -> bool;
}

struct Donors<'a>(&'a [Arc<Vec<u16>>]);

impl CorpusSampler for Donors<'_> {
    fn count(&self) -> usize {
        self.0.len()
    }

    fn codes(&self, idx: usize) -> &[u16] {
        &self.0[idx]
    }
}

/// Token-level mutation over 16-bit codes.
#[derive(Debug, Clone)]
pub struct TokenMode {
    map: TokenMap,
    mutator: TokenMutator,
    semicolon: Option<u16>,
}

impl TokenMode {
    pub fn new(map: TokenMap, budget: MutationBudget) -> Self {
        let mutator = TokenMutator::new(&map, budget);
        let semicolon = map.semicolon();
        TokenMode { map, mutator, semicolon }
    }

    pub fn map(&self) -> &TokenMap {
        &self.map
    }
}

impl Mode for TokenMode {
    type Unit = u16;

    fn name(&self) -> &'static str {
        "token"
    }

    fn extension(&self) -> &'static str {
        "tok"
    }

    fn render(&self, input: &[u16], out: &mut Vec<u8>) {
        out.clear();
        let mut text = String::from_utf8(std::mem::take(out)).unwrap_or_default();
        decode_into(input, &self.map, &mut text);
        *out = text.into_bytes();
    }

    fn havoc(&self, input: &mut Vec<u16>, donors: &[Arc<Vec<u16>>], _cycle: usize, rng: &mut ChaCha8Rng) {
        self.mutator.havoc(input, &Donors(donors), rng);
    }

    fn walk(&self, input: &[u16], k: usize) -> Vec<Vec<u16>> {
        self.mutator.deterministic_walk(input, k).map(|(_, m)| m).collect()
    }

    fn to_file(&self, input: &[u16]) -> Vec<u8> {
        input.iter().flat_map(|c| c.to_le_bytes()).collect()
    }

    fn from_file(&self, bytes: &[u8]) -> Vec<u16> {
        EncodedInput::from_bytes(bytes).codes
    }

    fn is_separator(&self, unit: &u16) -> bool {
        self.semicolon.is_some() && Some(crate::codec::normalize_code(*unit, &self.map)) == self.semicolon
    }
}

/// Byte-level comparison mode: AFL-style havoc with the token texts as a
/// dictionary.
#[derive(Debug, Clone)]
pub struct ByteMode {
    havoc: ByteHavoc,
}

pub const BYTE_MODE_MAX_LEN: usize = 16 * 1024;

impl ByteMode {
    pub fn new(dictionary: Vec<Vec<u8>>, max_len: usize) -> Self {
        ByteMode {
            havoc: ByteHavoc::new(dictionary, max_len),
        }
    }

    /// Uses every token text of `map` as a dictionary word.
    pub fn from_token_map(map: &TokenMap) -> Self {
        let dict = map.entries().iter().map(|t| t.text.as_bytes().to_vec()).collect();
        Self::new(dict, BYTE_MODE_MAX_LEN)
    }
}

impl Mode for ByteMode {
    type Unit = u8;

    fn name(&self) -> &'static str {
        "byte"
    }

    fn extension(&self) -> &'static str {
        "js"
    }

    fn render(&self, input: &[u8], out: &mut Vec<u8>) {
        out.clear();
        out.extend_from_slice(input);
    }

    fn havoc(&self, input: &mut Vec<u8>, _donors: &[Arc<Vec<u8>>], cycle: usize, rng: &mut ChaCha8Rng) {
        self.havoc.havoc(input, cycle, rng);
    }

    fn walk(&self, _input: &[u8], _k: usize) -> Vec<Vec<u8>> {
        Vec::new()
    }

    fn to_file(&self, input: &[u8]) -> Vec<u8> {
        input.to_vec()
    }

    fn from_file(&self, bytes: &[u8]) -> Vec<u8> {
        bytes.to_vec()
    }

    fn is_separator(&self, unit: &u8) -> bool {
        *unit == b';'
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry<U> {
    pub id: usize,
    pub input: Arc<Vec<U>>,
    pub exec_micros: u64,
    /// Scheduling cost: measured exec time with `timing_costs`, otherwise
    /// the rendered program length.
    pub cost: u64,
    pub token_len: usize,
    /// `Nothing` only for seeds that added no coverage of their own.
    pub novelty: Novelty,
    pub favored: bool,
    pub times_fuzzed: u64,
    pub walked: bool,
    pub seed: bool,
    pub status: ExecStatus,
    /// Nonzero trace cells.
    pub edges: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct Seed<U> {
    pub id: usize,
    pub input: Vec<U>,
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub workers: usize,
    /// Includes the dry run, which always completes.
    pub max_execs: Option<u64>,
    pub max_duration: Option<Duration>,
    pub rng_seed: u64,
    pub deterministic_walk: bool,
    pub walk_k: usize,
    pub energy_base: u32,
    pub trim: bool,
    pub timing_costs: bool,
    /// Write a stats row whenever total execs cross a multiple of this;
    /// `None` switches to one row per `checkpoint_interval` of wall time.
    pub checkpoint_execs: Option<u64>,
    pub checkpoint_interval: Duration,
    pub max_saved_per_signature: usize,
    /// Consecutive failed executions tolerated before giving up.
    pub max_exec_errors: u32,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            workers: 1,
            max_execs: None,
            max_duration: None,
            rng_seed: 0,
            deterministic_walk: true,
            walk_k: 16,
            energy_base: 256,
            trim: true,
            timing_costs: false,
            checkpoint_execs: Some(10_000),
            checkpoint_interval: Duration::from_secs(1),
            max_saved_per_signature: 16,
            max_exec_errors: 100,
        }
    }
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("no targets to run")]
    NoTargets,
    #[error("no seed produced any coverage")]
    NoUsableSeeds,
    #[error("target failure during dry run: {0}")]
    Target(#[from] ExecError),
    #[error("io error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StopReason {
    ExecLimit,
    TimeLimit,
    TargetFailure(String),
}

#[derive(Debug, Clone)]
pub struct CampaignReport<U> {
    pub stats: CampaignStats,
    pub dry_run_stats: CampaignStats,
    pub queue: Vec<CorpusEntry<U>>,
    pub crashes: CrashStore<Vec<U>>,
    pub stop: StopReason,
    pub elapsed: Duration,
    pub exec_errors: u64,
}

impl<U> CampaignReport<U> {
    pub fn found(&self, assertion_id: u16) -> bool {
        self.crashes.get(&CrashSignature::crash(assertion_id)).is_some()
    }
}

/// `base × novelty weight × speed factor`, clamped to [16, 4096]. The speed
/// factor is `median_cost / cost` clamped to [0.25, 4].
pub fn energy(novelty: Novelty, cost: u64, median_cost: u64, base: u32) -> u32 {
    let weight = match novelty {
        Novelty::NewEdge => 2.0,
        _ => 1.0,
    };
    let speed = if cost == 0 {
        4.0
    } else {
        (median_cost as f64 / cost as f64).clamp(0.25, 4.0)
    };
    (base as f64 * weight * speed).round().clamp(16.0, 4096.0) as u32
}

/// Lower bound of the median (the element at index `(n-1)/2`).
pub fn median(values: &mut [u64]) -> u64 {
    if values.is_empty() {
        return 0;
    }
    let mid = (values.len() - 1) / 2;
    *values.select_nth_unstable(mid).1
}

/// Largest power of two not above `max(len / 16, 1)`.
fn first_trim_len(len: usize) -> usize {
    let n = (len / 16).max(1);
    1 << (usize::BITS - 1 - n.leading_zeros())
}

/// Recomputes favored flags: every seen edge's cheapest entry (by
/// `cost × token_len`, ties to the older entry) is chosen, then a greedy
/// pass in edge order keeps only entries that cover something new.
pub fn recompute_favored<U>(queue: &mut [CorpusEntry<U>], map_size: usize) {
    let key = |e: &CorpusEntry<U>| e.cost.saturating_mul(e.token_len.max(1) as u64);
    let mut top: Vec<Option<usize>> = vec![None; map_size];
    for (i, e) in queue.iter().enumerate() {
        for &edge in &e.edges {
            let slot = &mut top[edge as usize];
            match *slot {
                Some(j) if key(&queue[j]) <= key(e) => {}
                _ => *slot = Some(i),
            }
        }
    }
    for e in queue.iter_mut() {
        e.favored = false;
    }
    let mut covered = vec![false; map_size];
    for edge in 0..map_size {
        if covered[edge] {
            continue;
        }
        if let Some(i) = top[edge] {
            queue[i].favored = true;
            for &c in &queue[i].edges {
                covered[c as usize] = true;
            }
        }
    }
}

/// Round-robin cursor that skips non-favored entries three times in four
/// while any entry is favored.
#[derive(Debug, Clone, Default)]
pub struct Selector {
    cursor: usize,
    cycles: usize,
}

impl Selector {
    pub fn cycles(&self) -> usize {
        self.cycles
    }

    pub fn select_next<U, R: Rng + ?Sized>(&mut self, queue: &[CorpusEntry<U>], rng: &mut R) -> usize {
        assert!(!queue.is_empty());
        let any_favored = queue.iter().any(|e| e.favored);
        loop {
            if self.cursor >= queue.len() {
                self.cursor = 0;
                self.cycles += 1;
            }
            let idx = self.cursor;
            self.cursor += 1;
            if any_favored && !queue[idx].favored && rng.gen_bool(0.75) {
                continue;
            }
            return idx;
        }
    }
}

struct CrashHit<U> {
    signature: CrashSignature,
    exec: u64,
    input: Vec<U>,
}

struct Candidate<U> {
    input: Vec<U>,
    signature: Vec<(u32, u8)>,
    exec_micros: u64,
    cost: u64,
    status: ExecStatus,
}

/// Where a job cut short at a checkpoint picks up again.
#[derive(Debug, Clone, Copy)]
struct Resume {
    walk_from: Option<usize>,
    havoc_left: u32,
}

struct RoundOutput<U> {
    resume: Option<Resume>,
    stats: CampaignStats,
    crashes: Vec<CrashHit<U>>,
    candidates: Vec<Candidate<U>>,
    exec_errors: u64,
    fatal: Option<String>,
    hit_deadline: bool,
}

impl<U> Default for RoundOutput<U> {
    fn default() -> Self {
        RoundOutput {
            resume: None,
            stats: CampaignStats::default(),
            crashes: Vec::new(),
            candidates: Vec::new(),
            exec_errors: 0,
            fatal: None,
            hit_deadline: false,
        }
    }
}

struct Job<U> {
    idx: usize,
    entry: Arc<Vec<U>>,
    /// First walk mutant still to run; `None` once the walk is done or off.
    walk_from: Option<usize>,
    havoc_left: u32,
    /// Hard limit on executions.
    budget: u64,
    /// No new mutant starts after this many executions; the job resumes
    /// next round. Trimming already under way runs to completion.
    soft_budget: u64,
    exec_base: u64,
}

struct Worker {
    target: Box<dyn Target>,
    rng: ChaCha8Rng,
    virgin: GlobalCoverage,
    buf: Vec<u8>,
    consecutive_errors: u32,
    last_assertion: Option<u16>,
    last_micros: u64,
    last_signature: Vec<(u32, u8)>,
    /// Queue index and position of a job paused at a checkpoint.
    pending: Option<(usize, Resume)>,
}

enum Ran {
    Done { status: ExecStatus, novel: bool },
    Skipped,
    Stop,
}

struct RoundCtx<'a, U> {
    donors: &'a [Arc<Vec<U>>],
    deadline: Option<Instant>,
    config: &'a EngineConfig,
    cycle: usize,
}

impl Worker {
    fn run_job<M: Mode>(&mut self, mode: &M, job: &Job<M::Unit>, ctx: &RoundCtx<'_, M::Unit>) -> RoundOutput<M::Unit> {
        let mut out = RoundOutput::default();
        let mut left = job.budget;
        if let Some(from) = job.walk_from {
            for (i, mutant) in mode.walk(&job.entry, ctx.config.walk_k).into_iter().enumerate().skip(from) {
                if out.stats.total_execs >= job.soft_budget {
                    out.resume = Some(Resume {
                        walk_from: Some(i),
                        havoc_left: job.havoc_left,
                    });
                    return out;
                }
                if let Ran::Stop = self.try_input(mode, mutant, job, ctx, &mut left, &mut out) {
                    return out;
                }
            }
        }
        for done in 0..job.havoc_left {
            if out.stats.total_execs >= job.soft_budget {
                out.resume = Some(Resume {
                    walk_from: None,
                    havoc_left: job.havoc_left - done,
                });
                return out;
            }
            let mut mutant = job.entry.as_ref().clone();
            mode.havoc(&mut mutant, ctx.donors, ctx.cycle, &mut self.rng);
            if let Ran::Stop = self.try_input(mode, mutant, job, ctx, &mut left, &mut out) {
                return out;
            }
        }
        out
    }

    /// Runs one mutant; keeps it as a candidate (after trimming) when it
    /// shows new coverage against this worker's view.
    fn try_input<M: Mode>(
        &mut self,
        mode: &M,
        input: Vec<M::Unit>,
        job: &Job<M::Unit>,
        ctx: &RoundCtx<'_, M::Unit>,
        left: &mut u64,
        out: &mut RoundOutput<M::Unit>,
    ) -> Ran {
        let ran = self.execute(mode, &input, job, ctx, left, out, None);
        let Ran::Done { status, novel: true } = ran else {
            return if matches!(ran, Ran::Stop) { Ran::Stop } else { Ran::Skipped };
        };
        let signature = std::mem::take(&mut self.last_signature);
        let exec_micros = self.last_micros;
        let input = if ctx.config.trim {
            self.trim(mode, input, status, &signature, job, ctx, left, out)
        } else {
            input
        };
        mode.render(&input, &mut self.buf);
        let cost = if ctx.config.timing_costs {
            exec_micros.max(1)
        } else {
            self.buf.len() as u64 + 1
        };
        out.candidates.push(Candidate {
            input,
            signature,
            exec_micros,
            cost,
            status,
        });
        if out.fatal.is_some() || out.hit_deadline || *left == 0 {
            Ran::Stop
        } else {
            Ran::Done { status, novel: true }
        }
    }
}

impl Worker {
    #[allow(clippy::too_many_arguments)]
    fn execute<M: Mode>(
        &mut self,
        mode: &M,
        input: &[M::Unit],
        job: &Job<M::Unit>,
        ctx: &RoundCtx<'_, M::Unit>,
        left: &mut u64,
        out: &mut RoundOutput<M::Unit>,
        expect: Option<(ExecStatus, &[(u32, u8)])>,
    ) -> Ran {
        if *left == 0 || out.fatal.is_some() {
            return Ran::Stop;
        }
        if ctx.deadline.is_some_and(|d| Instant::now() >= d) {
            out.hit_deadline = true;
            return Ran::Stop;
        }
        mode.render(input, &mut self.buf);
        let result = match self.target.run(&self.buf) {
            Ok(r) => r,
            Err(e @ (ExecError::SpawnFailure { .. } | ExecError::HandshakeMismatch { .. })) => {
                out.fatal = Some(e.to_string());
                return Ran::Stop;
            }
            Err(e) => {
                out.exec_errors += 1;
                self.consecutive_errors += 1;
                if self.consecutive_errors >= ctx.config.max_exec_errors {
                    out.fatal = Some(format!("{} consecutive execution errors, last: {e}", self.consecutive_errors));
                    return Ran::Stop;
                }
                return Ran::Skipped;
            }
        };
        self.consecutive_errors = 0;
        *left -= 1;
        out.stats.record(result.status);
        self.last_assertion = result.assertion_id;
        self.last_micros = result.exec_micros;
        let status = result.status;
        if let Some((want, sig)) = expect {
            let same = status == want && matches_signature(result.trace, sig);
            return Ran::Done { status, novel: same };
        }
        // trim candidates are counted but never triaged, as in AFL
        if let Some(signature) = CrashSignature::of(status, result.assertion_id) {
            out.crashes.push(CrashHit {
                signature,
                exec: job.exec_base + out.stats.total_execs - 1,
                input: input.to_vec(),
            });
            return Ran::Done { status, novel: false };
        }
        let novel = match self.virgin.has_new_bits(result.trace) {
            Ok(n) => n.is_new(),
            Err(e) => {
                out.fatal = Some(e.to_string());
                return Ran::Stop;
            }
        };
        if novel {
            self.last_signature = bucket_signature(result.trace);
        }
        Ran::Done { status, novel }
    }

    /// Removes unit runs (lengths len/16 down to 1) while status and
    /// bucketized coverage stay the same, repeating until nothing changes.
    #[allow(clippy::too_many_arguments)]
    fn trim<M: Mode>(
        &mut self,
        mode: &M,
        mut current: Vec<M::Unit>,
        status: ExecStatus,
        signature: &[(u32, u8)],
        job: &Job<M::Unit>,
        ctx: &RoundCtx<'_, M::Unit>,
        left: &mut u64,
        out: &mut RoundOutput<M::Unit>,
    ) -> Vec<M::Unit> {
        let mut candidate = Vec::with_capacity(current.len());
        loop {
            let before = current.len();
            let mut len = first_trim_len(current.len());
            loop {
                let mut pos = 0;
                while pos + len <= current.len() && current.len() > len {
                    candidate.clear();
                    candidate.extend_from_slice(&current[..pos]);
                    candidate.extend_from_slice(&current[pos + len..]);
                    match self.execute(mode, &candidate, job, ctx, left, out, Some((status, signature))) {
                        Ran::Done { novel: true, .. } => std::mem::swap(&mut current, &mut candidate),
                        Ran::Done { .. } | Ran::Skipped => pos += len,
                        Ran::Stop => return current,
                    }
                }
                if len == 1 {
                    break;
                }
                len /= 2;
            }
            if current.len() == before {
                return current;
            }
        }
    }
}

/// Runs a campaign to its limits. `out_dir` receives queue files, crash
/// artifacts and `stats.csv`; `progress` sees the stats at each checkpoint.
pub fn fuzz_loop<M: Mode>(
    mode: &M,
    seeds: Vec<Seed<M::Unit>>,
    targets: Vec<Box<dyn Target>>,
    config: &EngineConfig,
    out_dir: Option<&Path>,
    progress: &mut dyn FnMut(&CampaignStats),
) -> Result<CampaignReport<M::Unit>, EngineError> {
    if targets.is_empty() {
        return Err(EngineError::NoTargets);
    }
    let start = Instant::now();
    let deadline = config.max_duration.map(|d| start + d);
    let map_size = targets[0].map_size();
    let mut workers: Vec<Worker> = targets
        .into_iter()
        .enumerate()
        .map(|(i, target)| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
            rng.set_stream(i as u64 + 1);
            Worker {
                target,
                rng,
                virgin: GlobalCoverage::new(map_size),
                buf: Vec::new(),
                consecutive_errors: 0,
                last_assertion: None,
                last_micros: 0,
                last_signature: Vec::new(),
                pending: None,
            }
        })
        .collect();
    let mut sched_rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
    sched_rng.set_stream(0);

    let mut out = Output::new(out_dir, mode)?;
    let mut global = GlobalCoverage::new(map_size);
    let mut stats = CampaignStats::default();
    let mut crashes: CrashStore<Vec<M::Unit>> = CrashStore::new();
    let mut queue: Vec<CorpusEntry<M::Unit>> = Vec::new();
    let mut next_id = seeds.iter().map(|s| s.id + 1).max().unwrap_or(0);
    let mut exec_errors = 0u64;

    // Dry run: every seed once, in order, on the first worker.
    for seed in seeds {
        let w = &mut workers[0];
        mode.render(&seed.input, &mut w.buf);
        let result = w.target.run(&w.buf)?;
        stats.record(result.status);
        let status = result.status;
        if let Some(sig) = CrashSignature::of(status, result.assertion_id) {
            let text = String::from_utf8_lossy(&w.buf).into_owned();
            if crashes.dedup(sig, stats.total_execs - 1, &seed.input, &text) == Dedup::NewBug || out.may_save(sig, config) {
                out.save_crash(mode, sig, &seed.input, &w.buf)?;
            }
            continue;
        }
        let signature = bucket_signature(result.trace);
        let exec_micros = result.exec_micros;
        if signature.is_empty() {
            log::warn!("seed id {} produced no coverage; skipped", seed.id);
            continue;
        }
        let novelty = global.merge_sparse(&signature);
        let cost = if config.timing_costs {
            exec_micros.max(1)
        } else {
            w.buf.len() as u64 + 1
        };
        queue.push(CorpusEntry {
            id: seed.id,
            token_len: seed.input.len(),
            input: Arc::new(seed.input),
            exec_micros,
            cost,
            novelty,
            favored: false,
            times_fuzzed: 0,
            walked: false,
            seed: true,
            status,
            edges: signature.iter().map(|&(i, _)| i).collect(),
        });
    }
    stats.unique_crashes = crashes.unique_bugs() as u64;
    stats.edges_seen = global.edges_seen() as u64;
    let dry_run_stats = stats;
    if queue.is_empty() {
        return Err(EngineError::NoUsableSeeds);
    }
    recompute_favored(&mut queue, map_size);
    if out.checkpoint(&stats)? {
        progress(&stats);
    }
    let mut next_checkpoint = config
        .checkpoint_execs
        .map(|n| (stats.total_execs / n.max(1) + 1) * n.max(1));
    let mut last_checkpoint = Instant::now();

    let mut selector = Selector::default();
    let stop = loop {
        let remaining = match config.max_execs {
            Some(max) if stats.total_execs >= max => break StopReason::ExecLimit,
            Some(max) => max - stats.total_execs,
            None => u64::MAX,
        };
        if deadline.is_some_and(|d| Instant::now() >= d) {
            break StopReason::TimeLimit;
        }

        let mut costs: Vec<u64> = queue.iter().map(|e| e.cost).collect();
        let median_cost = median(&mut costs);
        let donors: Vec<Arc<Vec<M::Unit>>> = queue.iter().map(|e| Arc::clone(&e.input)).collect();
        let n = workers.len() as u64;
        let share = remaining.div_ceil(n);
        let soft_share = next_checkpoint.map_or(u64::MAX, |next| next.saturating_sub(stats.total_execs).div_ceil(n));
        let mut jobs = Vec::with_capacity(workers.len());
        let mut exec_base = stats.total_execs;
        for w in workers.iter_mut() {
            let (idx, resume) = match w.pending.take() {
                Some(p) => p,
                None => {
                    let idx = selector.select_next(&queue, &mut sched_rng);
                    let e = &mut queue[idx];
                    let walk = config.deterministic_walk && !e.walked;
                    e.walked = true;
                    e.times_fuzzed += 1;
                    let resume = Resume {
                        walk_from: walk.then_some(0),
                        havoc_left: energy(e.novelty, e.cost, median_cost, config.energy_base),
                    };
                    (idx, resume)
                }
            };
            jobs.push(Job {
                idx,
                entry: Arc::clone(&queue[idx].input),
                walk_from: resume.walk_from,
                havoc_left: resume.havoc_left,
                budget: share,
                soft_budget: soft_share,
                exec_base,
            });
            exec_base = exec_base.saturating_add(share);
        }
        let ctx = RoundCtx {
            donors: &donors,
            deadline,
            config,
            cycle: selector.cycles() + 1,
        };
        for w in workers.iter_mut() {
            w.virgin.clone_from(&global);
        }
        let mut paired: Vec<(&mut Worker, &Job<M::Unit>)> = workers.iter_mut().zip(jobs.iter()).collect();
        let outputs = par::map_mut(&mut paired, |(w, job)| w.run_job(mode, job, &ctx));

        // Serialized merge, in worker order.
        let mut fatal = None;
        let mut timed_out = false;
        let mut added = false;
        let mut exec_cursor = stats.total_execs;
        for (i, (job, o)) in jobs.iter().zip(outputs).enumerate() {
            workers[i].pending = o.resume.map(|r| (job.idx, r));
            stats.absorb_counts(&o.stats);
            exec_errors += o.exec_errors;
            for hit in o.crashes {
                let exec = exec_cursor + (hit.exec - job.exec_base);
                mode.render(&hit.input, &mut workers[0].buf);
                let text = String::from_utf8_lossy(&workers[0].buf).into_owned();
                let new = crashes.dedup(hit.signature, exec, &hit.input, &text) == Dedup::NewBug;
                if new || out.may_save(hit.signature, config) {
                    out.save_crash(mode, hit.signature, &hit.input, &workers[0].buf)?;
                }
            }
            exec_cursor += o.stats.total_execs;
            for c in o.candidates {
                let novelty = global.merge_sparse(&c.signature);
                if !novelty.is_new() {
                    continue;
                }
                let id = next_id;
                next_id += 1;
                out.save_entry(mode, id, &c.input)?;
                queue.push(CorpusEntry {
                    id,
                    token_len: c.input.len(),
                    input: Arc::new(c.input),
                    exec_micros: c.exec_micros,
                    cost: c.cost,
                    novelty,
                    favored: false,
                    times_fuzzed: 0,
                    walked: false,
                    seed: false,
                    status: c.status,
                    edges: c.signature.iter().map(|&(i, _)| i).collect(),
                });
                added = true;
            }
            if fatal.is_none() {
                fatal = o.fatal;
            }
            timed_out |= o.hit_deadline;
        }
        if added {
            recompute_favored(&mut queue, map_size);
        }
        stats.unique_crashes = crashes.unique_bugs() as u64;
        stats.edges_seen = global.edges_seen() as u64;

        match next_checkpoint.as_mut() {
            Some(next) => {
                if stats.total_execs >= *next {
                    if out.checkpoint(&stats)? {
                        progress(&stats);
                    }
                    let step = config.checkpoint_execs.unwrap().max(1);
                    *next = (stats.total_execs / step + 1) * step;
                }
            }
            None => {
                if last_checkpoint.elapsed() >= config.checkpoint_interval {
                    if out.checkpoint(&stats)? {
                        progress(&stats);
                    }
                    last_checkpoint = Instant::now();
                }
            }
        }
        if let Some(msg) = fatal {
            break StopReason::TargetFailure(msg);
        }
        if timed_out {
            break StopReason::TimeLimit;
        }
    };
    if out.checkpoint(&stats)? {
        progress(&stats);
    }
    out.write_reports(&crashes, mode)?;

    Ok(CampaignReport {
        stats,
        dry_run_stats,
        queue,
        crashes,
        stop,
        elapsed: start.elapsed(),
        exec_errors,
    })
}

/// Filesystem side effects of a campaign; a no-op without a directory.
struct Output {
    dir: Option<PathBuf>,
    stats: Option<StatsWriter>,
    saved: std::collections::HashMap<CrashSignature, usize>,
    ext: &'static str,
    last_row: Option<CampaignStats>,
}

impl Output {
    fn new<M: Mode>(dir: Option<&Path>, mode: &M) -> Result<Self, EngineError> {
        let mut out = Output {
            dir: dir.map(Path::to_path_buf),
            stats: None,
            saved: Default::default(),
            last_row: None,
            ext: mode.extension(),
        };
        if let Some(d) = dir {
            let queue = d.join(QUEUE_DIR);
            fs::create_dir_all(&queue).map_err(io_err(&queue))?;
            out.stats = Some(StatsWriter::open(d).map_err(io_err(d))?);
        }
        Ok(out)
    }

    fn may_save(&self, sig: CrashSignature, config: &EngineConfig) -> bool {
        self.dir.is_some() && self.saved.get(&sig).copied().unwrap_or(0) < config.max_saved_per_signature
    }

    fn save_crash<M: Mode>(&mut self, mode: &M, sig: CrashSignature, input: &[M::Unit], text: &[u8]) -> Result<(), EngineError> {
        let Some(dir) = &self.dir else {
            return Ok(());
        };
        let n = self.saved.entry(sig).or_insert(0);
        let crash_dir = dir.join(CRASHES_DIR).join(sig.dir_name());
        fs::create_dir_all(&crash_dir).map_err(io_err(&crash_dir))?;
        let stem = format!("id_{:04}", *n);
        let raw = crash_dir.join(format!("{stem}.{}", self.ext));
        fs::write(&raw, mode.to_file(input)).map_err(io_err(&raw))?;
        if self.ext != "js" {
            let js = crash_dir.join(format!("{stem}.js"));
            fs::write(&js, text).map_err(io_err(&js))?;
        }
        *n += 1;
        Ok(())
    }

    fn save_entry<M: Mode>(&mut self, mode: &M, id: usize, input: &[M::Unit]) -> Result<(), EngineError> {
        let Some(dir) = &self.dir else {
            return Ok(());
        };
        let path = dir.join(QUEUE_DIR).join(queue_file_name(id, self.ext));
        fs::write(&path, mode.to_file(input)).map_err(io_err(&path))
    }

    /// Appends a stats row unless nothing changed since the last one.
    /// Returns whether a row was due.
    fn checkpoint(&mut self, stats: &CampaignStats) -> Result<bool, EngineError> {
        if self.last_row == Some(*stats) {
            return Ok(false);
        }
        self.last_row = Some(*stats);
        if let (Some(w), Some(dir)) = (self.stats.as_mut(), &self.dir) {
            w.append(&stats.row(unix_millis())).map_err(io_err(dir))?;
        }
        Ok(true)
    }

    fn write_reports<M: Mode>(&self, crashes: &CrashStore<Vec<M::Unit>>, mode: &M) -> Result<(), EngineError> {
        let Some(dir) = &self.dir else {
            return Ok(());
        };
        for report in crashes.reports() {
            let d = dir.join(CRASHES_DIR).join(report.signature.dir_name());
            write_report(&d, report, |i| {
                let mut buf = Vec::new();
                mode.render(i, &mut buf);
                String::from_utf8_lossy(&buf).into_owned()
            })
            .map_err(io_err(&d))?;
        }
        Ok(())
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> EngineError + '_ {
    move |source| EngineError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Seeds for a token campaign from a preprocessed corpus: every queue file
/// with the mode's extension, ids taken from the file names.
pub fn load_queue<M: Mode>(mode: &M, corpus_dir: &Path) -> Result<Vec<Seed<M::Unit>>, EngineError> {
    let queue = corpus_dir.join(QUEUE_DIR);
    let mut seeds = Vec::new();
    let mut files: Vec<PathBuf> = fs::read_dir(&queue)
        .map_err(io_err(&queue))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == mode.extension()))
        .collect();
    files.sort();
    for (i, path) in files.iter().enumerate() {
        let bytes = fs::read(path).map_err(io_err(path))?;
        seeds.push(Seed {
            id: parse_queue_id(path).unwrap_or(i),
            input: mode.from_file(&bytes),
        });
    }
    Ok(seeds)
}

pub fn parse_queue_id(path: &Path) -> Option<usize> {
    path.file_stem()?.to_str()?.strip_prefix("id_")?.parse().ok()
}
