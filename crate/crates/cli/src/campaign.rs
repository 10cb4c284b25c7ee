//! Preprocessing, fuzzing and replay as library calls.

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use anyhow::{anyhow, Context};
use tlfuzz_core::coverage::DEFAULT_MAP_SIZE;
use tlfuzz_core::engine::{
    fuzz_loop, load_queue, parse_queue_id, ByteMode, CampaignReport, EngineConfig, EngineError,
    Mode, Seed, StopReason, TokenMode, BYTE_MODE_MAX_LEN,
};
use tlfuzz_core::executor::{ExecStatus, InProcessTarget, ProcessTarget, Target, TargetConfig};
use tlfuzz_core::mutator::MutationBudget;
use tlfuzz_core::preproc::{
    load_corpus, load_originals, parse_extra_tokens, preprocess_corpus, EncodedInput, PreprocError,
    TokenMap, QUEUE_DIR, TOKENMAP_FILE,
};
use tlfuzz_core::stats::CampaignStats;
use tlfuzz_core::triage::{minimize, write_report, CrashSignature, CRASHES_DIR};
use tlfuzz_core::{decode, lex, Token};

use crate::CliError;

/// Written next to `stats.csv` so reports can tell campaigns apart.
pub const CAMPAIGN_FILE: &str = "campaign.txt";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuzzMode {
    Token,
    Byte,
}

impl FuzzMode {
    pub fn as_str(self) -> &'static str {
        match self {
            FuzzMode::Token => "token",
            FuzzMode::Byte => "byte",
        }
    }
}

impl fmt::Display for FuzzMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FuzzMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "token" => Ok(FuzzMode::Token),
            "byte" => Ok(FuzzMode::Byte),
            other => Err(format!("unknown mode {other:?} (expected token or byte)")),
        }
    }
}

/// Where programs run.
#[derive(Debug, Clone)]
pub enum TargetSpec {
    /// A separate process speaking the EXEC/STAT protocol.
    Process(TargetConfig),
    /// MiniJS linked into the fuzzer; no isolation and no timeouts.
    InProcess(minijs::Options),
}

impl TargetSpec {
    pub fn map_size(&self) -> usize {
        match self {
            TargetSpec::Process(c) => c.map_size,
            TargetSpec::InProcess(_) => DEFAULT_MAP_SIZE,
        }
    }

    pub fn build(&self, count: usize) -> Result<Vec<Box<dyn Target>>, CliError> {
        let mut out: Vec<Box<dyn Target>> = Vec::with_capacity(count);
        for _ in 0..count {
            match self {
                TargetSpec::Process(config) => {
                    config.validate().map_err(|e| CliError::usage(anyhow!(e)))?;
                    let t = ProcessTarget::spawn(config.clone()).map_err(CliError::target)?;
                    out.push(Box::new(t));
                }
                TargetSpec::InProcess(opts) => {
                    out.push(Box::new(InProcessTarget::new(
                        minijs::harness(*opts),
                        DEFAULT_MAP_SIZE,
                    )));
                }
            }
        }
        Ok(out)
    }
}

/// The `minijs` executable installed next to the running binary.
pub fn default_target_path() -> PathBuf {
    let exe = std::env::current_exe().unwrap_or_default();
    exe.with_file_name(format!("minijs{}", std::env::consts::EXE_SUFFIX))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreprocessSummary {
    pub seeds: usize,
    pub skipped: Vec<(String, String)>,
    pub tokens: usize,
}

impl fmt::Display for PreprocessSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} seeds, {} tokens", self.seeds, self.tokens)?;
        if !self.skipped.is_empty() {
            write!(f, ", {} skipped", self.skipped.len())?;
        }
        Ok(())
    }
}

pub fn preprocess(
    seeds: &Path,
    corpus: &Path,
    rng_seed: u64,
    extra_tokens: Option<&Path>,
) -> Result<PreprocessSummary, CliError> {
    let extra: Vec<Token> = match extra_tokens {
        Some(p) => {
            let text = fs::read_to_string(p)
                .with_context(|| format!("reading extra tokens {}", p.display()))
                .map_err(CliError::usage)?;
            parse_extra_tokens(&text)
        }
        None => Vec::new(),
    };
    let outcome = preprocess_corpus(seeds, corpus, rng_seed, &extra).map_err(CliError::usage)?;
    for (name, reason) in &outcome.skipped {
        log::warn!("skipped seed {name}: {reason}");
    }
    Ok(PreprocessSummary {
        seeds: outcome.seeds.len(),
        skipped: outcome.skipped,
        tokens: outcome.map.len(),
    })
}

#[derive(Debug, Clone)]
pub struct FuzzOptions {
    pub corpus: PathBuf,
    pub target: TargetSpec,
    pub mode: FuzzMode,
    pub engine: EngineConfig,
    pub budget: MutationBudget,
    /// Minimize one witness per bug after the campaign.
    pub minimize: bool,
}

impl FuzzOptions {
    pub fn new(corpus: impl Into<PathBuf>, target: TargetSpec, mode: FuzzMode) -> Self {
        FuzzOptions {
            corpus: corpus.into(),
            target,
            mode,
            engine: EngineConfig::default(),
            budget: MutationBudget::default(),
            minimize: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FuzzSummary {
    pub mode: FuzzMode,
    pub stats: CampaignStats,
    pub dry_run: CampaignStats,
    pub stop: StopReason,
    /// Distinct assertion ids, ascending.
    pub bug_ids: Vec<u16>,
    /// First exec at which each bug was seen, parallel to `bug_ids`.
    pub first_seen: Vec<u64>,
    pub timed_out: bool,
    pub queue_len: usize,
    pub elapsed: Duration,
    pub exec_errors: u64,
}

impl FuzzSummary {
    pub fn found(&self, id: u16) -> bool {
        self.bug_ids.contains(&id)
    }

    pub fn exit_code(&self) -> i32 {
        match self.stop {
            StopReason::TargetFailure(_) => crate::exit::TARGET_FAILURE,
            _ if !self.bug_ids.is_empty() => crate::exit::CRASH_FOUND,
            _ => crate::exit::SUCCESS,
        }
    }
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.stats;
        writeln!(
            f,
            "mode {}: {} execs in {:.1}s, parse_ok {:.2}%, edges {} (dry run {}), queue {}",
            self.mode,
            s.total_execs,
            self.elapsed.as_secs_f64(),
            100.0 * s.parse_rate(),
            s.edges_seen,
            self.dry_run.edges_seen,
            self.queue_len
        )?;
        if self.bug_ids.is_empty() {
            write!(f, "no crashes")?;
        } else {
            let names: Vec<String> = self
                .bug_ids
                .iter()
                .zip(&self.first_seen)
                .map(|(id, at)| match minijs::Bug::from_id(*id) {
                    Some(b) => format!("{id} ({}) at exec {at}", b.name()),
                    None => format!("{id} at exec {at}"),
                })
                .collect();
            write!(f, "unique crashes {}: {}", names.len(), names.join(", "))?;
        }
        if let StopReason::TargetFailure(why) = &self.stop {
            write!(f, "\nstopped early: {why}")?;
        }
        Ok(())
    }
}

fn engine_error(e: EngineError) -> CliError {
    match e {
        EngineError::Target(e) => CliError::target(e),
        other => CliError::usage(other),
    }
}

fn corpus_error(e: PreprocError) -> CliError {
    CliError::usage(anyhow!(e).context("loading corpus (run `tlfuzz preprocess` first)"))
}

pub fn run_fuzz(
    opts: &FuzzOptions,
    progress: &mut dyn FnMut(&CampaignStats),
) -> Result<FuzzSummary, CliError> {
    if opts.engine.workers == 0 {
        return Err(CliError::usage(anyhow!("--workers must be at least 1")));
    }
    opts.budget
        .validate()
        .map_err(|e| CliError::usage(anyhow!(e)))?;
    let map = TokenMap::load(&opts.corpus.join(TOKENMAP_FILE)).map_err(corpus_error)?;
    write_campaign_file(opts)?;
    match opts.mode {
        FuzzMode::Token => {
            let mode = TokenMode::new(map, opts.budget);
            let seeds = load_queue(&mode, &opts.corpus).map_err(engine_error)?;
            campaign(&mode, seeds, opts, progress)
        }
        FuzzMode::Byte => {
            let originals = load_originals(&opts.corpus).map_err(corpus_error)?;
            let mode = if originals.is_empty() {
                ByteMode::from_token_map(&map)
            } else {
                ByteMode::new(source_dictionary(&originals), BYTE_MODE_MAX_LEN)
            };
            let mut seeds = load_queue(&mode, &opts.corpus).map_err(engine_error)?;
            if seeds.is_empty() && !originals.is_empty() {
                // first byte campaign on this corpus: start from the seed sources
                seeds = originals
                    .into_iter()
                    .enumerate()
                    .map(|(i, (name, input))| Seed {
                        id: parse_queue_id(Path::new(&name)).unwrap_or(i),
                        input,
                    })
                    .collect();
            } else if seeds.is_empty() {
                // corpus without originals: fall back to the decoded seeds
                let token = TokenMode::new(map, opts.budget);
                seeds = load_queue(&token, &opts.corpus)
                    .map_err(engine_error)?
                    .into_iter()
                    .map(|s| Seed {
                        id: s.id,
                        input: decode(&EncodedInput::new(s.input), token.map()).into_bytes(),
                    })
                    .collect();
            }
            campaign(&mode, seeds, opts, progress)
        }
    }
}

/// Every distinct token text of the seed sources, in first-seen order.
/// Sources that do not lex contribute nothing.
fn source_dictionary(sources: &[(String, Vec<u8>)]) -> Vec<Vec<u8>> {
    let mut seen = HashSet::new();
    let mut dict = Vec::new();
    for (_, bytes) in sources {
        let Ok(seq) = lex(&String::from_utf8_lossy(bytes)) else {
            continue;
        };
        for tok in seq.iter() {
            if seen.insert(tok.text.as_str().to_owned()) {
                dict.push(tok.text.as_bytes().to_vec());
            }
        }
    }
    dict
}

fn write_campaign_file(opts: &FuzzOptions) -> Result<(), CliError> {
    let path = opts.corpus.join(CAMPAIGN_FILE);
    let text = format!(
        "mode={}\nrng_seed={}\nworkers={}\n",
        opts.mode, opts.engine.rng_seed, opts.engine.workers
    );
    fs::write(&path, text)
        .with_context(|| format!("writing {}", path.display()))
        .map_err(CliError::usage)
}

fn campaign<M: Mode>(
    mode: &M,
    seeds: Vec<Seed<M::Unit>>,
    opts: &FuzzOptions,
    progress: &mut dyn FnMut(&CampaignStats),
) -> Result<FuzzSummary, CliError>
where
    M::Unit: Clone,
{
    if seeds.is_empty() {
        return Err(CliError::usage(anyhow!(
            "no seeds in {}",
            opts.corpus.join(QUEUE_DIR).display()
        )));
    }
    let targets = opts.target.build(opts.engine.workers)?;
    let mut report = fuzz_loop(
        mode,
        seeds,
        targets,
        &opts.engine,
        Some(&opts.corpus),
        progress,
    )
    .map_err(engine_error)?;
    if opts.minimize && !matches!(report.stop, StopReason::TargetFailure(_)) {
        minimize_crashes(mode, &mut report, &opts.target, &opts.corpus)?;
    }
    let bug_ids = report.crashes.bug_ids();
    let first_seen = bug_ids
        .iter()
        .map(|&id| {
            report
                .crashes
                .get(&CrashSignature::crash(id))
                .map_or(0, |r| r.first_seen_exec)
        })
        .collect();
    Ok(FuzzSummary {
        mode: opts.mode,
        stats: report.stats,
        dry_run: report.dry_run_stats,
        stop: report.stop.clone(),
        bug_ids,
        first_seen,
        timed_out: report.crashes.get(&CrashSignature::timeout()).is_some(),
        queue_len: report.queue.len(),
        elapsed: report.elapsed,
        exec_errors: report.exec_errors,
    })
}

/// Shrinks the first witness of every bug and rewrites its report.
pub fn minimize_crashes<M: Mode>(
    mode: &M,
    report: &mut CampaignReport<M::Unit>,
    spec: &TargetSpec,
    corpus: &Path,
) -> Result<(), CliError>
where
    M::Unit: Clone,
{
    let sigs: Vec<CrashSignature> = report
        .crashes
        .reports()
        .map(|r| r.signature)
        .filter(|s| s.is_bug())
        .collect();
    if sigs.is_empty() {
        return Ok(());
    }
    let mut target = spec.build(1)?.pop().expect("one target");
    let mut buf = Vec::new();
    for sig in sigs {
        let witness = report
            .crashes
            .get(&sig)
            .expect("signature present")
            .witness
            .clone();
        let result = minimize(
            &witness,
            |u| mode.is_separator(u),
            |candidate| {
                mode.render(candidate, &mut buf);
                match target.run(&buf) {
                    Ok(r) => CrashSignature::of(r.status, r.assertion_id) == Some(sig),
                    Err(e) => {
                        log::warn!("target error while minimizing: {e}");
                        false
                    }
                }
            },
        );
        match result {
            Ok(min) => {
                let entry = report.crashes.get_mut(&sig).expect("signature present");
                entry.minimized_witness = Some(min);
                let dir = corpus.join(CRASHES_DIR).join(sig.dir_name());
                write_report(&dir, entry, |i| {
                    let mut out = Vec::new();
                    mode.render(i, &mut out);
                    String::from_utf8_lossy(&out).into_owned()
                })
                .with_context(|| format!("writing report in {}", dir.display()))
                .map_err(CliError::usage)?;
            }
            Err(_) => log::warn!(
                "witness for {} does not reproduce; left as is",
                sig.dir_name()
            ),
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayResult {
    pub status: ExecStatus,
    pub assertion_id: Option<u16>,
    pub text: String,
}

impl fmt::Display for ReplayResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "status: {}", self.status.as_str())?;
        if let Some(id) = self.assertion_id {
            write!(f, "\nassertion: {id}")?;
            if let Some(b) = minijs::Bug::from_id(id) {
                write!(f, " ({})", b.name())?;
            }
        }
        Ok(())
    }
}

/// Runs one input. `.tok` files are decoded with the corpus token map;
/// anything else is sent as program text.
pub fn replay(
    corpus: Option<&Path>,
    input: &Path,
    spec: &TargetSpec,
) -> Result<ReplayResult, CliError> {
    let bytes = fs::read(input)
        .with_context(|| format!("reading {}", input.display()))
        .map_err(CliError::usage)?;
    let text = if input.extension().is_some_and(|e| e == "tok") {
        let corpus = corpus
            .ok_or_else(|| CliError::usage(anyhow!("--corpus is needed to decode .tok inputs")))?;
        let (map, _) = load_corpus(corpus).map_err(corpus_error)?;
        decode(&EncodedInput::from_bytes(&bytes), &map)
    } else {
        String::from_utf8_lossy(&bytes).into_owned()
    };
    let mut target = spec.build(1)?.pop().expect("one target");
    let r = target.run(text.as_bytes()).map_err(CliError::target)?;
    Ok(ReplayResult {
        status: r.status,
        assertion_id: r.assertion_id,
        text,
    })
}
