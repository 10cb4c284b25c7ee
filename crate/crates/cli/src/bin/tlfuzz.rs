use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use tlfuzz::campaign::{self, FuzzMode, FuzzOptions, TargetSpec};
use tlfuzz::report::{self, CorpusSummary};
use tlfuzz::{exit, CliError};
use tlfuzz_core::executor::TargetConfig;

#[derive(Parser, Debug)]
#[command(name = "tlfuzz", version, about = "Token-level coverage-guided fuzzer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tokenize, normalize and encode a seed directory into a corpus.
    Preprocess {
        #[arg(long)]
        seeds: PathBuf,
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        /// File with one extra token per line, added to the token map.
        #[arg(long)]
        extra_tokens: Option<PathBuf>,
    },
    /// Run a fuzzing campaign over a preprocessed corpus.
    Fuzz(FuzzArgs),
    /// Decode and execute one input.
    Replay {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        target: TargetArgs,
        input: PathBuf,
    },
    /// Summarize a corpus's stats and crashes.
    Report {
        #[arg(long)]
        corpus: PathBuf,
        /// Second corpus to compare against.
        #[arg(long)]
        compare: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct TargetArgs {
    /// Target executable; defaults to the `minijs` next to this binary.
    #[arg(long)]
    target: Option<PathBuf>,
    /// Run MiniJS inside the fuzzer process instead of a child process.
    #[arg(long, conflicts_with = "target")]
    in_process: bool,
    #[arg(long, default_value_t = 100)]
    timeout_ms: u64,
}

impl TargetArgs {
    fn spec(&self) -> TargetSpec {
        if self.in_process {
            return TargetSpec::InProcess(minijs::Options::default());
        }
        let path = self
            .target
            .clone()
            .unwrap_or_else(campaign::default_target_path);
        let mut config = TargetConfig::new(path);
        config.timeout = Duration::from_millis(self.timeout_ms);
        TargetSpec::Process(config)
    }
}

#[derive(Args, Debug)]
struct FuzzArgs {
    #[arg(long)]
    corpus: PathBuf,
    #[command(flatten)]
    target: TargetArgs,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    max_execs: Option<u64>,
    #[arg(long)]
    max_seconds: Option<u64>,
    #[arg(long, default_value = "token")]
    mode: FuzzMode,
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    /// Write a stats row each time total executions cross a multiple of N
    /// (default 10000).
    #[arg(long)]
    checkpoint_execs: Option<u64>,
    /// Skip the deterministic overwrite walk.
    #[arg(long)]
    no_walk: bool,
    /// Ceiling on stacked token operations per havoc mutant (power of two,
    /// default 2).
    #[arg(long)]
    havoc_stack_max: Option<usize>,
    /// Keep crash witnesses as found.
    #[arg(long)]
    no_minimize: bool,
}

fn run_fuzz(args: FuzzArgs) -> Result<i32, CliError> {
    let mut opts = FuzzOptions::new(args.corpus, args.target.spec(), args.mode);
    opts.engine.workers = args.workers;
    opts.engine.max_execs = args.max_execs;
    opts.engine.max_duration = args.max_seconds.map(Duration::from_secs);
    opts.engine.rng_seed = args.rng_seed;
    opts.engine.deterministic_walk = !args.no_walk;
    if args.checkpoint_execs.is_some() {
        opts.engine.checkpoint_execs = args.checkpoint_execs;
    }
    if let Some(n) = args.havoc_stack_max {
        opts.budget.havoc_stack_max = n;
    }
    opts.minimize = !args.no_minimize;

    let live = io::stderr().is_terminal();
    let mut progress = |s: &tlfuzz_core::stats::CampaignStats| {
        let line = format!(
            "execs {}  parse_ok {:.2}%  edges {}  unique crashes {}",
            s.total_execs,
            100.0 * s.parse_rate(),
            s.edges_seen,
            s.unique_crashes
        );
        let mut err = io::stderr().lock();
        if live {
            let _ = write!(err, "\r{line}\x1b[K");
        } else {
            let _ = writeln!(err, "{line}");
        }
    };
    let summary = campaign::run_fuzz(&opts, &mut progress)?;
    if live {
        eprintln!();
    }
    println!("{summary}");
    Ok(summary.exit_code())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Preprocess {
            seeds,
            corpus,
            rng_seed,
            extra_tokens,
        } => {
            let s = campaign::preprocess(&seeds, &corpus, rng_seed, extra_tokens.as_deref())?;
            println!("{s}");
            Ok(exit::SUCCESS)
        }
        Command::Fuzz(args) => run_fuzz(args),
        Command::Replay {
            corpus,
            target,
            input,
        } => {
            let r = campaign::replay(corpus.as_deref(), &input, &target.spec())?;
            println!("{r}");
            Ok(exit::SUCCESS)
        }
        Command::Report { corpus, compare } => {
            let a = CorpusSummary::load(&corpus).map_err(CliError::usage)?;
            let b = compare
                .map(|c| CorpusSummary::load(&c))
                .transpose()
                .map_err(CliError::usage)?;
            println!("{}", report::render(&a, b.as_ref()));
            Ok(exit::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("tlfuzz: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
