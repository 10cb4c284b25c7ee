//! MiniJS command line: run a file, or serve fuzzer requests with `--serve`.

use std::fs;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use minijs::serve::{serve, ServeConfig, ServeEnd};
use minijs::{execute, Options, Outcome};
use tlfuzz_core::coverage::DEFAULT_MAP_SIZE;
use tlfuzz_core::executor::CRASH_EXIT_CODE;

#[derive(Parser, Debug)]
#[command(name = "minijs", version, about = "Run MiniJS programs")]
struct Args {
    /// Program file; reads stdin when omitted.
    file: Option<PathBuf>,
    /// Speak the EXEC/STAT protocol on stdin/stdout.
    #[arg(long)]
    serve: bool,
    /// Print the planted bugs and exit.
    #[arg(long)]
    list_bugs: bool,
    /// Turn planted assertions into no-ops.
    #[arg(long)]
    disarm: bool,
    /// Coverage map size in bytes (power of two).
    #[arg(long, default_value_t = DEFAULT_MAP_SIZE)]
    map_size: usize,
    /// Evaluation step limit per program.
    #[arg(long)]
    steps: Option<u64>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_bugs {
        print!("{}", minijs::list_bugs());
        return ExitCode::SUCCESS;
    }
    let mut options = Options {
        disarm: args.disarm,
        ..Options::default()
    };
    if let Some(s) = args.steps {
        options.limits.steps = s;
    }

    if args.serve {
        if !args.map_size.is_power_of_two() {
            eprintln!("minijs: --map-size must be a power of two");
            return ExitCode::from(2);
        }
        let config = ServeConfig {
            map_size: args.map_size,
            options,
        };
        let mut input = BufReader::new(io::stdin().lock());
        let mut output = io::stdout().lock();
        return match serve(&mut input, &mut output, &config) {
            Ok(ServeEnd::Closed) => ExitCode::SUCCESS,
            Ok(ServeEnd::Crashed) => ExitCode::from(CRASH_EXIT_CODE as u8),
            Err(e) => {
                eprintln!("minijs: {e}");
                ExitCode::from(1)
            }
        };
    }

    let src = match &args.file {
        Some(p) => fs::read(p),
        None => {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf).map(|_| buf)
        }
    };
    let src = match src {
        Ok(s) => s,
        Err(e) => {
            eprintln!("minijs: {e}");
            return ExitCode::from(2);
        }
    };
    let run = execute(&src, None, &options);
    let mut out = BufWriter::new(io::stdout().lock());
    let _ = out.write_all(&run.output);
    let _ = out.flush();
    match run.outcome {
        Outcome::Clean => ExitCode::SUCCESS,
        Outcome::RuntimeError(e) => {
            eprintln!("runtime error: {e}");
            ExitCode::from(1)
        }
        Outcome::ParseError(e) => {
            eprintln!("parse error: {e}");
            ExitCode::from(2)
        }
        Outcome::Assertion(bug) => {
            eprintln!("assertion failed: {} ({})", bug.name(), bug.id());
            ExitCode::from(CRASH_EXIT_CODE as u8)
        }
    }
}
