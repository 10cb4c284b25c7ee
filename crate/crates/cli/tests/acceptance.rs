//! Acceptance suite. Every criterion runs even if an earlier one fails; each
//! prints one PASS/FAIL line to stderr (outside the test harness capture) and
//! the test fails at the end if any criterion did.
//!
//! The fuzzing campaigns run MiniJS in process, where only the step limit
//! bounds a run and results cannot depend on machine load. The
//! child-process executor is covered by `process_target.rs` and `cli.rs`.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use minijs::{execute, Bug, Options};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tlfuzz::campaign::{self, FuzzMode, FuzzOptions, FuzzSummary, TargetSpec};
use tlfuzz_core::codec::decode_tokens;
use tlfuzz_core::executor::{ExecStatus, InProcessTarget, Target};
use tlfuzz_core::mutator::{MutationBudget, TokenMutator};
use tlfuzz_core::preproc::{build_token_map, list_seed_files, prepare_seed, QUEUE_DIR};
use tlfuzz_core::stats::{read_stats, STATS_FILE};
use tlfuzz_core::token_model::nearest_canonical;
use tlfuzz_core::triage::{crash_dir_ids, CRASHES_DIR};
use tlfuzz_core::{decode, encode, lex, EncodedInput, TokenMap, TokenSeq};

const BIG_CAMPAIGNS: u64 = 5;
const BIG_EXECS: u64 = 1_000_000;
const BIG_TIME: Duration = Duration::from_secs(20 * 60);

fn seeds_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../seeds")
}

fn line(text: &str) {
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{text}");
}

type Outcome = Result<String, String>;

struct Suite {
    failed: Vec<u32>,
}

impl Suite {
    fn run(&mut self, n: u32, name: &str, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => line(&format!(
                "criterion {n:>2} PASS  {name}: {detail} [{secs:.0}s]"
            )),
            Err(detail) => {
                self.failed.push(n);
                line(&format!(
                    "criterion {n:>2} FAIL  {name}: {detail} [{secs:.0}s]"
                ));
            }
        }
    }
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// A fresh corpus preprocessed from the bundled seeds.
fn corpus(root: &Path, name: &str) -> PathBuf {
    let dir = root.join(name);
    let s = campaign::preprocess(&seeds_dir(), &dir, 0, None).expect("preprocess bundled seeds");
    assert_eq!(s.seeds, 100);
    dir
}

fn fuzz(
    dir: &Path,
    mode: FuzzMode,
    rng_seed: u64,
    execs: u64,
    time: Option<Duration>,
) -> FuzzSummary {
    let mut opts = FuzzOptions::new(dir, TargetSpec::InProcess(Options::default()), mode);
    opts.engine.rng_seed = rng_seed;
    opts.engine.max_execs = Some(execs);
    opts.engine.max_duration = time;
    campaign::run_fuzz(&opts, &mut |_| {}).expect("campaign runs")
}

struct BigRun {
    summary: FuzzSummary,
    triage: Result<(), String>,
}

/// Unique crash count against the ids that really fire: every saved
/// artifact is re-executed and must report its directory's id.
fn triage_check(dir: &Path, s: &FuzzSummary) -> Result<(), String> {
    let dirs = crash_dir_ids(dir).map_err(|e| e.to_string())?;
    let mut fired = BTreeSet::new();
    for id in &dirs {
        let d = dir.join(CRASHES_DIR).join(id.to_string());
        for e in fs::read_dir(&d).map_err(|e| e.to_string())? {
            let path = e.map_err(|e| e.to_string())?.path();
            if path.extension().is_some_and(|x| x == "js") {
                let text = fs::read(&path).map_err(|e| e.to_string())?;
                let got = execute(&text, None, &Options::default())
                    .outcome
                    .assertion_id();
                if got != Some(*id) {
                    return Err(format!("{} replays to {got:?}", path.display()));
                }
                fired.insert(*id);
            }
        }
    }
    let fired: Vec<u16> = fired.into_iter().collect();
    let last = read_stats(&dir.join(STATS_FILE)).map_err(|e| e.to_string())?;
    let csv_unique = last.last().map_or(0, |r| r.unique_crashes);
    if s.stats.unique_crashes as usize != fired.len()
        || csv_unique as usize != fired.len()
        || s.bug_ids != fired
        || dirs != fired
    {
        return Err(format!(
            "unique_crashes {} (csv {csv_unique}), reported {:?}, directories {:?}, replayed {:?}",
            s.stats.unique_crashes, s.bug_ids, dirs, fired
        ));
    }
    Ok(())
}

fn big_campaigns(root: &Path, mode: FuzzMode) -> Vec<BigRun> {
    (1..=BIG_CAMPAIGNS)
        .map(|seed| {
            let dir = corpus(root, &format!("{mode}_{seed}"));
            let summary = fuzz(&dir, mode, seed, BIG_EXECS, Some(BIG_TIME));
            let triage = triage_check(&dir, &summary);
            line(&format!(
                "    {mode} campaign {seed}: {} execs, parse_ok {:.2}%, bugs {:?}",
                summary.stats.total_execs,
                100.0 * summary.stats.parse_rate(),
                summary.bug_ids
            ));
            fs::remove_dir_all(&dir).ok();
            BigRun { summary, triage }
        })
        .collect()
}

fn found(runs: &[BigRun], bug: Bug) -> usize {
    runs.iter().filter(|r| r.summary.found(bug.id())).count()
}

fn prepared_seeds() -> (Vec<TokenSeq>, TokenMap) {
    let files = list_seed_files(&seeds_dir()).unwrap();
    let seqs: Vec<TokenSeq> = files
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let src = fs::read_to_string(f).unwrap();
            prepare_seed(&f.file_name().unwrap().to_string_lossy(), &src, 0, i)
                .unwrap()
                .tokens
        })
        .collect();
    let map = build_token_map(&seqs, &[]).unwrap();
    (seqs, map)
}

/// Independent oracle: the pool written out directly, then a linear scan.
fn canonical_oracle(n: u64, pool: &[u64]) -> u64 {
    let mut best = pool[0];
    for &c in pool {
        let (d, bd) = (c.abs_diff(n), best.abs_diff(n));
        if d < bd || (d == bd && c < best) {
            best = c;
        }
    }
    best
}

#[test]
fn acceptance() {
    let tmp = tempfile::tempdir().unwrap();
    let root = tmp.path();
    let mut suite = Suite { failed: Vec::new() };

    // 1 and 7 share the 200k token campaign.
    let c1_dir = corpus(root, "c1_token");
    let mut c1_token = None;
    suite.run(1, "parse-rate advantage", || {
        let token = fuzz(&c1_dir, FuzzMode::Token, 0, 200_000, None);
        let byte_dir = corpus(root, "c1_byte");
        let byte = fuzz(&byte_dir, FuzzMode::Byte, 0, 200_000, None);
        let (t, b) = (token.stats.parse_rate(), byte.stats.parse_rate());
        let ratio = if b > 0.0 { t / b } else { f64::INFINITY };
        let detail = format!(
            "token {:.2}% vs byte {:.2}%, ratio {ratio:.2}x (need >= 2.0x; {:.0}s / {:.0}s)",
            100.0 * t,
            100.0 * b,
            token.elapsed.as_secs_f64(),
            byte.elapsed.as_secs_f64()
        );
        c1_token = Some(token);
        check(ratio >= 2.0, detail)
    });

    let token_runs = big_campaigns(root, FuzzMode::Token);
    let byte_runs = big_campaigns(root, FuzzMode::Byte);
    suite.run(2, "syntax-bug discovery", || {
        let t1 = found(&token_runs, Bug::SyntaxAssign);
        let t3 = found(&token_runs, Bug::TrailingExpr);
        let b1 = found(&byte_runs, Bug::SyntaxAssign);
        let b3 = found(&byte_runs, Bug::TrailingExpr);
        check(
            t1 >= 4 && t3 >= 4 && b1 <= 1 && b3 <= 1,
            format!(
                "token finds SYNTAX_ASSIGN {t1}/5, TRAILING_EXPR {t3}/5 (need >= 4); \
                 byte {b1}/5, {b3}/5 (need <= 1)"
            ),
        )
    });
    suite.run(3, "deep-valid-bug discovery", || {
        let t4 = found(&token_runs, Bug::GcShift);
        check(t4 >= 3, format!("token finds GC_SHIFT {t4}/5 (need >= 3)"))
    });

    suite.run(4, "round-trip suite", || {
        let (seqs, map) = prepared_seeds();
        let mut failures = 0;
        for seq in &seqs {
            let enc = encode(seq, &map).map_err(|e| format!("{e:?}"))?;
            let back = lex(&decode(&enc, &map)).map_err(|e| e.to_string())?;
            let again = encode(&back, &map).map_err(|e| format!("{e:?}"))?;
            if back != *seq || again != enc {
                failures += 1;
            }
        }
        check(
            failures == 0,
            format!("{} seeds, {failures} failures", seqs.len()),
        )
    });

    suite.run(5, "renumber oracle", || {
        let mut pool: Vec<u64> = Vec::new();
        for k in 0..=32u32 {
            let p = 1u64 << k;
            pool.extend([p - 1, p, p + 1]);
        }
        pool.sort_unstable();
        pool.dedup();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut inputs: Vec<u64> = pool
            .windows(2)
            .filter(|w| (w[0] + w[1]) % 2 == 0)
            .map(|w| (w[0] + w[1]) / 2)
            .collect();
        let ties = inputs.len();
        while inputs.len() < 10_000 {
            inputs.push(rng.gen_range(0..=1u64 << 33));
        }
        let mismatches = inputs
            .iter()
            .filter(|&&n| nearest_canonical(n) != canonical_oracle(n, &pool))
            .count();
        check(
            mismatches == 0,
            format!(
                "{} inputs ({ties} exact ties), {mismatches} mismatches",
                inputs.len()
            ),
        )
    });

    suite.run(6, "mutation bounds", || {
        let (seqs, map) = prepared_seeds();
        let corpus: Vec<Vec<u16>> = seqs
            .iter()
            .map(|s| encode(s, &map).unwrap().codes)
            .collect();
        let m = TokenMutator::new(&map, MutationBudget::default());
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut bad = Vec::new();
        let decodes =
            |c: &[u16]| decode_tokens(&EncodedInput::new(c.to_vec()), &map).len() == c.len();
        for i in 0..10_000 {
            let src = &corpus[i % corpus.len()];
            let mut c = src.clone();
            m.random_insert(&mut c, &mut rng);
            let d = c.len() - src.len();
            if !(1..=3).contains(&d) || !decodes(&c) {
                bad.push(format!("insert delta {d}"));
            }
            let mut c = src.clone();
            m.random_overwrite(&mut c, &mut rng).unwrap();
            let changed = (0..c.len()).filter(|&j| c[j] != src[j]).collect::<Vec<_>>();
            let span = changed.last().map_or(0, |l| l - changed[0] + 1);
            if c.len() != src.len() || span > 3 || !decodes(&c) {
                bad.push(format!("overwrite span {span}"));
            }
            let mut c = src.clone();
            m.random_replace(&mut c, &mut rng).unwrap();
            let d = c.len().abs_diff(src.len());
            if d > 5 || !decodes(&c) {
                bad.push(format!("replace delta {d}"));
            }
        }
        check(
            bad.is_empty(),
            match bad.first() {
                None => "30000 samples, no violations".to_string(),
                Some(first) => format!("30000 samples, {} violations, first: {first}", bad.len()),
            },
        )
    });

    suite.run(7, "coverage monotonicity and growth", || {
        let token = c1_token.as_ref().ok_or("criterion 1 campaign missing")?;
        let rows = read_stats(&c1_dir.join(STATS_FILE)).map_err(|e| e.to_string())?;
        let monotone = rows.windows(2).all(|w| w[0].edges_seen <= w[1].edges_seen);
        let last = rows.last().map_or(0, |r| r.edges_seen);
        check(
            monotone && last > token.dry_run.edges_seen && last == token.stats.edges_seen,
            format!(
                "{} rows, monotone {monotone}, edges {} -> {last}",
                rows.len(),
                token.dry_run.edges_seen
            ),
        )
    });

    suite.run(8, "determinism", || {
        let mut runs = Vec::new();
        for name in ["det_a", "det_b"] {
            let dir = corpus(root, name);
            fuzz(&dir, FuzzMode::Token, 42, 100_000, None);
            let stats: Vec<_> = read_stats(&dir.join(STATS_FILE))
                .map_err(|e| e.to_string())?
                .iter()
                .map(|r| {
                    (
                        r.total_execs,
                        r.parse_ok,
                        r.parse_error,
                        r.crashes,
                        r.unique_crashes,
                        r.edges_seen,
                    )
                })
                .collect();
            let mut queue: Vec<(String, Vec<u8>)> = fs::read_dir(dir.join(QUEUE_DIR))
                .map_err(|e| e.to_string())?
                .map(|e| {
                    let p = e.unwrap().path();
                    (
                        p.file_name().unwrap().to_string_lossy().into_owned(),
                        fs::read(&p).unwrap(),
                    )
                })
                .collect();
            queue.sort();
            runs.push((stats, queue));
        }
        check(
            runs[0] == runs[1],
            format!(
                "{} stats rows, {} queue files identical: {}",
                runs[0].0.len(),
                runs[0].1.len(),
                runs[0] == runs[1]
            ),
        )
    });

    suite.run(9, "decode totality fuzz", || {
        let (_, map) = prepared_seeds();
        let mut target = InProcessTarget::new(minijs::harness(Options::default()), 1 << 16);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut counts = [0u64; 5];
        let mut codes = Vec::with_capacity(512);
        for _ in 0..1_000_000 {
            codes.clear();
            let len = rng.gen_range(0..=512);
            codes.extend((0..len).map(|_| rng.gen::<u16>()));
            let text = decode(&EncodedInput::new(codes.clone()), &map);
            let r = target.run(text.as_bytes()).map_err(|e| e.to_string())?;
            counts[r.status.code() as usize] += 1;
            if r.status == ExecStatus::Crash && r.assertion_id.and_then(Bug::from_id).is_none() {
                return Err(format!("invalid assertion id {:?}", r.assertion_id));
            }
        }
        let total: u64 = counts.iter().sum();
        check(
            total == 1_000_000,
            format!(
                "{total} arrays executed; ok {} parse_error {} runtime_error {} crash {} timeout {}",
                counts[0], counts[1], counts[2], counts[3], counts[4]
            ),
        )
    });

    suite.run(10, "triage exactness", || {
        let bad: Vec<String> = token_runs
            .iter()
            .chain(&byte_runs)
            .filter_map(|r| r.triage.as_ref().err().cloned())
            .collect();
        check(
            bad.is_empty(),
            if bad.is_empty() {
                format!(
                    "{} campaigns cross-checked",
                    token_runs.len() + byte_runs.len()
                )
            } else {
                bad.join("; ")
            },
        )
    });

    assert!(
        suite.failed.is_empty(),
        "failed criteria: {:?}",
        suite.failed
    );
}
