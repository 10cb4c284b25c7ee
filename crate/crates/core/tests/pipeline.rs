use std::fs;

use proptest::prelude::*;
use tlfuzz_core::coverage::record_edge;
use tlfuzz_core::engine::{fuzz_loop, load_queue, EngineConfig, TokenMode};
use tlfuzz_core::executor::{ExecStatus, HarnessOutcome, InProcessTarget, Target};
use tlfuzz_core::mutator::MutationBudget;
use tlfuzz_core::preproc::{load_corpus, load_originals, preprocess_corpus, TOKENMAP_FILE};
use tlfuzz_core::stats::{read_stats, STATS_FILE};
use tlfuzz_core::triage::crash_dir_ids;
use tlfuzz_core::{decode, lex, render, TokenMap};

const MAP_SIZE: usize = 1 << 12;

/// Edges between consecutive token texts; `while while` asserts with id 7
/// and anything containing `@` fails to parse.
fn toy_harness(program: &[u8], trace: &mut [u8]) -> HarnessOutcome {
    let text = String::from_utf8_lossy(program);
    if text.contains('@') {
        return HarnessOutcome { status: ExecStatus::ParseError, assertion_id: None };
    }
    let mut prev = 0u32;
    let mut last = "";
    for word in text.split_whitespace() {
        let loc = word.bytes().fold(17u32, |h, b| h.wrapping_mul(31).wrapping_add(b as u32));
        record_edge(trace, prev, loc);
        prev = loc;
        if last == "while" && word == "while" {
            return HarnessOutcome { status: ExecStatus::Crash, assertion_id: Some(7) };
        }
        last = word;
    }
    HarnessOutcome { status: ExecStatus::ParseOk, assertion_id: None }
}

fn toy_target() -> Vec<Box<dyn Target>> {
    vec![Box::new(InProcessTarget::new(toy_harness, MAP_SIZE))]
}

fn write_seeds(dir: &std::path::Path) {
    fs::create_dir_all(dir).unwrap();
    fs::write(dir.join("a.js"), "while (total > 3) { total = total - 1; }\n").unwrap();
    fs::write(dir.join("b.js"), "let items = [1, 2, 100];\nprint(items.length);\n").unwrap();
    fs::write(dir.join("c.js"), "if (x) { print(\"done\"); } else { x = 6; }\n").unwrap();
}

#[test]
fn corpus_layout_round_trips() {
    let tmp = tempfile::tempdir().unwrap();
    let seeds = tmp.path().join("seeds");
    let corpus = tmp.path().join("corpus");
    write_seeds(&seeds);
    let outcome = preprocess_corpus(&seeds, &corpus, 3, &[]).unwrap();
    assert_eq!(outcome.inputs.len(), 3);

    let (map, inputs) = load_corpus(&corpus).unwrap();
    assert_eq!(map, outcome.map);
    assert_eq!(map, TokenMap::load(&corpus.join(TOKENMAP_FILE)).unwrap());
    for ((_, loaded), seed) in inputs.iter().zip(&outcome.seeds) {
        let text = decode(loaded, &map);
        assert_eq!(text, render(&seed.tokens));
        assert_eq!(lex(&text).unwrap(), seed.tokens);
    }
    // 100 renumbers to 127, 6 to 5; `total` and `x` leave the source.
    let all: Vec<String> = inputs.iter().map(|(_, i)| decode(i, &map)).collect();
    assert!(all[1].contains("127") && !all[1].contains("100"));
    assert!(all[2].contains(" 5 ") && !all[2].contains(" 6 "));
    assert!(all.iter().all(|t| !t.contains("total") && !t.contains(" x ")));
    assert!(all[1].contains("print") && all[1].contains("length"));

    let originals = load_originals(&corpus).unwrap();
    let names: Vec<&str> = originals.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, ["id_000000.js", "id_000001.js", "id_000002.js"]);
    assert_eq!(originals[1].1, fs::read(seeds.join("b.js")).unwrap());

    // rerunning over fewer seeds leaves no stale originals behind
    fs::remove_file(seeds.join("c.js")).unwrap();
    preprocess_corpus(&seeds, &corpus, 3, &[]).unwrap();
    assert_eq!(load_originals(&corpus).unwrap().len(), 2);
}

#[test]
fn token_campaign_finds_planted_assertion() {
    let tmp = tempfile::tempdir().unwrap();
    let seeds = tmp.path().join("seeds");
    let corpus = tmp.path().join("corpus");
    write_seeds(&seeds);
    preprocess_corpus(&seeds, &corpus, 0, &[]).unwrap();
    let (map, _) = load_corpus(&corpus).unwrap();
    let mode = TokenMode::new(map, MutationBudget::default());
    let queue = load_queue(&mode, &corpus).unwrap();

    let config = EngineConfig {
        max_execs: Some(20_000),
        checkpoint_execs: Some(1_000),
        ..EngineConfig::default()
    };
    let mut checkpoints = 0;
    let report = fuzz_loop(&mode, queue, toy_target(), &config, Some(&corpus), &mut |_| checkpoints += 1).unwrap();

    assert!(report.found(7));
    assert_eq!(report.stats.unique_crashes, 1);
    assert_eq!(crash_dir_ids(&corpus).unwrap(), vec![7]);
    assert!(report.stats.edges_seen > report.dry_run_stats.edges_seen);

    let rows = read_stats(&corpus.join(STATS_FILE)).unwrap();
    assert_eq!(rows.len(), checkpoints);
    assert!(rows.len() > 2);
    assert_eq!(rows.last().unwrap().total_execs, report.stats.total_execs);
    assert!(rows.windows(2).all(|w| w[0].edges_seen <= w[1].edges_seen));
    let s = &report.stats;
    assert_eq!(s.total_execs, s.parse_ok + s.parse_error + s.crashes + s.runtime_error + s.timeouts);
    // trim executions are counted in the totals but not triaged
    let hits: u64 = report.crashes.reports().map(|r| r.hits).sum();
    assert!(hits > 0 && hits <= s.crashes + s.timeouts);
}

/// Two-token programs starting with `while` assert. Mutants keep the length
/// of their parent within a dozen executions, so only trimming can get there.
fn short_x_harness(program: &[u8], trace: &mut [u8]) -> HarnessOutcome {
    let text = String::from_utf8_lossy(program);
    let words: Vec<&str> = text.split_whitespace().collect();
    let mut prev = 0u32;
    for (i, w) in words.iter().enumerate() {
        let loc = (i as u32 + 1) * 1000 + w.bytes().map(u32::from).sum::<u32>();
        record_edge(trace, prev, loc);
        prev = loc;
    }
    if words.len() == 2 && words[0] == "while" {
        return HarnessOutcome { status: ExecStatus::Crash, assertion_id: Some(5) };
    }
    HarnessOutcome { status: ExecStatus::ParseOk, assertion_id: None }
}

#[test]
fn crashes_while_trimming_are_counted_not_triaged() {
    let tmp = tempfile::tempdir().unwrap();
    let seeds = tmp.path().join("seeds");
    let corpus = tmp.path().join("corpus");
    fs::create_dir_all(&seeds).unwrap();
    fs::write(seeds.join("a.js"), "while 1 2").unwrap();
    preprocess_corpus(&seeds, &corpus, 0, &[]).unwrap();
    let (map, _) = load_corpus(&corpus).unwrap();
    let mode = TokenMode::new(map, MutationBudget::default());
    let queue = load_queue(&mode, &corpus).unwrap();
    let config = EngineConfig {
        max_execs: Some(12),
        ..EngineConfig::default()
    };
    let targets: Vec<Box<dyn Target>> = vec![Box::new(InProcessTarget::new(short_x_harness, MAP_SIZE))];
    let report = fuzz_loop(&mode, queue, targets, &config, Some(&corpus), &mut |_| {}).unwrap();
    assert!(report.stats.crashes > 0);
    assert!(!report.found(5));
    assert_eq!(report.stats.unique_crashes, 0);
    assert!(crash_dir_ids(&corpus).unwrap().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Whatever the seed text, preprocessing writes a corpus whose decoded
    /// inputs lex back to the prepared token sequences.
    #[test]
    fn preprocessing_is_stable(
        stmts in prop::collection::vec(
            ("[a-z]{1,6}", 0u64..5_000_000_000, prop::sample::select(vec!["+", "-", "*", "<", "==="])),
            1..12,
        ),
        rng_seed in any::<u64>(),
    ) {
        let tmp = tempfile::tempdir().unwrap();
        let seeds = tmp.path().join("seeds");
        fs::create_dir_all(&seeds).unwrap();
        let src: String = stmts
            .iter()
            .map(|(name, n, op)| format!("let {name}_v = {name}_v {op} {n};\n"))
            .collect();
        fs::write(seeds.join("s.js"), &src).unwrap();
        let a = preprocess_corpus(&seeds, &tmp.path().join("a"), rng_seed, &[]).unwrap();
        let b = preprocess_corpus(&seeds, &tmp.path().join("b"), rng_seed, &[]).unwrap();
        prop_assert_eq!(&a.map, &b.map);
        prop_assert_eq!(&a.inputs, &b.inputs);
        let text = decode(&a.inputs[0], &a.map);
        prop_assert_eq!(lex(&text).unwrap(), a.seeds[0].tokens.clone());
        let names_ok = text.split(' ').filter(|w| w.starts_with("var")).all(|w| {
            w[3..].parse::<u32>().is_ok_and(|k| (1..=15).contains(&k))
        });
        prop_assert!(names_ok, "{}", text);
    }
}
