//! End-to-end runs of the `tlfuzz` and `minijs` binaries.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tlfuzz_core::stats::{read_stats, STATS_FILE};

fn tlfuzz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tlfuzz"))
        .args(args)
        .output()
        .expect("run tlfuzz")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn seeds_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../seeds")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn preprocessed(dir: &Path) -> PathBuf {
    let corpus = dir.join("corpus");
    let o = tlfuzz(&[
        "preprocess",
        "--seeds",
        p(&seeds_dir()),
        "--corpus",
        p(&corpus),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    corpus
}

fn dir_contents(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in fs::read_dir(&d).unwrap() {
            let path = e.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path
                    .strip_prefix(dir)
                    .unwrap()
                    .to_string_lossy()
                    .into_owned();
                out.push((rel, fs::read(&path).unwrap()));
            }
        }
    }
    out.sort();
    out
}

#[test]
fn preprocess_bundled_seeds() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = tmp.path().join("corpus");
    let o = tlfuzz(&[
        "preprocess",
        "--seeds",
        p(&seeds_dir()),
        "--corpus",
        p(&corpus),
    ]);
    assert!(o.status.success());
    let line = stdout(&o);
    let rest = line
        .trim()
        .strip_prefix("100 seeds, ")
        .unwrap_or_else(|| panic!("{line}"));
    let tokens: usize = rest.strip_suffix(" tokens").unwrap().parse().unwrap();
    assert!(tokens > 256, "{tokens}");

    // rerunning into a fresh directory, or over the same one, gives the same bytes
    let first = dir_contents(&corpus);
    let o = tlfuzz(&[
        "preprocess",
        "--seeds",
        p(&seeds_dir()),
        "--corpus",
        p(&corpus),
    ]);
    assert!(o.status.success());
    assert_eq!(dir_contents(&corpus), first);
    let other = tmp.path().join("again");
    tlfuzz(&[
        "preprocess",
        "--seeds",
        p(&seeds_dir()),
        "--corpus",
        p(&other),
    ]);
    assert_eq!(dir_contents(&other), first);
}

#[test]
fn preprocess_errors() {
    let tmp = tempfile::tempdir().unwrap();
    let empty = tmp.path().join("empty");
    fs::create_dir(&empty).unwrap();
    let o = tlfuzz(&[
        "preprocess",
        "--seeds",
        p(&empty),
        "--corpus",
        p(&tmp.path().join("c")),
    ]);
    assert_eq!(o.status.code(), Some(2));

    let junk = tmp.path().join("junk");
    fs::create_dir(&junk).unwrap();
    fs::write(junk.join("a.js"), [0xff, 0x00, 0x80, b'#']).unwrap();
    let o = tlfuzz(&[
        "preprocess",
        "--seeds",
        p(&junk),
        "--corpus",
        p(&tmp.path().join("c")),
    ]);
    assert_eq!(o.status.code(), Some(2));

    let o = tlfuzz(&["preprocess", "--corpus", "x"]);
    assert_eq!(o.status.code(), Some(2));
}

fn stats_columns(corpus: &Path) -> Vec<[u64; 6]> {
    read_stats(&corpus.join(STATS_FILE))
        .unwrap()
        .iter()
        .map(|r| {
            [
                r.total_execs,
                r.parse_ok,
                r.parse_error,
                r.crashes,
                r.unique_crashes,
                r.edges_seen,
            ]
        })
        .collect()
}

fn queue_names(corpus: &Path) -> Vec<String> {
    let mut v: Vec<String> = fs::read_dir(corpus.join("queue"))
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    v.sort();
    v
}

#[test]
fn fuzz_through_child_processes_is_reproducible() {
    let tmp = tempfile::tempdir().unwrap();
    let base = preprocessed(tmp.path());
    let mut runs = Vec::new();
    for name in ["a", "b"] {
        let corpus = tmp.path().join(name);
        fs::create_dir(&corpus).unwrap();
        for (rel, bytes) in dir_contents(&base) {
            let path = corpus.join(rel);
            fs::create_dir_all(path.parent().unwrap()).unwrap();
            fs::write(path, bytes).unwrap();
        }
        let o = tlfuzz(&[
            "fuzz",
            "--corpus",
            p(&corpus),
            "--max-execs",
            "3000",
            "--rng-seed",
            "5",
            "--checkpoint-execs",
            "500",
        ]);
        assert!(
            matches!(o.status.code(), Some(0 | 1)),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(
            stdout(&o).contains("mode token: 3000 execs"),
            "{}",
            stdout(&o)
        );
        runs.push((stats_columns(&corpus), queue_names(&corpus)));
    }
    assert_eq!(runs[0], runs[1]);
    let stats = &runs[0].0;
    assert!(stats.len() >= 2);
    assert!(stats.windows(2).all(|w| w[0][5] <= w[1][5]));
    for s in stats {
        assert!(s[1] + s[2] + s[3] <= s[0]);
    }
}

#[test]
fn fuzz_appends_and_report_is_conservative() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = preprocessed(tmp.path());
    for _ in 0..2 {
        let o = tlfuzz(&[
            "fuzz",
            "--in-process",
            "--corpus",
            p(&corpus),
            "--max-execs",
            "2000",
            "--mode",
            "byte",
        ]);
        assert!(matches!(o.status.code(), Some(0 | 1)));
    }
    let rows = read_stats(&corpus.join(STATS_FILE)).unwrap();
    // two runs appended; the second resumes from the byte queue of the first
    assert_eq!(rows[0].total_execs, 100);
    assert_eq!(
        rows.windows(2)
            .filter(|w| w[1].total_execs < w[0].total_execs)
            .count(),
        1
    );
    let last = *rows.last().unwrap();
    assert_eq!(last.total_execs, 2000);

    let o = tlfuzz(&["report", "--corpus", p(&corpus)]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("mode: byte"), "{text}");
    // recompute the table from the last stats row
    let pct = |n: u64| format!("{:.2}%", 100.0 * n as f64 / last.total_execs as f64);
    let mut sum = 0.0;
    for (name, n) in [
        ("parse_ok", last.parse_ok),
        ("parse_error", last.parse_error),
        ("crashes", last.crashes),
        ("other", last.other()),
    ] {
        let line = text.lines().find(|l| l.starts_with(name)).unwrap();
        assert!(line.ends_with(&pct(n)), "{line}");
        let shown: f64 = line
            .split_whitespace()
            .last()
            .unwrap()
            .trim_end_matches('%')
            .parse()
            .unwrap();
        sum += shown;
    }
    assert!((sum - 100.0).abs() < 0.03, "{sum}");
}

#[test]
fn report_on_empty_corpus() {
    let tmp = tempfile::tempdir().unwrap();
    let o = tlfuzz(&["report", "--corpus", p(tmp.path())]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("no data"));
}

#[test]
fn report_compares_two_corpora() {
    let tmp = tempfile::tempdir().unwrap();
    let mut corpora = Vec::new();
    for (name, ok) in [("token", 300), ("byte", 100)] {
        let c = tmp.path().join(name);
        fs::create_dir(&c).unwrap();
        fs::write(
            c.join(STATS_FILE),
            format!("unix_millis,total_execs,parse_ok,parse_error,crashes,unique_crashes,edges_seen\n1,1000,{ok},500,0,0,10\n"),
        )
        .unwrap();
        fs::write(c.join("campaign.txt"), format!("mode={name}\n")).unwrap();
        corpora.push(c);
    }
    let o = tlfuzz(&[
        "report",
        "--corpus",
        p(&corpora[0]),
        "--compare",
        p(&corpora[1]),
    ]);
    let text = stdout(&o);
    assert!(
        text.contains("parse_ok token 30.00% vs byte 10.00%, ratio 3.00x"),
        "{text}"
    );
}

#[test]
fn crash_in_seeds_gives_exit_one_and_replays() {
    let tmp = tempfile::tempdir().unwrap();
    let seeds = tmp.path().join("seeds");
    fs::create_dir(&seeds).unwrap();
    fs::write(seeds.join("a.js"), "let x = { y = 5 } ;\n").unwrap();
    fs::write(seeds.join("b.js"), "let x = 1 ; print ( x ) ;\n").unwrap();
    let corpus = tmp.path().join("corpus");
    tlfuzz(&["preprocess", "--seeds", p(&seeds), "--corpus", p(&corpus)]);
    let o = tlfuzz(&["fuzz", "--corpus", p(&corpus), "--max-execs", "500"]);
    assert_eq!(
        o.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(
        stdout(&o).contains("1 (BUG_SYNTAX_ASSIGN)"),
        "{}",
        stdout(&o)
    );

    let report = fs::read_to_string(corpus.join("crashes/1/report.txt")).unwrap();
    assert!(report.contains("assertion_id: 1"));
    assert!(report.contains("minimized witness:"), "{report}");

    let witness = fs::read_dir(corpus.join("crashes/1"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.extension().is_some_and(|e| e == "tok"))
        .unwrap();
    let o = tlfuzz(&["replay", "--corpus", p(&corpus), p(&witness)]);
    assert!(o.status.success());
    assert!(
        stdout(&o).contains("assertion: 1 (BUG_SYNTAX_ASSIGN)"),
        "{}",
        stdout(&o)
    );

    let o = tlfuzz(&["report", "--corpus", p(&corpus)]);
    assert!(stdout(&o).contains("unique bugs: 1"), "{}", stdout(&o));
}

#[test]
fn replay_inputs() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = preprocessed(tmp.path());
    let o = tlfuzz(&[
        "replay",
        "--corpus",
        p(&corpus),
        p(&corpus.join("queue/id_000000.tok")),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("status: parse_ok"));

    let noise = tmp.path().join("noise.tok");
    fs::write(
        &noise,
        (0..=255u8).rev().cycle().take(999).collect::<Vec<_>>(),
    )
    .unwrap();
    let o = tlfuzz(&["replay", "--corpus", p(&corpus), p(&noise)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("status: "));

    let o = tlfuzz(&["replay", p(&noise)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fuzz_usage_and_target_errors() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = preprocessed(tmp.path());
    let o = tlfuzz(&["fuzz", "--corpus", p(&corpus), "--mode", "bits"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tlfuzz(&[
        "fuzz",
        "--corpus",
        p(&tmp.path().join("missing")),
        "--max-execs",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = tlfuzz(&[
        "fuzz",
        "--corpus",
        p(&corpus),
        "--target",
        "/nonexistent/minijs",
        "--max-execs",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = tlfuzz(&[
        "fuzz",
        "--corpus",
        p(&corpus),
        "--workers",
        "0",
        "--max-execs",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn minijs_command_line() {
    let run = |args: &[&str], stdin: &str| {
        use std::io::Write;
        let mut child = Command::new(env!("CARGO_BIN_EXE_minijs"))
            .args(args)
            .stdin(std::process::Stdio::piped())
            .stdout(std::process::Stdio::piped())
            .stderr(std::process::Stdio::piped())
            .spawn()
            .unwrap();
        child
            .stdin
            .take()
            .unwrap()
            .write_all(stdin.as_bytes())
            .unwrap();
        child.wait_with_output().unwrap()
    };
    let o = run(&[], "print ( 1 + 2 ) ;");
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "3\n"));
    assert_eq!(run(&[], "print ( x ) ;").status.code(), Some(1));
    assert_eq!(run(&[], "while while").status.code(), Some(2));
    assert_eq!(run(&[], "let x = { y = 1 } ;").status.code(), Some(70));
    assert_eq!(
        run(&["--disarm"], "let x = { y = 1 } ;").status.code(),
        Some(2)
    );
    let o = run(&["--list-bugs"], "");
    assert_eq!(stdout(&o).lines().count(), 4);
    assert!(stdout(&o).contains("BUG_GC_SHIFT"));
    // the server exits cleanly when its input closes before the handshake
    assert_ne!(run(&["--serve"], "").status.code(), Some(70));
}

#[test]
fn bundled_seeds_run_clean() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = preprocessed(tmp.path());
    let (map, inputs) = tlfuzz_core::preproc::load_corpus(&corpus).unwrap();
    assert_eq!(inputs.len(), 100);
    let opts = minijs::Options::default();
    for (name, input) in &inputs {
        let text = tlfuzz_core::decode(input, &map);
        let r = minijs::execute(text.as_bytes(), None, &opts);
        assert_eq!(r.outcome, minijs::Outcome::Clean, "{name}: {text}");
    }
    for e in fs::read_dir(seeds_dir()).unwrap() {
        let path = e.unwrap().path();
        let r = minijs::execute(&fs::read(&path).unwrap(), None, &opts);
        assert_eq!(r.outcome, minijs::Outcome::Clean, "{}", path.display());
    }
}
