//! Summaries of finished campaigns, computed from `stats.csv` and the crash
//! directories only.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use anyhow::Context;
use tlfuzz_core::stats::{last_run, read_stats, StatsRow, STATS_FILE};
use tlfuzz_core::triage::crash_dir_ids;

use crate::campaign::CAMPAIGN_FILE;

/// Rows kept in the coverage-over-time table.
const COVERAGE_POINTS: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSummary {
    pub label: String,
    pub mode: Option<String>,
    /// Final row of the most recent run, if any.
    pub last: Option<StatsRow>,
    pub coverage: Vec<StatsRow>,
    /// Assertion ids with artifacts on disk.
    pub bug_ids: Vec<u16>,
}

/// Percentages of parse_ok, parse_error, crashes and everything else.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rates {
    pub parse_ok: f64,
    pub parse_error: f64,
    pub crashes: f64,
    pub other: f64,
}

impl Rates {
    pub fn of(row: &StatsRow) -> Option<Rates> {
        if row.total_execs == 0 {
            return None;
        }
        let pct = |n: u64| 100.0 * n as f64 / row.total_execs as f64;
        Some(Rates {
            parse_ok: pct(row.parse_ok),
            parse_error: pct(row.parse_error),
            crashes: pct(row.crashes),
            other: pct(row.other()),
        })
    }

    pub fn sum(&self) -> f64 {
        self.parse_ok + self.parse_error + self.crashes + self.other
    }
}

impl CorpusSummary {
    pub fn load(corpus: &Path) -> anyhow::Result<Self> {
        let stats_path = corpus.join(STATS_FILE);
        let rows = if stats_path.exists() {
            read_stats(&stats_path).with_context(|| format!("reading {}", stats_path.display()))?
        } else {
            Vec::new()
        };
        let run = last_run(&rows);
        let mode = fs::read_to_string(corpus.join(CAMPAIGN_FILE))
            .ok()
            .and_then(|t| {
                t.lines()
                    .find_map(|l| l.strip_prefix("mode=").map(|m| m.trim().to_string()))
            });
        let bug_ids = crash_dir_ids(corpus)
            .with_context(|| format!("scanning crashes in {}", corpus.display()))?;
        Ok(CorpusSummary {
            label: corpus.display().to_string(),
            mode,
            last: run.last().copied(),
            coverage: sample(run, COVERAGE_POINTS),
            bug_ids,
        })
    }

    pub fn rates(&self) -> Option<Rates> {
        self.last.as_ref().and_then(Rates::of)
    }

    fn write_to(&self, out: &mut String) {
        let _ = writeln!(out, "corpus: {}", self.label);
        if let Some(m) = &self.mode {
            let _ = writeln!(out, "mode: {m}");
        }
        let (Some(last), Some(r)) = (self.last, self.rates()) else {
            let _ = writeln!(out, "no data");
            return;
        };
        let _ = writeln!(out, "total execs: {}", last.total_execs);
        let _ = writeln!(out, "\n{:<12} {:>12} {:>8}", "status", "execs", "rate");
        for (name, n, pct) in [
            ("parse_ok", last.parse_ok, r.parse_ok),
            ("parse_error", last.parse_error, r.parse_error),
            ("crashes", last.crashes, r.crashes),
            ("other", last.other(), r.other),
        ] {
            let _ = writeln!(out, "{name:<12} {n:>12} {pct:>7.2}%");
        }

        let _ = writeln!(out, "\nunique bugs: {}", self.bug_ids.len());
        for id in &self.bug_ids {
            let name = minijs::Bug::from_id(*id).map_or("unknown", |b| b.name());
            let _ = writeln!(out, "  {id:>5}  {name}");
        }
        if last.unique_crashes != self.bug_ids.len() as u64 {
            let _ = writeln!(
                out,
                "warning: stats.csv counts {} unique crashes, crash directory has {}",
                last.unique_crashes,
                self.bug_ids.len()
            );
        }

        let _ = writeln!(out, "\ncoverage over time:");
        let _ = writeln!(out, "{:>12} {:>12} {:>8}", "elapsed_s", "execs", "edges");
        let t0 = self.coverage.first().map_or(0, |r| r.unix_millis);
        for row in &self.coverage {
            let secs = row.unix_millis.saturating_sub(t0) as f64 / 1000.0;
            let _ = writeln!(
                out,
                "{secs:>12.1} {:>12} {:>8}",
                row.total_execs, row.edges_seen
            );
        }
    }
}

impl fmt::Display for CorpusSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_to(&mut s);
        f.write_str(s.trim_end())
    }
}

/// Up to `n` rows spread evenly over `rows`, always including both ends.
fn sample(rows: &[StatsRow], n: usize) -> Vec<StatsRow> {
    if rows.len() <= n {
        return rows.to_vec();
    }
    (0..n)
        .map(|i| rows[i * (rows.len() - 1) / (n - 1)])
        .collect()
}

/// Ratio of parse_ok rates between two corpora, `a / b`.
pub fn parse_rate_ratio(a: &CorpusSummary, b: &CorpusSummary) -> Option<f64> {
    let (ra, rb) = (a.rates()?, b.rates()?);
    (rb.parse_ok > 0.0).then(|| ra.parse_ok / rb.parse_ok)
}

pub fn render(primary: &CorpusSummary, other: Option<&CorpusSummary>) -> String {
    let mut out = primary.to_string();
    if let Some(b) = other {
        let _ = write!(out, "\n\n{b}\n\n");
        let name = |s: &CorpusSummary| s.mode.clone().unwrap_or_else(|| s.label.clone());
        let rate = |s: &CorpusSummary| {
            s.rates()
                .map_or("n/a".to_string(), |r| format!("{:.2}%", r.parse_ok))
        };
        let _ = write!(
            out,
            "parse_ok {} {} vs {} {}",
            name(primary),
            rate(primary),
            name(b),
            rate(b)
        );
        match parse_rate_ratio(primary, b) {
            Some(x) => {
                let _ = write!(out, ", ratio {x:.2}x");
            }
            None => out.push_str(", ratio n/a"),
        }
        let _ = write!(
            out,
            "; unique bugs {} vs {}",
            primary.bug_ids.len(),
            b.bug_ids.len()
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(t: u64, execs: u64, ok: u64, err: u64, crashes: u64) -> StatsRow {
        StatsRow {
            unix_millis: t,
            total_execs: execs,
            parse_ok: ok,
            parse_error: err,
            crashes,
            unique_crashes: 0,
            edges_seen: execs / 10,
        }
    }

    #[test]
    fn rates_sum_to_hundred() {
        let r = Rates::of(&row(0, 1000, 300, 600, 7)).unwrap();
        assert!((r.sum() - 100.0).abs() < 1e-9);
        assert!((r.other - 9.3).abs() < 1e-9);
        assert!(Rates::of(&row(0, 0, 0, 0, 0)).is_none());
    }

    #[test]
    fn sampling_keeps_ends() {
        let rows: Vec<_> = (0..25).map(|i| row(i, i * 10, 0, 0, 0)).collect();
        let s = sample(&rows, 10);
        assert_eq!(s.len(), 10);
        assert_eq!(s[0], rows[0]);
        assert_eq!(s[9], rows[24]);
        assert!(s.windows(2).all(|w| w[0].unix_millis < w[1].unix_millis));
    }

    #[test]
    fn ratio_line() {
        let mk = |mode: &str, ok| CorpusSummary {
            label: mode.into(),
            mode: Some(mode.into()),
            last: Some(row(0, 1000, ok, 1000 - ok, 0)),
            coverage: vec![],
            bug_ids: vec![],
        };
        let (a, b) = (mk("token", 300), mk("byte", 100));
        assert!((parse_rate_ratio(&a, &b).unwrap() - 3.0).abs() < 1e-12);
        let text = render(&a, Some(&b));
        assert!(text.contains("ratio 3.00x"), "{text}");
        assert_eq!(parse_rate_ratio(&a, &mk("byte", 0)), None);
    }
}
