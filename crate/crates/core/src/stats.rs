//! Campaign counters and the `stats.csv` checkpoint log.

use std::fs::{self, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use crate::executor::ExecStatus;

pub const STATS_FILE: &str = "stats.csv";
pub const STATS_HEADER: &str = "unix_millis,total_execs,parse_ok,parse_error,crashes,unique_crashes,edges_seen";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CampaignStats {
    pub total_execs: u64,
    pub parse_ok: u64,
    pub parse_error: u64,
    pub runtime_error: u64,
    pub crashes: u64,
    pub timeouts: u64,
    pub unique_crashes: u64,
    pub edges_seen: u64,
}

impl CampaignStats {
    pub fn record(&mut self, status: ExecStatus) {
        self.total_execs += 1;
        match status {
            ExecStatus::ParseOk => self.parse_ok += 1,
            ExecStatus::ParseError => self.parse_error += 1,
            ExecStatus::RuntimeError => self.runtime_error += 1,
            ExecStatus::Crash => self.crashes += 1,
            ExecStatus::Timeout => self.timeouts += 1,
        }
    }

    /// Adds another worker's status counters (not its coverage or crash
    /// dedup figures, which only the scheduler knows).
    pub fn absorb_counts(&mut self, other: &CampaignStats) {
        self.total_execs += other.total_execs;
        self.parse_ok += other.parse_ok;
        self.parse_error += other.parse_error;
        self.runtime_error += other.runtime_error;
        self.crashes += other.crashes;
        self.timeouts += other.timeouts;
    }

    pub fn status_sum(&self) -> u64 {
        self.parse_ok + self.parse_error + self.runtime_error + self.crashes + self.timeouts
    }

    /// Fraction of executions with status parse_ok. Programs that parsed
    /// but then hit a runtime error or an assertion are not included.
    pub fn parse_rate(&self) -> f64 {
        if self.total_execs == 0 {
            return 0.0;
        }
        self.parse_ok as f64 / self.total_execs as f64
    }

    pub fn row(&self, unix_millis: u64) -> StatsRow {
        StatsRow {
            unix_millis,
            total_execs: self.total_execs,
            parse_ok: self.parse_ok,
            parse_error: self.parse_error,
            crashes: self.crashes,
            unique_crashes: self.unique_crashes,
            edges_seen: self.edges_seen,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatsRow {
    pub unix_millis: u64,
    pub total_execs: u64,
    pub parse_ok: u64,
    pub parse_error: u64,
    pub crashes: u64,
    pub unique_crashes: u64,
    pub edges_seen: u64,
}

impl StatsRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.unix_millis,
            self.total_execs,
            self.parse_ok,
            self.parse_error,
            self.crashes,
            self.unique_crashes,
            self.edges_seen
        )
    }

    pub fn parse(line: &str) -> Option<Self> {
        let f: Vec<u64> = line
            .trim()
            .split(',')
            .map(|s| s.trim().parse().ok())
            .collect::<Option<_>>()?;
        let [unix_millis, total_execs, parse_ok, parse_error, crashes, unique_crashes, edges_seen] = f[..] else {
            return None;
        };
        Some(StatsRow {
            unix_millis,
            total_execs,
            parse_ok,
            parse_error,
            crashes,
            unique_crashes,
            edges_seen,
        })
    }

    /// Executions that were neither parse_ok, parse_error nor crashes
    /// (runtime errors and timeouts).
    pub fn other(&self) -> u64 {
        self.total_execs
            .saturating_sub(self.parse_ok + self.parse_error + self.crashes)
    }
}

pub fn unix_millis() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

/// Appends rows to `stats.csv`, writing the header if the file is new.
pub struct StatsWriter {
    file: fs::File,
}

impl StatsWriter {
    pub fn open(corpus_dir: &Path) -> io::Result<Self> {
        let path = corpus_dir.join(STATS_FILE);
        let fresh = fs::metadata(&path).map(|m| m.len() == 0).unwrap_or(true);
        let mut file = OpenOptions::new().create(true).append(true).open(&path)?;
        if fresh {
            writeln!(file, "{STATS_HEADER}")?;
        }
        Ok(StatsWriter { file })
    }

    pub fn append(&mut self, row: &StatsRow) -> io::Result<()> {
        writeln!(self.file, "{}", row.to_csv())
    }
}

/// Reads every data row; malformed lines are skipped.
pub fn read_stats(path: &Path) -> io::Result<Vec<StatsRow>> {
    let file = fs::File::open(path)?;
    let mut rows = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line?;
        if let Some(row) = StatsRow::parse(&line) {
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Rows of the most recent run: a run starts wherever total_execs drops.
pub fn last_run(rows: &[StatsRow]) -> &[StatsRow] {
    let start = rows
        .windows(2)
        .rposition(|w| w[1].total_execs < w[0].total_execs)
        .map_or(0, |i| i + 1);
    &rows[start..]
}
