//! Crash bookkeeping: dedup by signature, on-disk artifacts and greedy
//! witness minimization.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::executor::ExecStatus;

pub const CRASHES_DIR: &str = "crashes";
/// Directory (under `crashes/`) for the reserved timeout signature.
pub const TIMEOUT_DIR: &str = "timeout";
pub const REPORT_FILE: &str = "report.txt";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrashKind {
    Crash,
    Timeout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrashSignature {
    pub kind: CrashKind,
    pub assertion_id: u16,
}

impl CrashSignature {
    pub fn crash(assertion_id: u16) -> Self {
        CrashSignature {
            kind: CrashKind::Crash,
            assertion_id,
        }
    }

    /// The single reserved signature shared by all hangs.
    pub fn timeout() -> Self {
        CrashSignature {
            kind: CrashKind::Timeout,
            assertion_id: 0,
        }
    }

    /// `None` for statuses that are not triaged.
    pub fn of(status: ExecStatus, assertion_id: Option<u16>) -> Option<Self> {
        match status {
            ExecStatus::Crash => Some(Self::crash(assertion_id.unwrap_or(0))),
            ExecStatus::Timeout => Some(Self::timeout()),
            _ => None,
        }
    }

    pub fn is_bug(&self) -> bool {
        self.kind == CrashKind::Crash
    }

    pub fn dir_name(&self) -> String {
        match self.kind {
            CrashKind::Crash => self.assertion_id.to_string(),
            CrashKind::Timeout => TIMEOUT_DIR.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrashReport<I> {
    pub signature: CrashSignature,
    pub first_seen_exec: u64,
    pub witness: I,
    pub minimized_witness: Option<I>,
    pub decoded_text: String,
    pub hits: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dedup {
    NewBug,
    Duplicate,
}

/// First report per signature, ordered by signature.
#[derive(Debug, Clone)]
pub struct CrashStore<I> {
    reports: BTreeMap<CrashSignature, CrashReport<I>>,
}

impl<I> Default for CrashStore<I> {
    fn default() -> Self {
        CrashStore {
            reports: BTreeMap::new(),
        }
    }
}

impl<I: Clone> CrashStore<I> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dedup(&mut self, signature: CrashSignature, exec: u64, witness: &I, decoded_text: &str) -> Dedup {
        if let Some(report) = self.reports.get_mut(&signature) {
            report.hits += 1;
            return Dedup::Duplicate;
        }
        self.reports.insert(
            signature,
            CrashReport {
                signature,
                first_seen_exec: exec,
                witness: witness.clone(),
                minimized_witness: None,
                decoded_text: decoded_text.to_string(),
                hits: 1,
            },
        );
        Dedup::NewBug
    }
}

impl<I> CrashStore<I> {
    /// Distinct assertion ids; timeouts are not bugs.
    pub fn unique_bugs(&self) -> usize {
        self.reports.keys().filter(|s| s.is_bug()).count()
    }

    pub fn bug_ids(&self) -> Vec<u16> {
        self.reports.keys().filter(|s| s.is_bug()).map(|s| s.assertion_id).collect()
    }

    pub fn get(&self, signature: &CrashSignature) -> Option<&CrashReport<I>> {
        self.reports.get(signature)
    }

    pub fn get_mut(&mut self, signature: &CrashSignature) -> Option<&mut CrashReport<I>> {
        self.reports.get_mut(signature)
    }

    pub fn reports(&self) -> impl Iterator<Item = &CrashReport<I>> {
        self.reports.values()
    }

    pub fn len(&self) -> usize {
        self.reports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reports.is_empty()
    }
}

/// Writes `report.txt` for one signature.
pub fn write_report<I>(
    dir: &Path,
    report: &CrashReport<I>,
    render: impl Fn(&I) -> String,
) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let mut text = String::new();
    let sig = report.signature;
    match sig.kind {
        CrashKind::Crash => {
            let _ = writeln!(text, "assertion_id: {}", sig.assertion_id);
        }
        CrashKind::Timeout => text.push_str("signature: timeout\n"),
    }
    let _ = writeln!(text, "first_seen_exec: {}", report.first_seen_exec);
    let _ = writeln!(text, "hits: {}", report.hits);
    let _ = writeln!(text, "\nwitness:\n{}", report.decoded_text);
    if let Some(min) = &report.minimized_witness {
        let _ = writeln!(text, "\nminimized witness:\n{}", render(min));
    }
    let path = dir.join(REPORT_FILE);
    fs::write(&path, text)?;
    Ok(path)
}

/// Distinct assertion ids with at least one saved artifact under
/// `<corpus>/crashes/`.
pub fn crash_dir_ids(corpus_dir: &Path) -> io::Result<Vec<u16>> {
    let dir = corpus_dir.join(CRASHES_DIR);
    let mut ids = Vec::new();
    if !dir.is_dir() {
        return Ok(ids);
    }
    for entry in fs::read_dir(&dir)? {
        let entry = entry?;
        let Ok(id) = entry.file_name().to_string_lossy().parse::<u16>() else {
            continue;
        };
        let has_artifact = fs::read_dir(entry.path())?
            .filter_map(Result::ok)
            .any(|f| f.file_name().to_string_lossy().starts_with("id_"));
        if has_artifact {
            ids.push(id);
        }
    }
    ids.sort_unstable();
    Ok(ids)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("witness does not reproduce before minimization")]
pub struct ReproFailure;

/// Greedy minimization to a fixed point: drop whole statements (largest
/// first), then token runs of halving power-of-two lengths. The result is
/// 1-minimal with respect to single-unit removal.
pub fn minimize<T, F>(witness: &[T], is_separator: impl Fn(&T) -> bool, mut reproduces: F) -> Result<Vec<T>, ReproFailure>
where
    T: Clone,
    F: FnMut(&[T]) -> bool,
{
    if !reproduces(witness) {
        return Err(ReproFailure);
    }
    let mut current = witness.to_vec();
    loop {
        let before = current.len();
        remove_statements(&mut current, &is_separator, &mut reproduces);
        remove_runs(&mut current, &mut reproduces);
        if current.len() == before {
            return Ok(current);
        }
    }
}

/// Statement spans including their terminating separator.
fn statements<T>(units: &[T], is_separator: &impl Fn(&T) -> bool) -> Vec<(usize, usize)> {
    let mut spans = Vec::new();
    let mut start = 0;
    for (i, u) in units.iter().enumerate() {
        if is_separator(u) {
            spans.push((start, i + 1));
            start = i + 1;
        }
    }
    if start < units.len() {
        spans.push((start, units.len()));
    }
    spans
}

fn without<T: Clone>(units: &[T], start: usize, end: usize) -> Vec<T> {
    let mut v = Vec::with_capacity(units.len() - (end - start));
    v.extend_from_slice(&units[..start]);
    v.extend_from_slice(&units[end..]);
    v
}

fn remove_statements<T: Clone>(
    current: &mut Vec<T>,
    is_separator: &impl Fn(&T) -> bool,
    reproduces: &mut impl FnMut(&[T]) -> bool,
) {
    'outer: loop {
        let mut spans = statements(current, is_separator);
        if spans.len() < 2 {
            return;
        }
        // largest first; ties keep source order
        spans.sort_by_key(|&(s, e)| (std::cmp::Reverse(e - s), s));
        for (s, e) in spans {
            let candidate = without(current, s, e);
            if reproduces(&candidate) {
                *current = candidate;
                continue 'outer;
            }
        }
        return;
    }
}

fn remove_runs<T: Clone>(current: &mut Vec<T>, reproduces: &mut impl FnMut(&[T]) -> bool) {
    if current.len() <= 1 {
        return;
    }
    let mut len = (current.len() / 2).max(1).next_power_of_two();
    if len > current.len() / 2 {
        len = (len / 2).max(1);
    }
    loop {
        let mut pos = 0;
        while pos + len <= current.len() && current.len() > 1 {
            let candidate = without(current, pos, pos + len);
            if !candidate.is_empty() && reproduces(&candidate) {
                *current = candidate;
            } else {
                pos += 1;
            }
        }
        if len == 1 {
            return;
        }
        len /= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup_examples() {
        let mut store: CrashStore<Vec<u16>> = CrashStore::new();
        let w = vec![1u16, 2];
        assert_eq!(store.dedup(CrashSignature::crash(4), 10, &w, "a"), Dedup::NewBug);
        assert_eq!(store.dedup(CrashSignature::crash(4), 11, &w, "b"), Dedup::Duplicate);
        assert_eq!(store.dedup(CrashSignature::crash(1), 12, &w, "c"), Dedup::NewBug);
        assert_eq!(store.dedup(CrashSignature::timeout(), 13, &w, "d"), Dedup::NewBug);
        assert_eq!(store.dedup(CrashSignature::timeout(), 14, &w, "e"), Dedup::Duplicate);
        assert_eq!(store.unique_bugs(), 2);
        assert_eq!(store.bug_ids(), vec![1, 4]);
        let r = store.get(&CrashSignature::crash(4)).unwrap();
        assert_eq!((r.first_seen_exec, r.hits, r.decoded_text.as_str()), (10, 2, "a"));
    }

    #[test]
    fn signature_of_status() {
        assert_eq!(CrashSignature::of(ExecStatus::ParseOk, None), None);
        assert_eq!(CrashSignature::of(ExecStatus::Crash, Some(3)), Some(CrashSignature::crash(3)));
        assert_eq!(CrashSignature::of(ExecStatus::Timeout, None), Some(CrashSignature::timeout()));
        assert_eq!(CrashSignature::timeout().dir_name(), "timeout");
        assert_eq!(CrashSignature::crash(3).dir_name(), "3");
    }

    fn words(s: &str) -> Vec<&str> {
        s.split(' ').collect()
    }

    #[test]
    fn minimize_drops_unrelated_statement() {
        // reproduces while "boom" follows "a" somewhere in the input
        let repro = |u: &[&str]| {
            let a = u.iter().position(|&w| w == "a");
            let b = u.iter().rposition(|&w| w == "boom");
            matches!((a, b), (Some(a), Some(b)) if a < b)
        };
        let w = words("x = 1 ; y = 2 ; a b ; boom ;");
        let min = minimize(&w, |t| *t == ";", repro).unwrap();
        assert_eq!(min, words("a boom"));
        let again = minimize(&min, |t| *t == ";", repro).unwrap();
        assert_eq!(again, min);
    }

    #[test]
    fn minimize_is_one_minimal() {
        let repro = |u: &[u8]| u.iter().filter(|&&b| b == 7).count() >= 2 && u.contains(&3);
        let w = vec![1, 7, 2, 3, 9, 7, 7, 0, 3];
        let min = minimize(&w, |&b| b == 0, repro).unwrap();
        assert!(repro(&min));
        for i in 0..min.len() {
            assert!(!repro(&without(&min, i, i + 1)), "removable unit at {i}");
        }
        assert_eq!(min.len(), 3);
    }

    #[test]
    fn minimize_rejects_non_reproducing() {
        assert_eq!(minimize(&[1, 2, 3], |_| false, |_| false), Err(ReproFailure));
    }

    #[test]
    fn minimal_witness_unchanged() {
        let w = vec![5u8];
        assert_eq!(minimize(&w, |_| false, |u| u == [5]).unwrap(), w);
    }

    #[test]
    fn crash_dir_scan() {
        let tmp = tempfile::tempdir().unwrap();
        let base = tmp.path().join(CRASHES_DIR);
        fs::create_dir_all(base.join("3")).unwrap();
        fs::write(base.join("3").join("id_0000.tok"), b"").unwrap();
        fs::create_dir_all(base.join("1")).unwrap();
        fs::write(base.join("1").join("id_0000.js"), b"").unwrap();
        fs::create_dir_all(base.join("2")).unwrap();
        fs::create_dir_all(base.join(TIMEOUT_DIR)).unwrap();
        fs::write(base.join(TIMEOUT_DIR).join("id_0000.tok"), b"").unwrap();
        assert_eq!(crash_dir_ids(tmp.path()).unwrap(), vec![1, 3]);
    }
}
