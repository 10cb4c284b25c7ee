//! Running programs against a target: the EXEC/STAT wire protocol, a
//! persistent process-backed target with a shared coverage region, and an
//! in-process adapter.
//!
//! Wire format (all integers little-endian):
//!
//! ```text
//! handshake  fuzzer -> target   "HELO" u32 version u32 map_size
//!            target -> fuzzer   "HELO" u32 version u32 map_size
//! request    fuzzer -> target   "EXEC" u32 len  <len program bytes>
//! response   target -> fuzzer   "STAT" u8 status u16 assertion_id
//! ```
//!
//! The target writes edge counts into a file-backed shared region whose
//! path it receives in the `TLFUZZ_SHM` environment variable, resetting it
//! before each execution. After a crash response the target exits and is
//! respawned on the next request.

use std::fs::{self, OpenOptions};
use std::io::{self, Read, Write};
use std::os::fd::AsRawFd;
use std::os::unix::process::CommandExt;
use std::path::{Path, PathBuf};
use std::process::{Child, ChildStdin, ChildStdout, Command, Stdio};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use memmap2::MmapMut;
use thiserror::Error;

use crate::coverage::DEFAULT_MAP_SIZE;

pub const PROTOCOL_VERSION: u32 = 1;
pub const SHM_ENV: &str = "TLFUZZ_SHM";
/// Overrides the base name of shared regions created by the fuzzer.
pub const SHM_NAME_ENV: &str = "TLFUZZ_SHM_NAME";

pub const HELO: &[u8; 4] = b"HELO";
pub const EXEC: &[u8; 4] = b"EXEC";
pub const STAT: &[u8; 4] = b"STAT";

/// Assertion id reported when the target died without answering.
pub const UNEXPECTED_EXIT_ID: u16 = 0xffff;

/// Exit code of a target that stopped after reporting a crash.
pub const CRASH_EXIT_CODE: i32 = 70;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExecStatus {
    ParseOk,
    ParseError,
    RuntimeError,
    Crash,
    Timeout,
}

impl ExecStatus {
    pub const ALL: [ExecStatus; 5] = [
        ExecStatus::ParseOk,
        ExecStatus::ParseError,
        ExecStatus::RuntimeError,
        ExecStatus::Crash,
        ExecStatus::Timeout,
    ];

    pub fn code(self) -> u8 {
        match self {
            ExecStatus::ParseOk => 0,
            ExecStatus::ParseError => 1,
            ExecStatus::RuntimeError => 2,
            ExecStatus::Crash => 3,
            ExecStatus::Timeout => 4,
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        ExecStatus::ALL.get(code as usize).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ExecStatus::ParseOk => "parse_ok",
            ExecStatus::ParseError => "parse_error",
            ExecStatus::RuntimeError => "runtime_error",
            ExecStatus::Crash => "crash",
            ExecStatus::Timeout => "timeout",
        }
    }

    /// crash > timeout > parse_error > runtime_error > parse_ok
    pub fn precedence(self) -> u8 {
        match self {
            ExecStatus::ParseOk => 0,
            ExecStatus::RuntimeError => 1,
            ExecStatus::ParseError => 2,
            ExecStatus::Timeout => 3,
            ExecStatus::Crash => 4,
        }
    }

    /// The status that wins when several apply to one execution.
    pub fn combine(self, other: ExecStatus) -> ExecStatus {
        if other.precedence() > self.precedence() {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExecResult<'a> {
    pub status: ExecStatus,
    pub trace: &'a [u8],
    pub assertion_id: Option<u16>,
    pub exec_micros: u64,
}

#[derive(Debug, Error)]
pub enum ExecError {
    #[error("failed to spawn target {path}: {reason}")]
    SpawnFailure { path: PathBuf, reason: String },
    #[error("handshake mismatch: fuzzer speaks v{ours}/map {our_map}, target v{theirs}/map {their_map}")]
    HandshakeMismatch {
        ours: u32,
        theirs: u32,
        our_map: usize,
        their_map: usize,
    },
    #[error("protocol error: {0}")]
    Protocol(String),
    #[error("io error talking to target: {0}")]
    Io(#[from] io::Error),
}

/// Anything that can run one program and expose its coverage trace.
pub trait Target: Send {
    fn map_size(&self) -> usize;
    fn run(&mut self, program: &[u8]) -> Result<ExecResult<'_>, ExecError>;
}

impl<T: Target + ?Sized> Target for Box<T> {
    fn map_size(&self) -> usize {
        (**self).map_size()
    }

    fn run(&mut self, program: &[u8]) -> Result<ExecResult<'_>, ExecError> {
        (**self).run(program)
    }
}

/// Outcome reported by an in-process harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarnessOutcome {
    pub status: ExecStatus,
    pub assertion_id: Option<u16>,
}

/// Runs a harness function in the fuzzer process. The trace is cleared
/// before each call.
pub struct InProcessTarget<F> {
    harness: F,
    trace: Vec<u8>,
}

impl<F> InProcessTarget<F>
where
    F: FnMut(&[u8], &mut [u8]) -> HarnessOutcome + Send,
{
    pub fn new(harness: F, map_size: usize) -> Self {
        assert!(map_size.is_power_of_two());
        InProcessTarget {
            harness,
            trace: vec![0; map_size],
        }
    }
}

impl<F> Target for InProcessTarget<F>
where
    F: FnMut(&[u8], &mut [u8]) -> HarnessOutcome + Send,
{
    fn map_size(&self) -> usize {
        self.trace.len()
    }

    fn run(&mut self, program: &[u8]) -> Result<ExecResult<'_>, ExecError> {
        self.trace.fill(0);
        let start = Instant::now();
        let outcome = (self.harness)(program, &mut self.trace);
        Ok(ExecResult {
            status: outcome.status,
            trace: &self.trace,
            assertion_id: outcome.assertion_id,
            exec_micros: start.elapsed().as_micros() as u64,
        })
    }
}

#[derive(Debug, Clone)]
pub struct TargetConfig {
    pub target_path: PathBuf,
    pub args: Vec<String>,
    pub timeout: Duration,
    /// Address-space limit for the target in bytes; 0 disables it.
    pub memory_limit: u64,
    pub persistent: bool,
    pub map_size: usize,
}

impl TargetConfig {
    pub fn new(target_path: impl Into<PathBuf>) -> Self {
        TargetConfig {
            target_path: target_path.into(),
            args: vec!["--serve".into()],
            timeout: Duration::from_millis(100),
            memory_limit: 0,
            persistent: true,
            map_size: DEFAULT_MAP_SIZE,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.timeout.is_zero() {
            return Err("timeout must be positive".into());
        }
        if !self.map_size.is_power_of_two() {
            return Err("map size must be a power of two".into());
        }
        Ok(())
    }
}

pub mod protocol {
    //! Framing helpers shared by the fuzzer and target sides.

    use super::*;

    pub fn handshake_bytes(map_size: usize) -> [u8; 12] {
        let mut b = [0u8; 12];
        b[..4].copy_from_slice(HELO);
        b[4..8].copy_from_slice(&PROTOCOL_VERSION.to_le_bytes());
        b[8..].copy_from_slice(&(map_size as u32).to_le_bytes());
        b
    }

    /// Returns `(version, map_size)`.
    pub fn parse_handshake(b: &[u8; 12]) -> Result<(u32, usize), ExecError> {
        if &b[..4] != HELO {
            return Err(ExecError::Protocol(format!("bad handshake magic {:?}", &b[..4])));
        }
        let version = u32::from_le_bytes(b[4..8].try_into().unwrap());
        let map = u32::from_le_bytes(b[8..].try_into().unwrap()) as usize;
        Ok((version, map))
    }

    pub fn exec_request(program: &[u8], out: &mut Vec<u8>) {
        out.clear();
        out.extend_from_slice(EXEC);
        out.extend_from_slice(&(program.len() as u32).to_le_bytes());
        out.extend_from_slice(program);
    }

    /// Reads one request. `Ok(false)` means the channel closed cleanly
    /// before a new request started.
    pub fn read_exec_request<R: Read>(r: &mut R, program: &mut Vec<u8>) -> Result<bool, ExecError> {
        let mut header = [0u8; 8];
        match r.read_exact(&mut header[..1]) {
            Ok(()) => {}
            Err(e) if e.kind() == io::ErrorKind::UnexpectedEof => return Ok(false),
            Err(e) => return Err(e.into()),
        }
        r.read_exact(&mut header[1..])?;
        if &header[..4] != EXEC {
            return Err(ExecError::Protocol(format!("bad request magic {:?}", &header[..4])));
        }
        let len = u32::from_le_bytes(header[4..].try_into().unwrap()) as usize;
        program.clear();
        program.resize(len, 0);
        r.read_exact(program)?;
        Ok(true)
    }

    pub fn stat_response(status: ExecStatus, assertion_id: u16) -> [u8; 7] {
        let mut b = [0u8; 7];
        b[..4].copy_from_slice(STAT);
        b[4] = status.code();
        b[5..].copy_from_slice(&assertion_id.to_le_bytes());
        b
    }

    pub fn parse_stat(b: &[u8; 7]) -> Result<(ExecStatus, Option<u16>), ExecError> {
        if &b[..4] != STAT {
            return Err(ExecError::Protocol(format!("bad response magic {:?}", &b[..4])));
        }
        let status = ExecStatus::from_code(b[4])
            .ok_or_else(|| ExecError::Protocol(format!("unknown status byte {}", b[4])))?;
        let id = u16::from_le_bytes([b[5], b[6]]);
        Ok((status, (status == ExecStatus::Crash).then_some(id)))
    }
}

static REGION_COUNTER: AtomicU64 = AtomicU64::new(0);

/// A file-backed memory map shared with the target process.
pub struct SharedRegion {
    path: PathBuf,
    map: MmapMut,
}

impl SharedRegion {
    pub fn create(size: usize) -> io::Result<Self> {
        let base = std::env::var(SHM_NAME_ENV).unwrap_or_else(|_| "tlfuzz".to_string());
        let dir = if Path::new("/dev/shm").is_dir() {
            PathBuf::from("/dev/shm")
        } else {
            std::env::temp_dir()
        };
        let n = REGION_COUNTER.fetch_add(1, Ordering::Relaxed);
        let path = dir.join(format!("{base}-{}-{n}", std::process::id()));
        let file = OpenOptions::new()
            .read(true)
            .write(true)
            .create(true)
            .truncate(true)
            .open(&path)?;
        file.set_len(size as u64)?;
        // SAFETY: the file is private to this fuzzer and its target; the
        // target only writes while a request is outstanding.
        let map = unsafe { MmapMut::map_mut(&file)? };
        Ok(SharedRegion { path, map })
    }

    /// Maps an existing region (target side).
    pub fn open(path: &Path, size: usize) -> io::Result<MmapMut> {
        let file = OpenOptions::new().read(true).write(true).open(path)?;
        if file.metadata()?.len() < size as u64 {
            return Err(io::Error::new(
                io::ErrorKind::InvalidInput,
                "shared region smaller than the map size",
            ));
        }
        // SAFETY: see `create`.
        unsafe { memmap2::MmapOptions::new().len(size).map_mut(&file) }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.map
    }

    pub fn as_mut_slice(&mut self) -> &mut [u8] {
        &mut self.map
    }
}

impl Drop for SharedRegion {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.path);
    }
}

struct Running {
    child: Child,
    stdin: ChildStdin,
    stdout: ChildStdout,
}

impl Running {
    fn kill(mut self) {
        let _ = self.child.kill();
        let _ = self.child.wait();
    }
}

/// Maximum consecutive failed spawns before giving up.
pub const MAX_SPAWN_FAILURES: u32 = 3;

/// A target binary driven over pipes, with coverage in a shared region.
pub struct ProcessTarget {
    config: TargetConfig,
    region: SharedRegion,
    running: Option<Running>,
    request: Vec<u8>,
    spawn_failures: u32,
    respawns: u64,
    protocol_errors: u64,
}

impl ProcessTarget {
    /// Launches the target and performs the handshake.
    pub fn spawn(config: TargetConfig) -> Result<Self, ExecError> {
        config
            .validate()
            .map_err(|reason| ExecError::SpawnFailure {
                path: config.target_path.clone(),
                reason,
            })?;
        let region = SharedRegion::create(config.map_size).map_err(|e| ExecError::SpawnFailure {
            path: config.target_path.clone(),
            reason: format!("shared region: {e}"),
        })?;
        let mut target = ProcessTarget {
            config,
            region,
            running: None,
            request: Vec::new(),
            spawn_failures: 0,
            respawns: 0,
            protocol_errors: 0,
        };
        target.start()?;
        Ok(target)
    }

    pub fn config(&self) -> &TargetConfig {
        &self.config
    }

    pub fn respawns(&self) -> u64 {
        self.respawns
    }

    pub fn protocol_errors(&self) -> u64 {
        self.protocol_errors
    }

    pub fn is_running(&self) -> bool {
        self.running.is_some()
    }

    fn start(&mut self) -> Result<(), ExecError> {
        let spawn_err = |reason: String| ExecError::SpawnFailure {
            path: self.config.target_path.clone(),
            reason,
        };
        let mut cmd = Command::new(&self.config.target_path);
        cmd.args(&self.config.args)
            .env(SHM_ENV, self.region.path())
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::null());
        let limit = self.config.memory_limit;
        if limit > 0 {
            // SAFETY: setrlimit is async-signal-safe.
            unsafe {
                cmd.pre_exec(move || {
                    let rl = libc::rlimit {
                        rlim_cur: limit as libc::rlim_t,
                        rlim_max: limit as libc::rlim_t,
                    };
                    if libc::setrlimit(libc::RLIMIT_AS, &rl) != 0 {
                        return Err(io::Error::last_os_error());
                    }
                    Ok(())
                });
            }
        }
        let mut child = cmd.spawn().map_err(|e| spawn_err(e.to_string()))?;
        let stdin = child.stdin.take().unwrap();
        let stdout = child.stdout.take().unwrap();
        let mut running = Running { child, stdin, stdout };

        let handshake = (|| {
            running.stdin.write_all(&protocol::handshake_bytes(self.config.map_size))?;
            let mut reply = [0u8; 12];
            let deadline = self.config.timeout.max(Duration::from_secs(2));
            if !wait_readable(&running.stdout, deadline)? {
                return Err(ExecError::Protocol("handshake timed out".into()));
            }
            running.stdout.read_exact(&mut reply)?;
            protocol::parse_handshake(&reply)
        })();
        match handshake {
            Ok((version, map)) if version == PROTOCOL_VERSION && map == self.config.map_size => {
                self.running = Some(running);
                Ok(())
            }
            Ok((version, map)) => {
                running.kill();
                Err(ExecError::HandshakeMismatch {
                    ours: PROTOCOL_VERSION,
                    theirs: version,
                    our_map: self.config.map_size,
                    their_map: map,
                })
            }
            Err(e) => {
                running.kill();
                Err(spawn_err(format!("handshake failed: {e}")))
            }
        }
    }

    fn ensure_running(&mut self) -> Result<(), ExecError> {
        while self.running.is_none() {
            match self.start() {
                Ok(()) => {
                    self.spawn_failures = 0;
                    self.respawns += 1;
                }
                Err(e) => {
                    self.spawn_failures += 1;
                    if self.spawn_failures >= MAX_SPAWN_FAILURES {
                        return Err(e);
                    }
                }
            }
        }
        Ok(())
    }

    fn stop(&mut self) {
        if let Some(r) = self.running.take() {
            r.kill();
        }
    }

    /// Sends one program and waits for its status. Leaves the target dead
    /// (to be respawned) after crashes, timeouts and protocol errors.
    fn exchange(&mut self, program: &[u8]) -> Result<(ExecStatus, Option<u16>), ExecError> {
        protocol::exec_request(program, &mut self.request);
        let timeout = self.config.timeout;
        let running = self.running.as_mut().expect("target running");
        if running.stdin.write_all(&self.request).is_err() {
            // The target died between requests; it never saw this input.
            self.stop();
            return Err(ExecError::Protocol("target closed its input".into()));
        }
        if !wait_readable(&running.stdout, timeout)? {
            self.stop();
            self.region.as_mut_slice().fill(0);
            return Ok((ExecStatus::Timeout, None));
        }
        let mut reply = [0u8; 7];
        match running.stdout.read_exact(&mut reply) {
            Ok(()) => {}
            Err(e) if e.kind() == io::ErrorKind::UnexpectedEof => {
                self.stop();
                return Ok((ExecStatus::Crash, Some(UNEXPECTED_EXIT_ID)));
            }
            Err(e) => {
                self.stop();
                return Err(e.into());
            }
        }
        let parsed = protocol::parse_stat(&reply);
        match parsed {
            Ok((ExecStatus::Crash, id)) => {
                // The target exits after reporting; reap it now.
                if let Some(mut r) = self.running.take() {
                    drop(r.stdin);
                    let _ = r.child.wait();
                }
                Ok((ExecStatus::Crash, id))
            }
            Ok(ok) => Ok(ok),
            Err(e) => {
                self.protocol_errors += 1;
                self.stop();
                Err(e)
            }
        }
    }

    /// Decodes nothing: `program` is already the text to run.
    pub fn run_program(&mut self, program: &[u8]) -> Result<ExecResult<'_>, ExecError> {
        self.ensure_running()?;
        let start = Instant::now();
        let outcome = self.exchange(program);
        let exec_micros = start.elapsed().as_micros() as u64;
        if !self.config.persistent {
            if let Some(mut r) = self.running.take() {
                drop(r.stdin);
                let _ = r.child.wait();
            }
        }
        let (status, assertion_id) = outcome?;
        Ok(ExecResult {
            status,
            trace: self.region.as_slice(),
            assertion_id,
            exec_micros,
        })
    }
}

impl Target for ProcessTarget {
    fn map_size(&self) -> usize {
        self.config.map_size
    }

    fn run(&mut self, program: &[u8]) -> Result<ExecResult<'_>, ExecError> {
        self.run_program(program)
    }
}

impl Drop for ProcessTarget {
    fn drop(&mut self) {
        if let Some(mut r) = self.running.take() {
            drop(r.stdin);
            // Give a well-behaved target a moment to exit on EOF.
            let deadline = Instant::now() + Duration::from_millis(200);
            loop {
                match r.child.try_wait() {
                    Ok(Some(_)) => break,
                    Ok(None) if Instant::now() < deadline => std::thread::sleep(Duration::from_millis(1)),
                    _ => {
                        let _ = r.child.kill();
                        let _ = r.child.wait();
                        break;
                    }
                }
            }
        }
    }
}

/// Decodes `input` with `map` and runs it.
pub fn run_input<'t, T: Target + ?Sized>(
    target: &'t mut T,
    input: &crate::preproc::EncodedInput,
    map: &crate::preproc::TokenMap,
) -> Result<ExecResult<'t>, ExecError> {
    let text = crate::codec::decode(input, map);
    target.run(text.as_bytes())
}

fn wait_readable(stdout: &ChildStdout, timeout: Duration) -> io::Result<bool> {
    let mut pfd = libc::pollfd {
        fd: stdout.as_raw_fd(),
        events: libc::POLLIN,
        revents: 0,
    };
    let deadline = Instant::now() + timeout;
    loop {
        let left = deadline.saturating_duration_since(Instant::now());
        let ms = left.as_millis().min(i32::MAX as u128) as i32;
        // SAFETY: pfd is a valid pollfd for the duration of the call.
        let rc = unsafe { libc::poll(&mut pfd, 1, ms) };
        if rc > 0 {
            return Ok(true);
        }
        if rc == 0 {
            return Ok(false);
        }
        let err = io::Error::last_os_error();
        if err.kind() != io::ErrorKind::Interrupted {
            return Err(err);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_codes_round_trip() {
        for s in ExecStatus::ALL {
            assert_eq!(ExecStatus::from_code(s.code()), Some(s));
        }
        assert_eq!(ExecStatus::from_code(9), None);
    }

    #[test]
    fn precedence_order() {
        use ExecStatus::*;
        assert_eq!(ParseOk.combine(RuntimeError), RuntimeError);
        assert_eq!(RuntimeError.combine(ParseError), ParseError);
        assert_eq!(ParseError.combine(Timeout), Timeout);
        assert_eq!(Timeout.combine(Crash), Crash);
        assert_eq!(Crash.combine(ParseOk), Crash);
    }

    #[test]
    fn wire_format_is_bit_exact() {
        let mut req = Vec::new();
        protocol::exec_request(b"x;", &mut req);
        assert_eq!(req, b"EXEC\x02\x00\x00\x00x;");

        let stat = protocol::stat_response(ExecStatus::Crash, 0x0104);
        assert_eq!(&stat, b"STAT\x03\x04\x01");
        assert_eq!(protocol::parse_stat(&stat).unwrap(), (ExecStatus::Crash, Some(0x0104)));
        let ok = protocol::stat_response(ExecStatus::ParseOk, 0);
        assert_eq!(protocol::parse_stat(&ok).unwrap(), (ExecStatus::ParseOk, None));
        assert!(protocol::parse_stat(b"STAX\x00\x00\x00").is_err());
        assert!(protocol::parse_stat(b"STAT\x09\x00\x00").is_err());

        let hs = protocol::handshake_bytes(65536);
        assert_eq!(&hs, b"HELO\x01\x00\x00\x00\x00\x00\x01\x00");
        assert_eq!(protocol::parse_handshake(&hs).unwrap(), (1, 65536));
    }

    #[test]
    fn request_reader() {
        let mut wire = Vec::new();
        let mut buf = Vec::new();
        protocol::exec_request(b"let var1 = 1 ;", &mut buf);
        wire.extend_from_slice(&buf);
        protocol::exec_request(b"", &mut buf);
        wire.extend_from_slice(&buf);
        let mut r = &wire[..];
        let mut program = Vec::new();
        assert!(protocol::read_exec_request(&mut r, &mut program).unwrap());
        assert_eq!(program, b"let var1 = 1 ;");
        assert!(protocol::read_exec_request(&mut r, &mut program).unwrap());
        assert!(program.is_empty());
        assert!(!protocol::read_exec_request(&mut r, &mut program).unwrap());

        let mut bad = &b"EXEX\x00\x00\x00\x00"[..];
        assert!(protocol::read_exec_request(&mut bad, &mut program).is_err());
        let mut short = &b"EXEC\x05\x00\x00\x00ab"[..];
        assert!(protocol::read_exec_request(&mut short, &mut program).is_err());
    }

    #[test]
    fn in_process_target_clears_trace() {
        let mut t = InProcessTarget::new(
            |p: &[u8], trace: &mut [u8]| {
                trace[p.len()] += 1;
                HarnessOutcome {
                    status: ExecStatus::ParseOk,
                    assertion_id: None,
                }
            },
            16,
        );
        t.run(b"ab").unwrap();
        let r = t.run(b"abc").unwrap();
        assert_eq!(r.trace.iter().map(|&c| c as u32).sum::<u32>(), 1);
        assert_eq!(r.trace[3], 1);
    }

    #[test]
    fn missing_binary_fails_to_spawn() {
        let err = ProcessTarget::spawn(TargetConfig::new("/nonexistent/minijs")).err().unwrap();
        assert!(matches!(err, ExecError::SpawnFailure { .. }));
    }

    #[test]
    fn shared_region_lifecycle() {
        let mut region = SharedRegion::create(4096).unwrap();
        region.as_mut_slice()[7] = 3;
        let mut view = SharedRegion::open(region.path(), 4096).unwrap();
        assert_eq!(view[7], 3);
        view[8] = 5;
        assert_eq!(region.as_slice()[8], 5);
        assert!(SharedRegion::open(region.path(), 8192).is_err());
        let path = region.path().to_path_buf();
        drop(region);
        assert!(!path.exists());
    }
}
