//! Target side of the EXEC/STAT protocol.

use std::io::{Read, Write};
use std::ops::DerefMut;
use std::path::Path;

use tlfuzz_core::coverage::DEFAULT_MAP_SIZE;
use tlfuzz_core::executor::{protocol, ExecError, PROTOCOL_VERSION, SHM_ENV};

use crate::{execute, Options};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ServeEnd {
    /// The fuzzer closed the channel.
    Closed,
    /// An assertion fired and was reported; the process should exit.
    Crashed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ServeConfig {
    pub map_size: usize,
    pub options: Options,
}

impl Default for ServeConfig {
    fn default() -> Self {
        ServeConfig {
            map_size: DEFAULT_MAP_SIZE,
            options: Options::default(),
        }
    }
}

type Trace = Box<dyn DerefMut<Target = [u8]>>;

fn open_trace(shm: Option<&Path>, size: usize) -> Result<Trace, ExecError> {
    Ok(match shm {
        Some(p) => Box::new(tlfuzz_core::executor::SharedRegion::open(p, size)?),
        None => Box::new(vec![0u8; size]),
    })
}

/// Serves requests until the channel closes or an assertion fires. The
/// coverage region comes from `TLFUZZ_SHM`; without it edges go to a
/// private buffer.
pub fn serve<R: Read, W: Write>(input: &mut R, output: &mut W, config: &ServeConfig) -> Result<ServeEnd, ExecError> {
    let shm = std::env::var_os(SHM_ENV).map(std::path::PathBuf::from);
    serve_with(input, output, config, shm.as_deref())
}

pub fn serve_with<R: Read, W: Write>(
    input: &mut R,
    output: &mut W,
    config: &ServeConfig,
    shm: Option<&Path>,
) -> Result<ServeEnd, ExecError> {
    let mut hello = [0u8; 12];
    input.read_exact(&mut hello)?;
    let (version, their_map) = protocol::parse_handshake(&hello)?;
    output.write_all(&protocol::handshake_bytes(config.map_size))?;
    output.flush()?;
    if version != PROTOCOL_VERSION || their_map != config.map_size {
        return Err(ExecError::HandshakeMismatch {
            ours: PROTOCOL_VERSION,
            theirs: version,
            our_map: config.map_size,
            their_map,
        });
    }
    let mut trace = open_trace(shm, config.map_size)?;
    let mut program = Vec::new();
    while protocol::read_exec_request(input, &mut program)? {
        trace.fill(0);
        let run = execute(&program, Some(&mut trace[..]), &config.options);
        let status = run.outcome.status();
        let id = run.outcome.assertion_id();
        output.write_all(&protocol::stat_response(status, id.unwrap_or(0)))?;
        output.flush()?;
        if id.is_some() {
            return Ok(ServeEnd::Crashed);
        }
    }
    Ok(ServeEnd::Closed)
}
