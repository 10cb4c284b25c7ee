//! Seed pre-parser: rename variables, renumber literals, collect the token
//! map and encode every seed as 16-bit codes.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::codec;
use crate::par;
use crate::token_model::{
    is_builtin, lex, nearest_canonical, Spacing, Token, TokenKind, TokenSeq, VARIABLE_POOL,
};

pub const MAP_FORMAT_VERSION: &str = "v1";
pub const MAX_MAP_ENTRIES: usize = 1 << 16;

pub const TOKENMAP_FILE: &str = "tokenmap.txt";
pub const QUEUE_DIR: &str = "queue";
pub const SEEDS_REPORT_FILE: &str = "seeds_report.txt";
/// Untouched seed sources, numbered like the queue; the byte baseline
/// starts from these.
pub const ORIGINALS_DIR: &str = "originals";

#[derive(Debug, Error)]
pub enum PreprocError {
    #[error("token map overflow: {0} distinct tokens exceed the 16-bit code space")]
    MapOverflow(usize),
    #[error("duplicate token {0:?} in token map")]
    DuplicateToken(String),
    #[error("malformed token map at line {line}: {reason}")]
    MalformedMap { line: usize, reason: String },
    #[error("no usable seeds in {dir} ({skipped} skipped)")]
    NoSeeds { dir: PathBuf, skipped: usize },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> PreprocError + '_ {
    move |source| PreprocError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// The corpus-wide bijection between tokens and 16-bit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenMap {
    entries: Vec<Token>,
    index: HashMap<Token, u16>,
}

impl TokenMap {
    pub fn from_entries(entries: Vec<Token>) -> Result<Self, PreprocError> {
        if entries.len() > MAX_MAP_ENTRIES {
            return Err(PreprocError::MapOverflow(entries.len()));
        }
        let mut index = HashMap::with_capacity(entries.len());
        for (i, tok) in entries.iter().enumerate() {
            if index.insert(tok.clone(), i as u16).is_some() {
                return Err(PreprocError::DuplicateToken(tok.text.clone()));
            }
        }
        Ok(TokenMap { entries, index })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Token] {
        &self.entries
    }

    pub fn version(&self) -> &'static str {
        MAP_FORMAT_VERSION
    }

    pub fn code_of(&self, token: &Token) -> Option<u16> {
        self.index.get(token).copied()
    }

    pub fn token(&self, code: u16) -> Option<&Token> {
        self.entries.get(code as usize)
    }

    /// Code of the `;` punctuator, which bounds statements for splicing and
    /// minimization.
    pub fn semicolon(&self) -> Option<u16> {
        self.code_of(&Token::punct(";"))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("TOKMAP {} {}\n", MAP_FORMAT_VERSION, self.entries.len());
        for (code, tok) in self.entries.iter().enumerate() {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}",
                code,
                tok.kind.as_str(),
                escape(&tok.text),
                tok.spacing.as_str()
            );
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, PreprocError> {
        let bad = |line: usize, reason: &str| PreprocError::MalformedMap {
            line,
            reason: reason.to_string(),
        };
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad(1, "missing header"))?;
        let mut parts = header.split(' ');
        if parts.next() != Some("TOKMAP") || parts.next() != Some(MAP_FORMAT_VERSION) {
            return Err(bad(1, "expected `TOKMAP v1 <count>`"));
        }
        let count: usize = parts
            .next()
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| bad(1, "bad count"))?;

        let mut entries = Vec::with_capacity(count);
        for (i, line) in lines.enumerate() {
            let lineno = i + 2;
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(bad(lineno, "expected 4 tab-separated fields"));
            }
            let code: usize = fields[0].parse().map_err(|_| bad(lineno, "bad code"))?;
            if code != entries.len() {
                return Err(bad(lineno, "codes must be consecutive from 0"));
            }
            let kind = TokenKind::parse(fields[1]).ok_or_else(|| bad(lineno, "bad kind"))?;
            let text = unescape(fields[2]).ok_or_else(|| bad(lineno, "bad escape"))?;
            let spacing = Spacing::parse(fields[3]).ok_or_else(|| bad(lineno, "bad spacing"))?;
            if text.is_empty() {
                return Err(bad(lineno, "empty token"));
            }
            entries.push(Token {
                kind,
                text,
                spacing,
            });
        }
        if entries.len() != count {
            return Err(bad(1, "count does not match entries"));
        }
        TokenMap::from_entries(entries)
    }

    pub fn load(path: &Path) -> Result<Self, PreprocError> {
        let text = fs::read_to_string(path).map_err(io_err(path))?;
        TokenMap::parse(&text)
    }

    pub fn save(&self, path: &Path) -> Result<(), PreprocError> {
        fs::write(path, self.to_text()).map_err(io_err(path))
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\t' => out.push_str("\\t"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out
}

fn unescape(text: &str) -> Option<String> {
    let mut out = String::with_capacity(text.len());
    let mut chars = text.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        out.push(match chars.next()? {
            '\\' => '\\',
            't' => '\t',
            'n' => '\n',
            'r' => '\r',
            _ => return None,
        });
    }
    Some(out)
}

/// A program as token codes; the unit of mutation and storage.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EncodedInput {
    pub codes: Vec<u16>,
}

impl EncodedInput {
    pub fn new(codes: Vec<u16>) -> Self {
        EncodedInput { codes }
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Raw little-endian u16s, no header.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.codes.iter().flat_map(|c| c.to_le_bytes()).collect()
    }

    /// A trailing odd byte is dropped.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        EncodedInput {
            codes: bytes
                .chunks_exact(2)
                .map(|b| u16::from_le_bytes([b[0], b[1]]))
                .collect(),
        }
    }

    pub fn load(path: &Path) -> Result<Self, PreprocError> {
        let bytes = fs::read(path).map_err(io_err(path))?;
        Ok(EncodedInput::from_bytes(&bytes))
    }

    pub fn save(&self, path: &Path) -> Result<(), PreprocError> {
        fs::write(path, self.to_bytes()).map_err(io_err(path))
    }
}

impl From<Vec<u16>> for EncodedInput {
    fn from(codes: Vec<u16>) -> Self {
        EncodedInput { codes }
    }
}

/// One identifier renaming or number snap, for the audit log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rewrite {
    Rename { from: String, to: &'static str },
    Renumber { from: String, to: u64 },
}

pub fn rename_variables<R: Rng + ?Sized>(seq: &TokenSeq, rng: &mut R) -> TokenSeq {
    rename_variables_logged(seq, rng).0
}

/// Maps each distinct user identifier to a pool name. Names are drawn
/// without replacement; the pool is reshuffled once all fifteen are used.
pub fn rename_variables_logged<R: Rng + ?Sized>(
    seq: &TokenSeq,
    rng: &mut R,
) -> (TokenSeq, Vec<Rewrite>) {
    let mut assigned: HashMap<&str, &'static str> = HashMap::new();
    let mut bag: Vec<&'static str> = Vec::new();
    let mut log = Vec::new();

    let tokens = seq
        .iter()
        .map(|tok| {
            if tok.kind != TokenKind::Identifier || is_builtin(&tok.text) {
                return tok.clone();
            }
            let name = *assigned.entry(tok.text.as_str()).or_insert_with(|| {
                if bag.is_empty() {
                    bag.extend_from_slice(&VARIABLE_POOL);
                    bag.shuffle(rng);
                }
                let to = bag.pop().unwrap();
                log.push(Rewrite::Rename {
                    from: tok.text.clone(),
                    to,
                });
                to
            });
            Token {
                kind: TokenKind::Identifier,
                text: name.to_string(),
                spacing: tok.spacing,
            }
        })
        .collect();
    (tokens, log)
}

/// Integer part of a decimal literal, saturating on overflow.
fn integer_part(text: &str) -> u64 {
    let int = text.split('.').next().unwrap_or("");
    int.bytes()
        .filter(u8::is_ascii_digit)
        .fold(0u64, |acc, d| acc.saturating_mul(10).saturating_add((d - b'0') as u64))
}

pub fn renumber(seq: &TokenSeq) -> TokenSeq {
    renumber_logged(seq).0
}

/// Snaps every number literal to the canonical pool; fractions are
/// truncated toward zero first.
pub fn renumber_logged(seq: &TokenSeq) -> (TokenSeq, Vec<Rewrite>) {
    let mut log = Vec::new();
    let tokens = seq
        .iter()
        .map(|tok| {
            if tok.kind != TokenKind::NumberLiteral {
                return tok.clone();
            }
            let to = nearest_canonical(integer_part(&tok.text));
            if tok.text != to.to_string() {
                log.push(Rewrite::Renumber {
                    from: tok.text.clone(),
                    to,
                });
            }
            Token::number(to)
        })
        .collect();
    (tokens, log)
}

/// First-occurrence union of all seed tokens, extras appended last.
pub fn build_token_map(seeds: &[TokenSeq], extra: &[Token]) -> Result<TokenMap, PreprocError> {
    let mut index: HashMap<Token, u16> = HashMap::new();
    let mut entries = Vec::new();
    for tok in seeds.iter().flat_map(|s| s.iter()).chain(extra) {
        if index.contains_key(tok) {
            continue;
        }
        if entries.len() == MAX_MAP_ENTRIES {
            let distinct: HashSet<&Token> = seeds.iter().flat_map(|s| s.iter()).chain(extra).collect();
            return Err(PreprocError::MapOverflow(distinct.len()));
        }
        index.insert(tok.clone(), entries.len() as u16);
        entries.push(tok.clone());
    }
    Ok(TokenMap { entries, index })
}

/// Parses an extra-tokens file: one token per line. A line that lexes to a
/// single token keeps its lexical kind; anything else (e.g. a bare quote)
/// becomes a punctuator with the literal line text.
pub fn parse_extra_tokens(text: &str) -> Vec<Token> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| match lex(line) {
            Ok(seq) if seq.len() == 1 => seq.0.into_iter().next().unwrap(),
            _ => Token::punct(line),
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct PreparedSeed {
    pub name: String,
    pub source: String,
    pub tokens: TokenSeq,
    pub rewrites: Vec<Rewrite>,
}

#[derive(Debug)]
pub struct PreprocessOutcome {
    pub map: TokenMap,
    pub seeds: Vec<PreparedSeed>,
    pub inputs: Vec<EncodedInput>,
    pub skipped: Vec<(String, String)>,
}

/// Lexes, renames and renumbers one seed. The rng stream is keyed by the
/// seed's position so results do not depend on scheduling.
pub fn prepare_seed(name: &str, source: &str, rng_seed: u64, index: usize) -> Result<PreparedSeed, String> {
    let tokens = lex(source).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    rng.set_stream(index as u64);
    let (renamed, mut rewrites) = rename_variables_logged(&tokens, &mut rng);
    let (renumbered, numbers) = renumber_logged(&renamed);
    rewrites.extend(numbers);
    Ok(PreparedSeed {
        name: name.to_string(),
        source: source.to_string(),
        tokens: renumbered,
        rewrites,
    })
}

/// Files directly inside `dir`, sorted by name.
pub fn list_seed_files(dir: &Path) -> Result<Vec<PathBuf>, PreprocError> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err(dir))? {
        let entry = entry.map_err(io_err(dir))?;
        let path = entry.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Runs the whole pre-parser over `seed_dir` without touching the disk
/// beyond reading seeds.
pub fn preprocess_seeds(
    seed_dir: &Path,
    rng_seed: u64,
    extra: &[Token],
) -> Result<PreprocessOutcome, PreprocError> {
    let files = list_seed_files(seed_dir)?;
    let sources: Vec<(String, Result<String, String>)> = files
        .iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            let text = fs::read(p)
                .map_err(|e| e.to_string())
                .and_then(|b| String::from_utf8(b).map_err(|_| "not valid UTF-8".to_string()));
            (name, text)
        })
        .collect();

    let indexed: Vec<(usize, &(String, Result<String, String>))> = sources.iter().enumerate().collect();
    let prepared = par::map(&indexed, |(i, (name, text))| match text {
        Ok(src) => prepare_seed(name, src, rng_seed, *i),
        Err(e) => Err(e.clone()),
    });

    let mut seeds = Vec::new();
    let mut skipped = Vec::new();
    for ((name, _), result) in sources.iter().zip(prepared) {
        match result {
            Ok(seed) if !seed.tokens.is_empty() => seeds.push(seed),
            Ok(_) => skipped.push((name.clone(), "no tokens".to_string())),
            Err(reason) => skipped.push((name.clone(), reason)),
        }
    }
    if seeds.is_empty() {
        return Err(PreprocError::NoSeeds {
            dir: seed_dir.to_path_buf(),
            skipped: skipped.len(),
        });
    }

    let seqs: Vec<TokenSeq> = seeds.iter().map(|s| s.tokens.clone()).collect();
    let map = build_token_map(&seqs, extra)?;
    let inputs = seqs
        .iter()
        .map(|s| codec::encode(s, &map).expect("map covers every seed token"))
        .collect();
    Ok(PreprocessOutcome {
        map,
        seeds,
        inputs,
        skipped,
    })
}

pub fn queue_file_name(id: usize, ext: &str) -> String {
    format!("id_{id:06}.{ext}")
}

/// Pre-parses `seed_dir` and writes the corpus layout into `corpus_dir`.
/// Any existing `.tok` files in the queue are replaced.
pub fn preprocess_corpus(
    seed_dir: &Path,
    corpus_dir: &Path,
    rng_seed: u64,
    extra: &[Token],
) -> Result<PreprocessOutcome, PreprocError> {
    let outcome = preprocess_seeds(seed_dir, rng_seed, extra)?;

    let queue = corpus_dir.join(QUEUE_DIR);
    fs::create_dir_all(&queue).map_err(io_err(&queue))?;
    for entry in fs::read_dir(&queue).map_err(io_err(&queue))? {
        let path = entry.map_err(io_err(&queue))?.path();
        if path.extension().is_some_and(|e| e == "tok") {
            fs::remove_file(&path).map_err(io_err(&path))?;
        }
    }
    let originals = corpus_dir.join(ORIGINALS_DIR);
    if originals.exists() {
        fs::remove_dir_all(&originals).map_err(io_err(&originals))?;
    }
    fs::create_dir_all(&originals).map_err(io_err(&originals))?;
    outcome.map.save(&corpus_dir.join(TOKENMAP_FILE))?;
    for (id, (input, seed)) in outcome.inputs.iter().zip(&outcome.seeds).enumerate() {
        input.save(&queue.join(queue_file_name(id, "tok")))?;
        let path = originals.join(queue_file_name(id, "js"));
        fs::write(&path, &seed.source).map_err(io_err(&path))?;
    }

    let report_path = corpus_dir.join(SEEDS_REPORT_FILE);
    fs::write(&report_path, seeds_report(&outcome)).map_err(io_err(&report_path))?;
    Ok(outcome)
}

fn seeds_report(outcome: &PreprocessOutcome) -> String {
    let mut out = format!(
        "seeds {} skipped {} tokens {}\n",
        outcome.seeds.len(),
        outcome.skipped.len(),
        outcome.map.len()
    );
    for (id, seed) in outcome.seeds.iter().enumerate() {
        let _ = writeln!(out, "{} {} tokens={}", queue_file_name(id, "tok"), seed.name, seed.tokens.len());
        for rw in &seed.rewrites {
            let _ = match rw {
                Rewrite::Rename { from, to } => writeln!(out, "  rename {from} -> {to}"),
                Rewrite::Renumber { from, to } => writeln!(out, "  renumber {from} -> {to}"),
            };
        }
    }
    for (name, reason) in &outcome.skipped {
        let _ = writeln!(out, "skipped {name}: {reason}");
    }
    out
}

/// The seed sources saved by [`preprocess_corpus`], sorted by name. Empty
/// for corpora written before originals were kept.
pub fn load_originals(corpus_dir: &Path) -> Result<Vec<(String, Vec<u8>)>, PreprocError> {
    let dir = corpus_dir.join(ORIGINALS_DIR);
    if !dir.is_dir() {
        return Ok(Vec::new());
    }
    list_seed_files(&dir)?
        .into_iter()
        .map(|path| {
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            fs::read(&path).map(|b| (name, b)).map_err(io_err(&path))
        })
        .collect()
}

/// Loads `tokenmap.txt` plus every `queue/*.tok` (sorted by name).
pub fn load_corpus(corpus_dir: &Path) -> Result<(TokenMap, Vec<(String, EncodedInput)>), PreprocError> {
    let map = TokenMap::load(&corpus_dir.join(TOKENMAP_FILE))?;
    let queue = corpus_dir.join(QUEUE_DIR);
    let mut inputs = Vec::new();
    for path in list_seed_files(&queue)? {
        if path.extension().is_some_and(|e| e == "tok") {
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            inputs.push((name, EncodedInput::load(&path)?));
        }
    }
    Ok((map, inputs))
}
