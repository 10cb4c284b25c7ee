//! Tokens of the MiniJS surface language, the seed lexer, and the two fixed
//! pools (canonical numbers, variable names) that keep the token map small.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

pub const KEYWORDS: [&str; 16] = [
    "let", "const", "var", "function", "return", "if", "else", "while", "for", "true", "false",
    "null", "new", "class", "delete", "typeof",
];

/// Identifiers the renamer must leave alone: runtime builtins and the array
/// methods/properties they expose.
pub const BUILTINS: [&str; 8] = [
    "print", "length", "push", "pop", "shift", "unshift", "Array", "String",
];

pub const VARIABLE_POOL: [&str; 15] = [
    "var1", "var2", "var3", "var4", "var5", "var6", "var7", "var8", "var9", "var10", "var11",
    "var12", "var13", "var14", "var15",
];

// Longest first, so the first prefix match is the maximal munch.
const PUNCTUATORS: [&str; 30] = [
    "===", "!==", "==", "!=", "<=", ">=", "=>", "++", "--", "&&", "||", "(", ")", "{", "}", "[",
    "]", ";", ",", ".", ":", "+", "-", "*", "/", "%", "<", ">", "=", "!",
];

pub fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

pub fn is_builtin(s: &str) -> bool {
    BUILTINS.contains(&s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TokenKind {
    Keyword,
    Punctuator,
    Identifier,
    NumberLiteral,
    StringLiteral,
}

impl TokenKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TokenKind::Keyword => "keyword",
            TokenKind::Punctuator => "punctuator",
            TokenKind::Identifier => "identifier",
            TokenKind::NumberLiteral => "number",
            TokenKind::StringLiteral => "string",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "keyword" => TokenKind::Keyword,
            "punctuator" => TokenKind::Punctuator,
            "identifier" => TokenKind::Identifier,
            "number" => TokenKind::NumberLiteral,
            "string" => TokenKind::StringLiteral,
            _ => return None,
        })
    }
}

/// Whether render separates the token from its neighbours with a space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spacing {
    Normal,
    Glue,
}

impl Spacing {
    pub fn as_str(self) -> &'static str {
        match self {
            Spacing::Normal => "normal",
            Spacing::Glue => "glue",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "normal" => Some(Spacing::Normal),
            "glue" => Some(Spacing::Glue),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub spacing: Spacing,
}

impl Token {
    pub fn new(kind: TokenKind, text: impl Into<String>) -> Self {
        let text = text.into();
        let spacing = GlueSet::default().spacing_of(&text);
        Token { kind, text, spacing }
    }

    pub fn keyword(text: &str) -> Self {
        Token::new(TokenKind::Keyword, text)
    }

    pub fn punct(text: &str) -> Self {
        Token::new(TokenKind::Punctuator, text)
    }

    pub fn ident(text: &str) -> Self {
        Token::new(TokenKind::Identifier, text)
    }

    pub fn number(value: u64) -> Self {
        Token::new(TokenKind::NumberLiteral, value.to_string())
    }

    pub fn is_glue(&self) -> bool {
        self.spacing == Spacing::Glue
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Token texts rendered without surrounding spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueSet {
    texts: Vec<String>,
}

impl Default for GlueSet {
    fn default() -> Self {
        GlueSet {
            texts: vec!["\"".into(), "'".into(), "`".into()],
        }
    }
}

impl GlueSet {
    pub fn new<I, S>(texts: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        GlueSet {
            texts: texts.into_iter().map(Into::into).collect(),
        }
    }

    pub fn spacing_of(&self, text: &str) -> Spacing {
        if self.texts.iter().any(|t| t == text) {
            Spacing::Glue
        } else {
            Spacing::Normal
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TokenSeq(pub Vec<Token>);

impl TokenSeq {
    pub fn new(tokens: Vec<Token>) -> Self {
        TokenSeq(tokens)
    }

    pub fn tokens(&self) -> &[Token] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Token> {
        self.0.iter()
    }

    pub fn texts(&self) -> Vec<&str> {
        self.0.iter().map(|t| t.text.as_str()).collect()
    }
}

impl FromIterator<Token> for TokenSeq {
    fn from_iter<I: IntoIterator<Item = Token>>(iter: I) -> Self {
        TokenSeq(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a TokenSeq {
    type Item = &'a Token;
    type IntoIter = std::slice::Iter<'a, Token>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("illegal character {ch:?} at byte {position}")]
    IllegalChar { position: usize, ch: char },
    #[error("unterminated string literal starting at byte {position}")]
    UnterminatedString { position: usize },
    #[error("unterminated block comment starting at byte {position}")]
    UnterminatedComment { position: usize },
}

impl LexError {
    pub fn position(&self) -> usize {
        match *self {
            LexError::IllegalChar { position, .. }
            | LexError::UnterminatedString { position }
            | LexError::UnterminatedComment { position } => position,
        }
    }
}

pub fn lex(source: &str) -> Result<TokenSeq, LexError> {
    lex_with(source, &GlueSet::default())
}

/// Maximal-munch tokenization. Whitespace and comments are dropped.
pub fn lex_with(source: &str, glue: &GlueSet) -> Result<TokenSeq, LexError> {
    let bytes = source.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;

    while pos < bytes.len() {
        let b = bytes[pos];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => pos += 1,
            b'/' if bytes.get(pos + 1) == Some(&b'/') => {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            }
            b'/' if bytes.get(pos + 1) == Some(&b'*') => {
                let start = pos;
                pos += 2;
                loop {
                    if pos + 1 >= bytes.len() {
                        return Err(LexError::UnterminatedComment { position: start });
                    }
                    if bytes[pos] == b'*' && bytes[pos + 1] == b'/' {
                        pos += 2;
                        break;
                    }
                    pos += 1;
                }
            }
            b'"' | b'\'' => {
                let start = pos;
                pos += 1;
                loop {
                    match bytes.get(pos) {
                        None | Some(b'\n') | Some(b'\r') => {
                            return Err(LexError::UnterminatedString { position: start })
                        }
                        Some(&c) if c == b => {
                            pos += 1;
                            break;
                        }
                        Some(b'\\') => match bytes.get(pos + 1) {
                            None | Some(b'\n') | Some(b'\r') => {
                                return Err(LexError::UnterminatedString { position: start })
                            }
                            // Skip the whole escaped char so a multi-byte
                            // char after a backslash keeps `pos` on a boundary.
                            Some(_) => {
                                let ch = source[pos + 1..].chars().next().unwrap();
                                pos += 1 + ch.len_utf8();
                            }
                        },
                        Some(_) => pos += 1,
                    }
                }
                push(&mut tokens, TokenKind::StringLiteral, &source[start..pos], glue);
            }
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if bytes.get(pos) == Some(&b'.')
                    && bytes.get(pos + 1).is_some_and(u8::is_ascii_digit)
                {
                    pos += 1;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                }
                push(&mut tokens, TokenKind::NumberLiteral, &source[start..pos], glue);
            }
            c if is_ident_start(c) => {
                let start = pos;
                while pos < bytes.len() && is_ident_continue(bytes[pos]) {
                    pos += 1;
                }
                let text = &source[start..pos];
                let kind = if is_keyword(text) {
                    TokenKind::Keyword
                } else {
                    TokenKind::Identifier
                };
                push(&mut tokens, kind, text, glue);
            }
            _ => {
                let rest = &bytes[pos..];
                match PUNCTUATORS.iter().find(|p| rest.starts_with(p.as_bytes())) {
                    Some(p) => {
                        push(&mut tokens, TokenKind::Punctuator, p, glue);
                        pos += p.len();
                    }
                    None => {
                        let ch = source[pos..].chars().next().unwrap_or('\u{fffd}');
                        return Err(LexError::IllegalChar { position: pos, ch });
                    }
                }
            }
        }
    }
    Ok(TokenSeq(tokens))
}

fn push(tokens: &mut Vec<Token>, kind: TokenKind, text: &str, glue: &GlueSet) {
    tokens.push(Token {
        kind,
        text: text.to_string(),
        spacing: glue.spacing_of(text),
    });
}

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_' || b == b'$'
}

fn is_ident_continue(b: u8) -> bool {
    is_ident_start(b) || b.is_ascii_digit()
}

/// Joins token texts with single spaces, except next to glue tokens.
pub fn render(seq: &TokenSeq) -> String {
    let mut out = String::new();
    render_into(seq.iter(), &mut out);
    out
}

pub fn render_into<'a>(tokens: impl IntoIterator<Item = &'a Token>, out: &mut String) {
    let mut prev_glue = true;
    for tok in tokens {
        if !prev_glue && !tok.is_glue() {
            out.push(' ');
        }
        out.push_str(&tok.text);
        prev_glue = tok.is_glue();
    }
}

/// `{2^k - 1, 2^k, 2^k + 1 : k = 0..=32}`, sorted and deduplicated.
pub fn canonical_numbers() -> &'static [u64] {
    static POOL: OnceLock<Vec<u64>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<u64> = (0..=32u32)
            .flat_map(|k| {
                let p = 1u64 << k;
                [p - 1, p, p + 1]
            })
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    })
}

pub fn is_canonical(n: u64) -> bool {
    canonical_numbers().binary_search(&n).is_ok()
}

/// Closest canonical pool member; ties go to the smaller value.
pub fn nearest_canonical(n: u64) -> u64 {
    let pool = canonical_numbers();
    let idx = pool.partition_point(|&v| v < n);
    if idx == pool.len() {
        return pool[pool.len() - 1];
    }
    let above = pool[idx];
    if above == n || idx == 0 {
        return above;
    }
    let below = pool[idx - 1];
    if n - below <= above - n {
        below
    } else {
        above
    }
}
