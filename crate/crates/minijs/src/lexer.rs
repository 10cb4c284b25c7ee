//! MiniJS lexer. Same token classes as the fuzzer's token model, but with
//! positions and numeric values.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Keyword {
    Let,
    Const,
    Var,
    Function,
    Return,
    If,
    Else,
    While,
    For,
    True,
    False,
    Null,
    New,
    Class,
    Delete,
    Typeof,
}

impl Keyword {
    pub fn parse(s: &str) -> Option<Self> {
        use Keyword::*;
        Some(match s {
            "let" => Let,
            "const" => Const,
            "var" => Var,
            "function" => Function,
            "return" => Return,
            "if" => If,
            "else" => Else,
            "while" => While,
            "for" => For,
            "true" => True,
            "false" => False,
            "null" => Null,
            "new" => New,
            "class" => Class,
            "delete" => Delete,
            "typeof" => Typeof,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        use Keyword::*;
        match self {
            Let => "let",
            Const => "const",
            Var => "var",
            Function => "function",
            Return => "return",
            If => "if",
            Else => "else",
            While => "while",
            For => "for",
            True => "true",
            False => "false",
            Null => "null",
            New => "new",
            Class => "class",
            Delete => "delete",
            Typeof => "typeof",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Punct {
    StrictEq,
    StrictNe,
    Eq,
    Ne,
    Le,
    Ge,
    Arrow,
    Inc,
    Dec,
    And,
    Or,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semi,
    Comma,
    Dot,
    Colon,
    Plus,
    Minus,
    Star,
    Slash,
    Percent,
    Lt,
    Gt,
    Assign,
    Not,
}

/// Longest first, so the first prefix match is the maximal munch.
const PUNCTS: [(&str, Punct); 30] = [
    ("===", Punct::StrictEq),
    ("!==", Punct::StrictNe),
    ("==", Punct::Eq),
    ("!=", Punct::Ne),
    ("<=", Punct::Le),
    (">=", Punct::Ge),
    ("=>", Punct::Arrow),
    ("++", Punct::Inc),
    ("--", Punct::Dec),
    ("&&", Punct::And),
    ("||", Punct::Or),
    ("(", Punct::LParen),
    (")", Punct::RParen),
    ("{", Punct::LBrace),
    ("}", Punct::RBrace),
    ("[", Punct::LBracket),
    ("]", Punct::RBracket),
    (";", Punct::Semi),
    (",", Punct::Comma),
    (".", Punct::Dot),
    (":", Punct::Colon),
    ("+", Punct::Plus),
    ("-", Punct::Minus),
    ("*", Punct::Star),
    ("/", Punct::Slash),
    ("%", Punct::Percent),
    ("<", Punct::Lt),
    (">", Punct::Gt),
    ("=", Punct::Assign),
    ("!", Punct::Not),
];

impl Punct {
    pub fn as_str(self) -> &'static str {
        PUNCTS.iter().find(|(_, p)| *p == self).map(|(s, _)| *s).unwrap_or("?")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Num(f64),
    Str(String),
    Ident(String),
    Kw(Keyword),
    Punct(Punct),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "{n}"),
            Tok::Str(s) => write!(f, "{s:?}"),
            Tok::Ident(s) => f.write_str(s),
            Tok::Kw(k) => f.write_str(k.as_str()),
            Tok::Punct(p) => f.write_str(p.as_str()),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spanned {
    pub tok: Tok,
    pub pos: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexErrorKind {
    IllegalChar,
    UnterminatedString,
    UnterminatedComment,
    BadNumber,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LexError {
    pub kind: LexErrorKind,
    pub pos: usize,
}

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_' || b == b'$'
}

fn is_ident_char(b: u8) -> bool {
    is_ident_start(b) || b.is_ascii_digit()
}

pub fn lex(src: &[u8]) -> Result<Vec<Spanned>, LexError> {
    let mut out = Vec::with_capacity(src.len() / 3 + 1);
    let mut i = 0;
    let n = src.len();
    while i < n {
        let b = src[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if b == b'/' && i + 1 < n && src[i + 1] == b'/' {
            while i < n && src[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        if b == b'/' && i + 1 < n && src[i + 1] == b'*' {
            let start = i;
            i += 2;
            loop {
                if i + 1 >= n {
                    return Err(LexError {
                        kind: LexErrorKind::UnterminatedComment,
                        pos: start,
                    });
                }
                if src[i] == b'*' && src[i + 1] == b'/' {
                    i += 2;
                    break;
                }
                i += 1;
            }
            continue;
        }
        let pos = i;
        if b.is_ascii_digit() {
            while i < n && src[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < n && src[i] == b'.' && src[i + 1].is_ascii_digit() {
                i += 1;
                while i < n && src[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let text = std::str::from_utf8(&src[pos..i]).unwrap();
            let value: f64 = text.parse().map_err(|_| LexError {
                kind: LexErrorKind::BadNumber,
                pos,
            })?;
            out.push(Spanned { tok: Tok::Num(value), pos });
            continue;
        }
        if is_ident_start(b) {
            while i < n && is_ident_char(src[i]) {
                i += 1;
            }
            let text = std::str::from_utf8(&src[pos..i]).unwrap();
            let tok = match Keyword::parse(text) {
                Some(k) => Tok::Kw(k),
                None => Tok::Ident(text.to_string()),
            };
            out.push(Spanned { tok, pos });
            continue;
        }
        if b == b'"' || b == b'\'' {
            let quote = b;
            i += 1;
            let mut s = Vec::new();
            loop {
                if i >= n || src[i] == b'\n' {
                    return Err(LexError {
                        kind: LexErrorKind::UnterminatedString,
                        pos,
                    });
                }
                let c = src[i];
                if c == quote {
                    i += 1;
                    break;
                }
                if c == b'\\' {
                    if i + 1 >= n {
                        return Err(LexError {
                            kind: LexErrorKind::UnterminatedString,
                            pos,
                        });
                    }
                    s.push(match src[i + 1] {
                        b'n' => b'\n',
                        b't' => b'\t',
                        other => other,
                    });
                    i += 2;
                    continue;
                }
                s.push(c);
                i += 1;
            }
            let text = String::from_utf8(s).map_err(|_| LexError {
                kind: LexErrorKind::IllegalChar,
                pos,
            })?;
            out.push(Spanned { tok: Tok::Str(text), pos });
            continue;
        }
        let rest = &src[i..];
        match PUNCTS.iter().find(|(p, _)| rest.starts_with(p.as_bytes())) {
            Some((p, punct)) => {
                i += p.len();
                out.push(Spanned {
                    tok: Tok::Punct(*punct),
                    pos,
                });
            }
            None => {
                return Err(LexError {
                    kind: LexErrorKind::IllegalChar,
                    pos,
                })
            }
        }
    }
    out.push(Spanned { tok: Tok::Eof, pos: n });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex(s.as_bytes()).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn basic_tokens() {
        assert_eq!(
            toks("let var1 = 1.5 ;"),
            [
                Tok::Kw(Keyword::Let),
                Tok::Ident("var1".into()),
                Tok::Punct(Punct::Assign),
                Tok::Num(1.5),
                Tok::Punct(Punct::Semi),
                Tok::Eof
            ]
        );
        assert_eq!(toks("a!==b")[1], Tok::Punct(Punct::StrictNe));
        assert_eq!(toks("x=>y")[1], Tok::Punct(Punct::Arrow));
        assert_eq!(toks("'a\\'b'")[0], Tok::Str("a'b".into()));
        assert_eq!(toks("1 // c\n/* d */ 2").len(), 3);
    }

    #[test]
    fn errors() {
        assert_eq!(lex(b"a # b").unwrap_err().kind, LexErrorKind::IllegalChar);
        assert_eq!(lex(b"\"abc").unwrap_err().kind, LexErrorKind::UnterminatedString);
        assert_eq!(lex(b"/* x").unwrap_err().kind, LexErrorKind::UnterminatedComment);
        assert_eq!(lex(b"\xff").unwrap_err().pos, 0);
    }

    #[test]
    fn punct_table_is_longest_first() {
        for (i, (a, _)) in PUNCTS.iter().enumerate() {
            for (b, _) in &PUNCTS[i + 1..] {
                assert!(!b.starts_with(a) || b.len() <= a.len(), "{a} shadows {b}");
            }
        }
    }
}
