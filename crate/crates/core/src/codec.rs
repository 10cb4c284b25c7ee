//! Token sequences to codes and back. Decoding is total: any u16 array maps
//! to some program text.

use thiserror::Error;

use crate::preproc::{EncodedInput, TokenMap};
use crate::token_model::{render_into, Token, TokenSeq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("token {0:?} is not in the token map")]
pub struct UnknownToken(pub String);

pub fn encode(seq: &TokenSeq, map: &TokenMap) -> Result<EncodedInput, UnknownToken> {
    seq.iter()
        .map(|tok| map.code_of(tok).ok_or_else(|| UnknownToken(tok.text.clone())))
        .collect::<Result<Vec<_>, _>>()
        .map(EncodedInput::new)
}

/// Wraps out-of-range codes onto the map. An empty map has no valid code;
/// callers never decode against one.
#[inline]
pub fn normalize_code(code: u16, map: &TokenMap) -> u16 {
    match map.len() {
        0 => 0,
        // 65536 entries cover the whole code space.
        n if n > u16::MAX as usize => code,
        n => code % n as u16,
    }
}

pub fn decode_tokens<'m>(input: &EncodedInput, map: &'m TokenMap) -> Vec<&'m Token> {
    decode_codes(&input.codes, map)
}

fn decode_codes<'m>(codes: &[u16], map: &'m TokenMap) -> Vec<&'m Token> {
    if map.is_empty() {
        return Vec::new();
    }
    codes
        .iter()
        .map(|&c| &map.entries()[normalize_code(c, map) as usize])
        .collect()
}

pub fn decode(input: &EncodedInput, map: &TokenMap) -> String {
    let mut out = String::new();
    decode_into(&input.codes, map, &mut out);
    out
}

/// Hot-path decode into a reusable buffer.
pub fn decode_into(codes: &[u16], map: &TokenMap, out: &mut String) {
    out.clear();
    if map.is_empty() {
        return;
    }
    let entries = map.entries();
    render_into(
        codes.iter().map(|&c| &entries[normalize_code(c, map) as usize]),
        out,
    );
}
