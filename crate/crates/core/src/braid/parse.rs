//! Text grammar for braid words.
//!
//! Whitespace-separated tokens: `s<k>`, `s<k>^-1`, `A(<i>,<j>)`,
//! `A(<i>,<j>)^<e>` and `A(<i>,<j>)^-<e>`.

use super::generators::AGenerator;
use super::word::{Letter, SigmaWord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Sigma(Letter),
    A(AGenerator),
}

impl Token {
    /// Smallest strand count that can carry this token.
    pub fn min_strands(&self) -> usize {
        match self {
            Token::Sigma(l) => l.pos + 1,
            Token::A(g) => g.j(),
        }
    }
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn parse_uint(s: &str, pos: usize) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(
            pos,
            format!("expected a positive integer, found {s:?}"),
        ));
    }
    s.parse::<usize>()
        .map_err(|_| err(pos, "integer too large"))
}

fn parse_token(tok: &str, pos: usize) -> Result<Token> {
    if let Some(rest) = tok.strip_prefix('s') {
        let (num, inverse) = match rest.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (rest, false),
        };
        let k = parse_uint(num, pos + 1)?;
        if k == 0 {
            return Err(err(pos + 1, "generator index must be at least 1"));
        }
        return Ok(Token::Sigma(Letter::new(k, if inverse { -1 } else { 1 })));
    }
    if let Some(rest) = tok.strip_prefix("A(") {
        let close = rest.find(')').ok_or_else(|| err(pos, "missing ')'"))?;
        let inner = &rest[..close];
        let comma = inner
            .find(',')
            .ok_or_else(|| err(pos + 2, "expected 'i,j'"))?;
        let i = parse_uint(&inner[..comma], pos + 2)?;
        let j = parse_uint(&inner[comma + 1..], pos + 3 + comma)?;
        let tail = &rest[close + 1..];
        let tail_pos = pos + 3 + close;
        let exponent = if tail.is_empty() {
            1
        } else if let Some(e) = tail.strip_prefix("^-") {
            -(parse_uint(e, tail_pos + 2)? as i64)
        } else if let Some(e) = tail.strip_prefix('^') {
            parse_uint(e, tail_pos + 1)? as i64
        } else {
            return Err(err(
                tail_pos,
                format!("unexpected {tail:?} after A-generator"),
            ));
        };
        let exponent = i32::try_from(exponent).map_err(|_| err(tail_pos, "exponent too large"))?;
        let g = AGenerator::new(i, j, exponent).map_err(|e| err(pos, e.to_string()))?;
        return Ok(Token::A(g));
    }
    Err(err(pos, format!("unrecognized token {tok:?}")))
}

/// Splits the input into tokens, remembering byte offsets for errors.
pub fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in input
        .char_indices()
        .chain(std::iter::once((input.len(), ' ')))
    {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(parse_token(&input[s..idx], s)?);
            }
        } else if start.is_none() {
            start = Some(idx);
        }
    }
    Ok(out)
}

/// Parses a braid word. Without an explicit strand count, the smallest
/// count that carries every token is used (at least 1).
pub fn parse_word(input: &str, strands: Option<usize>) -> Result<SigmaWord> {
    let tokens = tokenize(input)?;
    let needed = tokens.iter().map(Token::min_strands).max().unwrap_or(1);
    let strands = match strands {
        Some(s) if s < needed => {
            return Err(err(0, format!("word needs {needed} strands, {s} given")))
        }
        Some(s) => s,
        None => needed,
    };
    let mut letters = Vec::new();
    for t in tokens {
        match t {
            Token::Sigma(l) => letters.push(l),
            Token::A(g) => letters.extend_from_slice(g.expand(strands)?.letters()),
        }
    }
    SigmaWord::new(strands, letters)
}
