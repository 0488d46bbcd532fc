//! Text forms of long-knot diagrams.
//!
//! Gauss code: space-separated `O<id><s>` / `U<id><s>` with `s` in `{+,-}`,
//! read along the knot, ids 1-based. PD code: comma-separated
//! `X(a,b,c,d)` with edge labels `0..=2n`, the open ends being `0` and `2n`.

use super::diagram::{GaussEntry, LongKnotDiagram};
use crate::error::{Error, Result};

pub fn to_gauss_code(d: &LongKnotDiagram) -> String {
    d.gauss()
        .iter()
        .map(|e| {
            format!(
                "{}{}{}",
                if e.over { 'O' } else { 'U' },
                e.crossing + 1,
                if e.sign > 0 { '+' } else { '-' }
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_gauss_code(text: &str) -> Result<LongKnotDiagram> {
    let mut entries = Vec::new();
    let mut offset = 0;
    for tok in text.split(' ') {
        let pos = offset;
        offset += tok.len() + 1;
        if tok.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse {
            pos,
            msg: format!("{msg} in {tok:?}"),
        };
        let bytes = tok.as_bytes();
        let over = match bytes[0] {
            b'O' => true,
            b'U' => false,
            _ => return Err(err("expected O or U")),
        };
        let sign = match bytes[bytes.len() - 1] {
            b'+' => 1,
            b'-' => -1,
            _ => return Err(err("expected trailing + or -")),
        };
        if bytes.len() < 3 {
            return Err(err("missing crossing id"));
        }
        let id_text = &tok[1..tok.len() - 1];
        if !id_text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("crossing id must be a positive integer"));
        }
        let crossing: usize = id_text.parse().map_err(|_| err("bad crossing id"))?;
        entries.push(GaussEntry {
            crossing,
            over,
            sign,
        });
    }
    LongKnotDiagram::from_gauss(&entries)
}

pub fn to_pd_code(d: &LongKnotDiagram) -> String {
    d.crossings()
        .iter()
        .map(|r| format!("X({},{},{},{})", r.pd[0], r.pd[1], r.pd[2], r.pd[3]))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn parse_pd_code(text: &str) -> Result<LongKnotDiagram> {
    let mut records = Vec::new();
    let mut rest = text;
    let mut consumed = 0;
    loop {
        let trimmed = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        consumed += rest.len() - trimmed.len();
        rest = trimmed;
        if rest.is_empty() {
            break;
        }
        let err = |msg: &str| Error::Parse {
            pos: consumed,
            msg: msg.to_string(),
        };
        let body = rest.strip_prefix("X(").ok_or_else(|| err("expected X("))?;
        let close = body.find(')').ok_or_else(|| err("missing ')'"))?;
        let nums: Vec<usize> = body[..close]
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| err("expected edge label"))
            })
            .collect::<Result<_>>()?;
        let quad: [usize; 4] = nums
            .try_into()
            .map_err(|_| err("expected four edge labels"))?;
        records.push(quad);
        let used = 2 + close + 1;
        consumed += used;
        rest = &rest[used..];
    }
    LongKnotDiagram::from_pd(&records)
}
