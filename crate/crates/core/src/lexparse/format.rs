//! Line-oriented parse serialization:
//!
//! ```text
//! LEXPARSE <n> <ordering>
//! E <symbol>
//! C <length> <source>
//! ```
//!
//! Symbols and the ordering use the `\xHH` escaping of
//! [`escape_symbols`](crate::order::escape_symbols).

use std::fmt::Write;

use super::{LexParse, Phrase};
use crate::error::{Error, Result};
use crate::order::{escape_symbol, unescape_symbols, AlphabetOrdering};

pub fn write_parse(parse: &LexParse) -> String {
    let mut out = String::new();
    writeln!(out, "LEXPARSE {} {}", parse.n, parse.ordering).unwrap();
    for ph in &parse.phrases {
        match *ph {
            Phrase::Explicit { symbol } => writeln!(out, "E {}", escape_symbol(symbol)),
            Phrase::Copy { length, source } => writeln!(out, "C {length} {source}"),
        }
        .unwrap();
    }
    out
}

fn bad<T>(line: usize, msg: impl std::fmt::Display) -> Result<T> {
    Err(Error::MalformedParse(format!("line {line}: {msg}")))
}

fn number(line: usize, field: Option<&str>, what: &str) -> Result<usize> {
    match field.map(str::parse::<usize>) {
        Some(Ok(v)) => Ok(v),
        _ => bad(line, format!("expected {what}")),
    }
}

/// Parses the format written by [`write_parse`]. Structural validity of the
/// references is checked by [`decode`](super::decode), not here.
pub fn read_parse(input: &str) -> Result<LexParse> {
    let mut lines = input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let Some((_, header)) = lines.next() else {
        return bad(1, "missing LEXPARSE header");
    };
    let mut fields = header.split_whitespace();
    if fields.next() != Some("LEXPARSE") {
        return bad(1, "missing LEXPARSE header");
    }
    let n = number(1, fields.next(), "text length")?;
    let ordering = match fields.next() {
        Some(spec) => AlphabetOrdering::new(&unescape_symbols(spec)?)
            .map_err(|e| Error::MalformedParse(format!("line 1: {e}")))?,
        None => return bad(1, "missing ordering"),
    };

    let mut phrases = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        let mut f = line.split_whitespace();
        let phrase = match f.next() {
            Some("E") => {
                let sym = f.next().map(unescape_symbols);
                match sym {
                    Some(Ok(s)) if s.len() == 1 => Phrase::Explicit { symbol: s[0] },
                    _ => return bad(lineno, "expected one symbol after E"),
                }
            }
            Some("C") => {
                let length = number(lineno, f.next(), "copy length")?;
                let source = number(lineno, f.next(), "copy source")?;
                Phrase::Copy { length, source }
            }
            _ => return bad(lineno, format!("unrecognised record {line:?}")),
        };
        if f.next().is_some() {
            return bad(lineno, "trailing fields");
        }
        phrases.push(phrase);
    }
    Ok(LexParse {
        phrases,
        n,
        ordering,
    })
}
