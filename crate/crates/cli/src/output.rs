use std::fmt::Write as _;
use std::fs;
use std::io::{IsTerminal, Write};
use std::path::Path;

use lexparse_core::order::escape_symbols;
use lexparse_core::{AlphabetOrdering, LexParse, Phrase};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
}

/// Writes to `--out` when given, otherwise stdout.
pub fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, bytes)
            .map_err(|e| CliError::usage(format!("writing {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::usage(format!("writing stdout: {e}")))
        }
    }
}

/// Raw bytes, with a trailing newline only when stdout is an interactive terminal.
pub fn emit_raw(out: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    if out.is_none() && std::io::stdout().is_terminal() {
        let mut b = bytes.to_vec();
        b.push(b'\n');
        return emit(None, &b);
    }
    emit(out, bytes)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// JSON form of a parse; symbols are byte values.
#[derive(Debug, Serialize, Deserialize)]
pub struct ParseJson {
    pub n: usize,
    pub v: usize,
    pub ordering: String,
    pub phrases: Vec<Phrase>,
}

impl ParseJson {
    pub fn from_parse(p: &LexParse) -> Self {
        ParseJson {
            n: p.n,
            v: p.size(),
            ordering: p.ordering.to_string(),
            phrases: p.phrases.clone(),
        }
    }

    pub fn into_parse(self) -> Result<LexParse, CliError> {
        if self.v != self.phrases.len() {
            return Err(CliError::usage(format!(
                "v = {} but {} phrases given",
                self.v,
                self.phrases.len()
            )));
        }
        Ok(LexParse {
            phrases: self.phrases,
            n: self.n,
            ordering: AlphabetOrdering::parse_spec(&self.ordering)?,
        })
    }
}

pub fn preview(bytes: &[u8], max: usize) -> String {
    if bytes.len() <= max {
        escape_symbols(bytes)
    } else {
        format!("{}...", escape_symbols(&bytes[..max]))
    }
}

pub fn parse_table(p: &LexParse, text: &[u8]) -> String {
    let mut out = format!("n = {}, ordering = {}, v = {}\n", p.n, p.ordering, p.size());
    writeln!(
        out,
        "{:>6} {:>10} {:>10}  kind {:>10}  content",
        "index", "start", "length", "source"
    )
    .unwrap();
    for (i, ((phrase, start), content)) in p
        .phrases
        .iter()
        .zip(p.starts())
        .zip(p.contents(text))
        .enumerate()
    {
        let (kind, source) = match phrase {
            Phrase::Explicit { .. } => ("E", "-".to_string()),
            Phrase::Copy { source, .. } => ("C", source.to_string()),
        };
        writeln!(
            out,
            "{:>6} {:>10} {:>10}  {kind:<4} {source:>10}  {}",
            i + 1,
            start,
            phrase.len(),
            preview(content, 40)
        )
        .unwrap();
    }
    writeln!(out, "v = {}", p.size()).unwrap();
    out
}

pub fn parse_csv(p: &LexParse) -> String {
    let mut out = String::from("index,start,length,kind,source,symbol\n");
    for (i, (phrase, start)) in p.phrases.iter().zip(p.starts()).enumerate() {
        match *phrase {
            Phrase::Explicit { symbol } => writeln!(
                out,
                "{},{start},1,E,,{}",
                i + 1,
                csv_cell(&escape_symbols(&[symbol]))
            ),
            Phrase::Copy { length, source } => {
                writeln!(out, "{},{start},{length},C,{source},", i + 1)
            }
        }
        .unwrap();
    }
    out
}

pub fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
