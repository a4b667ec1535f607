//! Lex-parse: the greedy left-to-right parse whose phrase at position `i`
//! copies the longest common prefix shared with the lexicographic
//! predecessor of suffix `i`.

mod decode;
mod format;
mod lz77;

pub use decode::decode;
pub use format::{read_parse, write_parse};
pub use lz77::{lz77_count, lz77_count_terminated, lz77_factors};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::order::AlphabetOrdering;
use crate::suffix::SuffixArray;
use crate::text::Text;

/// One phrase. `Explicit` encodes `(0, c)`; `Copy` encodes `(len, source)`
/// with a 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Phrase {
    #[serde(rename = "E")]
    Explicit { symbol: u8 },
    #[serde(rename = "C")]
    Copy { length: usize, source: usize },
}

impl Phrase {
    pub fn len(&self) -> usize {
        match *self {
            Phrase::Explicit { .. } => 1,
            Phrase::Copy { length, .. } => length,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self, Phrase::Explicit { .. })
    }

    /// The pair encoding `(0, c)` or `(length, source)`.
    pub fn pair(&self) -> (usize, usize) {
        match *self {
            Phrase::Explicit { symbol } => (0, symbol as usize),
            Phrase::Copy { length, source } => (length, source),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexParse {
    pub phrases: Vec<Phrase>,
    pub n: usize,
    pub ordering: AlphabetOrdering,
}

impl LexParse {
    /// Number of phrases, `v`.
    pub fn size(&self) -> usize {
        self.phrases.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.phrases.iter().map(Phrase::len).collect()
    }

    /// 1-based start position of every phrase.
    pub fn starts(&self) -> Vec<usize> {
        let mut pos = 1;
        self.phrases
            .iter()
            .map(|p| {
                let s = pos;
                pos += p.len();
                s
            })
            .collect()
    }

    pub fn explicit_count(&self) -> usize {
        self.phrases.iter().filter(|p| p.is_explicit()).count()
    }

    /// Phrase contents, cut out of the text the parse was built from.
    pub fn contents<'t>(&self, text: &'t [u8]) -> Vec<&'t [u8]> {
        self.starts()
            .into_iter()
            .zip(&self.phrases)
            .map(|(s, p)| &text[s - 1..s - 1 + p.len()])
            .collect()
    }
}

/// Lex-parse of `w` under `ord`.
pub fn lex_parse(w: &[u8], ord: &AlphabetOrdering) -> Result<LexParse> {
    let sa = SuffixArray::build(w, ord)?;
    Ok(lex_parse_with(&sa))
}

/// Lex-parse from a prebuilt suffix array.
pub fn lex_parse_with(sa: &SuffixArray) -> LexParse {
    let w = sa.text();
    let n = w.len();
    let mut phrases = Vec::new();
    let mut i = 1;
    while i <= n {
        let r = sa.rank_of(i);
        let ell = if r == 1 { 0 } else { sa.lcp_at(r) };
        if ell == 0 {
            phrases.push(Phrase::Explicit { symbol: w[i - 1] });
            i += 1;
        } else {
            phrases.push(Phrase::Copy {
                length: ell,
                source: sa.position_at(r - 1),
            });
            i += ell;
        }
    }
    LexParse {
        phrases,
        n,
        ordering: sa.ordering().clone(),
    }
}

/// `v(w, ord)`.
pub fn v_count(w: &[u8], ord: &AlphabetOrdering) -> Result<usize> {
    Ok(lex_parse(w, ord)?.size())
}

/// Convenience: the parse's phrases as owned texts.
pub fn phrase_texts(parse: &LexParse, w: &[u8]) -> Vec<Text> {
    parse.contents(w).into_iter().map(Text::from).collect()
}
