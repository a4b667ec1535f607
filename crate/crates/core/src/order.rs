//! Total orders on the alphabet and the lexicographic order they induce.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::error::{invalid, Result};

const UNRANKED: u16 = u16::MAX;

/// A permutation of symbols. Position in `symbols` is the rank, so
/// `symbols[0]` is the smallest symbol.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlphabetOrdering {
    symbols: Vec<u8>,
    rank: [u16; 256],
}

impl AlphabetOrdering {
    /// Builds an ordering from symbols listed smallest first. Duplicates and
    /// the empty list are rejected.
    pub fn new(symbols: &[u8]) -> Result<Self> {
        if symbols.is_empty() {
            return invalid("ordering must contain at least one symbol");
        }
        let mut rank = [UNRANKED; 256];
        for (r, &c) in symbols.iter().enumerate() {
            if rank[c as usize] != UNRANKED {
                return invalid(format!("symbol {} repeated in ordering", escape_symbol(c)));
            }
            rank[c as usize] = r as u16;
        }
        Ok(AlphabetOrdering {
            symbols: symbols.to_vec(),
            rank,
        })
    }

    /// Byte order restricted to the symbols of `text`.
    pub fn standard_for(text: &[u8]) -> Result<Self> {
        let mut seen = [false; 256];
        for &c in text {
            seen[c as usize] = true;
        }
        let symbols: Vec<u8> = (0..=255u8).filter(|&c| seen[c as usize]).collect();
        Self::new(&symbols)
    }

    /// `a < b`.
    pub fn ab() -> Self {
        Self::new(b"ab").expect("static ordering")
    }

    /// `b < a`.
    pub fn ba() -> Self {
        Self::new(b"ba").expect("static ordering")
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn rank(&self, symbol: u8) -> Option<usize> {
        match self.rank[symbol as usize] {
            UNRANKED => None,
            r => Some(r as usize),
        }
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.rank[symbol as usize] != UNRANKED
    }

    pub fn precedes(&self, x: u8, y: u8) -> bool {
        self.rank_unchecked(x) < self.rank_unchecked(y)
    }

    #[inline]
    pub(crate) fn rank_unchecked(&self, symbol: u8) -> u16 {
        let r = self.rank[symbol as usize];
        debug_assert!(r != UNRANKED, "symbol {symbol} not in ordering");
        r
    }

    /// Fails with the first symbol of `text` the ordering does not rank.
    pub fn check_covers(&self, text: &[u8]) -> Result<()> {
        match text.iter().find(|&&c| !self.contains(c)) {
            Some(&c) => invalid(format!(
                "symbol {} does not appear in ordering {self}",
                escape_symbol(c)
            )),
            None => Ok(()),
        }
    }

    /// Replaces each symbol by its rank.
    pub fn rename(&self, text: &[u8]) -> Vec<u16> {
        text.iter().map(|&c| self.rank_unchecked(c)).collect()
    }

    /// Lexicographic comparison: a proper prefix is smaller, otherwise the
    /// first mismatching symbol decides. Both inputs must be covered.
    pub fn compare(&self, x: &[u8], y: &[u8]) -> Ordering {
        for (&cx, &cy) in x.iter().zip(y) {
            if cx != cy {
                return self.rank_unchecked(cx).cmp(&self.rank_unchecked(cy));
            }
        }
        x.len().cmp(&y.len())
    }

    /// All `σ!` orderings of `symbols`. Enumeration follows the input
    /// order, so passing sorted symbols yields the byte order first.
    pub fn all_orderings(symbols: &[u8]) -> impl Iterator<Item = AlphabetOrdering> + '_ {
        symbols
            .iter()
            .copied()
            .permutations(symbols.len())
            .map(|p| AlphabetOrdering::new(&p).expect("permutation of distinct symbols"))
    }

    /// Parses a spec such as `ab`, `ba` or `$ab`, each byte a symbol
    /// (with `\xHH` escapes for bytes that are not printable ASCII).
    pub fn parse_spec(spec: &str) -> Result<Self> {
        Self::new(&unescape_symbols(spec)?)
    }
}

impl fmt::Display for AlphabetOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&escape_symbols(&self.symbols))
    }
}

impl fmt::Debug for AlphabetOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphabetOrdering({self})")
    }
}

/// Printable ASCII (other than `\` and space) stays literal; everything
/// else becomes `\xHH`.
pub fn escape_symbol(c: u8) -> String {
    if c.is_ascii_graphic() && c != b'\\' {
        (c as char).to_string()
    } else {
        format!("\\x{c:02x}")
    }
}

pub fn escape_symbols(bytes: &[u8]) -> String {
    bytes.iter().map(|&c| escape_symbol(c)).collect()
}

/// Inverse of [`escape_symbols`].
pub fn unescape_symbols(s: &str) -> Result<Vec<u8>> {
    let bytes = s.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'\\' {
            let hex = bytes
                .get(i + 1..i + 4)
                .filter(|h| h[0] == b'x')
                .and_then(|h| std::str::from_utf8(&h[1..]).ok())
                .and_then(|h| u8::from_str_radix(h, 16).ok());
            match hex {
                Some(c) => out.push(c),
                None => return invalid(format!("bad escape in symbol string {s:?}")),
            }
            i += 4;
        } else {
            out.push(bytes[i]);
            i += 1;
        }
    }
    Ok(out)
}
