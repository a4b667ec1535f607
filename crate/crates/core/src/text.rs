//! Text container with 1-based positional access.
//!
//! Storage is a plain byte vector. Every positional accessor takes 1-based
//! positions, so `slice(i, j)` is the closed range `w[i..j]` and is empty
//! whenever `i > j`.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Text(Vec<u8>);

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        Text(bytes.into())
    }

    pub fn empty() -> Self {
        Text(Vec::new())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    /// The `i`-th symbol, `1 <= i <= len`.
    pub fn at(&self, i: usize) -> Result<u8> {
        if i == 0 || i > self.0.len() {
            return invalid(format!("position {i} outside 1..={}", self.0.len()));
        }
        Ok(self.0[i - 1])
    }

    /// `w[i..j]`, inclusive on both ends. Empty when `i > j`.
    ///
    /// Panics if `i <= j` and the range leaves `1..=len`.
    pub fn slice(&self, i: usize, j: usize) -> &[u8] {
        if i > j {
            return &[];
        }
        assert!(
            i >= 1 && j <= self.0.len(),
            "slice {i}..{j} out of 1..={}",
            self.0.len()
        );
        &self.0[i - 1..j]
    }

    /// `w[i..]`, the suffix starting at 1-based position `i`. `w[n+1..]` is empty.
    pub fn suffix(&self, i: usize) -> &[u8] {
        assert!(i >= 1 && i <= self.0.len() + 1, "suffix {i} out of range");
        &self.0[i - 1..]
    }

    /// `w[..i]`.
    pub fn prefix(&self, i: usize) -> &[u8] {
        &self.0[..i]
    }

    /// Distinct symbols in ascending byte order.
    pub fn distinct_symbols(&self) -> Vec<u8> {
        let mut seen = [false; 256];
        for &c in &self.0 {
            seen[c as usize] = true;
        }
        (0..=255u8).filter(|&c| seen[c as usize]).collect()
    }

    pub fn count(&self, symbol: u8) -> usize {
        self.0.iter().filter(|&&c| c == symbol).count()
    }

    pub fn concat(parts: &[&[u8]]) -> Text {
        Text(parts.concat())
    }
}

impl Deref for Text {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl AsRef<[u8]> for Text {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text(s.as_bytes().to_vec())
    }
}

impl From<&[u8]> for Text {
    fn from(s: &[u8]) -> Self {
        Text(s.to_vec())
    }
}

impl From<Vec<u8>> for Text {
    fn from(v: Vec<u8>) -> Self {
        Text(v)
    }
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({:?})", String::from_utf8_lossy(&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_access() {
        let w = Text::from("abc");
        assert_eq!(w.at(1).unwrap(), b'a');
        assert_eq!(w.at(3).unwrap(), b'c');
        assert!(w.at(0).is_err());
        assert!(w.at(4).is_err());
        assert_eq!(w.slice(2, 3), b"bc");
        assert_eq!(w.suffix(3), b"c");
        assert_eq!(w.suffix(4), b"");
    }

    #[test]
    fn reversed_range_is_empty() {
        let w = Text::from("abc");
        assert_eq!(w.slice(3, 2), b"");
        assert_eq!(w.slice(10, 2), b"");
    }

    #[test]
    fn distinct() {
        assert_eq!(Text::from("babba").distinct_symbols(), b"ab".to_vec());
        assert!(Text::empty().distinct_symbols().is_empty());
    }
}
