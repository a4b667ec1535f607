//! Occurrences, borders and primitivity.

use crate::error::{invalid, Result};

/// Knuth-Morris-Pratt failure table: `fail[i]` is the length of the longest
/// proper border of `p[..=i]`.
fn failure(p: &[u8]) -> Vec<usize> {
    let mut fail = vec![0; p.len()];
    let mut k = 0;
    for i in 1..p.len() {
        while k > 0 && p[i] != p[k] {
            k = fail[k - 1];
        }
        if p[i] == p[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Every 1-based start position of `pattern` in `text`, ascending.
/// Overlapping occurrences are reported.
pub fn occurrences(pattern: &[u8], text: &[u8]) -> Result<Vec<usize>> {
    if pattern.is_empty() {
        return invalid("pattern must be non-empty");
    }
    let fail = failure(pattern);
    let m = pattern.len();
    let mut out = Vec::new();
    let mut k = 0;
    for (i, &c) in text.iter().enumerate() {
        while k > 0 && c != pattern[k] {
            k = fail[k - 1];
        }
        if c == pattern[k] {
            k += 1;
        }
        if k == m {
            out.push(i + 2 - m);
            k = fail[k - 1];
        }
    }
    Ok(out)
}

/// Length of the longest proper border; 0 if there is none.
pub fn longest_border(w: &[u8]) -> Result<usize> {
    if w.is_empty() {
        return invalid("longest_border of the empty string");
    }
    Ok(*failure(w).last().unwrap())
}

/// `w` is primitive iff it occurs exactly twice in `ww`.
pub fn is_primitive(w: &[u8]) -> Result<bool> {
    if w.is_empty() {
        return invalid("primitivity of the empty string");
    }
    let square = [w, w].concat();
    Ok(occurrences(w, &square)?.len() == 2)
}
