//! Greedy LZ77 factor counter used as a comparator for lex-parse.
//!
//! Each factor is the longest prefix of the remaining suffix that also
//! starts at an earlier position (the occurrence may overlap the factor);
//! a symbol with no earlier occurrence is a factor of length one.
//! The longest earlier match is found through the nearest smaller
//! positions left and right of the current suffix in suffix-array order.

use crate::error::{invalid, Result};
use crate::order::AlphabetOrdering;
use crate::suffix::{common_prefix, SuffixArray};

/// Factor lengths of the greedy LZ77 parse, left to right.
pub fn lz77_factors(w: &[u8]) -> Result<Vec<usize>> {
    if w.is_empty() {
        return invalid("LZ77 parse of the empty text");
    }
    let n = w.len();
    let sa = SuffixArray::build(w, &AlphabetOrdering::standard_for(w)?)?;
    let pos: Vec<usize> = sa.positions().iter().map(|p| p - 1).collect();

    // For each text position, the nearest rank above/below whose suffix
    // starts earlier in the text.
    let mut left = vec![None; n];
    let mut right = vec![None; n];
    let mut stack: Vec<usize> = Vec::new();
    for &p in &pos {
        while stack.last().is_some_and(|&q| q > p) {
            stack.pop();
        }
        left[p] = stack.last().copied();
        stack.push(p);
    }
    stack.clear();
    for &p in pos.iter().rev() {
        while stack.last().is_some_and(|&q| q > p) {
            stack.pop();
        }
        right[p] = stack.last().copied();
        stack.push(p);
    }

    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let best = [left[i], right[i]]
            .into_iter()
            .flatten()
            .map(|j| common_prefix(&w[i..], &w[j..]))
            .max()
            .unwrap_or(0);
        let len = best.max(1);
        factors.push(len);
        i += len;
    }
    Ok(factors)
}

pub fn lz77_count(w: &[u8]) -> Result<usize> {
    Ok(lz77_factors(w)?.len())
}

/// Factor count of `w` followed by a fresh end marker (the smallest byte
/// absent from `w`). The marker is always a factor of its own, so this is
/// `lz77_count(w) + 1`; it is the convention under which `F_k` has `k`
/// factors.
pub fn lz77_count_terminated(w: &[u8]) -> Result<usize> {
    let mut seen = [false; 256];
    for &c in w {
        seen[c as usize] = true;
    }
    let Some(marker) = (0..=255u8).find(|&c| !seen[c as usize]) else {
        return invalid("no free byte left for an end marker");
    };
    let mut t = w.to_vec();
    t.push(marker);
    lz77_count(&t)
}
