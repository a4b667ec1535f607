//! Brute-force reference implementations. Nothing here calls into the
//! library's algorithms; only the ordering's symbol list is read.

#![allow(dead_code)]

use std::cmp::Ordering;

use lexparse_core::AlphabetOrdering;

pub fn rank_table(ord: &AlphabetOrdering) -> [usize; 256] {
    let mut r = [usize::MAX; 256];
    for (i, &s) in ord.symbols().iter().enumerate() {
        r[s as usize] = i;
    }
    r
}

pub fn cmp_under(r: &[usize; 256], x: &[u8], y: &[u8]) -> Ordering {
    let xs = x.iter().map(|&c| r[c as usize]);
    let ys = y.iter().map(|&c| r[c as usize]);
    xs.cmp(ys)
}

/// 1-based suffix array by sorting whole suffixes.
pub fn naive_sa(w: &[u8], ord: &AlphabetOrdering) -> Vec<usize> {
    let r = rank_table(ord);
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by(|&i, &j| cmp_under(&r, &w[i..], &w[j..]));
    idx.into_iter().map(|i| i + 1).collect()
}

pub fn naive_lcp(x: &[u8], y: &[u8]) -> usize {
    x.iter().zip(y).take_while(|(a, b)| a == b).count()
}

/// Lex-parse phrases as `(length, source)`, with `(0, symbol)` for explicit
/// phrases. The predecessor is found by scanning all suffixes.
pub fn naive_lex_parse(w: &[u8], ord: &AlphabetOrdering) -> Vec<(usize, usize)> {
    let r = rank_table(ord);
    let mut out = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut best: Option<usize> = None;
        for j in 0..w.len() {
            if cmp_under(&r, &w[j..], &w[i..]) == Ordering::Less
                && best.is_none_or(|b| cmp_under(&r, &w[j..], &w[b..]) == Ordering::Greater)
            {
                best = Some(j);
            }
        }
        let l = best.map_or(0, |b| naive_lcp(&w[i..], &w[b..]));
        if l == 0 {
            out.push((0, w[i] as usize));
            i += 1;
        } else {
            out.push((l, best.unwrap() + 1));
            i += l;
        }
    }
    out
}

pub fn naive_v(w: &[u8], ord: &AlphabetOrdering) -> usize {
    naive_lex_parse(w, ord).len()
}

/// Rebuilds a text from `naive_lex_parse` output by copying symbol by symbol.
pub fn naive_decode(n: usize, phrases: &[(usize, usize)]) -> Option<Vec<u8>> {
    let mut out: Vec<Option<u8>> = vec![None; n];
    let mut starts = Vec::new();
    let mut pos = 0;
    for &(l, s) in phrases {
        starts.push((pos, l, s));
        pos += l.max(1);
    }
    for &(p, l, s) in &starts {
        if l == 0 {
            out[p] = Some(s as u8);
        }
    }
    loop {
        let mut progress = false;
        for &(p, l, s) in &starts {
            for d in 0..l {
                if out[p + d].is_none() {
                    if let Some(c) = out[s - 1 + d] {
                        out[p + d] = Some(c);
                        progress = true;
                    }
                }
            }
        }
        if !progress {
            break;
        }
    }
    out.into_iter().collect()
}

pub fn naive_is_lyndon(r: &[usize; 256], w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| cmp_under(r, w, &w[i..]) == Ordering::Less)
}

/// The factorization into non-increasing Lyndon words, by exhaustive search
/// over all split points. Returns one word per copy.
pub fn brute_lyndon(w: &[u8], ord: &AlphabetOrdering) -> Vec<Vec<u8>> {
    fn go(r: &[usize; 256], w: &[u8], prev: Option<&[u8]>, acc: &mut Vec<Vec<u8>>) -> bool {
        if w.is_empty() {
            return true;
        }
        for l in (1..=w.len()).rev() {
            let head = &w[..l];
            if !naive_is_lyndon(r, head) {
                continue;
            }
            if prev.is_some_and(|p| cmp_under(r, p, head) == Ordering::Less) {
                continue;
            }
            acc.push(head.to_vec());
            if go(r, &w[l..], Some(head), acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let r = rank_table(ord);
    let mut acc = Vec::new();
    assert!(go(&r, w, None, &mut acc));
    acc
}

/// Greedy LZ77 with self-overlapping sources: each factor is the longest
/// prefix of the remaining text that also starts at an earlier position,
/// or one fresh symbol.
pub fn brute_lz77(w: &[u8]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let l = (0..i)
            .map(|j| naive_lcp(&w[i..], &w[j..]))
            .max()
            .unwrap_or(0);
        out.push(l.max(1));
        i += l.max(1);
    }
    out
}

/// `F_1 = b`, `F_2 = a`, `F_k = F_{k-1} F_{k-2}`, built from scratch.
pub fn fib_word(k: u32) -> Vec<u8> {
    let (mut x, mut y) = (b"b".to_vec(), b"a".to_vec());
    if k == 1 {
        return x;
    }
    for _ in 2..k {
        let z = [y.as_slice(), x.as_slice()].concat();
        x = y;
        y = z;
    }
    y
}

pub fn fib_num(k: u32) -> usize {
    fib_word(k).len()
}

pub fn phi_word(w: &[u8]) -> Vec<u8> {
    w.iter()
        .flat_map(|&c| if c == b'a' { &b"aab"[..] } else { &b"ab"[..] })
        .copied()
        .collect()
}

/// `F_{2k}` with its rightmost `b` replaced by `a`.
pub fn t_word(k2: u32) -> Vec<u8> {
    let mut w = fib_word(k2);
    let p = w.iter().rposition(|&c| c == b'b').unwrap();
    w[p] = b'a';
    w
}

/// Every string over `alphabet` of length `n`.
pub fn all_strings(alphabet: &[u8], n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|s| {
                alphabet.iter().map(move |&c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}
