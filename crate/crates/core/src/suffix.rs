//! Suffix array, inverse permutation and LCP array under an arbitrary
//! alphabet ordering.
//!
//! Symbols are renamed to their ranks before construction, so one code
//! path serves every ordering. Construction is prefix doubling with two
//! counting-sort passes per round, `O(n log n)`; LCP values come from
//! Kasai's algorithm.

use crate::error::{invalid, Result};
use crate::order::AlphabetOrdering;
use crate::text::Text;

#[derive(Debug, Clone)]
pub struct SuffixArray {
    text: Text,
    ordering: AlphabetOrdering,
    // 0-based internally; the accessors below translate.
    sa: Vec<usize>,
    rank: Vec<usize>,
    lcp: Vec<usize>,
}

/// Builds the suffix array of `w` under `ord`.
pub fn build_suffix_array(w: &[u8], ord: &AlphabetOrdering) -> Result<SuffixArray> {
    SuffixArray::build(w, ord)
}

impl SuffixArray {
    pub fn build(w: &[u8], ord: &AlphabetOrdering) -> Result<Self> {
        if w.is_empty() {
            return invalid("suffix array of the empty text");
        }
        ord.check_covers(w)?;
        let renamed = ord.rename(w);
        let sa = prefix_doubling(&renamed, ord.len());
        let mut rank = vec![0; w.len()];
        for (r, &p) in sa.iter().enumerate() {
            rank[p] = r;
        }
        let lcp = kasai(w, &sa, &rank);
        Ok(SuffixArray {
            text: Text::from(w),
            ordering: ord.clone(),
            sa,
            rank,
            lcp,
        })
    }

    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    pub fn ordering(&self) -> &AlphabetOrdering {
        &self.ordering
    }

    /// `SA[r]`: start of the `r`-th smallest suffix, `1 <= r <= n`.
    pub fn position_at(&self, r: usize) -> usize {
        self.sa[r - 1] + 1
    }

    /// Inverse of [`position_at`](Self::position_at).
    pub fn rank_of(&self, i: usize) -> usize {
        self.rank[i - 1] + 1
    }

    /// LCP of the suffixes at ranks `r - 1` and `r`; `lcp_at(1) = 0`.
    pub fn lcp_at(&self, r: usize) -> usize {
        self.lcp[r - 1]
    }

    /// The whole array as 1-based positions.
    pub fn positions(&self) -> Vec<usize> {
        self.sa.iter().map(|&p| p + 1).collect()
    }

    /// LCP array indexed by rank (0-based vector, entry 0 is 0).
    pub fn lcp_array(&self) -> &[usize] {
        &self.lcp
    }

    fn check_position(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return invalid(format!("position {i} outside 1..={}", self.len()));
        }
        Ok(())
    }

    /// Start of the lexicographic predecessor of suffix `i`, or `None` when
    /// suffix `i` is the smallest.
    pub fn previous_suffix(&self, i: usize) -> Result<Option<usize>> {
        self.check_position(i)?;
        let r = self.rank[i - 1];
        Ok((r > 0).then(|| self.sa[r - 1] + 1))
    }

    /// Longest common prefix of suffixes `i` and `j`, by direct scan.
    pub fn lcp_between(&self, i: usize, j: usize) -> Result<usize> {
        self.check_position(i)?;
        self.check_position(j)?;
        Ok(common_prefix(self.text.suffix(i), self.text.suffix(j)))
    }
}

pub(crate) fn common_prefix(x: &[u8], y: &[u8]) -> usize {
    x.iter().zip(y).take_while(|(a, b)| a == b).count()
}

/// Stable counting sort of `items` by `key`, keys in `0..buckets`.
fn counting_sort(
    items: &[usize],
    key: impl Fn(usize) -> usize,
    buckets: usize,
    out: &mut Vec<usize>,
) {
    let mut start = vec![0usize; buckets + 1];
    for &it in items {
        start[key(it) + 1] += 1;
    }
    for b in 0..buckets {
        start[b + 1] += start[b];
    }
    out.clear();
    out.resize(items.len(), 0);
    for &it in items {
        let k = key(it);
        out[start[k]] = it;
        start[k] += 1;
    }
}

fn prefix_doubling(s: &[u16], sigma: usize) -> Vec<usize> {
    let n = s.len();
    let all: Vec<usize> = (0..n).collect();
    let mut sa = Vec::with_capacity(n);
    counting_sort(&all, |i| s[i] as usize, sigma.max(1), &mut sa);

    let mut class = vec![0usize; n];
    for r in 1..n {
        class[sa[r]] = class[sa[r - 1]] + usize::from(s[sa[r]] != s[sa[r - 1]]);
    }
    let mut classes = class[sa[n - 1]] + 1;

    let mut by_second = Vec::with_capacity(n);
    let mut next_class = vec![0usize; n];
    let mut h = 1;
    while classes < n {
        // Suffixes shorter than h have the empty second half, which sorts first.
        by_second.clear();
        by_second.extend(n.saturating_sub(h)..n);
        by_second.extend(sa.iter().filter(|&&p| p >= h).map(|&p| p - h));
        counting_sort(&by_second, |i| class[i], classes, &mut sa);

        let second = |i: usize| if i + h < n { Some(class[i + h]) } else { None };
        next_class[sa[0]] = 0;
        for r in 1..n {
            let (a, b) = (sa[r - 1], sa[r]);
            let differs = class[a] != class[b] || second(a) != second(b);
            next_class[b] = next_class[a] + usize::from(differs);
        }
        std::mem::swap(&mut class, &mut next_class);
        classes = class[sa[n - 1]] + 1;
        h *= 2;
    }
    sa
}

fn kasai(w: &[u8], sa: &[usize], rank: &[usize]) -> Vec<usize> {
    let n = w.len();
    let mut lcp = vec![0; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && w[i + h] == w[j + h] {
            h += 1;
        }
        lcp[rank[i]] = h;
        h = h.saturating_sub(1);
    }
    lcp
}
