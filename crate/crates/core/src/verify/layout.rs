//! Coordinates of the named substrings of `T_{2k}` and of the critical
//! suffixes of odd Fibonacci words.
//!
//! All positions are 1-based and inclusive.

use crate::fib::f;

/// Layout of `T_{2k}` (length `f_{2k}`):
///
/// * `X_i = T[f_{2k} - f_{2i+4} ..]`, `1 <= i <= k-3`
/// * `Y_i = T[f_{2k} - f_{2i+4} .. f_{2k} - f_{2i+3} - 2]`, `1 <= i <= k-3`
/// * `Z_i = T[f_{2k} - f_{2i+3} - 1 ..]`, `0 <= i <= k-2`
/// * `maxsuf = T[f_{2k-3} ..]`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FibDecomposition {
    pub k: u32,
    pub n: usize,
}

impl FibDecomposition {
    pub fn new(k: u32) -> Self {
        assert!(k >= 2, "layout needs k >= 2");
        FibDecomposition { k, n: f(2 * k) }
    }

    pub fn x_start(&self, i: u32) -> usize {
        self.n - f(2 * i + 4)
    }

    /// `(start, end)` of `Y_i`.
    pub fn y_range(&self, i: u32) -> (usize, usize) {
        (self.n - f(2 * i + 4), self.n - f(2 * i + 3) - 2)
    }

    pub fn y_len(&self, i: u32) -> usize {
        let (s, e) = self.y_range(i);
        e + 1 - s
    }

    pub fn z_start(&self, i: u32) -> usize {
        self.n - f(2 * i + 3) - 1
    }

    pub fn z_len(&self, i: u32) -> usize {
        self.n + 1 - self.z_start(i)
    }

    pub fn maxsuf_start(&self) -> usize {
        f(2 * self.k - 3)
    }

    /// Start of `Y_i · a · maxsuf`, the predecessor of `X_i`.
    pub fn left_reference(&self, i: u32) -> usize {
        let maxsuf_len = self.n + 1 - self.maxsuf_start();
        self.n + 1 - (self.y_len(i) + 1 + maxsuf_len)
    }

    /// Expected `SA_{T_{2k}}[r]` for `1 <= r <= k+1`.
    pub fn sa_prefix(&self) -> Vec<usize> {
        let mut out = vec![self.n, self.n - 1];
        let mut acc = 0;
        for r in 3..=self.k as usize + 1 {
            // |φ^j(a)| = f_{2j+2}, j = r - 3
            acc += f(2 * (r as u32 - 3) + 2);
            out.push(self.n - 1 - acc);
        }
        out
    }
}

/// `suf_i = F_{i+1}` and `suf'_i = G_{i+2}` as suffixes of `F_k`, for odd
/// `k >= 7` and even `4 <= i <= k-3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriticalSuffixes {
    pub k: u32,
    pub n: usize,
}

impl CriticalSuffixes {
    pub fn new(k: u32) -> Self {
        CriticalSuffixes { k, n: f(k) }
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> {
        (4..=self.k.saturating_sub(3)).step_by(2)
    }

    pub fn suf_start(&self, i: u32) -> usize {
        self.n - f(i + 1) + 1
    }

    pub fn sufp_start(&self, i: u32) -> usize {
        self.n - f(i + 2) + 1
    }
}
