//! Lyndon factorization under an arbitrary alphabet ordering (Duval's
//! algorithm over symbol ranks), significant suffixes, and the Lyndon
//! factors of the infinite Fibonacci word.

use std::fmt;

use crate::error::{invalid, Result};
use crate::fib::phi_pow;
use crate::order::AlphabetOrdering;
use crate::text::Text;

/// A factor `word^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonFactor {
    pub word: Text,
    pub exponent: usize,
}

impl LyndonFactor {
    pub fn len(&self) -> usize {
        self.word.len() * self.exponent
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn expand(&self) -> Vec<u8> {
        self.word.repeat(self.exponent)
    }
}

impl fmt::Display for LyndonFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.exponent, self.word)
    }
}

/// `λ_1^{p_1} ... λ_m^{p_m}` with strictly decreasing Lyndon words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonFactorization {
    pub factors: Vec<LyndonFactor>,
    pub ordering: AlphabetOrdering,
}

impl LyndonFactorization {
    pub fn expand(&self) -> Text {
        Text::new(
            self.factors
                .iter()
                .flat_map(|f| f.expand())
                .collect::<Vec<_>>(),
        )
    }

    /// 1-based start of every factor power `λ_i^{p_i}`.
    pub fn starts(&self) -> Vec<usize> {
        let mut pos = 1;
        self.factors
            .iter()
            .map(|f| {
                let s = pos;
                pos += f.len();
                s
            })
            .collect()
    }

    /// The words `λ_i` with each repeated `p_i` times, one entry per copy.
    pub fn flattened(&self) -> Vec<&[u8]> {
        self.factors
            .iter()
            .flat_map(|f| std::iter::repeat_n(f.word.as_bytes(), f.exponent))
            .collect()
    }
}

fn check_nonempty(w: &[u8], what: &str) -> Result<()> {
    if w.is_empty() {
        return invalid(format!("{what} of the empty string"));
    }
    Ok(())
}

/// Unique Lyndon factorization of `w` under `ord`, in linear time.
pub fn lyndon_factorize(w: &[u8], ord: &AlphabetOrdering) -> Result<LyndonFactorization> {
    check_nonempty(w, "Lyndon factorization")?;
    ord.check_covers(w)?;
    let s = ord.rename(w);
    let n = s.len();
    let mut factors: Vec<LyndonFactor> = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && s[k] <= s[j] {
            k = if s[k] < s[j] { i } else { k + 1 };
            j += 1;
        }
        let period = j - k;
        let word = &w[i..i + period];
        let mut exponent = 0;
        while i <= k {
            i += period;
            exponent += 1;
        }
        factors.push(LyndonFactor {
            word: Text::from(word),
            exponent,
        });
    }
    Ok(LyndonFactorization {
        factors,
        ordering: ord.clone(),
    })
}

/// Whether `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[u8], ord: &AlphabetOrdering) -> Result<bool> {
    let lf = lyndon_factorize(w, ord)?;
    Ok(lf.factors.len() == 1 && lf.factors[0].exponent == 1)
}

/// `ℓ_i` of the infinite Fibonacci word: `ℓ_1 = ab`, `ℓ_{i+1} = φ(ℓ_i)`.
pub fn infinite_fib_lyndon_factor(i: u32) -> Result<Text> {
    if i == 0 {
        return invalid("Lyndon factor index must be >= 1");
    }
    phi_pow(b"ab", i - 1)
}

/// Start positions (1-based, ascending) of the significant suffixes:
/// `λ_i^{p_i} ... λ_m^{p_m}` such that every tail `λ_{j+1}^{p_{j+1}} ...`
/// with `i <= j < m` is a prefix of `λ_j^{p_j}`. The last factor power is
/// always significant, so a Lyndon word yields `[1]`.
pub fn significant_suffixes(w: &[u8], ord: &AlphabetOrdering) -> Result<Vec<usize>> {
    let lf = lyndon_factorize(w, ord)?;
    let starts = lf.starts();
    let m = starts.len();
    let mut result = Vec::new();
    let mut all_tails_fit = true;
    for j in (0..m).rev() {
        if j + 1 < m {
            let block = &w[starts[j] - 1..starts[j + 1] - 1];
            let tail = &w[starts[j + 1] - 1..];
            all_tails_fit &= block.starts_with(tail);
        }
        if !all_tails_fit {
            break;
        }
        result.push(starts[j]);
    }
    result.reverse();
    Ok(result)
}
