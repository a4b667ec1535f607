//! Fibonacci words and their relatives.
//!
//! `F_1 = b`, `F_2 = a`, `F_k = F_{k-1} F_{k-2}`; `G_k = F_{k-2} F_{k-1}`;
//! `T_k` is `F_k` (even `k`) with its rightmost `b` turned into `a`.
//! The morphism `a -> aab`, `b -> ab` generates the Lyndon factors of the
//! infinite Fibonacci word.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::text::Text;

/// Hard ceiling on generated lengths.
pub const MAX_GENERATED_LEN: u64 = 1 << 31;

/// `f_k` with `f_1 = f_2 = 1`; `None` for `k = 0` or on overflow.
pub fn fib_len(k: u32) -> Option<u64> {
    if k == 0 {
        return None;
    }
    let (mut prev, mut cur) = (1u64, 1u64);
    for _ in 2..k {
        let next = prev.checked_add(cur)?;
        prev = cur;
        cur = next;
    }
    Some(cur)
}

/// `f_k` as a `usize`; for use after the word itself was generated.
pub fn f(k: u32) -> usize {
    fib_len(k).expect("fibonacci length overflow") as usize
}

fn check_len(len: Option<u64>, what: &str) -> Result<()> {
    match len {
        Some(n) if n <= MAX_GENERATED_LEN => Ok(()),
        _ => Err(Error::Infeasible(format!(
            "{what} exceeds the generation limit of {MAX_GENERATED_LEN} symbols"
        ))),
    }
}

/// `F_k` for `k >= 1`.
pub fn fibonacci(k: u32) -> Result<Text> {
    if k == 0 {
        return invalid("fibonacci index must be >= 1");
    }
    check_len(fib_len(k), &format!("F_{k}"))?;
    Ok(Text::new(fib_bytes(k)))
}

fn fib_bytes(k: u32) -> Vec<u8> {
    match k {
        1 => b"b".to_vec(),
        2 => b"a".to_vec(),
        _ => {
            // F_j = F_{j-1} F_{j-2}, and F_{j-2} is a prefix of F_{j-1}.
            let mut w = Vec::with_capacity(f(k));
            w.push(b'a');
            let (mut prev_len, mut cur_len) = (1usize, 1usize); // f_1, f_2
            w.push(b'b'); // F_3 = ab
            (prev_len, cur_len) = (cur_len, prev_len + cur_len);
            for _ in 4..=k {
                w.extend_from_within(..prev_len);
                (prev_len, cur_len) = (cur_len, prev_len + cur_len);
            }
            debug_assert_eq!(w.len(), cur_len);
            w
        }
    }
}

/// `G_k = F_{k-2} F_{k-1}`, `k >= 3`.
pub fn gib(k: u32) -> Result<Text> {
    if k < 3 {
        return invalid("G_k is defined for k >= 3");
    }
    check_len(fib_len(k), &format!("G_{k}"))?;
    let mut w = fib_bytes(k - 2);
    w.extend_from_slice(&fib_bytes(k - 1));
    Ok(Text::new(w))
}

/// `F_k` without its last `drop` symbols (`F'_k` for 1, `F''_k` for 2).
pub fn fib_truncated(k: u32, drop: usize) -> Result<Text> {
    let mut w = fibonacci(k)?.into_bytes();
    if drop > w.len() {
        return invalid(format!("cannot drop {drop} symbols from F_{k}"));
    }
    w.truncate(w.len() - drop);
    Ok(Text::new(w))
}

/// `T_k`: `F_k` with its rightmost `b` replaced by `a`, for even `k >= 4`.
/// Equals `F''_k · aa`.
pub fn edited_fib_t(k: u32) -> Result<Text> {
    if !k.is_multiple_of(2) || k < 4 {
        return invalid(format!("T_k needs an even k >= 4, got {k}"));
    }
    let mut w = fibonacci(k)?.into_bytes();
    let last_b = w
        .iter()
        .rposition(|&c| c == b'b')
        .expect("F_k contains b for k >= 3");
    w[last_b] = b'a';
    Ok(Text::new(w))
}

fn phi_bytes(w: &[u8], out: &mut Vec<u8>) -> Result<()> {
    for &c in w {
        match c {
            b'a' => out.extend_from_slice(b"aab"),
            b'b' => out.extend_from_slice(b"ab"),
            other => {
                return invalid(format!(
                    "morphism is defined over {{a, b}}, found {}",
                    crate::order::escape_symbol(other)
                ))
            }
        }
    }
    Ok(())
}

/// Image under the morphism `a -> aab`, `b -> ab`.
pub fn phi(w: &[u8]) -> Result<Text> {
    let mut out = Vec::with_capacity(w.len() * 3);
    phi_bytes(w, &mut out)?;
    Ok(Text::new(out))
}

/// `times`-fold iterate of [`phi`].
pub fn phi_pow(w: &[u8], times: u32) -> Result<Text> {
    let mut cur = w.to_vec();
    for _ in 0..times {
        let mut next = Vec::with_capacity(cur.len() * 3);
        phi_bytes(&cur, &mut next)?;
        if next.len() as u64 > MAX_GENERATED_LEN {
            return Err(Error::Infeasible("morphism iterate too long".into()));
        }
        cur = next;
    }
    Ok(Text::new(cur))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FibVariant {
    /// `F_k`
    F,
    /// `G_k`
    G,
    /// `T_k`
    T,
    /// `F'_k`
    FMinus1,
    /// `F''_k`
    FMinus2,
    /// `phi^k(a)`
    Phi,
}

/// A generator request such as `fib:12`, `T:12` or `gib:9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FibSpec {
    pub variant: FibVariant,
    pub k: u32,
}

impl FibSpec {
    pub fn new(variant: FibVariant, k: u32) -> Self {
        FibSpec { variant, k }
    }

    /// Length of the generated word, without generating it.
    pub fn len(&self) -> Option<u64> {
        let k = self.k;
        match self.variant {
            FibVariant::F | FibVariant::G | FibVariant::T => fib_len(k),
            FibVariant::FMinus1 => fib_len(k).map(|n| n - 1),
            FibVariant::FMinus2 => fib_len(k).and_then(|n| n.checked_sub(2)),
            // |phi^k(a)| = f_{2k+2}
            FibVariant::Phi => k.checked_mul(2).and_then(|d| fib_len(d + 2)),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    pub fn generate(&self) -> Result<Text> {
        let k = self.k;
        match self.variant {
            FibVariant::F => fibonacci(k),
            FibVariant::G => gib(k),
            FibVariant::T => edited_fib_t(k),
            FibVariant::FMinus1 => fib_truncated(k, 1),
            FibVariant::FMinus2 => fib_truncated(k, 2),
            FibVariant::Phi => {
                check_len(self.len(), &format!("phi^{k}(a)"))?;
                phi_pow(b"a", k)
            }
        }
    }
}

impl FromStr for FibSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some((name, k)) = s.split_once(':') else {
            return invalid(format!(
                "generator spec {s:?} is not of the form <name>:<k>"
            ));
        };
        let variant = match name {
            "fib" | "F" => FibVariant::F,
            "gib" | "G" => FibVariant::G,
            "T" => FibVariant::T,
            "fib1" => FibVariant::FMinus1,
            "fib2" => FibVariant::FMinus2,
            "phi" => FibVariant::Phi,
            _ => return invalid(format!("unknown generator {name:?}")),
        };
        let k: u32 = k.parse().map_err(|_| {
            Error::InvalidArgument(format!("generator index {k:?} is not an integer"))
        })?;
        Ok(FibSpec { variant, k })
    }
}

impl fmt::Display for FibSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.variant {
            FibVariant::F => "fib",
            FibVariant::G => "gib",
            FibVariant::T => "T",
            FibVariant::FMinus1 => "fib1",
            FibVariant::FMinus2 => "fib2",
            FibVariant::Phi => "phi",
        };
        write!(f, "{name}:{}", self.k)
    }
}
