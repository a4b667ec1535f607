//! Alphabet-ordering sensitivity of Fibonacci words: `v(F_k)` is 4 under
//! one ordering of `{a, b}` and `⌈k/2⌉ + 1` under the other.

use super::{CriticalSuffixes, Recorder, VerifyReport};
use crate::error::Result;
use crate::fib::{f, fibonacci, gib};
use crate::lexparse::lex_parse_with;
use crate::order::AlphabetOrdering;
use crate::sensitivity::{ao_sensitivity_scan, ratio};
use crate::suffix::SuffixArray;

const SUITE: &str = "theorem9";

/// Closed-form `v(F_k)` for `k >= 6` under `a < b` (`ord_is_ab`) or `b < a`.
pub fn theorem9_expected_v(k: u32, ord_is_ab: bool) -> usize {
    let long = k.div_ceil(2) as usize + 1;
    match (k.is_multiple_of(2), ord_is_ab) {
        (true, true) | (false, false) => 4,
        _ => long,
    }
}

fn fib_vec(k: u32) -> Result<Vec<u8>> {
    Ok(fibonacci(k)?.into_bytes())
}

/// The four-phrase parse `F_{k-2}, F_k[f_{k-2}+1..f_k-2], x, y` where `x y`
/// is the final two symbols of `F_k`.
fn short_display(k: u32) -> Result<Vec<Vec<u8>>> {
    let w = fib_vec(k)?;
    let n = w.len();
    let head = f(k - 2);
    Ok(vec![
        w[..head].to_vec(),
        w[head..n - 2].to_vec(),
        vec![w[n - 2]],
        vec![w[n - 1]],
    ])
}

/// The long parse `F_k[1..f_{k-1}-2], xy F_{k-4}, F_{k-4}, F_{k-6}, ..., F_last, tail...`,
/// where `xy` is `ba` for odd `k` and `ab` for even `k`.
fn long_display(k: u32) -> Result<Vec<Vec<u8>>> {
    let w = fib_vec(k)?;
    let odd = k % 2 == 1;
    let (pair, last, tail): (&[u8], u32, &[&[u8]]) = if odd {
        (b"ba", 5, &[b"a", b"a", b"b"])
    } else {
        (b"ab", 4, &[b"b", b"a"])
    };
    let mut out = vec![w[..f(k - 1) - 2].to_vec()];
    out.push([pair, &fib_vec(k - 4)?].concat());
    let mut j = k - 4;
    while j >= last {
        out.push(fib_vec(j)?);
        j -= 2;
    }
    out.extend(tail.iter().map(|t| t.to_vec()));
    Ok(out)
}

/// Checks `v(F_k)` under both orderings, the explicit parses for each
/// parity and ordering, and the critical-suffix structure behind the long
/// parse. Asserted for `k >= 6`; smaller `k` is reported only.
pub fn verify_theorem9(k: u32) -> Result<VerifyReport> {
    let mut rec = Recorder::new(SUITE, k, k >= 6);
    if k < 3 {
        rec.report_only("skipped: needs k >= 3", true, "");
        return Ok(rec.finish());
    }
    let w = fibonacci(k)?;
    let ab = AlphabetOrdering::ab();
    let ba = AlphabetOrdering::ba();
    let sa_ab = SuffixArray::build(&w, &ab)?;
    let sa_ba = SuffixArray::build(&w, &ba)?;
    let p_ab = lex_parse_with(&sa_ab);
    let p_ba = lex_parse_with(&sa_ba);

    rec.check_eq(
        "v(F_k) under a<b",
        theorem9_expected_v(k, true),
        p_ab.size(),
    );
    rec.check_eq(
        "v(F_k) under b<a",
        theorem9_expected_v(k, false),
        p_ba.size(),
    );

    let ao = ao_sensitivity_scan(&w)?;
    let (lo, hi) = (4, k.div_ceil(2) as usize + 1);
    rec.check_eq(
        "ordering sensitivity = (ceil(k/2)+1)/4",
        ratio(hi, lo),
        ao.aos_ratio,
    );

    let odd = k % 2 == 1;
    if k >= 6 {
        let (short_parse, long_parse, short_name, long_name) = if odd {
            (&p_ba, &p_ab, "odd k, b<a", "odd k, a<b")
        } else {
            (&p_ab, &p_ba, "even k, a<b", "even k, b<a")
        };
        rec.check_phrases(
            format!("{short_name}: F_(k-2), F_k[f_(k-2)+1..f_k-2], then the last two symbols"),
            &short_display(k)?,
            &short_parse.contents(&w),
        );
        if !odd || k >= 7 {
            rec.check_phrases(
                format!("{long_name}: prefix, pair+F_(k-4), F_(k-4), F_(k-6), ..., tail"),
                &long_display(k)?,
                &long_parse.contents(&w),
            );
        }
    }

    if odd && k >= 7 {
        let crit = CriticalSuffixes::new(k);
        let mut prev_sufp = gib(4)?.into_bytes();
        for i in crit.indices() {
            let suf = w.suffix(crit.suf_start(i));
            let sufp = w.suffix(crit.sufp_start(i));
            rec.check_eq(
                format!("suf_{i} = F_{}", i + 1),
                fib_vec(i + 1)?,
                suf.to_vec(),
            );
            let mut chain = Vec::new();
            let mut j = i;
            while j >= 4 {
                chain.extend_from_slice(&fib_vec(j)?);
                j -= 2;
            }
            chain.extend_from_slice(b"ab");
            rec.check_eq(
                format!("suf_{i} = F_{i} F_{} ... F_4 ab", i - 2),
                chain,
                suf.to_vec(),
            );
            rec.check_eq(
                format!("suf'_{i} = G_{}", i + 2),
                gib(i + 2)?.into_bytes(),
                sufp.to_vec(),
            );
            rec.check_eq(
                format!("suf'_{i} = suf_{i} suf'_{}", i - 2),
                [suf, &prev_sufp].concat(),
                sufp.to_vec(),
            );
            rec.check_eq(
                format!("previous suffix of suf'_{i} under a<b is suf_{i}"),
                Some(crit.suf_start(i)),
                sa_ab.previous_suffix(crit.sufp_start(i))?,
            );
            prev_sufp = sufp.to_vec();
        }
    }

    Ok(rec.finish())
}
