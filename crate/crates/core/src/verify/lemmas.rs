//! Combinatorial properties of Fibonacci words, the Lyndon structure of
//! `F_{2k}` and `F''_{2k}`, and the head of the suffix array of `T_{2k}`.

use super::{FibDecomposition, Recorder, VerifyReport};
use crate::combinat::{is_primitive, longest_border, occurrences};
use crate::error::Result;
use crate::fib::{edited_fib_t, f, fib_truncated, fibonacci, gib, phi_pow};
use crate::lexparse::lz77_count_terminated;
use crate::lyndon::{infinite_fib_lyndon_factor, lyndon_factorize, significant_suffixes};
use crate::order::AlphabetOrdering;
use crate::suffix::SuffixArray;
use crate::text::Text;

use super::theorem3::phi_chain;

/// Records `holds` as enforced when `enforce` is set, as a report otherwise.
fn claim(rec: &mut Recorder, enforce: bool, claim: String, holds: bool, detail: String) {
    if enforce {
        rec.check(claim, holds, detail);
    } else {
        rec.report_only(claim, holds, detail);
    }
}

fn eq_detail<T: PartialEq + std::fmt::Debug>(expected: &T, actual: &T) -> (bool, String) {
    if expected == actual {
        (true, String::new())
    } else {
        (
            false,
            format!("  expected {expected:?}\n  actual   {actual:?}"),
        )
    }
}

const MAX_LEMMA_LEN: usize = 1 << 26;

/// Border, occurrence, primitivity and `F`/`G` relations of `F_k`.
/// Asserted for `k >= 6`.
pub fn verify_fib_lemmas(k: u32) -> Result<VerifyReport> {
    let mut rec = Recorder::new("lemmas", k, k >= 6);
    if k < 3 {
        rec.report_only("skipped: needs k >= 3", true, "");
        return Ok(rec.finish());
    }
    let w = fibonacci(k)?;
    let n = w.len();

    let (ok, d) = eq_detail(&f(k - 2), &longest_border(&w)?);
    claim(
        &mut rec,
        k >= 4,
        "longest border of F_k has length f_(k-2)".into(),
        ok,
        d,
    );

    if k >= 6 {
        let (ok, d) = eq_detail(
            &vec![1, f(k - 2) + 1, f(k - 1) + 1],
            &occurrences(&fibonacci(k - 2)?, &w)?,
        );
        rec.check("F_(k-2) occurs exactly at 1, f_(k-2)+1, f_(k-1)+1", ok, d);
    }
    if k >= 8 {
        let (ok, d) = eq_detail(&8, &occurrences(&fibonacci(k - 4)?, &w)?.len());
        rec.check("F_(k-4) occurs exactly eight times", ok, d);
    }
    rec.check(
        "aaa does not occur",
        occurrences(b"aaa", &w)?.is_empty(),
        "",
    );
    rec.check("bb does not occur", occurrences(b"bb", &w)?.is_empty(), "");
    rec.check("F_k is primitive", is_primitive(&w)?, "");

    let g = gib(k)?;
    let swapped = |x: &[u8]| -> Vec<u8> { [&x[..n - 2], &[x[n - 1], x[n - 2]][..]].concat() };
    rec.check(
        "F_k = G_k[1..f_k-2] with the last two symbols swapped",
        w.as_bytes() == swapped(&g),
        "",
    );
    rec.check(
        "G_k = F_k[1..f_k-2] with the last two symbols swapped",
        g.as_bytes() == swapped(&w),
        "",
    );
    if k >= 3 {
        let rec_ok =
            w.as_bytes() == [fibonacci(k - 1)?.as_bytes(), fibonacci(k - 2)?.as_bytes()].concat();
        rec.check("F_k = F_(k-1) F_(k-2)", rec_ok, "");
    }

    if k.is_multiple_of(2) && k >= 6 {
        let t = edited_fib_t(k)?;
        let big = fibonacci(k - 2)?;
        let (ok, d) = eq_detail(&2, &occurrences(&big, &t)?.len());
        rec.check("T_k has exactly two occurrences of F_(k-2)", ok, d);
        rec.check(
            "T_k starts with F_(k-2) F_(k-2)",
            t.starts_with(&[big.as_bytes(), big.as_bytes()].concat()),
            "",
        );
    }

    if n < MAX_LEMMA_LEN {
        let lz = lz77_count_terminated(&w)?;
        let (ok, d) = eq_detail(&(k as usize), &lz);
        rec.check("F_k with a unique end marker has k LZ77 factors", ok, d);
    }
    Ok(rec.finish())
}

/// Lyndon factorizations of `F_{2k}`, `F''_{2k}` and `ℓ_k` minus its last
/// symbol, the telescoping prefixes of `φ^i(a)`, and the significant
/// suffixes of `F''_{2k}`. Asserted for `k >= 2`.
pub fn verify_lyndon(k: u32) -> Result<VerifyReport> {
    let mut rec = Recorder::new("lyndon", k, k >= 2);
    if k < 2 {
        rec.report_only("skipped: needs k >= 2", true, "");
        return Ok(rec.finish());
    }
    let ab = AlphabetOrdering::ab();
    let ells: Vec<Text> = (1..=k)
        .map(infinite_fib_lyndon_factor)
        .collect::<Result<_>>()?;
    let phis: Vec<Text> = (0..k).map(|e| phi_pow(b"a", e)).collect::<Result<_>>()?;
    let as_vecs = |xs: &[&Text]| xs.iter().map(|t| t.to_vec()).collect::<Vec<_>>();

    let full = fibonacci(2 * k)?;
    let expected: Vec<&Text> = ells[..k as usize - 1]
        .iter()
        .chain(std::iter::once(&phis[0]))
        .collect();
    let lf = lyndon_factorize(&full, &ab)?;
    rec.check_phrases(
        "LF(F_2k) = l_1, ..., l_(k-1), a",
        &as_vecs(&expected),
        &lf.flattened(),
    );

    let shrunk = fib_truncated(2 * k, 2)?;
    let expected: Vec<&Text> = ells[..k as usize - 2]
        .iter()
        .chain(phis.iter().rev().skip(1))
        .collect();
    let lf = lyndon_factorize(&shrunk, &ab)?;
    rec.check_phrases(
        "LF(F''_2k) = l_1, ..., l_(k-2), phi^(k-2)(a), ..., phi^0(a)",
        &as_vecs(&expected),
        &lf.flattened(),
    );
    rec.check(
        "LF(F''_2k) has no repeated factors",
        lf.factors.iter().all(|f| f.exponent == 1),
        "",
    );

    let ell = &ells[k as usize - 1];
    rec.check_eq("|l_k| = f_(2k+1)", f(2 * k + 1), ell.len());
    let lf = lyndon_factorize(&ell[..ell.len() - 1], &ab)?;
    let expected: Vec<&Text> = phis.iter().rev().collect();
    rec.check_phrases(
        "LF(l_k minus its last symbol) = phi^(k-1)(a), ..., phi^0(a)",
        &as_vecs(&expected),
        &lf.flattened(),
    );

    let chain = phi_chain(k - 1)?;
    rec.check(
        "phi^(k-1)(a) ... phi^0(a) is a prefix of phi^k(a)",
        phi_pow(b"a", k)?.starts_with(&chain),
        "",
    );
    rec.check_eq(
        "|phi^k(a) ... phi^0(a)| = f_(2k+3) - 1",
        f(2 * k + 3) - 1,
        phi_chain(k)?.len(),
    );

    let n = shrunk.len();
    let expected: Vec<usize> = (1..k).rev().map(|i| n - (f(2 * i + 1) - 1) + 1).collect();
    rec.check_eq(
        "significant suffixes of F''_2k are the suffixes phi^(i-1)(a) ... phi^0(a)",
        expected.clone(),
        significant_suffixes(&shrunk, &ab)?,
    );
    let sa = SuffixArray::build(&shrunk, &ab)?;
    let ranks: Vec<usize> = expected.iter().rev().map(|&p| sa.rank_of(p)).collect();
    rec.check_eq(
        "phi^(i-1)(a) ... phi^0(a) is the i-th smallest suffix of F''_2k",
        (1..k as usize).collect::<Vec<_>>(),
        ranks,
    );
    Ok(rec.finish())
}

/// The first `k + 1` suffix-array entries and the maximal suffix of
/// `T_{2k}`. Asserted for `k >= 6`.
pub fn verify_suffix_structure(k: u32) -> Result<VerifyReport> {
    let mut rec = Recorder::new("suffix", k, k >= 6);
    if k < 4 {
        rec.report_only("skipped: needs k >= 4", true, "");
        return Ok(rec.finish());
    }
    let t = edited_fib_t(2 * k)?;
    let sa = SuffixArray::build(&t, &AlphabetOrdering::ab())?;
    let layout = FibDecomposition::new(k);
    rec.check_eq(
        "SA_T[1..k+1] = f_2k, f_2k - 1, then f_2k - 1 - |phi^0(a)| - ... ",
        layout.sa_prefix(),
        (1..=k as usize + 1)
            .map(|r| sa.position_at(r))
            .collect::<Vec<_>>(),
    );
    rec.check_eq(
        "maxsuf of T_2k starts at f_(2k-3)",
        layout.maxsuf_start(),
        sa.position_at(t.len()),
    );
    Ok(rec.finish())
}
