//! Acceptance criteria. Prints one PASS/FAIL line per criterion, with the
//! failing sub-claims listed underneath. Sub-claims listed in
//! `KNOWN_UNATTAINABLE` are printed as failures but do not fail the run;
//! the run fails if one of them ever starts to hold.

mod common;

use std::time::{Duration, Instant};

use common::*;
use lexparse_core::fib::{edited_fib_t, fib_truncated, fibonacci, gib, FibSpec, FibVariant};
use lexparse_core::lexparse::{lz77_count, lz77_count_terminated, lz77_factors};
use lexparse_core::lyndon::lyndon_factorize;
use lexparse_core::sensitivity::{edit_sensitivity_scan, ratio, sensitivity_growth_table};
use lexparse_core::{
    combinat, decode, lex_parse, v_count, AlphabetOrdering, EditKind, SuffixArray,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const WORKED_EXAMPLE_BUDGET: Duration = Duration::from_millis(100);
const TABLE_BUDGET: Duration = Duration::from_secs(5);
const SCAN_BUDGET: Duration = Duration::from_secs(1);
const LYNDON_BUDGET: Duration = Duration::from_secs(30);
const SEED: u64 = 0x5eed_1e55;
const RANDOM_CASES: usize = 10_000;

/// Sub-claims that do not hold as stated. The insertion variant's parse
/// matches its displayed decomposition exactly, but that decomposition has
/// 2k phrases, not 2k+1.
const KNOWN_UNATTAINABLE: &[&str] = &["insertion variant v = 2k+1"];

struct Sub {
    name: String,
    holds: bool,
    detail: String,
}

#[derive(Default)]
struct Claims(Vec<Sub>);

impl Claims {
    fn check(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.0.push(Sub {
            name: name.into(),
            holds,
            detail: detail.into(),
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        name: impl Into<String>,
        expected: T,
        actual: T,
    ) {
        let holds = expected == actual;
        let detail = if holds {
            String::new()
        } else {
            format!("expected {expected:?}, got {actual:?}")
        };
        self.check(name, holds, detail);
    }

    /// Collapses many instances of one claim into a single entry naming the
    /// first counterexample.
    fn all<I: IntoIterator<Item = (String, bool)>>(&mut self, name: impl Into<String>, cases: I) {
        let mut count = 0;
        let mut first_bad = None;
        for (label, ok) in cases {
            count += 1;
            if !ok && first_bad.is_none() {
                first_bad = Some(label);
            }
        }
        match first_bad {
            None => self.check(name, true, format!("{count} cases")),
            Some(l) => self.check(name, false, format!("first counterexample: {l}")),
        }
    }

    fn within(&mut self, what: &str, elapsed: Duration, budget: Duration) {
        self.check(
            format!("{what} runs in under {budget:?}"),
            elapsed <= budget,
            format!("took {elapsed:?}"),
        );
    }
}

fn s(w: &[u8]) -> String {
    String::from_utf8_lossy(w).into_owned()
}

fn closed_form_v(k: u32, a_first: bool) -> usize {
    let long = (k as usize).div_ceil(2) + 1;
    match (k % 2, a_first) {
        (1, true) => long,
        (1, false) => 4,
        (_, true) => 4,
        (_, false) => long,
    }
}

fn c1() -> Claims {
    let mut c = Claims::default();
    let start = Instant::now();
    let w = b"ababbaaba";
    let ab = AlphabetOrdering::ab();
    let p = lex_parse(w, &ab).unwrap();
    let sa = SuffixArray::build(w, &ab).unwrap();
    let elapsed = start.elapsed();
    let contents: Vec<String> = p.contents(w).into_iter().map(s).collect();
    c.eq(
        "phrases aba, b, ba, a, b, a",
        vec!["aba", "b", "ba", "a", "b", "a"],
        contents.iter().map(String::as_str).collect(),
    );
    c.eq("v = 6", 6, p.size());
    c.eq(
        "previous suffix of 1 is 7",
        Some(7),
        sa.previous_suffix(1).unwrap(),
    );
    c.eq(
        "agrees with the brute-force parse",
        naive_lex_parse(w, &ab).len(),
        p.size(),
    );
    c.within("worked example", elapsed, WORKED_EXAMPLE_BUDGET);
    c
}

fn c2() -> Claims {
    let mut c = Claims::default();
    let start = Instant::now();
    let mut cases = Vec::new();
    for k in 6..=16 {
        let w = fib_word(k);
        for (a_first, ord) in [
            (true, AlphabetOrdering::ab()),
            (false, AlphabetOrdering::ba()),
        ] {
            let v = v_count(&w, &ord).unwrap();
            cases.push((
                format!("k={k} {ord}: v={v}, expected {}", closed_form_v(k, a_first)),
                v == closed_form_v(k, a_first),
            ));
        }
    }
    let elapsed = start.elapsed();
    c.all("v(F_k) follows the four-case table for k in 6..=16", cases);
    c.all(
        "brute-force parse agrees for k in 6..=11",
        (6..=11).flat_map(|k| {
            let w = fib_word(k);
            [AlphabetOrdering::ab(), AlphabetOrdering::ba()].map(|o| {
                (
                    format!("k={k} {o}"),
                    naive_v(&w, &o) == closed_form_v(k, o.symbols()[0] == b'a'),
                )
            })
        }),
    );
    c.within("table", elapsed, TABLE_BUDGET);
    c
}

/// `F_{k-2}, F_k[f_{k-2}+1..f_k-2], x, y`.
fn short_parse(k: u32) -> Vec<Vec<u8>> {
    let w = fib_word(k);
    let n = w.len();
    let h = fib_num(k - 2);
    vec![
        w[..h].to_vec(),
        w[h..n - 2].to_vec(),
        vec![w[n - 2]],
        vec![w[n - 1]],
    ]
}

/// `F_k[1..f_{k-1}-2], xy F_{k-4}, F_{k-4}, F_{k-6}, ..., F_stop, tail`.
fn long_parse(k: u32) -> Vec<Vec<u8>> {
    let w = fib_word(k);
    let odd = k % 2 == 1;
    let (xy, stop, tail): (&[u8], u32, &[u8]) = if odd {
        (b"ba", 5, b"aab")
    } else {
        (b"ab", 4, b"ba")
    };
    let mut out = vec![
        w[..fib_num(k - 1) - 2].to_vec(),
        [xy, &fib_word(k - 4)].concat(),
    ];
    let mut j = k - 4;
    while j >= stop {
        out.push(fib_word(j));
        j -= 2;
    }
    out.extend(tail.iter().map(|&ch| vec![ch]));
    out
}

fn c3() -> Claims {
    let mut c = Claims::default();
    let mut cases = Vec::new();
    for k in 6..=14 {
        let w = fib_word(k);
        let odd = k % 2 == 1;
        let (short_ord, long_ord) = if odd {
            (AlphabetOrdering::ba(), AlphabetOrdering::ab())
        } else {
            (AlphabetOrdering::ab(), AlphabetOrdering::ba())
        };
        let got = |o: &AlphabetOrdering| -> Vec<Vec<u8>> {
            lex_parse(&w, o)
                .unwrap()
                .contents(&w)
                .into_iter()
                .map(<[u8]>::to_vec)
                .collect()
        };
        cases.push((
            format!("k={k} four-phrase parse under {short_ord}"),
            got(&short_ord) == short_parse(k),
        ));
        if !odd || k >= 7 {
            cases.push((
                format!("k={k} long parse under {long_ord}"),
                got(&long_ord) == long_parse(k),
            ));
        }
    }
    c.all(
        "displayed parses match character for character for k in 6..=14",
        cases,
    );
    c
}

fn t3_lengths(k: u32) -> Vec<usize> {
    let mut out = vec![fib_num(2 * k - 1) - 1];
    for j in (2..=k - 2).rev().map(|i| 2 * i) {
        out.push(fib_num(j) - 1);
        out.push(fib_num(j - 1) + 1);
    }
    out.extend([1, 2, 1]);
    out
}

fn c4() -> Claims {
    let mut c = Claims::default();
    let ab = AlphabetOrdering::ab();
    let sentinel = AlphabetOrdering::new(b"$ab").unwrap();
    let (mut v, mut lens, mut sums, mut del, mut ins, mut ins_shape) =
        (vec![], vec![], vec![], vec![], vec![], vec![]);
    for k in 6..=12u32 {
        let t = t_word(2 * k);
        let p = lex_parse(&t, &ab).unwrap();
        v.push((
            format!("k={k}: v={}", p.size()),
            p.size() == 2 * k as usize - 2,
        ));
        lens.push((
            format!("k={k}: {:?}", p.lengths()),
            p.lengths() == t3_lengths(k),
        ));
        sums.push((
            format!("k={k}"),
            p.lengths().iter().sum::<usize>() == fib_num(2 * k),
        ));

        let f = fib_word(2 * k);
        let dw = [&f[..f.len() - 2], b"a"].concat();
        let dv = lex_parse(&dw, &ab).unwrap().size();
        del.push((format!("k={k}: v={dv}"), dv == 2 * k as usize - 2));

        let iw = [&f[..f.len() - 2], b"$ba"].concat();
        let ip = lex_parse(&iw, &sentinel).unwrap();
        ins.push((
            format!("k={k}: v={}, expected {}", ip.size(), 2 * k + 1),
            ip.size() == 2 * k as usize + 1,
        ));
        let tail: Vec<Vec<u8>> = ip
            .contents(&iw)
            .into_iter()
            .rev()
            .take(5)
            .rev()
            .map(<[u8]>::to_vec)
            .collect();
        let want: Vec<Vec<u8>> = [&b"a"[..], b"ba", b"$", b"b", b"a"]
            .iter()
            .map(|x| x.to_vec())
            .collect();
        ins_shape.push((format!("k={k}"), tail == want));
    }
    c.all("v(T_2k) = 2k-2", v);
    c.all("phrase lengths follow the closed form", lens);
    c.all("phrase lengths sum to f_2k", sums);
    c.all("deletion variant v = 2k-2", del);
    c.all("insertion variant parse ends a, ba, $, b, a", ins_shape);
    c.all("insertion variant v = 2k+1", ins);
    c
}

fn c5() -> Claims {
    let mut c = Claims::default();
    let w = fib_word(12);
    let start = Instant::now();
    let r = edit_sensitivity_scan(&w, EditKind::Substitute, &AlphabetOrdering::ab(), true).unwrap();
    let elapsed = start.elapsed();
    c.eq(
        "n = 144 and all 144 substitutions scanned",
        (144, 144),
        (w.len(), r.candidates),
    );
    c.check(
        "max ratio >= 10/4",
        r.max_ratio >= ratio(10, 4),
        format!("max ratio {}", r.max_ratio),
    );
    let rows = r.rows.as_ref().unwrap();
    let row_text =
        |row: &lexparse_core::sensitivity::EditRow| row.edit.apply(&w).unwrap().into_bytes();
    let witness = rows.iter().find(|row| {
        row.edit.position == 143 && row.edit.old == Some(b'b') && row.edit.new == Some(b'a')
    });
    c.check(
        "the T_12 edit (143: b -> a) appears with v = 10",
        witness.is_some_and(|row| row.v == 10) && row_text(witness.unwrap()) == t_word(12),
        format!("{:?}", witness.map(|row| row.v)),
    );
    c.check(
        "the reported witness reproduces the maximum",
        naive_v(
            r.witness.apply(&w).unwrap().as_bytes(),
            &AlphabetOrdering::ab(),
        ) == r.max_v,
        format!("{:?}", r.witness),
    );
    c.within("full scan", elapsed, SCAN_BUDGET);
    c
}

fn c6() -> Claims {
    let mut c = Claims::default();
    let start = Instant::now();
    let ab = AlphabetOrdering::ab();
    let flat = |w: &[u8], o: &AlphabetOrdering| -> Vec<Vec<u8>> {
        lyndon_factorize(w, o)
            .unwrap()
            .flattened()
            .into_iter()
            .map(<[u8]>::to_vec)
            .collect()
    };

    c.all(
        "LF(F''_2k) = l_1, ..., l_(k-2), phi^(k-2)(a), ..., phi^0(a) for k in 2..=12",
        (2..=12u32).map(|k| {
            let mut ell = b"ab".to_vec();
            let mut expected = Vec::new();
            for _ in 1..=k - 2 {
                expected.push(ell.clone());
                ell = phi_word(&ell);
            }
            let mut phis = vec![b"a".to_vec()];
            for _ in 1..=k - 2 {
                phis.push(phi_word(phis.last().unwrap()));
            }
            expected.extend(phis.into_iter().rev());
            let w = fib_word(2 * k);
            (format!("k={k}"), flat(&w[..w.len() - 2], &ab) == expected)
        }),
    );

    let mut rng = StdRng::seed_from_u64(SEED);
    c.all(
        "LF(phi(w)) = phi(LF(w)) with exponents on 10^4 random binary strings",
        (0..RANDOM_CASES).map(|_| {
            let n = rng.gen_range(1..=200);
            let w: Vec<u8> = (0..n)
                .map(|_| if rng.gen::<bool>() { b'a' } else { b'b' })
                .collect();
            let lw = lyndon_factorize(&w, &ab).unwrap();
            let lp = lyndon_factorize(&phi_word(&w), &ab).unwrap();
            let mapped: Vec<(Vec<u8>, usize)> = lw
                .factors
                .iter()
                .map(|f| (phi_word(&f.word), f.exponent))
                .collect();
            let got: Vec<(Vec<u8>, usize)> = lp
                .factors
                .iter()
                .map(|f| (f.word.to_vec(), f.exponent))
                .collect();
            (s(&w), mapped == got)
        }),
    );

    c.all(
        "Duval equals brute-force factorization on all binary strings of length <= 10, both orderings",
        [AlphabetOrdering::ab(), AlphabetOrdering::ba()].into_iter().flat_map(|o| {
            (1..=10)
                .flat_map(|n| all_strings(b"ab", n))
                .map(move |w| (format!("{} under {o}", s(&w)), flat(&w, &o) == brute_lyndon(&w, &o)))
                .collect::<Vec<_>>()
        }),
    );
    c.within("Lyndon suite", start.elapsed(), LYNDON_BUDGET);
    c
}

fn c7() -> Claims {
    let mut c = Claims::default();
    c.all(
        "doubling construction equals naive sort on all binary strings of length <= 12, both orderings",
        [AlphabetOrdering::ab(), AlphabetOrdering::ba()].into_iter().flat_map(|o| {
            (1..=12)
                .flat_map(|n| all_strings(b"ab", n))
                .map(move |w| (format!("{} under {o}", s(&w)), SuffixArray::build(&w, &o).unwrap().positions() == naive_sa(&w, &o)))
                .collect::<Vec<_>>()
        }),
    );
    c.all(
        "SA_T2k[1..k+1] follows the closed form for k in 6..=12",
        (6..=12u32).map(|k| {
            let t = t_word(2 * k);
            let n = t.len();
            let mut expected = vec![n, n - 1];
            let mut acc = n - 1;
            let mut phi = b"a".to_vec();
            for _ in 3..=k + 1 {
                acc -= phi.len();
                expected.push(acc);
                phi = phi_word(&phi);
            }
            let got: Vec<usize> = SuffixArray::build(&t, &AlphabetOrdering::ab())
                .unwrap()
                .positions()[..k as usize + 1]
                .to_vec();
            let naive_ok =
                k > 9 || naive_sa(&t, &AlphabetOrdering::ab())[..k as usize + 1] == expected[..];
            (
                format!("k={k}: expected {expected:?}, got {got:?}"),
                got == expected && naive_ok,
            )
        }),
    );
    c
}

fn count_naive(p: &[u8], w: &[u8]) -> usize {
    w.windows(p.len()).filter(|x| *x == p).count()
}

fn c8() -> Claims {
    let mut c = Claims::default();
    let (mut border, mut three, mut eight, mut absent, mut prim) =
        (vec![], vec![], vec![], vec![], vec![]);
    for k in 6..=16u32 {
        let w = fib_word(k);
        let b = combinat::longest_border(&w).unwrap();
        border.push((format!("k={k}: {b}"), b == fib_num(k - 2)));
        let p2 = fib_word(k - 2);
        let occ = combinat::occurrences(&p2, &w).unwrap();
        three.push((
            format!("k={k}: {occ:?}"),
            occ.len() == 3 && count_naive(&p2, &w) == 3,
        ));
        if k >= 8 {
            let p4 = fib_word(k - 4);
            let occ = combinat::occurrences(&p4, &w).unwrap().len();
            eight.push((
                format!("k={k}: {occ}"),
                occ == 8 && count_naive(&p4, &w) == 8,
            ));
        }
        let none = combinat::occurrences(b"aaa", &w).unwrap().is_empty()
            && combinat::occurrences(b"bb", &w).unwrap().is_empty();
        absent.push((
            format!("k={k}"),
            none && count_naive(b"aaa", &w) == 0 && count_naive(b"bb", &w) == 0,
        ));
        let ww = [w.as_slice(), &w].concat();
        prim.push((
            format!("k={k}"),
            combinat::is_primitive(&w).unwrap() && count_naive(&w, &ww) == 2,
        ));
    }
    c.all("longest border of F_k is f_(k-2)", border);
    c.all("F_(k-2) occurs exactly 3 times in F_k", three);
    c.all("F_(k-4) occurs exactly 8 times in F_k for k >= 8", eight);
    c.all("aaa and bb do not occur in F_k", absent);
    c.all("F_k is primitive", prim);
    c
}

fn c9() -> Claims {
    let mut c = Claims::default();
    let mut rng = StdRng::seed_from_u64(SEED ^ 9);
    c.all(
        "decode(lex_parse(w)) = w on 10^4 random strings (n <= 500, sigma <= 4, random ordering)",
        (0..RANDOM_CASES).map(|_| {
            let sigma = rng.gen_range(1..=4);
            let mut pool: Vec<u8> = (0u8..=255).collect();
            pool.shuffle(&mut rng);
            let alphabet = &pool[..sigma];
            let n = rng.gen_range(1..=500);
            let w: Vec<u8> = (0..n).map(|_| alphabet[rng.gen_range(0..sigma)]).collect();
            let ord = AlphabetOrdering::new(alphabet).unwrap();
            let back = decode(&lex_parse(&w, &ord).unwrap()).unwrap();
            (
                format!("{w:?} under {ord}"),
                back.as_bytes() == w.as_slice(),
            )
        }),
    );
    let mut family = Vec::new();
    for k in 1..=25 {
        family.push((format!("F_{k}"), fibonacci(k).unwrap()));
        if k >= 3 {
            family.push((format!("G_{k}"), gib(k).unwrap()));
            family.push((format!("F'_{k}"), fib_truncated(k, 1).unwrap()));
        }
        if k >= 4 {
            family.push((format!("F''_{k}"), fib_truncated(k, 2).unwrap()));
        }
        if k >= 4 && k % 2 == 0 {
            family.push((format!("T_{k}"), edited_fib_t(k).unwrap()));
        }
    }
    for k in 0..=10 {
        family.push((
            format!("phi^{k}(a)"),
            FibSpec::new(FibVariant::Phi, k).generate().unwrap(),
        ));
    }
    c.all(
        "decode(lex_parse(w)) = w on Fibonacci-family strings under both orderings",
        family.iter().flat_map(|(name, w)| {
            [AlphabetOrdering::ab(), AlphabetOrdering::ba()].map(|o| {
                let back = decode(&lex_parse(w, &o).unwrap()).unwrap();
                (format!("{name} under {o}"), back == *w)
            })
        }),
    );
    c
}

fn c10() -> Claims {
    let mut c = Claims::default();
    let rows = sensitivity_growth_table(6, 12, 1000).unwrap();
    c.eq(
        "rows for k = 6..=12",
        (6..=12).collect::<Vec<u32>>(),
        rows.iter().map(|r| r.k).collect(),
    );
    c.all(
        "witness ratio = (2k-2)/4 exactly",
        rows.iter().map(|r| {
            (
                format!("k={}: {}", r.k, r.witness_ratio),
                r.witness_ratio == ratio(2 * r.k as usize - 2, 4),
            )
        }),
    );
    c.all(
        "witness ratio nondecreasing in k",
        rows.windows(2).map(|p| {
            (
                format!("k={}..{}", p[0].k, p[1].k),
                p[0].witness_ratio <= p[1].witness_ratio,
            )
        }),
    );
    c.all(
        "exhaustive maximum is at least the witness where computed",
        rows.iter().filter_map(|r| {
            r.max_edit_v
                .map(|m| (format!("k={}: max {m}", r.k), m >= r.v_witness))
        }),
    );
    c
}

fn c11() -> Claims {
    let mut c = Claims::default();
    c.all(
        "F_k followed by a unique end marker has exactly k LZ77 factors for k in 3..=16",
        (3..=16u32).map(|k| {
            let w = fib_word(k);
            let got = lz77_count_terminated(&w).unwrap();
            let brute = brute_lz77(&[w.as_slice(), b"$"].concat()).len();
            (
                format!("k={k}: {got} (brute force {brute})"),
                got == k as usize && brute == k as usize,
            )
        }),
    );
    c.all(
        "without an end marker the count is k-1",
        (3..=16u32).map(|k| {
            let w = fib_word(k);
            let got = lz77_count(&w).unwrap();
            (
                format!("k={k}: {got}"),
                got == k as usize - 1 && lz77_factors(&w).unwrap() == brute_lz77(&w),
            )
        }),
    );
    c
}

type Criterion = (&'static str, &'static str, fn() -> Claims);

fn main() {
    let criteria: [Criterion; 11] = [
        ("1", "worked example", c1),
        ("2", "ordering table for F_k", c2),
        ("3", "displayed parses of F_k", c3),
        ("4", "edited Fibonacci parse and variants", c4),
        ("5", "substitution scan on F_12", c5),
        ("6", "Lyndon factorizations", c6),
        ("7", "suffix-array oracle", c7),
        ("8", "combinatorial properties", c8),
        ("9", "decode round trip", c9),
        ("10", "growth table", c10),
        ("11", "LZ77 comparator", c11),
    ];
    let mut unexpected = 0;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let claims = run();
        let elapsed = start.elapsed();
        let pass = claims.0.iter().all(|s| s.holds);
        println!(
            "{} [{id}] {title} ({elapsed:.2?})",
            if pass { "PASS" } else { "FAIL" }
        );
        for sub in &claims.0 {
            let known = KNOWN_UNATTAINABLE.contains(&sub.name.as_str());
            let tag = match (sub.holds, known) {
                (true, false) => "ok",
                (false, true) => "known-unattainable",
                (false, false) => {
                    unexpected += 1;
                    "FAILED"
                }
                (true, true) => {
                    unexpected += 1;
                    "UNEXPECTEDLY HOLDS"
                }
            };
            println!(
                "    {tag:<18} {}{}",
                sub.name,
                if sub.detail.is_empty() {
                    String::new()
                } else {
                    format!(" [{}]", sub.detail)
                }
            );
        }
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected outcome(s)");
        std::process::exit(1);
    }
}
