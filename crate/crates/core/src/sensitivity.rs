//! Exhaustive edit sensitivity and alphabet-ordering sensitivity of
//! lex-parse.
//!
//! Every candidate parse is independent, so scans fan out with rayon; the
//! reduction walks results in enumeration order and keeps the first
//! maximum, which makes reports independent of scheduling.

use std::fmt::Write;

use num_rational::Ratio as NumRatio;
use rayon::prelude::*;
use serde::Serialize;

use crate::edit::{enumerate_edits, Edit, EditKind};
use crate::error::{invalid, Error, Result};
use crate::fib::{edited_fib_t, fib_len, fibonacci};
use crate::lexparse::v_count;
use crate::order::{escape_symbol, AlphabetOrdering};
use crate::text::Text;

/// Exact ratio of phrase counts.
pub type Ratio = NumRatio<u64>;

pub fn ratio(num: usize, den: usize) -> Ratio {
    Ratio::new(num as u64, den as u64)
}

/// `p/q` in lowest terms, always with a denominator.
pub fn format_ratio(r: &Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn ratio_to_f64(r: &Ratio) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EditRow {
    pub edit: Edit,
    pub v: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditSensitivityReport {
    pub kind: EditKind,
    pub ordering: AlphabetOrdering,
    pub base_v: usize,
    pub candidates: usize,
    pub max_v: usize,
    pub max_ratio: Ratio,
    /// First edit in enumeration order reaching `max_v`.
    pub witness: Edit,
    pub rows: Option<Vec<EditRow>>,
}

/// Parses every single-edit neighbour of `w` of the given kind.
///
/// Replacement and inserted symbols come from `ord`; to scan insertions of
/// a sentinel, pass an ordering that contains it.
pub fn edit_sensitivity_scan(
    w: &[u8],
    kind: EditKind,
    ord: &AlphabetOrdering,
    keep_rows: bool,
) -> Result<EditSensitivityReport> {
    if w.is_empty() {
        return invalid("edit sensitivity of the empty text");
    }
    if kind == EditKind::Delete && w.len() < 2 {
        return invalid("deleting from a length-1 text leaves nothing to parse");
    }
    let base_v = v_count(w, ord)?;
    let edits: Vec<(Edit, Text)> = enumerate_edits(w, kind, ord.symbols())?.collect();
    if edits.is_empty() {
        return invalid("no edit candidates (ordering has a single symbol)");
    }
    let values: Vec<usize> = edits
        .par_iter()
        .map(|(_, t)| v_count(t, ord))
        .collect::<Result<_>>()?;

    let (best_idx, &max_v) = values
        .iter()
        .enumerate()
        .fold(None, |best: Option<(usize, &usize)>, (i, v)| match best {
            Some((_, bv)) if bv >= v => best,
            _ => Some((i, v)),
        })
        .expect("non-empty candidate set");

    let rows = keep_rows.then(|| {
        edits
            .iter()
            .zip(&values)
            .map(|((edit, _), &v)| EditRow { edit: *edit, v })
            .collect()
    });
    Ok(EditSensitivityReport {
        kind,
        ordering: ord.clone(),
        base_v,
        candidates: edits.len(),
        max_v,
        max_ratio: ratio(max_v, base_v),
        witness: edits[best_idx].0,
        rows,
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_symbol(c: Option<u8>) -> String {
    c.map(|c| csv_field(&escape_symbol(c))).unwrap_or_default()
}

impl EditSensitivityReport {
    /// `kind,position,old,new,v_base,v_edited,ratio`, one row per candidate
    /// when rows were kept, otherwise just the witness.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,position,old,new,v_base,v_edited,ratio\n");
        let witness_row = [EditRow {
            edit: self.witness,
            v: self.max_v,
        }];
        let rows = self.rows.as_deref().unwrap_or(&witness_row);
        for row in rows {
            let e = &row.edit;
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                e.kind,
                e.position,
                csv_symbol(e.old),
                csv_symbol(e.new),
                self.base_v,
                row.v,
                format_ratio(&ratio(row.v, self.base_v))
            )
            .unwrap();
        }
        out
    }
}

/// Upper limit on distinct symbols for exhaustive ordering scans (8! parses).
pub const MAX_AO_SYMBOLS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AoSensitivityReport {
    /// Every ordering of the symbols of the text, in enumeration order.
    pub per_ordering: Vec<(AlphabetOrdering, usize)>,
    pub max_v: usize,
    pub min_v: usize,
    pub aos_ratio: Ratio,
    pub argmax: AlphabetOrdering,
    pub argmin: AlphabetOrdering,
}

/// `v(w, ≺)` for every total order on the symbols occurring in `w`.
pub fn ao_sensitivity_scan(w: &[u8]) -> Result<AoSensitivityReport> {
    if w.is_empty() {
        return invalid("ordering sensitivity of the empty text");
    }
    let symbols = Text::from(w).distinct_symbols();
    if symbols.len() > MAX_AO_SYMBOLS {
        return Err(Error::Infeasible(format!(
            "{} distinct symbols means {}! orderings; exhaustive scans support at most {MAX_AO_SYMBOLS} symbols, \
             restrict the alphabet or scan chosen orderings with `parse --order`",
            symbols.len(),
            symbols.len()
        )));
    }
    let orderings: Vec<AlphabetOrdering> = AlphabetOrdering::all_orderings(&symbols).collect();
    let values: Vec<usize> = orderings
        .par_iter()
        .map(|o| v_count(w, o))
        .collect::<Result<_>>()?;

    let mut imax = 0;
    let mut imin = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > values[imax] {
            imax = i;
        }
        if v < values[imin] {
            imin = i;
        }
    }
    let (max_v, min_v) = (values[imax], values[imin]);
    Ok(AoSensitivityReport {
        argmax: orderings[imax].clone(),
        argmin: orderings[imin].clone(),
        per_ordering: orderings.into_iter().zip(values).collect(),
        max_v,
        min_v,
        aos_ratio: ratio(max_v, min_v),
    })
}

impl AoSensitivityReport {
    /// `ordering,v`
    pub fn to_csv(&self) -> String {
        let mut out = String::from("ordering,v\n");
        for (o, v) in &self.per_ordering {
            writeln!(out, "{},{v}", csv_field(&o.to_string())).unwrap();
        }
        out
    }

    pub fn v_for(&self, ord: &AlphabetOrdering) -> Option<usize> {
        self.per_ordering
            .iter()
            .find(|(o, _)| o == ord)
            .map(|&(_, v)| v)
    }
}

/// One row of the growth table for `F_{2k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRow {
    pub k: u32,
    pub n: usize,
    /// `v(F_{2k})`
    pub v_base: usize,
    /// `v(T_{2k})`, the rightmost-`b` substitution.
    pub v_witness: usize,
    pub witness_ratio: Ratio,
    /// Exhaustive maximum over all substitutions, when `n` was small enough.
    pub max_edit_v: Option<usize>,
    pub max_ratio: Option<Ratio>,
}

/// Largest `f_{2k}` the growth table accepts.
pub const GROWTH_MAX_N: u64 = 10_000_000;

/// Rows for `k_min..=k_max` under `a < b`. The exhaustive substitution scan
/// (n parses of length n) runs only for rows with `n <= exhaustive_up_to`.
pub fn sensitivity_growth_table(
    k_min: u32,
    k_max: u32,
    exhaustive_up_to: usize,
) -> Result<Vec<GrowthRow>> {
    if k_min < 6 || k_min > k_max {
        return invalid(format!(
            "growth table needs 6 <= k_min <= k_max, got {k_min}..{k_max}"
        ));
    }
    match fib_len(2 * k_max) {
        Some(n) if n <= GROWTH_MAX_N => {}
        _ => {
            return Err(Error::Infeasible(format!(
                "f_{} exceeds the growth-table limit of {GROWTH_MAX_N}",
                2 * k_max
            )))
        }
    }
    let ab = AlphabetOrdering::ab();
    (k_min..=k_max)
        .map(|k| {
            let base = fibonacci(2 * k)?;
            let n = base.len();
            let v_base = v_count(&base, &ab)?;
            let v_witness = v_count(&edited_fib_t(2 * k)?, &ab)?;
            let max_edit_v = if n <= exhaustive_up_to {
                Some(edit_sensitivity_scan(&base, EditKind::Substitute, &ab, false)?.max_v)
            } else {
                None
            };
            Ok(GrowthRow {
                k,
                n,
                v_base,
                v_witness,
                witness_ratio: ratio(v_witness, v_base),
                max_edit_v,
                max_ratio: max_edit_v.map(|m| ratio(m, v_base)),
            })
        })
        .collect()
}

/// `k,n,v_base,v_witness,witness_ratio,max_edit_v,max_ratio`; cells for
/// rows without an exhaustive scan are empty.
pub fn growth_table_csv(rows: &[GrowthRow]) -> String {
    let mut out = String::from("k,n,v_base,v_witness,witness_ratio,max_edit_v,max_ratio\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.k,
            r.n,
            r.v_base,
            r.v_witness,
            format_ratio(&r.witness_ratio),
            r.max_edit_v.map(|v| v.to_string()).unwrap_or_default(),
            r.max_ratio.as_ref().map(format_ratio).unwrap_or_default()
        )
        .unwrap();
    }
    out
}
