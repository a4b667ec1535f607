mod input;
mod output;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lexparse_core::fib::{fib_len, MAX_GENERATED_LEN};
use lexparse_core::lyndon::lyndon_factorize;
use lexparse_core::order::escape_symbols;
use lexparse_core::sensitivity::{
    ao_sensitivity_scan, edit_sensitivity_scan, format_ratio, growth_table_csv, ratio_to_f64,
    sensitivity_growth_table,
};
use lexparse_core::verify::{verify_range, Suite};
use lexparse_core::{decode, lex_parse, lexparse, EditKind};
use serde_json::json;

use input::{generate, ordering_for, parse_k_range, InputArgs};
use output::{csv_cell, emit, emit_raw, parse_csv, parse_table, to_json, Format, ParseJson};

const DEFAULT_MAX_N: u64 = 10_000_000;

#[derive(Debug)]
pub enum CliError {
    /// Bad input or arguments; exit status 2.
    Usage(String),
    /// A verification claim failed; exit status 1.
    Verification(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl From<lexparse_core::Error> for CliError {
    fn from(e: lexparse_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lexparse",
    version,
    about = "Lex-parse, Lyndon factorization and sensitivity scans"
)]
struct Cli {
    /// Upper bound on generated text lengths
    #[arg(long, global = true, env = "LEXPARSE_MAX_N", default_value_t = DEFAULT_MAX_N)]
    max_n: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a generated Fibonacci-family word
    Gen {
        /// fib:k, gib:k, T:k, fib1:k, fib2:k or phi:k
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the lex-parse of a text
    Parse {
        #[command(flatten)]
        input: InputArgs,
        /// Symbols from smallest to largest, e.g. ab, ba, $ab
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Also write the parse in the line-oriented LEXPARSE format
        #[arg(long)]
        save: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild a text from a saved parse (JSON or LEXPARSE format)
    Decode {
        /// Parse file (`-` for stdin)
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lyndon factorization, one `<exponent> <factor>` line per factor
    Factor {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive sensitivity scans
    Scan {
        #[command(subcommand)]
        scan: ScanCommand,
    },
    /// Check the structural claims about Fibonacci-family parses
    Verify {
        /// Index range, e.g. 6..10 or 7
        #[arg(long, value_parser = parse_k_range, default_value = "6..12")]
        k: (u32, u32),
        /// all, theorem3 (edit), theorem9 (ao), lyndon, lemmas (fib), suffix (sa)
        #[arg(long, default_value = "all")]
        only: String,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Substitution sensitivity of F_2k against the T_2k witness, per k
    Growth {
        #[arg(long, value_parser = parse_k_range, default_value = "6..12")]
        k: (u32, u32),
        /// Run the exhaustive substitution scan only for n up to this length
        #[arg(long, default_value_t = 10_000)]
        exhaustive_up_to: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum ScanCommand {
    /// Every single substitution, insertion or deletion
    Edit {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        order: Option<String>,
        /// sub, ins or del
        #[arg(long, default_value = "sub")]
        kind: String,
        /// Keep and print the value of every candidate
        #[arg(long)]
        rows: bool,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every ordering of the symbols occurring in the text
    Ao {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let max_n = cli.max_n.min(MAX_GENERATED_LEN);
    match cli.command {
        Command::Gen { spec, out } => {
            let w = generate(&spec, max_n)?;
            emit_raw(out.as_deref(), &w)
        }
        Command::Parse {
            input,
            order,
            format,
            save,
            out,
        } => {
            let w = input.load(max_n)?;
            let ord = ordering_for(order.as_deref(), &w)?;
            let p = lex_parse(&w, &ord)?;
            if let Some(path) = save {
                fs::write(&path, lexparse::write_parse(&p))
                    .map_err(|e| CliError::usage(format!("writing {}: {e}", path.display())))?;
            }
            let text = match format {
                Format::Human => parse_table(&p, &w),
                Format::Csv => parse_csv(&p),
                Format::Json => to_json(&ParseJson::from_parse(&p)),
            };
            emit(out.as_deref(), text.as_bytes())
        }
        Command::Decode { file, out } => {
            let raw = if file.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())
                    .map_err(|e| CliError::usage(format!("reading stdin: {e}")))?
            } else {
                fs::read_to_string(&file)
                    .map_err(|e| CliError::usage(format!("reading {}: {e}", file.display())))?
            };
            let parse = if raw.trim_start().starts_with('{') {
                serde_json::from_str::<ParseJson>(&raw)
                    .map_err(|e| CliError::usage(format!("malformed JSON parse: {e}")))?
                    .into_parse()?
            } else {
                lexparse::read_parse(&raw)?
            };
            let w = decode(&parse)?;
            emit(out.as_deref(), &w)
        }
        Command::Factor {
            input,
            order,
            format,
            out,
        } => {
            let w = input.load(max_n)?;
            let ord = ordering_for(order.as_deref(), &w)?;
            let lf = lyndon_factorize(&w, &ord)?;
            let text = match format {
                Format::Human => lf
                    .factors
                    .iter()
                    .map(|f| format!("{} {}\n", f.exponent, escape_symbols(&f.word)))
                    .collect(),
                Format::Csv => {
                    let mut s = String::from("index,start,exponent,factor\n");
                    for (i, (f, start)) in lf.factors.iter().zip(lf.starts()).enumerate() {
                        writeln!(
                            s,
                            "{},{start},{},{}",
                            i + 1,
                            f.exponent,
                            csv_cell(&escape_symbols(&f.word))
                        )
                        .unwrap();
                    }
                    s
                }
                Format::Json => to_json(&json!({
                    "ordering": ord.to_string(),
                    "factors": lf.factors.iter().map(|f| json!({
                        "factor": escape_symbols(&f.word),
                        "exponent": f.exponent,
                    })).collect::<Vec<_>>(),
                })),
            };
            emit(out.as_deref(), text.as_bytes())
        }
        Command::Scan { scan } => run_scan(scan, max_n),
        Command::Verify {
            k: (lo, hi),
            only,
            format,
            out,
        } => {
            let suite: Suite = only.parse()?;
            check_verify_size(hi, max_n)?;
            let report = verify_range(lo, hi, suite)?;
            let text = match format {
                Format::Human => {
                    let mut s = String::new();
                    for c in &report.checks {
                        writeln!(s, "{c}").unwrap();
                    }
                    let enforced = report.checks.iter().filter(|c| c.enforced).count();
                    let failed = report.failures().count();
                    writeln!(
                        s,
                        "{} checks: {} passed, {failed} failed, {} reported only",
                        report.checks.len(),
                        enforced - failed,
                        report.checks.len() - enforced
                    )
                    .unwrap();
                    s
                }
                Format::Csv => {
                    let mut s = String::from("suite,k,status,claim\n");
                    for c in &report.checks {
                        writeln!(
                            s,
                            "{},{},{},{}",
                            c.suite,
                            c.k,
                            csv_cell(c.status()),
                            csv_cell(&c.claim)
                        )
                        .unwrap();
                    }
                    s
                }
                Format::Json => to_json(&json!({
                    "passed": report.passed(),
                    "checks": report.checks.iter().map(|c| json!({
                        "suite": c.suite,
                        "k": c.k,
                        "claim": c.claim,
                        "status": c.status(),
                        "holds": c.holds,
                        "enforced": c.enforced,
                        "detail": c.detail,
                    })).collect::<Vec<_>>(),
                })),
            };
            emit(out.as_deref(), text.as_bytes())?;
            if report.passed() {
                Ok(())
            } else {
                let failures: Vec<String> = report.failures().map(|c| c.to_string()).collect();
                Err(CliError::Verification(format!(
                    "{} claim(s) failed:\n{}",
                    failures.len(),
                    failures.join("\n")
                )))
            }
        }
        Command::Growth {
            k: (lo, hi),
            exhaustive_up_to,
            format,
            out,
        } => {
            if fib_len(2 * hi).is_none_or(|n| n > max_n) {
                return Err(CliError::usage(format!(
                    "f_{} exceeds the length limit {max_n}",
                    2 * hi
                )));
            }
            let rows = sensitivity_growth_table(lo, hi, exhaustive_up_to)?;
            let text = match format {
                Format::Csv => growth_table_csv(&rows),
                Format::Human => {
                    let mut s = format!(
                        "{:>4} {:>12} {:>6} {:>9} {:>13} {:>10} {:>10}\n",
                        "k", "n", "v_base", "v_witness", "witness_ratio", "max_edit_v", "max_ratio"
                    );
                    for r in &rows {
                        writeln!(
                            s,
                            "{:>4} {:>12} {:>6} {:>9} {:>13} {:>10} {:>10}",
                            r.k,
                            r.n,
                            r.v_base,
                            r.v_witness,
                            format_ratio(&r.witness_ratio),
                            r.max_edit_v.map_or("-".into(), |v| v.to_string()),
                            r.max_ratio.as_ref().map_or("-".into(), format_ratio),
                        )
                        .unwrap();
                    }
                    s
                }
                Format::Json => to_json(
                    &rows
                        .iter()
                        .map(|r| {
                            json!({
                                "k": r.k,
                                "n": r.n,
                                "v_base": r.v_base,
                                "v_witness": r.v_witness,
                                "witness_ratio": format_ratio(&r.witness_ratio),
                                "witness_ratio_decimal": ratio_to_f64(&r.witness_ratio),
                                "max_edit_v": r.max_edit_v,
                                "max_ratio": r.max_ratio.as_ref().map(format_ratio),
                            })
                        })
                        .collect::<Vec<_>>(),
                ),
            };
            emit(out.as_deref(), text.as_bytes())
        }
    }
}

/// The suites build words up to `F_{2k}`.
fn check_verify_size(k_max: u32, max_n: u64) -> Result<(), CliError> {
    match fib_len(2 * k_max + 1) {
        Some(n) if n <= max_n => Ok(()),
        _ => Err(CliError::usage(format!(
            "k = {k_max} needs words longer than the limit {max_n}"
        ))),
    }
}

fn run_scan(scan: ScanCommand, max_n: u64) -> Result<(), CliError> {
    match scan {
        ScanCommand::Edit {
            input,
            order,
            kind,
            rows,
            format,
            out,
        } => {
            let kind: EditKind = kind.parse()?;
            let w = input.load(max_n)?;
            let ord = ordering_for(order.as_deref(), &w)?;
            let r = edit_sensitivity_scan(&w, kind, &ord, rows)?;
            let text = match format {
                Format::Csv => r.to_csv(),
                Format::Human => {
                    let e = r.witness;
                    let sym = |c: Option<u8>| c.map_or("-".into(), |c| escape_symbols(&[c]));
                    let mut s = format!(
                        "n = {}, ordering = {}, kind = {}\nbase v = {}\ncandidates = {}\nmax v = {}\nmax ratio = {} ({:.4})\nwitness = {} at {}: {} -> {}\n",
                        w.len(),
                        r.ordering,
                        r.kind,
                        r.base_v,
                        r.candidates,
                        r.max_v,
                        format_ratio(&r.max_ratio),
                        ratio_to_f64(&r.max_ratio),
                        e.kind,
                        e.position,
                        sym(e.old),
                        sym(e.new),
                    );
                    if let Some(rows) = &r.rows {
                        writeln!(s, "{:>10} {:>4} {:>4} {:>6}", "position", "old", "new", "v")
                            .unwrap();
                        for row in rows {
                            let e = row.edit;
                            writeln!(
                                s,
                                "{:>10} {:>4} {:>4} {:>6}",
                                e.position,
                                sym(e.old),
                                sym(e.new),
                                row.v
                            )
                            .unwrap();
                        }
                    }
                    s
                }
                Format::Json => to_json(&json!({
                    "n": w.len(),
                    "kind": r.kind,
                    "ordering": r.ordering.to_string(),
                    "base_v": r.base_v,
                    "candidates": r.candidates,
                    "max_v": r.max_v,
                    "max_ratio": format_ratio(&r.max_ratio),
                    "max_ratio_decimal": ratio_to_f64(&r.max_ratio),
                    "witness": r.witness,
                    "rows": r.rows,
                })),
            };
            emit(out.as_deref(), text.as_bytes())
        }
        ScanCommand::Ao { input, format, out } => {
            let w = input.load(max_n)?;
            let r = ao_sensitivity_scan(&w)?;
            let text = match format {
                Format::Csv => r.to_csv(),
                Format::Human => {
                    let mut s = String::new();
                    for (o, v) in &r.per_ordering {
                        writeln!(s, "{o:<10} v = {v}").unwrap();
                    }
                    writeln!(
                        s,
                        "max v = {} ({})\nmin v = {} ({})\nratio = {} ({:.4})",
                        r.max_v,
                        r.argmax,
                        r.min_v,
                        r.argmin,
                        format_ratio(&r.aos_ratio),
                        ratio_to_f64(&r.aos_ratio)
                    )
                    .unwrap();
                    s
                }
                Format::Json => to_json(&json!({
                    "per_ordering": r.per_ordering.iter().map(|(o, v)| json!({"ordering": o.to_string(), "v": v})).collect::<Vec<_>>(),
                    "max_v": r.max_v,
                    "min_v": r.min_v,
                    "argmax": r.argmax.to_string(),
                    "argmin": r.argmin.to_string(),
                    "ratio": format_ratio(&r.aos_ratio),
                    "ratio_decimal": ratio_to_f64(&r.aos_ratio),
                })),
            };
            emit(out.as_deref(), text.as_bytes())
        }
    }
}
