use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use lexparse_core::fib::FibSpec;
use lexparse_core::{AlphabetOrdering, Text};

use crate::CliError;

#[derive(Debug, Args)]
#[group(id = "input", required = true, multiple = false)]
pub struct InputArgs {
    /// Input text given inline
    #[arg(long)]
    pub text: Option<String>,
    /// Read the input bytes from a file (`-` for stdin)
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Generate the input: fib:k, gib:k, T:k, fib1:k, fib2:k or phi:k
    #[arg(long, value_name = "NAME:K")]
    pub gen: Option<String>,
}

impl InputArgs {
    pub fn load(&self, max_n: u64) -> Result<Text, CliError> {
        if let Some(t) = &self.text {
            return Ok(Text::from(t.as_str()));
        }
        if let Some(path) = &self.file {
            let bytes = if path.as_os_str() == "-" {
                let mut buf = Vec::new();
                std::io::stdin()
                    .read_to_end(&mut buf)
                    .map_err(|e| CliError::usage(format!("reading stdin: {e}")))?;
                buf
            } else {
                fs::read(path)
                    .map_err(|e| CliError::usage(format!("reading {}: {e}", path.display())))?
            };
            return Ok(Text::new(bytes));
        }
        let spec = self.gen.as_deref().expect("clap enforces one input source");
        generate(spec, max_n)
    }
}

pub fn generate(spec: &str, max_n: u64) -> Result<Text, CliError> {
    let spec: FibSpec = spec.parse()?;
    match spec.len() {
        Some(n) if n <= max_n => Ok(spec.generate()?),
        Some(n) => Err(CliError::usage(format!(
            "{spec} has length {n}, above the limit {max_n} (LEXPARSE_MAX_N)"
        ))),
        None => Err(CliError::usage(format!("{spec} is too long to generate"))),
    }
}

/// The ordering named by `spec`, or the byte order of the text's symbols.
/// Any given ordering must cover every symbol of the text.
pub fn ordering_for(spec: Option<&str>, text: &[u8]) -> Result<AlphabetOrdering, CliError> {
    let ord = match spec {
        Some(s) => AlphabetOrdering::parse_spec(s)?,
        None => AlphabetOrdering::standard_for(text)?,
    };
    ord.check_covers(text)?;
    Ok(ord)
}

/// `a..b`, `a..=b` or a single `k`.
pub fn parse_k_range(s: &str) -> Result<(u32, u32), String> {
    let num = |x: &str| {
        x.trim()
            .parse::<u32>()
            .map_err(|_| format!("{x:?} is not a non-negative integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let k = num(s)?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}
