//! Single-character edits and exhaustive enumeration of edit neighbours.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::order::escape_symbol;
use crate::text::Text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EditKind {
    Substitute,
    Insert,
    Delete,
}

impl EditKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EditKind::Substitute => "sub",
            EditKind::Insert => "ins",
            EditKind::Delete => "del",
        }
    }
}

impl fmt::Display for EditKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EditKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sub" | "substitute" => Ok(EditKind::Substitute),
            "ins" | "insert" => Ok(EditKind::Insert),
            "del" | "delete" => Ok(EditKind::Delete),
            _ => invalid(format!(
                "unknown edit kind {s:?} (expected sub, ins or del)"
            )),
        }
    }
}

/// One edit at a 1-based position.
///
/// * substitution: `old` at `position` becomes `new`;
/// * insertion: `new` is inserted so that it becomes the symbol at
///   `position` (`1..=n+1`);
/// * deletion: `old` at `position` is removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edit {
    pub kind: EditKind,
    pub position: usize,
    pub old: Option<u8>,
    pub new: Option<u8>,
}

impl Edit {
    pub fn substitute(position: usize, old: u8, new: u8) -> Self {
        Edit {
            kind: EditKind::Substitute,
            position,
            old: Some(old),
            new: Some(new),
        }
    }

    pub fn insert(position: usize, new: u8) -> Self {
        Edit {
            kind: EditKind::Insert,
            position,
            old: None,
            new: Some(new),
        }
    }

    pub fn delete(position: usize, old: u8) -> Self {
        Edit {
            kind: EditKind::Delete,
            position,
            old: Some(old),
            new: None,
        }
    }

    pub fn apply(&self, w: &[u8]) -> Result<Text> {
        let i = self.position;
        let mut out = w.to_vec();
        match self.kind {
            EditKind::Substitute | EditKind::Delete => {
                if i == 0 || i > w.len() {
                    return invalid(format!("edit position {i} outside 1..={}", w.len()));
                }
                if let Some(old) = self.old {
                    if w[i - 1] != old {
                        return invalid(format!(
                            "edit expects {} at position {i}",
                            escape_symbol(old)
                        ));
                    }
                }
                match (self.kind, self.new) {
                    (EditKind::Substitute, Some(c)) => out[i - 1] = c,
                    (EditKind::Delete, _) => {
                        out.remove(i - 1);
                    }
                    _ => return invalid("substitution without a replacement symbol"),
                }
            }
            EditKind::Insert => {
                if i == 0 || i > w.len() + 1 {
                    return invalid(format!("insert position {i} outside 1..={}", w.len() + 1));
                }
                let Some(c) = self.new else {
                    return invalid("insertion without a symbol");
                };
                out.insert(i - 1, c);
            }
        }
        Ok(Text::new(out))
    }
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = |c: Option<u8>| c.map(escape_symbol).unwrap_or_else(|| "-".into());
        write!(
            f,
            "{} @{} {} -> {}",
            self.kind,
            self.position,
            sym(self.old),
            sym(self.new)
        )
    }
}

/// Every edit of `kind` at edit distance one from `w`, paired with the
/// edited text.
///
/// Order is position-major, then replacement symbol in the order of
/// `alphabet` (pass the ordering's symbols to get rank order). Substitutions
/// skip the identity; values may repeat across positions.
pub fn enumerate_edits<'a>(
    w: &'a [u8],
    kind: EditKind,
    alphabet: &'a [u8],
) -> Result<impl Iterator<Item = (Edit, Text)> + 'a> {
    if alphabet.is_empty() {
        return invalid("edit alphabet is empty");
    }
    if kind != EditKind::Insert && w.is_empty() {
        return invalid("cannot substitute or delete in an empty text");
    }
    let n = w.len();
    let edits: Box<dyn Iterator<Item = Edit> + 'a> = match kind {
        EditKind::Substitute => Box::new((1..=n).flat_map(move |i| {
            let old = w[i - 1];
            alphabet
                .iter()
                .filter(move |&&c| c != old)
                .map(move |&c| Edit::substitute(i, old, c))
        })),
        EditKind::Insert => Box::new(
            (1..=n + 1).flat_map(move |i| alphabet.iter().map(move |&c| Edit::insert(i, c))),
        ),
        EditKind::Delete => Box::new((1..=n).map(move |i| Edit::delete(i, w[i - 1]))),
    };
    Ok(edits.map(move |e| {
        let t = e.apply(w).expect("enumerated edit is in range");
        (e, t)
    }))
}
