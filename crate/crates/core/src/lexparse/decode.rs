use super::{LexParse, Phrase};
use crate::error::{Error, Result};
use crate::order::escape_symbol;
use crate::text::Text;

#[derive(Clone, Copy)]
enum Link {
    Known(u8),
    Ref(usize),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Unvisited,
    OnPath,
    Done,
}

fn malformed<T>(msg: String) -> Result<T> {
    Err(Error::MalformedParse(msg))
}

/// Reconstructs the text of a parse.
///
/// Each position either holds an explicit symbol or points at the position
/// it was copied from; chains are followed with memoisation. A chain that
/// revisits itself is a cycle and rejected, as are references that leave
/// the text.
pub fn decode(parse: &LexParse) -> Result<Text> {
    let n = parse.n;
    let total: usize = parse.phrases.iter().map(Phrase::len).sum();
    if total != n {
        return malformed(format!("phrase lengths sum to {total}, header says {n}"));
    }

    let mut link = Vec::with_capacity(n);
    for (idx, ph) in parse.phrases.iter().enumerate() {
        match *ph {
            Phrase::Explicit { symbol } => {
                if !parse.ordering.contains(symbol) {
                    return malformed(format!(
                        "phrase {} uses symbol {} outside the ordering",
                        idx + 1,
                        escape_symbol(symbol)
                    ));
                }
                link.push(Link::Known(symbol));
            }
            Phrase::Copy { length, source } => {
                if length == 0 {
                    return malformed(format!("phrase {} has zero length", idx + 1));
                }
                if source == 0 || source + length - 1 > n {
                    return malformed(format!(
                        "phrase {} copies {length} symbols from {source}, outside 1..={n}",
                        idx + 1
                    ));
                }
                link.extend((0..length).map(|t| Link::Ref(source - 1 + t)));
            }
        }
    }

    let mut out = vec![0u8; n];
    let mut state = vec![State::Unvisited; n];
    let mut path = Vec::new();
    for start in 0..n {
        let mut cur = start;
        let value = loop {
            match state[cur] {
                State::Done => break out[cur],
                State::OnPath => {
                    return malformed(format!("reference cycle through position {}", cur + 1))
                }
                State::Unvisited => match link[cur] {
                    Link::Known(c) => {
                        out[cur] = c;
                        state[cur] = State::Done;
                        break c;
                    }
                    Link::Ref(q) => {
                        state[cur] = State::OnPath;
                        path.push(cur);
                        cur = q;
                    }
                },
            }
        };
        for p in path.drain(..) {
            out[p] = value;
            state[p] = State::Done;
        }
    }
    Ok(Text::new(out))
}
