//! Lex-parse of strings under arbitrary alphabet orderings, its sensitivity
//! to single-character edits and to reordering the alphabet, and exact
//! checks of the parse structure of Fibonacci words.
//!
//! Positions in every public API are 1-based.

pub mod combinat;
pub mod edit;
pub mod error;
pub mod fib;
pub mod lexparse;
pub mod lyndon;
pub mod order;
pub mod sensitivity;
pub mod suffix;
pub mod text;
pub mod verify;

pub use edit::{enumerate_edits, Edit, EditKind};
pub use error::{Error, Result};
pub use lexparse::{decode, lex_parse, v_count, LexParse, Phrase};
pub use order::AlphabetOrdering;
pub use suffix::{build_suffix_array, SuffixArray};
pub use text::Text;
