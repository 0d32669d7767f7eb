//! Automata: DFAOs that generate sequences, and the pair-regex engine used to
//! describe sets of `(position, length)` pairs.

pub mod dfao;
pub mod nfa;
pub mod regex;

pub use dfao::Dfao;
pub use nfa::{enumerate_accepted, regex_accepts, PairNfa};
pub use regex::{parse_pair_regex, PairRegex};
