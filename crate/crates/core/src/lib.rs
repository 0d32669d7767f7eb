//! Classical automatic sequences, their Ziv-Lempel (`z`) and Crochemore (`c`)
//! factorizations, and bounded verification of closed-form descriptions of
//! where the factors start and how long they are.
//!
//! The crate is split along the same lines as the problem:
//!
//! * [`numeration`]: representations of integers in base `k`, in the
//!   Zeckendorf system and in abstract numeration systems over a regular
//!   language, plus the two-track encoding of pairs `(i, n)`.
//! * [`automata`]: deterministic automata with output and a small regular
//!   expression engine over digit pairs.
//! * [`sequences`]: morphisms, codings, fixed points and the catalog of six
//!   sequences (Fibonacci, Thue-Morse, period-doubling, Rudin-Shapiro,
//!   paper-folding, Mephisto-Waltz).
//! * [`factorize`]: definition-level predicates, a direct-scan factorizer and
//!   a suffix-array based one that must agree with it.
//! * [`theorems`]: closed forms, transcribed pair expressions and the
//!   verification harness.

pub mod automata;
pub mod error;
pub mod factorize;
pub mod numeration;
pub mod sequences;
pub mod theorems;

pub use error::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Default upper bound on the length of any generated prefix.
pub const DEFAULT_PREFIX_CAP: usize = 1 << 23;

/// Environment variable that overrides [`DEFAULT_PREFIX_CAP`].
pub const PREFIX_CAP_ENV: &str = "SEQFACT_PREFIX_CAP";

/// The prefix cap in effect: `SEQFACT_PREFIX_CAP` when it parses, otherwise
/// the default.
pub fn prefix_cap() -> usize {
    std::env::var(PREFIX_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_PREFIX_CAP)
}
