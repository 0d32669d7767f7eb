//! z- and c-factorizations.
//!
//! Occurrences are self-referential: an earlier occurrence starts at some
//! `j < i` but may run past `i`. Both factorizations reduce to the longest
//! previous factor `LPF(i) = max_{j<i} lcp(x[i..], x[j..])`:
//!
//! * z-factor at `i`: length `LPF(i) + 1`;
//! * c-factor at `i`: length `LPF(i)`, or 1 when `LPF(i) = 0`.
//!
//! On a finite prefix of length `N` the factor at `i` is *settled*, meaning
//! identical to the factor of every longer extension, iff `i + LPF(i) < N`.
//! The last unsettled factor is truncated at `N`.

use std::fmt;

use serde::Serialize;
use suffix::SuffixTable;

use crate::sequences::{Letter, SequenceGenerator};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FactorKind {
    Z,
    C,
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorKind::Z => "z",
            FactorKind::C => "c",
        })
    }
}

impl std::str::FromStr for FactorKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "z" | "Z" => Ok(FactorKind::Z),
            "c" | "C" => Ok(FactorKind::C),
            _ => Err(format!("expected `z` or `c`, found `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Factor {
    pub start: usize,
    pub length: usize,
}

impl From<(usize, usize)> for Factor {
    fn from((start, length): (usize, usize)) -> Self {
        Factor { start, length }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub kind: FactorKind,
    pub factors: Vec<Factor>,
    /// Leading factors that are final; always `factors.len()` or one less.
    pub settled: usize,
}

impl Factorization {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.factors.iter().map(|f| (f.start, f.length)).collect()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn words<'a>(&self, x: &'a [Letter]) -> Vec<&'a [Letter]> {
        self.factors
            .iter()
            .map(|f| &x[f.start..f.start + f.length])
            .collect()
    }

    /// Keep only the first `count` factors.
    pub fn truncate(&mut self, count: usize) {
        self.factors.truncate(count);
        self.settled = self.settled.min(count);
    }
}

/// `x[i+t] = x[j+t]` for all `t < n`.
pub fn factor_eq(x: &[Letter], i: usize, j: usize, n: usize) -> bool {
    x[i..i + n] == x[j..j + n]
}

/// The z-factor predicate evaluated literally. Needs `x.len() >= i + n`.
pub fn is_z_factor(x: &[Letter], i: usize, n: usize) -> bool {
    if i == 0 {
        return n == 1;
    }
    (0..i).all(|j| !factor_eq(x, i, j, n))
        && (0..n).all(|t| (0..i).any(|l| factor_eq(x, i, l, t)))
}

/// The c-factor predicate evaluated literally, without the fresh-letter case.
/// Needs `x.len() >= i + n + 1`.
pub fn is_c_factor(x: &[Letter], i: usize, n: usize) -> bool {
    (0..i).any(|j| factor_eq(x, i, j, n)) && (0..i).all(|l| !factor_eq(x, i, l, n + 1))
}

/// `x[i]` does not occur before `i`.
pub fn is_fresh_letter(x: &[Letter], i: usize) -> bool {
    !x[..i].contains(&x[i])
}

fn lcp(x: &[Letter], i: usize, j: usize) -> usize {
    x[i..].iter().zip(&x[j..]).take_while(|(a, b)| a == b).count()
}

/// Longest previous factor by direct scan over every `j < i`.
pub fn lpf_naive(x: &[Letter], i: usize) -> usize {
    (0..i).map(|j| lcp(x, i, j)).max().unwrap_or(0)
}

fn factor_length(kind: FactorKind, lpf: usize) -> usize {
    match kind {
        FactorKind::Z => lpf + 1,
        FactorKind::C => lpf.max(1),
    }
}

fn factorize_with(
    x: &[Letter],
    kind: FactorKind,
    count: usize,
    mut lpf: impl FnMut(usize) -> usize,
) -> Factorization {
    let n = x.len();
    let mut factors = Vec::new();
    let mut settled = 0;
    let mut i = 0;
    while i < n && factors.len() < count {
        let l = lpf(i);
        let len = factor_length(kind, l).min(n - i);
        if i + l < n {
            settled += 1;
        }
        factors.push(Factor { start: i, length: len });
        i += len;
    }
    Factorization {
        kind,
        factors,
        settled,
    }
}

/// Reference z-factorization of the finite word `x` (direct scan).
pub fn z_factorize(x: &[Letter], count: usize) -> Factorization {
    factorize_with(x, FactorKind::Z, count, |i| lpf_naive(x, i))
}

/// Reference c-factorization of the finite word `x` (direct scan).
pub fn c_factorize(x: &[Letter], count: usize) -> Factorization {
    factorize_with(x, FactorKind::C, count, |i| lpf_naive(x, i))
}

pub fn factorize(x: &[Letter], kind: FactorKind, count: usize) -> Factorization {
    match kind {
        FactorKind::Z => z_factorize(x, count),
        FactorKind::C => c_factorize(x, count),
    }
}

/// Answers `LPF(i)` queries on a fixed word.
///
/// For each position `i` it keeps the nearest suffixes, in suffix-array order
/// on either side of `x[i..]`, that start before `i`. One of the two attains
/// `LPF(i)`, so a query costs two letter-by-letter comparisons.
pub struct PreviousFactorIndex<'a> {
    x: &'a [Letter],
    before: Vec<u32>,
    after: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl<'a> PreviousFactorIndex<'a> {
    pub fn new(x: &'a [Letter]) -> Self {
        assert!(x.len() < NONE as usize, "word too long to index");
        // SAIS works on text; letters are mapped to distinct ASCII bytes
        let text: String = x
            .iter()
            .map(|&l| {
                assert!(l < 127, "letter {l} does not fit the suffix index");
                char::from(l + 1)
            })
            .collect();
        let sa = SuffixTable::new(text);
        let sa = sa.table();
        let n = x.len();
        let mut before = vec![NONE; n];
        let mut after = vec![NONE; n];
        let mut stack: Vec<u32> = Vec::new();
        for &p in sa {
            while stack.last().is_some_and(|&t| t > p) {
                stack.pop();
            }
            before[p as usize] = stack.last().copied().unwrap_or(NONE);
            stack.push(p);
        }
        stack.clear();
        for &p in sa.iter().rev() {
            while stack.last().is_some_and(|&t| t > p) {
                stack.pop();
            }
            after[p as usize] = stack.last().copied().unwrap_or(NONE);
            stack.push(p);
        }
        PreviousFactorIndex { x, before, after }
    }

    pub fn word(&self) -> &'a [Letter] {
        self.x
    }

    pub fn lpf(&self, i: usize) -> usize {
        let side = |j: u32| if j == NONE { 0 } else { lcp(self.x, i, j as usize) };
        side(self.before[i]).max(side(self.after[i]))
    }

    pub fn factorize(&self, kind: FactorKind, count: usize) -> Factorization {
        factorize_with(self.x, kind, count, |i| self.lpf(i))
    }

    /// The z-factor predicate; needs `i + n <= len`.
    pub fn is_z_factor(&self, i: usize, n: usize) -> bool {
        if i == 0 {
            n == 1
        } else {
            self.lpf(i) + 1 == n
        }
    }

    /// The c-factor predicate without the fresh-letter case; needs
    /// `i + n + 1 <= len`.
    pub fn is_c_factor(&self, i: usize, n: usize) -> bool {
        n >= 1 && self.lpf(i) == n
    }

    /// `(i, 1)` where `x[i]` has not occurred before.
    pub fn is_fresh_letter(&self, i: usize) -> bool {
        self.lpf(i) == 0
    }
}

pub fn z_factorize_fast(x: &[Letter], count: usize) -> Factorization {
    PreviousFactorIndex::new(x).factorize(FactorKind::Z, count)
}

pub fn c_factorize_fast(x: &[Letter], count: usize) -> Factorization {
    PreviousFactorIndex::new(x).factorize(FactorKind::C, count)
}

pub fn factorize_fast(x: &[Letter], kind: FactorKind, count: usize) -> Factorization {
    PreviousFactorIndex::new(x).factorize(kind, count)
}

/// First `count` factors of the infinite sequence, growing the prefix until
/// all of them are settled. The result holds exactly `count` settled factors.
pub fn factorize_sequence(
    gen: &mut SequenceGenerator,
    kind: FactorKind,
    count: usize,
    cap: usize,
) -> Result<Factorization> {
    if count == 0 {
        return Ok(Factorization {
            kind,
            factors: Vec::new(),
            settled: 0,
        });
    }
    let mut len = 64.min(cap).max(1);
    loop {
        let x = gen.prefix(len);
        let mut f = factorize_fast(x, kind, count);
        if f.settled >= count {
            f.truncate(count);
            return Ok(f);
        }
        if len >= cap {
            return Err(Error::PrefixTooLarge {
                required: len + 1,
                cap,
            });
        }
        len = len.saturating_mul(2).min(cap);
    }
}

/// `φ^n(a)` for the Fibonacci morphism `a -> ab, b -> a`, with `a = 0`.
pub fn phi_power(n: usize) -> Vec<Letter> {
    let mut w = vec![0];
    for _ in 0..n {
        w = w
            .iter()
            .flat_map(|&l| if l == 0 { vec![0, 1] } else { vec![0] })
            .collect();
    }
    w
}

/// The reversal of `φ^n(a)`.
pub fn reversed_power(n: usize) -> Vec<Letter> {
    let mut w = phi_power(n);
    w.reverse();
    w
}

/// Singular words of the Fibonacci word: `w_{-1} = a`, `w_0 = b`, and for
/// `n >= 1`, `φ^n(a)` with its last two letters `xy` replaced by a leading
/// `x` and the `y` dropped.
pub fn singular_word(n: i64) -> Vec<Letter> {
    assert!(n >= -1, "singular words start at index -1");
    match n {
        -1 => vec![0],
        0 => vec![1],
        _ => {
            let mut p = phi_power(n as usize);
            let k = p.len();
            let x = p[k - 2];
            p.pop();
            p.insert(0, x);
            p
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::SequenceId;

    fn word(s: &str) -> Vec<Letter> {
        s.bytes().map(|b| b - b'a').collect()
    }

    fn prefix(id: SequenceId, len: usize) -> Vec<Letter> {
        SequenceGenerator::catalog(id).prefix(len).to_vec()
    }

    #[test]
    fn predicate_examples() {
        let f = prefix(SequenceId::Fibonacci, 64);
        assert!(factor_eq(&f, 1, 4, 2));
        assert!(factor_eq(&f, 5, 5, 7));
        assert!(factor_eq(&f, 2, 9, 0));
        assert!(is_z_factor(&f, 3, 4));
        assert!(is_z_factor(&f, 0, 1));
        assert!(!is_z_factor(&f, 0, 2));
        assert!(is_c_factor(&f, 3, 3));
        assert!(!is_c_factor(&f, 3, 4));
        let t = prefix(SequenceId::ThueMorse, 64);
        assert!(is_c_factor(&t, 3, 2));
    }

    #[test]
    fn factorization_examples() {
        let f = prefix(SequenceId::Fibonacci, 64);
        assert_eq!(z_factorize(&f, 4).pairs(), [(0, 1), (1, 1), (2, 2), (4, 3)]);
        assert_eq!(c_factorize(&f, 4).pairs(), [(0, 1), (1, 1), (2, 1), (3, 3)]);
        let t = prefix(SequenceId::ThueMorse, 64);
        let lens: Vec<_> = z_factorize(&t, 6).factors.iter().map(|f| f.length).collect();
        assert_eq!(lens, [1, 1, 2, 3, 4, 4]);
        assert_eq!(
            c_factorize(&t, 5).pairs(),
            [(0, 1), (1, 1), (2, 1), (3, 2), (5, 1)]
        );
        let pd = prefix(SequenceId::PeriodDoubling, 64);
        assert_eq!(z_factorize(&pd, 4).pairs(), [(0, 1), (1, 1), (2, 2), (4, 4)]);
        let mw = prefix(SequenceId::MephistoWaltz, 64);
        assert_eq!(
            c_factorize(&mw, 5).pairs(),
            [(0, 1), (1, 1), (2, 1), (3, 3), (6, 2)]
        );
    }

    #[test]
    fn settled_and_truncated() {
        // aaaa: z = a, aaa (runs to the end, unsettled)
        let z = z_factorize(&word("aaaa"), 10);
        assert_eq!(z.pairs(), [(0, 1), (1, 3)]);
        assert_eq!(z.settled, 1);
        let c = c_factorize(&word("aaab"), 10);
        assert_eq!(c.pairs(), [(0, 1), (1, 2), (3, 1)]);
        assert_eq!(c.settled, 3);
        assert_eq!(z_factorize_fast(&word("a"), 1).pairs(), [(0, 1)]);
        assert!(z_factorize(&[], 3).is_empty());
    }

    #[test]
    fn fast_matches_naive_on_catalog() {
        for id in SequenceId::ALL {
            let x = prefix(id, 3000);
            let idx = PreviousFactorIndex::new(&x);
            for i in 0..x.len() {
                assert_eq!(idx.lpf(i), lpf_naive(&x, i), "{id} at {i}");
            }
        }
    }

    #[test]
    fn fast_predicates_match_literal_ones() {
        let t = prefix(SequenceId::ThueMorse, 200);
        let idx = PreviousFactorIndex::new(&t);
        for i in 0..60 {
            for n in 1..40 {
                assert_eq!(idx.is_z_factor(i, n), is_z_factor(&t, i, n), "z {i} {n}");
                assert_eq!(idx.is_c_factor(i, n), is_c_factor(&t, i, n), "c {i} {n}");
            }
            assert_eq!(idx.is_fresh_letter(i), is_fresh_letter(&t, i));
        }
    }

    #[test]
    fn sequence_factorization_grows() {
        let mut g = SequenceGenerator::catalog(SequenceId::PeriodDoubling);
        let f = factorize_sequence(&mut g, FactorKind::Z, 12, 1 << 16).unwrap();
        assert_eq!(f.factors[11], Factor { start: 1 << 10, length: 1 << 10 });
        assert_eq!(f.settled, 12);
        let err = factorize_sequence(&mut g, FactorKind::Z, 30, 1 << 12).unwrap_err();
        assert!(matches!(err, Error::PrefixTooLarge { .. }));
    }

    #[test]
    fn singular_words() {
        let s = |n| {
            singular_word(n)
                .iter()
                .map(|&l| (b'a' + l) as char)
                .collect::<String>()
        };
        assert_eq!(s(-1), "a");
        assert_eq!(s(0), "b");
        assert_eq!(s(1), "aa");
        assert_eq!(s(2), "bab");
        assert_eq!(s(3), "aabaa");
        assert_eq!(s(4), "babaabab");
        assert_eq!(s(5), "aabaababaabaa");
        assert_eq!(singular_word(5).len(), 13);
    }

    #[test]
    fn reversed_powers() {
        assert_eq!(reversed_power(1), word("ba"));
        assert_eq!(reversed_power(2), word("aba"));
        assert_eq!(reversed_power(3), word("baaba"));
    }
}
