//! Numeration systems: positional base `k`, Zeckendorf, and abstract
//! numeration systems given by a regular language ordered genealogically.
//!
//! Representations are digit words read most-significant digit first. Zero is
//! represented by the empty word in every system; callers that need a visible
//! zero (the CLI) render it themselves.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::{Error, Result};

/// A digit is the index of a letter in the system's ordered alphabet.
pub type Digit = u8;

/// Fibonacci numbers `F_0 = 1, F_1 = 2, F_k = F_{k-1} + F_{k-2}`, every term
/// that fits in a `u64`.
#[derive(Debug, Clone)]
pub struct FibBasis {
    values: Vec<u64>,
}

impl FibBasis {
    fn build() -> Self {
        let mut values = vec![1u64, 2];
        loop {
            let k = values.len();
            match values[k - 1].checked_add(values[k - 2]) {
                Some(next) => values.push(next),
                None => break,
            }
        }
        FibBasis { values }
    }

    /// The shared basis.
    pub fn get() -> &'static FibBasis {
        static BASIS: OnceLock<FibBasis> = OnceLock::new();
        BASIS.get_or_init(FibBasis::build)
    }

    pub fn term(&self, k: usize) -> Option<u64> {
        self.values.get(k).copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `F_k` with `F_0 = 1, F_1 = 2`.
///
/// Panics when `F_k` does not fit in a `u64` (`k > 90`).
pub fn fib(k: usize) -> u64 {
    FibBasis::get()
        .term(k)
        .unwrap_or_else(|| panic!("F_{k} does not fit in u64"))
}

/// A deterministic automaton over digits `0..alphabet_size` with a partial
/// transition function; a missing transition rejects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Acceptor {
    alphabet_size: usize,
    initial: usize,
    delta: Vec<Vec<Option<usize>>>,
    accepting: Vec<bool>,
}

impl Acceptor {
    pub fn new(
        alphabet_size: usize,
        initial: usize,
        delta: Vec<Vec<Option<usize>>>,
        accepting: Vec<bool>,
    ) -> Result<Self> {
        let states = delta.len();
        if states == 0 || initial >= states || accepting.len() != states {
            return Err(Error::InvalidAutomaton(
                "initial state and accepting flags must match the state count".into(),
            ));
        }
        for row in &delta {
            if row.len() != alphabet_size {
                return Err(Error::InvalidAutomaton(format!(
                    "every state needs {alphabet_size} transition slots"
                )));
            }
            if row.iter().flatten().any(|&q| q >= states) {
                return Err(Error::InvalidAutomaton("transition to unknown state".into()));
            }
        }
        Ok(Acceptor {
            alphabet_size,
            initial,
            delta,
            accepting,
        })
    }

    /// `ε ∪ {1..k-1}{0..k-1}*`.
    pub fn positional(base: u8) -> Self {
        let k = base as usize;
        let start: Vec<Option<usize>> = (0..k).map(|d| (d != 0).then_some(1)).collect();
        let body = vec![Some(1); k];
        Acceptor::new(k, 0, vec![start, body], vec![true, true]).expect("well-formed")
    }

    /// `ε ∪ 1(0|01)*`: words starting with 1 and avoiding `11`.
    pub fn zeckendorf() -> Self {
        // 0: empty, 1: last digit 1, 2: last digit 0
        let delta = vec![
            vec![None, Some(1)],
            vec![Some(2), None],
            vec![Some(2), Some(1)],
        ];
        Acceptor::new(2, 0, delta, vec![true, true, true]).expect("well-formed")
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn step(&self, q: usize, d: Digit) -> Option<usize> {
        self.delta.get(q)?.get(d as usize).copied().flatten()
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepts(&self, w: &[Digit]) -> bool {
        let mut q = self.initial;
        for &d in w {
            match self.step(q, d) {
                Some(next) => q = next,
                None => return false,
            }
        }
        self.accepting[q]
    }

    /// Whether the accepted language is infinite: some cycle lies on a path
    /// from the initial state to an accepting state.
    pub fn accepts_infinitely_many(&self) -> bool {
        let n = self.delta.len();
        let mut reachable = vec![false; n];
        let mut stack = vec![self.initial];
        reachable[self.initial] = true;
        while let Some(q) = stack.pop() {
            for &r in self.delta[q].iter().flatten() {
                if !reachable[r] {
                    reachable[r] = true;
                    stack.push(r);
                }
            }
        }
        let mut live = self.accepting.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for q in 0..n {
                if !live[q] && self.delta[q].iter().flatten().any(|&r| live[r]) {
                    live[q] = true;
                    changed = true;
                }
            }
        }
        let useful: Vec<bool> = (0..n).map(|q| reachable[q] && live[q]).collect();
        // Cycle detection restricted to useful states (iterative DFS colouring).
        let mut colour = vec![0u8; n];
        for root in (0..n).filter(|&q| useful[q]) {
            if colour[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            colour[root] = 1;
            while let Some(&mut (q, ref mut next)) = stack.last_mut() {
                if *next == self.alphabet_size {
                    colour[q] = 2;
                    stack.pop();
                    continue;
                }
                let d = *next;
                *next += 1;
                if let Some(r) = self.delta[q][d] {
                    if !useful[r] {
                        continue;
                    }
                    match colour[r] {
                        0 => {
                            colour[r] = 1;
                            stack.push((r, 0));
                        }
                        1 => return true,
                        _ => {}
                    }
                }
            }
        }
        false
    }

    /// `table[l][q]`: number of words of length `l` accepted from `q`,
    /// saturating at `u64::MAX`.
    fn count_table(&self, max_len: usize) -> Vec<Vec<u64>> {
        let n = self.delta.len();
        let mut table = Vec::with_capacity(max_len + 1);
        table.push(self.accepting.iter().map(|&a| a as u64).collect::<Vec<_>>());
        for l in 1..=max_len {
            let prev: &Vec<u64> = &table[l - 1];
            let row = (0..n)
                .map(|q| {
                    self.delta[q]
                        .iter()
                        .flatten()
                        .fold(0u64, |acc, &r| acc.saturating_add(prev[r]))
                })
                .collect();
            table.push(row);
        }
        table
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumerationKind {
    Positional(u8),
    Zeckendorf,
    Generic,
}

/// A numeration system `(L, Σ, <)`: the `n`-th word of `L` in genealogical
/// order represents `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumerationSystem {
    kind: NumerationKind,
    alphabet: Vec<char>,
    acceptor: Acceptor,
}

const DIGIT_CHARS: &str = "0123456789abcdefghijklmnopqrstuvwxyz";

impl NumerationSystem {
    /// Base `k` for `2 <= k <= 36`, digits `0-9a-z`.
    pub fn positional(base: u8) -> Self {
        assert!((2..=36).contains(&base), "base must be in 2..=36");
        NumerationSystem {
            kind: NumerationKind::Positional(base),
            alphabet: DIGIT_CHARS.chars().take(base as usize).collect(),
            acceptor: Acceptor::positional(base),
        }
    }

    pub fn zeckendorf() -> Self {
        NumerationSystem {
            kind: NumerationKind::Zeckendorf,
            alphabet: vec!['0', '1'],
            acceptor: Acceptor::zeckendorf(),
        }
    }

    /// An abstract numeration system over `alphabet` (listed in increasing
    /// order) whose language is accepted by `acceptor`.
    pub fn generic(alphabet: Vec<char>, acceptor: Acceptor) -> Result<Self> {
        if alphabet.len() != acceptor.alphabet_size() {
            return Err(Error::InvalidAutomaton(
                "alphabet and acceptor disagree on size".into(),
            ));
        }
        if !acceptor.accepts_infinitely_many() {
            return Err(Error::InvalidAutomaton(
                "numeration language must be infinite".into(),
            ));
        }
        Ok(NumerationSystem {
            kind: NumerationKind::Generic,
            alphabet,
            acceptor,
        })
    }

    pub fn kind(&self) -> NumerationKind {
        self.kind
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn radix(&self) -> usize {
        self.alphabet.len()
    }

    pub fn acceptor(&self) -> &Acceptor {
        &self.acceptor
    }

    /// Positional and Zeckendorf representations are invariant under leading
    /// zeros; an abstract system's smallest letter is significant.
    pub fn allows_leading_zeros(&self) -> bool {
        !matches!(self.kind, NumerationKind::Generic)
    }

    /// Drop leading zeros where they are not significant.
    pub fn strip<'a>(&self, w: &'a [Digit]) -> &'a [Digit] {
        if self.allows_leading_zeros() {
            let first = w.iter().position(|&d| d != 0).unwrap_or(w.len());
            &w[first..]
        } else {
            w
        }
    }

    /// Whether `w` (after [`strip`](Self::strip)) is in the numeration language.
    pub fn is_valid(&self, w: &[Digit]) -> bool {
        self.acceptor.accepts(self.strip(w))
    }

    pub fn rep(&self, n: u64) -> Vec<Digit> {
        match self.kind {
            NumerationKind::Positional(base) => {
                let mut out = Vec::new();
                let mut v = n;
                while v > 0 {
                    out.push((v % base as u64) as Digit);
                    v /= base as u64;
                }
                out.reverse();
                out
            }
            NumerationKind::Zeckendorf => zeckendorf_rep(n),
            NumerationKind::Generic => self.generic_rep(n),
        }
    }

    pub fn val(&self, w: &[Digit]) -> Result<u64> {
        let w = self.strip(w);
        if !self.acceptor.accepts(w) {
            return Err(Error::InvalidRepresentation {
                word: self.format_raw(w),
                system: self.to_string(),
            });
        }
        match self.kind {
            NumerationKind::Positional(base) => w.iter().try_fold(0u64, |acc, &d| {
                acc.checked_mul(base as u64)
                    .and_then(|v| v.checked_add(d as u64))
                    .ok_or(Error::Overflow)
            }),
            NumerationKind::Zeckendorf => {
                let basis = FibBasis::get();
                if w.len() > basis.len() {
                    return Err(Error::Overflow);
                }
                w.iter()
                    .rev()
                    .enumerate()
                    .filter(|&(_, &d)| d == 1)
                    .try_fold(0u64, |acc, (k, _)| {
                        acc.checked_add(basis.as_slice()[k]).ok_or(Error::Overflow)
                    })
            }
            NumerationKind::Generic => self.generic_val(w),
        }
    }

    fn generic_rep(&self, n: u64) -> Vec<Digit> {
        let a = &self.acceptor;
        let mut remaining = n;
        let mut table = a.count_table(0);
        let mut len = 0;
        loop {
            let here = table[len][a.initial()];
            if remaining < here {
                break;
            }
            remaining -= here;
            len += 1;
            table = a.count_table(len);
        }
        let mut word = Vec::with_capacity(len);
        let mut q = a.initial();
        for pos in 0..len {
            let rest = len - pos - 1;
            for d in 0..a.alphabet_size() as Digit {
                if let Some(r) = a.step(q, d) {
                    let c = table[rest][r];
                    if remaining < c {
                        word.push(d);
                        q = r;
                        break;
                    }
                    remaining -= c;
                }
            }
        }
        word
    }

    fn generic_val(&self, w: &[Digit]) -> Result<u64> {
        let a = &self.acceptor;
        let table = a.count_table(w.len());
        let mut total = 0u64;
        for row in table.iter().take(w.len()) {
            total = total.checked_add(row[a.initial()]).ok_or(Error::Overflow)?;
        }
        let mut q = a.initial();
        for (pos, &d) in w.iter().enumerate() {
            let rest = w.len() - pos - 1;
            for smaller in 0..d {
                if let Some(r) = a.step(q, smaller) {
                    total = total.checked_add(table[rest][r]).ok_or(Error::Overflow)?;
                }
            }
            q = a.step(q, d).expect("word was accepted");
        }
        debug_assert!(a.is_accepting(q));
        Ok(total)
    }

    /// The first `count` words of the language in genealogical order.
    pub fn genealogical_enumerate(&self, count: usize) -> Vec<Vec<Digit>> {
        let a = &self.acceptor;
        let mut out = Vec::with_capacity(count);
        let mut len = 0;
        while out.len() < count {
            let table = a.count_table(len);
            let mut prefix = Vec::with_capacity(len);
            enumerate_length(a, &table, a.initial(), len, &mut prefix, &mut out, count);
            len += 1;
        }
        out
    }

    /// Two-track representation of `(i, n)`, both tracks left-padded with
    /// zeros to a common length. Only meaningful for systems that
    /// [allow leading zeros](Self::allows_leading_zeros).
    pub fn pad_pair(&self, i: u64, n: u64) -> PairWord {
        PairWord::from_tracks(&self.rep(i), &self.rep(n))
    }

    /// Values of both tracks, or `None` if either track is not a valid
    /// representation.
    pub fn pair_values(&self, w: &PairWord) -> Option<(u64, u64)> {
        let (a, b) = w.tracks();
        Some((self.val(&a).ok()?, self.val(&b).ok()?))
    }

    pub fn parse_digits(&self, s: &str) -> Result<Vec<Digit>> {
        s.chars()
            .map(|c| {
                self.alphabet
                    .iter()
                    .position(|&x| x == c)
                    .map(|d| d as Digit)
                    .ok_or_else(|| Error::InvalidRepresentation {
                        word: s.to_string(),
                        system: self.to_string(),
                    })
            })
            .collect()
    }

    /// Render digits as letters; the empty word renders as an empty string.
    pub fn format_digits(&self, w: &[Digit]) -> String {
        self.format_raw(w)
    }

    fn format_raw(&self, w: &[Digit]) -> String {
        w.iter()
            .map(|&d| self.alphabet.get(d as usize).copied().unwrap_or('?'))
            .collect()
    }
}

impl fmt::Display for NumerationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            NumerationKind::Positional(b) => write!(f, "base {b}"),
            NumerationKind::Zeckendorf => f.write_str("Zeckendorf"),
            NumerationKind::Generic => {
                let letters: String = self.alphabet.iter().collect();
                write!(f, "ANS over {letters}")
            }
        }
    }
}

fn enumerate_length(
    a: &Acceptor,
    table: &[Vec<u64>],
    q: usize,
    rest: usize,
    prefix: &mut Vec<Digit>,
    out: &mut Vec<Vec<Digit>>,
    count: usize,
) {
    if out.len() >= count || table[rest][q] == 0 {
        return;
    }
    if rest == 0 {
        out.push(prefix.clone());
        return;
    }
    for d in 0..a.alphabet_size() as Digit {
        if let Some(r) = a.step(q, d) {
            prefix.push(d);
            enumerate_length(a, table, r, rest - 1, prefix, out, count);
            prefix.pop();
        }
    }
}

fn zeckendorf_rep(n: u64) -> Vec<Digit> {
    if n == 0 {
        return Vec::new();
    }
    let basis = FibBasis::get().as_slice();
    let top = basis.iter().rposition(|&f| f <= n).expect("F_0 = 1 <= n");
    let mut rem = n;
    let mut out = Vec::with_capacity(top + 1);
    for k in (0..=top).rev() {
        if basis[k] <= rem {
            out.push(1);
            rem -= basis[k];
        } else {
            out.push(0);
        }
    }
    debug_assert_eq!(rem, 0);
    out
}

/// A two-track digit word, most significant pair first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairWord(pub Vec<(Digit, Digit)>);

impl PairWord {
    /// Left-pad the shorter track with zeros and zip.
    pub fn from_tracks(a: &[Digit], b: &[Digit]) -> Self {
        let len = a.len().max(b.len());
        let pad = |t: &[Digit], k: usize| -> Digit {
            let offset = len - t.len();
            if k < offset {
                0
            } else {
                t[k - offset]
            }
        };
        PairWord((0..len).map(|k| (pad(a, k), pad(b, k))).collect())
    }

    pub fn tracks(&self) -> (Vec<Digit>, Vec<Digit>) {
        self.0.iter().copied().unzip()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// No leading `[0,0]`.
    pub fn is_canonical(&self) -> bool {
        self.0.first() != Some(&(0, 0))
    }

    pub fn as_slice(&self) -> &[(Digit, Digit)] {
        &self.0
    }
}

impl fmt::Display for PairWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(a, b) in &self.0 {
            write!(f, "[{a},{b}]")?;
        }
        Ok(())
    }
}

impl FromStr for PairWord {
    type Err = Error;

    /// Parses the bracket notation `[1,1][0,0]`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut out = Vec::new();
        let mut k = 0;
        let syntax = |pos: usize, msg: &str| Error::Syntax {
            pos,
            msg: msg.to_string(),
        };
        while k < chars.len() {
            let expect = |k: usize, want: char| -> Result<()> {
                match chars.get(k) {
                    Some(&(_, c)) if c == want => Ok(()),
                    Some(&(p, c)) => Err(syntax(p, &format!("expected `{want}`, found `{c}`"))),
                    None => Err(syntax(s.len(), &format!("expected `{want}`"))),
                }
            };
            let digit = |k: usize| -> Result<Digit> {
                match chars.get(k) {
                    Some(&(_, c)) if c.is_ascii_digit() => Ok(c as u8 - b'0'),
                    Some(&(p, c)) => Err(syntax(p, &format!("expected a digit, found `{c}`"))),
                    None => Err(syntax(s.len(), "expected a digit")),
                }
            };
            expect(k, '[')?;
            let a = digit(k + 1)?;
            expect(k + 2, ',')?;
            let b = digit(k + 3)?;
            expect(k + 4, ']')?;
            out.push((a, b));
            k += 5;
        }
        Ok(PairWord(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab_star() -> NumerationSystem {
        // a*b*: state 0 reading a's, state 1 reading b's
        let acc = Acceptor::new(
            2,
            0,
            vec![vec![Some(0), Some(1)], vec![None, Some(1)]],
            vec![true, true],
        )
        .unwrap();
        NumerationSystem::generic(vec!['a', 'b'], acc).unwrap()
    }

    fn greedy_oracle(n: u64) -> String {
        // independent greedy over a freshly built basis, most significant first
        let mut basis = vec![1u64, 2];
        while *basis.last().unwrap() <= n {
            let k = basis.len();
            basis.push(basis[k - 1] + basis[k - 2]);
        }
        let mut rem = n;
        let mut s = String::new();
        for &f in basis.iter().rev() {
            if f <= rem {
                s.push('1');
                rem -= f;
            } else if !s.is_empty() {
                s.push('0');
            }
        }
        s
    }

    #[test]
    fn fib_basis_starts_one_two() {
        let b = FibBasis::get();
        assert_eq!(&b.as_slice()[..6], &[1, 2, 3, 5, 8, 13]);
        assert!(b.as_slice().windows(3).all(|w| w[2] == w[0] + w[1]));
        assert_eq!(fib(5), 13);
    }

    #[test]
    fn rep_examples() {
        let z = NumerationSystem::zeckendorf();
        assert!(z.rep(0).is_empty());
        assert_eq!(z.format_digits(&z.rep(4)), "101");
        assert_eq!(z.format_digits(&z.rep(4)), greedy_oracle(4));
        let b2 = NumerationSystem::positional(2);
        assert_eq!(b2.format_digits(&b2.rep(5)), "101");
        let ans = ab_star();
        assert_eq!(ans.format_digits(&ans.rep(5)), "bb");
    }

    #[test]
    fn val_examples() {
        let ans = ab_star();
        assert_eq!(ans.val(&ans.parse_digits("aaa").unwrap()), Ok(6));
        let z = NumerationSystem::zeckendorf();
        assert_eq!(z.val(&[]), Ok(0));
        assert_eq!(ans.val(&[]), Ok(0));
        assert_eq!(z.val(&z.parse_digits("10100").unwrap()), Ok(11));
        assert_eq!(z.val(&z.parse_digits("0010100").unwrap()), Ok(11));
    }

    #[test]
    fn val_rejects_invalid() {
        let z = NumerationSystem::zeckendorf();
        let err = z.val(&z.parse_digits("0110").unwrap()).unwrap_err();
        assert!(matches!(err, Error::InvalidRepresentation { .. }));
        let ans = ab_star();
        assert!(ans.val(&ans.parse_digits("ba").unwrap()).is_err());
        let b3 = NumerationSystem::positional(3);
        assert!(b3.val(&[1, 3]).is_err());
    }

    #[test]
    fn val_overflow() {
        let b2 = NumerationSystem::positional(2);
        assert_eq!(b2.val(&[1; 64]), Ok(u64::MAX));
        assert_eq!(b2.val(&[1; 65]), Err(Error::Overflow));
    }

    #[test]
    fn enumeration_examples() {
        let ans = ab_star();
        let words: Vec<String> = ans
            .genealogical_enumerate(7)
            .iter()
            .map(|w| ans.format_digits(w))
            .collect();
        assert_eq!(words, ["", "a", "b", "aa", "ab", "bb", "aaa"]);

        let b2 = NumerationSystem::positional(2);
        let words: Vec<String> = b2
            .genealogical_enumerate(4)
            .iter()
            .map(|w| b2.format_digits(w))
            .collect();
        assert_eq!(words, ["", "1", "10", "11"]);

        let z = NumerationSystem::zeckendorf();
        let words: Vec<String> = z
            .genealogical_enumerate(5)
            .iter()
            .map(|w| z.format_digits(w))
            .collect();
        assert_eq!(words, ["", "1", "10", "100", "101"]);
    }

    #[test]
    fn enumeration_matches_rep() {
        for ns in [
            NumerationSystem::positional(2),
            NumerationSystem::positional(3),
            NumerationSystem::zeckendorf(),
            ab_star(),
        ] {
            let words = ns.genealogical_enumerate(500);
            for (p, w) in words.iter().enumerate() {
                assert_eq!(&ns.rep(p as u64), w, "{ns} at {p}");
                assert_eq!(ns.val(w), Ok(p as u64));
            }
            assert!(words
                .windows(2)
                .all(|w| (w[0].len(), &w[0]) < (w[1].len(), &w[1])));
        }
    }

    #[test]
    fn generic_route_agrees_with_fast_routes() {
        for fast in [
            NumerationSystem::positional(2),
            NumerationSystem::positional(3),
            NumerationSystem::zeckendorf(),
        ] {
            let generic =
                NumerationSystem::generic(fast.alphabet().to_vec(), fast.acceptor().clone())
                    .unwrap();
            for n in (0..5000).chain([1 << 20, 987_654_321]) {
                assert_eq!(fast.rep(n), generic.rep(n), "{fast} at {n}");
            }
        }
    }

    #[test]
    fn finite_language_rejected() {
        let acc = Acceptor::new(1, 0, vec![vec![Some(1)], vec![None]], vec![true, true]).unwrap();
        assert!(NumerationSystem::generic(vec!['a'], acc).is_err());
    }

    #[test]
    fn pad_pair_examples() {
        let z = NumerationSystem::zeckendorf();
        assert_eq!(z.pad_pair(0, 1).to_string(), "[0,1]");
        assert_eq!(z.pad_pair(1, 1).to_string(), "[1,1]");
        assert_eq!(z.pad_pair(2, 2).to_string(), "[1,1][0,0]");
        assert_eq!(z.pad_pair(0, 0), PairWord::default());
        let w = z.pad_pair(11, 3);
        assert_eq!(w.to_string(), "[1,0][0,0][1,1][0,0][0,0]");
        assert_eq!(z.pair_values(&w), Some((11, 3)));
    }

    #[test]
    fn pair_word_parse() {
        let w: PairWord = "[1,1] [0,0]".parse().unwrap();
        assert_eq!(w.0, vec![(1, 1), (0, 0)]);
        assert!("[0,1".parse::<PairWord>().is_err());
        assert!("[x,1]".parse::<PairWord>().is_err());
        assert_eq!("".parse::<PairWord>().unwrap(), PairWord::default());
    }
}
