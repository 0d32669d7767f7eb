//! Closed forms for the factor positions and lengths, the transcribed pair
//! expressions, and bounded verification of both against brute force.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::automata::{parse_pair_regex, PairNfa, PairRegex};
use crate::factorize::{self, FactorKind, Factorization, PreviousFactorIndex};
use crate::numeration::{fib, NumerationSystem};
use crate::sequences::{Letter, SequenceGenerator, SequenceId};
use crate::{Error, Result};

use FactorKind::{C, Z};
use SequenceId::*;

/// What the exponent is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    /// `G(e) = b^e`.
    Power(u64),
    /// `G(e) = F_e` with `F_0 = 1, F_1 = 2`.
    Fibonacci,
}

impl Growth {
    fn at(self, e: i64) -> Option<u64> {
        let e = u32::try_from(e).ok()?;
        match self {
            Growth::Power(b) => b.checked_pow(e),
            Growth::Fibonacci => crate::numeration::FibBasis::get().term(e as usize),
        }
    }
}

/// `coeff · G(p + offset) + add`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub coeff: u64,
    pub offset: i64,
    pub add: i64,
}

const fn t(coeff: u64, offset: i64, add: i64) -> Term {
    Term { coeff, offset, add }
}

impl Term {
    pub fn eval(&self, g: Growth, p: u64) -> Option<u64> {
        let base = g.at(p as i64 + self.offset)?;
        let v = self.coeff.checked_mul(base)?;
        let v = i128::from(v) + i128::from(self.add);
        u64::try_from(v).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    /// With `p = ⌊m / modulus⌋`, pair `m` is `rules[m mod modulus]` at `p`.
    Piecewise {
        growth: Growth,
        modulus: u64,
        rules: Vec<(Term, Term)>,
    },
    /// Pairs are read off the goodrep expression: starting at position 0,
    /// each next pair is the unique accepted one starting where the previous
    /// factor ends.
    Regex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub sequence: SequenceId,
    pub kind: FactorKind,
    /// Pairs for `m < initial.len()`; the formula applies from there on.
    pub initial: Vec<(u64, u64)>,
    pub formula: Formula,
}

fn pw(growth: Growth, modulus: u64, rules: &[(Term, Term)]) -> Formula {
    Formula::Piecewise {
        growth,
        modulus,
        rules: rules.to_vec(),
    }
}

const B2: Growth = Growth::Power(2);
const B3: Growth = Growth::Power(3);

impl ClosedForm {
    pub fn catalog(sequence: SequenceId, kind: FactorKind) -> ClosedForm {
        let (initial, formula): (&[(u64, u64)], Formula) = match (sequence, kind) {
            (Fibonacci, Z) => (
                &[(0, 1)],
                pw(Growth::Fibonacci, 1, &[(t(1, 0, -1), t(1, -1, 0))]),
            ),
            (Fibonacci, C) => (&[], Formula::Regex),
            (ThueMorse, Z) => (
                &[(0, 1), (1, 1), (2, 2), (4, 3), (7, 4), (11, 4), (15, 6)],
                pw(B2, 2, &[(t(13, -3, 1), t(7, -3, 0)), (t(5, -1, 1), t(3, -2, 0))]),
            ),
            (ThueMorse, C) => (
                &[(0, 1), (1, 1), (2, 1), (3, 2), (5, 1), (6, 4)],
                pw(B2, 2, &[(t(5, -2, 0), t(3, -3, 0)), (t(13, -3, 0), t(7, -3, 0))]),
            ),
            (PeriodDoubling, Z) => (&[(0, 1)], pw(B2, 1, &[(t(1, -1, 0), t(1, -1, 0))])),
            (PeriodDoubling, C) => (
                &[(0, 1)],
                pw(B2, 2, &[(t(3, -1, -1), t(1, -1, 0)), (t(1, 1, -1), t(1, 0, 0))]),
            ),
            (RudinShapiro, Z) => (
                &[
                    (0, 1),
                    (1, 3),
                    (4, 6),
                    (10, 3),
                    (13, 3),
                    (16, 9),
                    (25, 4),
                    (29, 8),
                    (37, 12),
                    (49, 6),
                    (55, 6),
                ],
                pw(
                    B2,
                    4,
                    &[
                        (t(9, 0, 1), t(3, 0, 0)),
                        (t(3, 2, 1), t(1, 0, 0)),
                        (t(13, 0, 1), t(1, 1, 0)),
                        (t(15, 0, 1), t(3, 0, 0)),
                    ],
                ),
            ),
            (RudinShapiro, C) => (
                &[
                    (0, 1),
                    (1, 2),
                    (3, 1),
                    (4, 5),
                    (9, 3),
                    (12, 2),
                    (14, 5),
                    (19, 5),
                    (24, 4),
                    (28, 8),
                    (36, 12),
                    (48, 6),
                    (54, 6),
                ],
                pw(
                    B2,
                    4,
                    &[
                        (t(13, -1, 0), t(1, 0, 0)),
                        (t(15, -1, 0), t(3, -1, 0)),
                        (t(9, 0, 0), t(3, 0, 0)),
                        (t(12, 0, 0), t(1, 0, 0)),
                    ],
                ),
            ),
            (PaperFolding, Z) => (
                &[(0, 1), (1, 2), (3, 4), (7, 3), (10, 4), (14, 6)],
                pw(B2, 2, &[(t(5, -1, 0), t(1, -1, 0)), (t(3, 0, 0), t(1, 1, 0))]),
            ),
            (PaperFolding, C) => (
                &[
                    (0, 1),
                    (1, 1),
                    (2, 1),
                    (3, 3),
                    (6, 3),
                    (9, 4),
                    (13, 6),
                    (19, 4),
                    (23, 6),
                    (29, 10),
                ],
                pw(
                    B2,
                    3,
                    &[
                        (t(13, -2, -1), t(7, -2, 0)),
                        (t(5, 0, -1), t(1, 0, 0)),
                        (t(3, 1, -1), t(1, -1, 0)),
                    ],
                ),
            ),
            (MephistoWaltz, Z) => (
                &[(0, 1), (1, 2), (3, 4), (7, 4)],
                pw(
                    B3,
                    3,
                    &[
                        (t(8, -1, 1), t(2, -1, 0)),
                        (t(10, -1, 1), t(8, -1, 0)),
                        (t(2, 1, 1), t(2, 0, 0)),
                    ],
                ),
            ),
            (MephistoWaltz, C) => (
                &[(0, 1), (1, 1), (2, 1), (3, 3)],
                pw(
                    B3,
                    3,
                    &[
                        (t(10, -2, 0), t(8, -2, 0)),
                        (t(2, 0, 0), t(2, -1, 0)),
                        (t(8, -1, 0), t(2, -1, 0)),
                    ],
                ),
            ),
        };
        ClosedForm {
            sequence,
            kind,
            initial: initial.to_vec(),
            formula,
        }
    }

    pub fn threshold(&self) -> usize {
        self.initial.len()
    }
}

/// The first `count` pairs, shorter if the formula stops being defined.
pub fn closed_form_pairs(cf: &ClosedForm, count: usize) -> Vec<(u64, u64)> {
    match &cf.formula {
        Formula::Regex => {
            let gr = GoodRepRegex::catalog(cf.sequence, cf.kind);
            let ns = SequenceGenerator::catalog(cf.sequence).spec().numeration().clone();
            let mut out = cf.initial.clone();
            out.truncate(count);
            if out.len() < count {
                let chain = regex_chain(&gr.parsed(Variant::Verbatim), &ns, count);
                out = chain;
            }
            out
        }
        Formula::Piecewise {
            growth,
            modulus,
            rules,
        } => {
            let mut out = Vec::with_capacity(count);
            for m in 0..count {
                let pair = if m < cf.initial.len() {
                    Some(cf.initial[m])
                } else {
                    let (ti, tn) = rules[m % *modulus as usize];
                    let p = m as u64 / modulus;
                    ti.eval(*growth, p).zip(tn.eval(*growth, p))
                };
                match pair {
                    Some(pair) => out.push(pair),
                    None => break,
                }
            }
            out
        }
    }
}

pub fn closed_form_pair(cf: &ClosedForm, m: usize) -> Option<(u64, u64)> {
    closed_form_pairs(cf, m + 1).get(m).copied()
}

/// The tiling chain through the pairs accepted by `r`.
pub fn regex_chain(r: &PairRegex, ns: &NumerationSystem, count: usize) -> Vec<(u64, u64)> {
    let nfa = PairNfa::from_regex(r);
    let mut max_len = 8;
    loop {
        let mut by_start: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for (i, n) in nfa.enumerate_accepted(ns, max_len) {
            by_start.entry(i).or_default().push(n);
        }
        let mut chain = Vec::new();
        let mut i = 0;
        while chain.len() < count {
            match by_start.get(&i).map(Vec::as_slice) {
                Some(&[n]) if n > 0 => {
                    chain.push((i, n));
                    i += n;
                }
                _ => break,
            }
        }
        if chain.len() >= count || max_len >= 64 {
            return chain;
        }
        max_len += 8;
    }
}

/// Pairs tile the naturals from 0: `i_0 = 0`, `i_{m+1} = i_m + n_m`, `n_m ≥ 1`.
pub fn verify_coverage(pairs: &[(u64, u64)]) -> bool {
    let mut next = 0u64;
    for &(i, n) in pairs {
        if i != next || n == 0 {
            return false;
        }
        next = i + n;
    }
    true
}

/// Prefix length needed to certify pair `(i, n)`.
fn needed_prefix(kind: FactorKind, (i, n): (u64, u64)) -> u64 {
    match kind {
        Z => i + n,
        C => i + n + 1,
    }
}

/// Largest `m ≤ limit` whose pairs `0..=m` fit a prefix of `cap` letters.
pub fn feasible_m_max(cf: &ClosedForm, cap: usize, limit: usize) -> Option<usize> {
    let pairs = closed_form_pairs(cf, limit + 1);
    pairs
        .iter()
        .take_while(|&&p| needed_prefix(cf.kind, p) <= cap as u64)
        .count()
        .checked_sub(1)
}

/// Default bound on `m` for each sequence.
pub fn default_m_max(sequence: SequenceId) -> usize {
    match sequence {
        Fibonacci => 25,
        MephistoWaltz => 26,
        _ => 40,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// The expression as transcribed.
    Verbatim,
    /// The transcription with known misprints repaired.
    Corrected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodRepRegex {
    pub sequence: SequenceId,
    pub kind: FactorKind,
    pub verbatim: &'static str,
    pub corrected: Option<&'static str>,
    pub note: Option<&'static str>,
}

impl GoodRepRegex {
    pub fn text(&self, variant: Variant) -> &'static str {
        match variant {
            Variant::Verbatim => self.verbatim,
            Variant::Corrected => self.corrected.unwrap_or(self.verbatim),
        }
    }

    pub fn parsed(&self, variant: Variant) -> PairRegex {
        parse_pair_regex(self.text(variant)).expect("catalog expressions parse")
    }

    pub fn catalog(sequence: SequenceId, kind: FactorKind) -> GoodRepRegex {
        let (verbatim, corrected, note) = match (sequence, kind) {
            (Fibonacci, Z) => (FIB_Z, None, None),
            (Fibonacci, C) => (FIB_C, None, None),
            (ThueMorse, Z) => (TM_Z, Some(TM_Z_FIXED), None),
            (ThueMorse, C) => (TM_C, None, None),
            (PeriodDoubling, Z) => (PD_Z, None, None),
            (PeriodDoubling, C) => (PD_C, Some(PD_C_FIXED), None),
            (RudinShapiro, Z) => (RS_Z, Some(RS_Z_FIXED), None),
            (RudinShapiro, C) => (RS_C, Some(RS_C_FIXED), None),
            (PaperFolding, Z) => (
                PF_Z,
                None,
                Some("the source block names RS as the sequence; it is checked against pf"),
            ),
            (PaperFolding, C) => (PF_C, None, None),
            (MephistoWaltz, Z) => (MW_Z, None, None),
            (MephistoWaltz, C) => (MW_C, Some(MW_C_FIXED), None),
        };
        GoodRepRegex {
            sequence,
            kind,
            verbatim,
            corrected,
            note,
        }
    }
}

const FIB_Z: &str = "[0,0]*[0,1] | [0,0]*[1,1]
    | [0,0]*[1,1][0,0]([1,0][0,0])*
    | [0,0]*[1,1][0,0]([1,0][0,0])*[1,0]";

const FIB_C: &str = "[0,0]*[0,1] | [0,0]*[1,1]
    | [0,0]*[1,0][0,1] | [0,0]*[1,1][0,0][0,0]
    | [0,0]*[1,1][0,0][0,0][1,0]
    | [0,0]*[1,1][0,0]([1,0][0,0])*[1,0][0,0][0,0]
    | [0,0]*[1,1][0,0]([1,0][0,0])*[1,0][0,0][0,0][1,0]";

const TM_Z: &str = "[0,0]*[0,1] | [0,0]*[1,1] | [0,0]*[1,0][1,0]
| [0,0]*[1,0][0,1][0,1] | [0,0]*[1,0][1,0][1,0]
| [0,0]*[1,0][0,1][1,0][1,0] | [0,0]*[1,0][1,0][1,1][1,0]
| [0,0]*[1,0][1,1][0,1][1,1][0,0]*[1,0]
| [0,0]*[1,0][0,0][1,1][0,1][0,0]*[1,0]";

const TM_Z_FIXED: &str = "[0,0]*[0,1] | [0,0]*[1,1] | [0,0]*[1,1][0,0]
| [0,0]*[1,0][0,1][0,1] | [0,0]*[1,1][1,0][1,0]
| [0,0]*[1,0][0,1][1,0][1,0] | [0,0]*[1,0][1,1][1,1][1,0]
| [0,0]*[1,0][1,1][0,1][1,1][0,0]*[1,0]
| [0,0]*[1,0][0,0][1,1][0,1][0,0]*[1,0]";

const TM_C: &str = "[0,0]*[0,1] | [0,0]*[1,1] | [0,0]*[1,0][0,1] | [0,0]*[1,1][1,0]
| [0,0]*[1,0][0,0][1,1] | [0,0]*[1,1][1,0][0,0]
| [0,0]*[1,0][0,0][1,1][0,1][0,0]* | [0,0]*[1,0][1,1][0,1][1,1][0,0]*";

const PD_Z: &str = "[0,0]*[0,1] | [0,0]*[1,1][0,0]*";

const PD_C: &str = "[0,0]*[0,1] | [0,0]*[1,1][1,0]* | [0,0]*[1,1][0,0][1,0]*";

const PD_C_FIXED: &str = "[0,0]*[0,1] | [0,0]*[1,1][1,0]* | [0,0]*[1,0][0,1][1,0]*";

const RS_Z: &str = "[0,0]*[0,1] | [0,0]*[1,0][1,1] | [0,0]*[1,1][0,1][0,0]
| [0,0]*[1,0][0,0][1,1][0,1] | [0,0]*[1,0][1,0][1,1][1,1]
| [0,0]*[1,0][0,1][0,0][0,0][0,1] | [0,0]*[1,0][1,0][0,1][0,0][1,0]
| [0,0]*[1,0][1,1][1,0][0,0][1,0] | [0,0]*[1,0][0,0][0,1][1,1][0,0][1,0]
| [0,0]*[1,0][1,0][0,0][0,1][0,1][1,0]
| [0,0]*[1,0][1,0][0,0][1,1][1,1][1,0]
| [0,0]*[1,0][1,0][1,1][1,1][0,0][0,0]*[1,0]
| [0,0]*[1,0][0,0][0,1][1,1][0,0][0,0][0,0]*[1,0]
| [0,0]*[1,0][1,0][0,0][0,1][0,0][0,0][0,0]*[1,0]
| [0,0]*[1,0][1,0][0,1][1,0][0,0][0,0][0,0]*[1,0]";

const RS_Z_FIXED: &str = "[0,0]*[0,1] | [0,0]*[0,1][1,1] | [0,0]*[1,1][0,1][0,0]
| [0,0]*[1,0][0,0][1,1][0,1] | [0,0]*[1,0][1,0][0,1][1,1]
| [0,0]*[1,0][0,1][0,0][0,0][0,1] | [0,0]*[1,0][1,0][0,1][0,0][1,0]
| [0,0]*[1,0][1,1][1,0][0,0][1,0] | [0,0]*[1,0][0,0][0,1][1,1][0,0][1,0]
| [0,0]*[1,0][1,0][0,0][0,1][0,1][1,0]
| [0,0]*[1,0][1,0][0,0][1,1][1,1][1,0]
| [0,0]*[1,0][1,0][1,1][1,1][0,0][0,0]*[1,0]
| [0,0]*[1,0][0,0][0,1][1,1][0,0][0,0][0,0]*[1,0]
| [0,0]*[1,0][1,0][0,0][0,1][0,0][0,0][0,0]*[1,0]
| [0,0]*[1,0][1,0][0,1][1,0][0,0][0,0][0,0]*[1,0]";

const RS_C: &str = "[0,0]*[0,1] | [0,0]*[0,1][1,0] | [0,0]*[1,0][1,1]
| [0,0]*[1,1][0,0][0,1] | [0,0]*[1,0][0,0][0,1][1,1]
| [0,0]*[1,0][1,0][0,1][0,0] | [0,0]*[1,0][1,1][1,0][0,1]
| [0,0]*[1,0][0,0][0,1][1,0][1,1] | [0,0]*[1,0][1,0][0,1][0,0][0,0]
| [0,0]*[1,0][1,1][1,0][0,0][0,0]
| [0,0]*[1,0][0,0][0,1][1,1][0,0][0,0]
| [0,0]*[1,0][1,0][0,0][0,1][0,1][0,0]
| [0,0]*[1,0][1,0][0,0][1,1][1,1][0,0]
| [0,0]*[1,0][1,0][0,0][0,1][0,0][0,0][0,0]*[1,0]
| [0,0]*[1,0][1,0][0,1][1,0][0,0][0,0][0,0]*[1,0]
| [0,0]*[1,0][1,0][1,1][1,1][0,0][0,0][0,0]*[1,0]
| [0,0]*[1,0][0,0][0,1][1,1][0,0][0,0][0,0][0,0]*[1,0]";

const RS_C_FIXED: &str = "[0,0]*[0,1] | [0,0]*[0,1][1,0] | [0,0]*[1,0][1,1]
| [0,0]*[1,1][0,0][0,1] | [0,0]*[1,0][0,0][0,1][1,1]
| [0,0]*[1,0][1,0][0,1][0,0] | [0,0]*[1,0][1,1][1,0][0,1]
| [0,0]*[1,0][0,0][0,1][1,0][1,1] | [0,0]*[1,0][1,0][0,1][0,0][0,0]
| [0,0]*[1,0][1,1][1,0][0,0][0,0]
| [0,0]*[1,0][0,0][0,1][1,1][0,0][0,0]
| [0,0]*[1,0][1,0][0,0][0,1][0,1][0,0]
| [0,0]*[1,0][1,0][0,0][1,1][1,1][0,0]
| [0,0]*[1,0][1,0][0,0][0,1][0,0][0,0][0,0]*[0,0]
| [0,0]*[1,0][1,0][0,1][1,0][0,0][0,0][0,0]*[0,0]
| [0,0]*[1,0][1,0][1,1][1,1][0,0][0,0][0,0]*
| [0,0]*[1,0][0,0][0,1][1,1][0,0][0,0][0,0][0,0]*";

const PF_Z: &str = "[0,0]*[0,1] | [0,0]*[0,1][1,0] | [0,0]*[0,1][1,0][1,0]
| [0,0]*[1,0][1,1][1,1] | [0,0]*[1,0][0,1][1,0][0,0]
| [0,0]*[1,0][1,1][1,1][0,0] | [0,0]*[1,0][0,0][1,1][0,0][0,0]*[0,0]
| [0,0]*[1,1][1,0][0,0][0,0][0,0]*[0,0]";

const PF_C: &str = "[0,0]*[0,1] | [0,0]*[1,1] | [0,0]*[1,0][0,1] | [0,0]*[1,1][1,1]
| [0,0]*[1,0][1,1][0,1] | [0,0]*[1,0][0,1][0,0][1,0]
| [0,0]*[1,0][1,1][0,1][1,0] | [0,0]*[1,0][0,0][0,1][1,0][1,0]
| [0,0]*[1,0][0,0][1,1][1,1][1,0] | [0,0]*[1,0][1,1][1,0][0,1][1,0]
| [0,0]*[1,0][0,0][0,1][1,0][1,0][1,0][1,0]*
| [0,0]*[1,0][0,0][1,0][1,1][1,0][1,0][1,0]*
| [0,0]*[1,0][1,1][0,1][0,1][1,0][1,0][1,0]*";

const MW_Z: &str = "[0,0]*[0,1] | [0,0]*[1,2] | [0,0]*[1,1][0,1] | [0,0]*[2,1][1,1]
| [0,0]*[1,0][0,2][2,2] | [0,0]*[2,0][2,2][0,0]*[1,0]
| [0,0]*[1,0][0,2][1,2][0,0]*[1,0] | [0,0]*[2,0][0,2][0,0]*[1,0]";

const MW_C: &str = "[0,0]*[0,1] | [0,0]*[1,1] | [0,0]*[2,1] | [0,0]*[1,0][1,0]
| [0,0]*[1,0][0,2][1,2][0,0]* | [0,0]*[2,0][0,2][0,0]*
| [0,0]*[2,0][2,2][0,0]*";

const MW_C_FIXED: &str = "[0,0]*[0,1] | [0,0]*[1,1] | [0,0]*[2,1] | [0,0]*[1,1][0,0]
| [0,0]*[1,0][0,2][1,2][0,0]* | [0,0]*[2,0][0,2][0,0]*
| [0,0]*[2,0][2,2][0,0]*";

/// First factors of each factorization as listed in the reference table.
pub fn table1_row(sequence: SequenceId, kind: FactorKind) -> &'static [&'static str] {
    match (sequence, kind) {
        (Fibonacci, Z) => &[
            "a",
            "b",
            "aa",
            "bab",
            "aabaa",
            "babaabab",
            "aabaababaabaa",
            "babaababaabaababaabab",
        ],
        (ThueMorse, Z) => &[
            "a",
            "b",
            "ba",
            "baa",
            "bbaa",
            "babb",
            "abaaba",
            "bbaabb",
            "abaabbaababbaa",
            "bbabaababbab",
        ],
        (PeriodDoubling, Z) => &[
            "a",
            "b",
            "aa",
            "abab",
            "abaaabaa",
            "abaaabababaaabab",
            "abaaabababaaabaaabaaabababaaabaa",
        ],
        (RudinShapiro, Z) => &[
            "1",
            "11(-1)",
            "11(-1)111",
            "1(-1)(-1)",
            "(-1)1(-1)",
            "111(-1)11(-1)1(-1)",
            "(-1)(-1)11",
        ],
        (PaperFolding, Z) => &[
            "1",
            "1(-1)",
            "11(-1)(-1)",
            "111",
            "(-1)(-1)1(-1)",
            "(-1)111(-1)1",
            "1(-1)(-1)(-1)",
        ],
        (MephistoWaltz, Z) => &[
            "a",
            "ab",
            "aabb",
            "baaa",
            "baabbbab",
            "babbaa",
            "abbbaaabaabbbabbabbaaabb",
        ],
        (Fibonacci, C) => &[
            "a",
            "b",
            "a",
            "aba",
            "baaba",
            "ababaaba",
            "baabaababaaba",
            "ababaababaabaababaaba",
        ],
        (ThueMorse, C) => &[
            "a",
            "b",
            "b",
            "ab",
            "a",
            "abba",
            "aba",
            "bbabaab",
            "abbaab",
            "babaabbaababba",
            "abbabaababba",
        ],
        (PeriodDoubling, C) => &[
            "a",
            "b",
            "a",
            "aa",
            "ba",
            "baba",
            "aaba",
            "aabaaaba",
            "babaaaba",
            "babaaabababaaaba",
        ],
        (RudinShapiro, C) => &[
            "1",
            "11",
            "(-1)",
            "11(-1)11",
            "11(-1)",
            "(-1)(-1)",
            "1(-1)111",
            "(-1)11(-1)1",
            "(-1)(-1)(-1)1",
        ],
        (PaperFolding, C) => &[
            "1",
            "1",
            "(-1)",
            "11(-1)",
            "(-1)11",
            "1(-1)(-1)1",
            "(-1)(-1)111(-1)",
            "11(-1)(-1)",
        ],
        (MephistoWaltz, C) => &[
            "a",
            "a",
            "b",
            "aab",
            "bb",
            "aa",
            "abaabbba",
            "bbabba",
            "aabaab",
            "aabbbaaabaabbbabbabbaaab",
        ],
    }
}

/// The table row with known omissions repaired; `None` when the row is
/// already correct.
pub fn table1_errata(sequence: SequenceId, kind: FactorKind) -> Option<Vec<&'static str>> {
    match (sequence, kind) {
        (MephistoWaltz, Z) => {
            let mut row = table1_row(sequence, kind).to_vec();
            row.insert(6, "abaaba");
            Some(row)
        }
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub sequence: String,
    pub kind: FactorKind,
    pub expected: Vec<String>,
    pub actual: Vec<String>,
    pub pass: bool,
}

/// First factors of `sequence` rendered with its letter names.
pub fn first_factor_words(
    sequence: SequenceId,
    kind: FactorKind,
    count: usize,
    cap: usize,
) -> Result<Vec<String>> {
    let mut gen = SequenceGenerator::catalog(sequence);
    let f = factorize::factorize_sequence(&mut gen, kind, count, cap)?;
    let spec = gen.spec().clone();
    let x = gen.materialized();
    Ok(f.words(x).into_iter().map(|w| spec.render(w)).collect())
}

pub fn verify_table1(
    sequence: SequenceId,
    kind: FactorKind,
    errata: bool,
    cap: usize,
) -> Result<Table1Report> {
    let expected: Vec<String> = match table1_errata(sequence, kind).filter(|_| errata) {
        Some(row) => row.iter().map(|s| s.to_string()).collect(),
        None => table1_row(sequence, kind).iter().map(|s| s.to_string()).collect(),
    };
    let actual = first_factor_words(sequence, kind, expected.len(), cap)?;
    Ok(Table1Report {
        sequence: sequence.short_name().into(),
        kind,
        pass: actual == expected,
        expected,
        actual,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormRow {
    pub m: usize,
    pub expected: Option<(u64, u64)>,
    pub actual: (u64, u64),
    pub ok: bool,
    /// Whether the expected pair's two-track word is in the goodrep language.
    pub regex_accepts: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormReport {
    pub sequence: String,
    pub kind: FactorKind,
    pub m_max: usize,
    pub threshold: usize,
    pub prefix_len: usize,
    pub rows: Vec<ClosedFormRow>,
    pub tiling: bool,
    pub pass: bool,
    pub warnings: Vec<String>,
}

impl ClosedFormReport {
    pub fn first_mismatch(&self) -> Option<&ClosedFormRow> {
        self.rows.iter().find(|r| !r.ok)
    }
}

/// Grow the prefix from `start` until `count` factors are settled.
fn settled_factorization(
    gen: &mut SequenceGenerator,
    kind: FactorKind,
    count: usize,
    start: usize,
    cap: usize,
) -> Result<Factorization> {
    let mut len = start.clamp(1, cap.max(1));
    loop {
        let x = gen.prefix(len);
        let mut f = factorize::factorize_fast(x, kind, count);
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

/// Compare the closed form with the brute-force factorization for
/// `m = 0..=m_max`.
pub fn verify_closed_form(cf: &ClosedForm, m_max: usize, cap: usize) -> Result<ClosedFormReport> {
    let count = m_max + 1;
    let expected = closed_form_pairs(cf, count);
    let needed = expected
        .iter()
        .map(|&p| needed_prefix(cf.kind, p))
        .max()
        .unwrap_or(1);
    if needed > cap as u64 {
        return Err(Error::PrefixTooLarge {
            required: needed as usize,
            cap,
        });
    }
    let mut gen = SequenceGenerator::catalog(cf.sequence);
    let f = settled_factorization(&mut gen, cf.kind, count, needed as usize, cap)?;
    let prefix_len = gen.materialized().len().min(cap);
    let ns = gen.spec().numeration().clone();
    let nfa = PairNfa::from_regex(&GoodRepRegex::catalog(cf.sequence, cf.kind).parsed(Variant::Verbatim));

    let mut warnings = Vec::new();
    let rows: Vec<ClosedFormRow> = f
        .factors
        .iter()
        .enumerate()
        .map(|(m, fac)| {
            let actual = (fac.start as u64, fac.length as u64);
            let exp = expected.get(m).copied();
            let regex_accepts = exp.map(|(i, n)| nfa.accepts(ns.pad_pair(i, n).as_slice()));
            if regex_accepts == Some(false) {
                let (i, n) = exp.unwrap();
                warnings.push(format!("m={m}: pair ({i},{n}) is not accepted by the goodrep expression"));
            }
            ClosedFormRow {
                m,
                expected: exp,
                actual,
                ok: exp == Some(actual),
                regex_accepts,
            }
        })
        .collect();
    if expected.len() < count {
        warnings.push(format!("closed form is only defined for m < {}", expected.len()));
    }
    let tiling = expected.len() == count && verify_coverage(&expected);
    let pass = tiling && rows.len() == count && rows.iter().all(|r| r.ok);
    Ok(ClosedFormReport {
        sequence: cf.sequence.short_name().into(),
        kind: cf.kind,
        m_max,
        threshold: cf.threshold(),
        prefix_len,
        rows,
        tiling,
        pass,
        warnings,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegexReport {
    pub sequence: String,
    pub kind: FactorKind,
    pub variant: Variant,
    pub max_len: usize,
    pub prefix_len: usize,
    /// Accepted pairs checked against the predicate.
    pub checked: usize,
    /// Accepted pairs that fail the predicate.
    pub counterexamples: Vec<(u64, u64)>,
    /// Factorization pairs within the length bound that the expression
    /// misses; informational.
    pub missing: Vec<(u64, u64)>,
    /// Accepted pairs that satisfy the predicate but are not factorization
    /// pairs; informational.
    pub extra: Vec<(u64, u64)>,
    pub pass: bool,
    pub note: Option<String>,
}

/// Every pair accepted by the expression with representation length at most
/// `max_len` must satisfy the factor predicate on the sequence. For `c` a
/// fresh letter `(i, 1)` also counts.
pub fn verify_regex_implication(
    gr: &GoodRepRegex,
    variant: Variant,
    max_len: usize,
    cap: usize,
) -> Result<RegexReport> {
    let mut gen = SequenceGenerator::catalog(gr.sequence);
    let ns = gen.spec().numeration().clone();
    let regex = gr.parsed(variant);
    regex.check_digits(ns.radix())?;
    let pairs = PairNfa::from_regex(&regex).enumerate_accepted(&ns, max_len);
    let needed = pairs
        .iter()
        .map(|&p| needed_prefix(gr.kind, p))
        .max()
        .unwrap_or(1)
        .max(1);
    if needed > cap as u64 {
        return Err(Error::PrefixTooLarge {
            required: needed as usize,
            cap,
        });
    }
    let x = gen.prefix(needed as usize);
    let idx = PreviousFactorIndex::new(x);
    let holds = |(i, n): (u64, u64)| {
        let (i, n) = (i as usize, n as usize);
        n >= 1
            && match gr.kind {
                Z => idx.is_z_factor(i, n),
                C => idx.is_c_factor(i, n) || (n == 1 && idx.is_fresh_letter(i)),
            }
    };
    let counterexamples: Vec<_> = pairs.iter().copied().filter(|&p| !holds(p)).collect();

    let f = idx.factorize(gr.kind, usize::MAX);
    let actual: BTreeSet<(u64, u64)> = f.factors[..f.settled]
        .iter()
        .map(|fac| (fac.start as u64, fac.length as u64))
        .filter(|&(i, n)| ns.pad_pair(i, n).len() <= max_len)
        .collect();
    let missing = actual.difference(&pairs).copied().collect();
    let extra = pairs
        .iter()
        .copied()
        .filter(|&p| holds(p) && !actual.contains(&p))
        .collect();
    Ok(RegexReport {
        sequence: gr.sequence.short_name().into(),
        kind: gr.kind,
        variant,
        max_len,
        prefix_len: x.len(),
        checked: pairs.len(),
        pass: counterexamples.is_empty(),
        counterexamples,
        missing,
        extra,
        note: gr.note.map(String::from),
    })
}

fn fib_prefix(len: usize) -> Vec<Letter> {
    SequenceGenerator::catalog(Fibonacci).prefix(len).to_vec()
}

/// The z-factors of the Fibonacci word are `w_{-1}, w_0, …, w_{k_max}`, at
/// positions `(0,1)` and `(F_{n+1}-1, F_n)`.
pub fn verify_eq1(k_max: usize) -> bool {
    let count = k_max + 2;
    let len = (0..count as i64 - 1).map(|n| fib(n as usize)).sum::<u64>() as usize + 1;
    let x = fib_prefix(len + 1);
    let f = factorize::z_factorize_fast(&x, count);
    if f.settled < count {
        return false;
    }
    let words_ok = f
        .words(&x)
        .iter()
        .enumerate()
        .all(|(k, w)| *w == factorize::singular_word(k as i64 - 1).as_slice());
    let mut pairs = vec![(0u64, 1u64)];
    pairs.extend((0..k_max + 1).map(|n| (fib(n + 1) - 1, fib(n))));
    words_ok && f.pairs().iter().map(|&(i, n)| (i as u64, n as u64)).eq(pairs)
}

/// The c-factors of the Fibonacci word are `a, b, a` and then the reversals
/// of `φ^n(a)` for `n = 2..=k_max`; the first three together spell
/// `a · ba`, the reversals for `n = 0, 1`.
pub fn verify_eq2(k_max: usize) -> bool {
    let count = 3 + k_max.saturating_sub(1);
    let len: usize = 3 + (2..=k_max).map(|n| fib(n) as usize).sum::<usize>();
    let x = fib_prefix(len + 2);
    let f = factorize::c_factorize_fast(&x, count);
    if f.settled < count {
        return false;
    }
    let words = f.words(&x);
    let head: Vec<Letter> = words[..3].concat();
    let mut expect_head = factorize::reversed_power(0);
    expect_head.extend(factorize::reversed_power(1));
    words[..3] == [&[0][..], &[1][..], &[0][..]]
        && head == expect_head
        && (2..=k_max).all(|n| words[n + 1] == factorize::reversed_power(n).as_slice())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteEntry {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
    pub pass: bool,
}

/// Every check the crate knows about. With `errata`, the repaired table row
/// and expressions replace the transcribed ones.
pub fn run_suite(errata: bool, cap: usize) -> SuiteReport {
    let mut entries = Vec::new();
    let mut push = |name: String, r: Result<(bool, String)>| {
        let (pass, detail) = r.unwrap_or_else(|e| (false, e.to_string()));
        entries.push(SuiteEntry { name, pass, detail });
    };
    for seq in SequenceId::ALL {
        for kind in [Z, C] {
            push(
                format!("table1 {seq} {kind}"),
                verify_table1(seq, kind, errata, cap).map(|r| {
                    let detail = if r.pass {
                        format!("{} factors", r.expected.len())
                    } else {
                        format!("expected {:?}, got {:?}", r.expected, r.actual)
                    };
                    (r.pass, detail)
                }),
            );
        }
    }
    push("eq1 k=18".into(), Ok((verify_eq1(18), String::new())));
    push("eq2 k=18".into(), Ok((verify_eq2(18), String::new())));
    for seq in SequenceId::ALL {
        for kind in [Z, C] {
            let cf = ClosedForm::catalog(seq, kind);
            let limit = default_m_max(seq);
            let m_max = feasible_m_max(&cf, cap, limit).unwrap_or(0);
            push(
                format!("closed-form {seq} {kind}"),
                verify_closed_form(&cf, m_max, cap).map(|r| {
                    let detail = match r.first_mismatch() {
                        Some(row) => format!("m={}: expected {:?}, got {:?}", row.m, row.expected, row.actual),
                        None if !r.tiling => "closed-form pairs do not tile".into(),
                        None => format!("m<={m_max}, prefix {}", r.prefix_len),
                    };
                    (r.pass, detail)
                }),
            );
        }
    }
    let variant = if errata { Variant::Corrected } else { Variant::Verbatim };
    for seq in SequenceId::ALL {
        for kind in [Z, C] {
            let gr = GoodRepRegex::catalog(seq, kind);
            push(
                format!("regex {seq} {kind}"),
                verify_regex_implication(&gr, variant, DEFAULT_REGEX_LEN, cap).map(|r| {
                    let detail = if r.pass {
                        format!("{} pairs", r.checked)
                    } else {
                        let shown: Vec<_> = r.counterexamples.iter().take(5).collect();
                        format!("{} of {} pairs fail, e.g. {:?}", r.counterexamples.len(), r.checked, shown)
                    };
                    (r.pass, detail)
                }),
            );
        }
    }
    let pass = entries.iter().all(|e| e.pass);
    SuiteReport { entries, pass }
}

/// Representation length bound for the expression checks.
pub const DEFAULT_REGEX_LEN: usize = 14;
