//! The NFA engine against a direct interpreter of the expression tree.

use std::collections::BTreeSet;

use seqfact::automata::{PairNfa, PairRegex};
use seqfact::factorize::FactorKind;
use seqfact::sequences::SequenceId;
use seqfact::theorems::{GoodRepRegex, Variant};

type Sym = (u8, u8);

/// End positions reachable by matching `r` against `w` from any position in
/// `from`, as a bit set (words are shorter than 16).
fn ends(r: &PairRegex, w: &[Sym], from: u16) -> u16 {
    match r {
        PairRegex::Epsilon => from,
        PairRegex::Symbol(a, b) => {
            let mut out = 0;
            for (p, &s) in w.iter().enumerate() {
                if from & (1 << p) != 0 && s == (*a, *b) {
                    out |= 1 << (p + 1);
                }
            }
            out
        }
        PairRegex::Concat(xs) => xs.iter().fold(from, |cur, x| if cur == 0 { 0 } else { ends(x, w, cur) }),
        PairRegex::Union(xs) => xs.iter().fold(0, |acc, x| acc | ends(x, w, from)),
        PairRegex::Star(x) => {
            let mut seen = from;
            loop {
                let next = seen | ends(x, w, seen);
                if next == seen {
                    return seen;
                }
                seen = next;
            }
        }
    }
}

fn interpret(r: &PairRegex, w: &[Sym]) -> bool {
    assert!(w.len() < 16);
    ends(r, w, 1) & (1 << w.len()) != 0
}

fn all_expressions() -> Vec<(String, PairRegex, usize)> {
    let mut out = Vec::new();
    for seq in SequenceId::ALL {
        let radix = if seq == SequenceId::MephistoWaltz { 3 } else { 2 };
        for kind in [FactorKind::Z, FactorKind::C] {
            let gr = GoodRepRegex::catalog(seq, kind);
            out.push((format!("{seq}-{kind}"), gr.parsed(Variant::Verbatim), radix));
            if gr.corrected.is_some() {
                out.push((format!("{seq}-{kind} repaired"), gr.parsed(Variant::Corrected), radix));
            }
        }
    }
    out
}

fn check_all_words(name: &str, r: &PairRegex, radix: u8, max_len: usize) {
    let nfa = PairNfa::from_regex(r);
    let alphabet: Vec<Sym> = (0..radix).flat_map(|a| (0..radix).map(move |b| (a, b))).collect();
    let mut w: Vec<Sym> = Vec::new();
    // odometer over all words of each length
    for len in 0..=max_len {
        let mut idx = vec![0usize; len];
        loop {
            w.clear();
            w.extend(idx.iter().map(|&k| alphabet[k]));
            assert_eq!(nfa.accepts(&w), interpret(r, &w), "{name} on {w:?}");
            let mut k = len;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < alphabet.len() {
                    break;
                }
                idx[k] = 0;
                if k == 0 {
                    k = usize::MAX;
                    break;
                }
            }
            if k == usize::MAX || len == 0 {
                break;
            }
        }
    }
}

#[test]
fn nfa_agrees_with_interpreter_on_binary_expressions() {
    // every binary pair word of length at most 10
    for (name, r, radix) in all_expressions() {
        if radix == 2 {
            check_all_words(&name, &r, 2, 10);
        }
    }
}

#[test]
fn nfa_agrees_with_interpreter_on_ternary_expressions() {
    // the ternary alphabet has 9 symbols, so words are capped at length 6
    for (name, r, radix) in all_expressions() {
        if radix == 3 {
            check_all_words(&name, &r, 3, 6);
        }
    }
}

#[test]
fn enumeration_agrees_with_interpreter() {
    use seqfact::numeration::NumerationSystem;
    for (name, r, radix) in all_expressions() {
        let systems = if radix == 3 {
            vec![NumerationSystem::positional(3)]
        } else {
            vec![NumerationSystem::positional(2), NumerationSystem::zeckendorf()]
        };
        for ns in systems {
            let max_len = if radix == 3 { 5 } else { 9 };
            let got = seqfact::automata::enumerate_accepted(&r, &ns, max_len);
            let mut want = BTreeSet::new();
            let bound = (radix as u64).pow(max_len as u32);
            for i in 0..bound {
                for n in 0..bound {
                    let w = ns.pad_pair(i, n);
                    if w.len() <= max_len && interpret(&r, w.as_slice()) {
                        want.insert((i, n));
                    }
                }
            }
            assert_eq!(got, want, "{name} over {ns}");
        }
    }
}
