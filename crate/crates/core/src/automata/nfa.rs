//! Thompson construction for [`PairRegex`] followed by epsilon elimination.

use std::collections::BTreeSet;

use super::regex::PairRegex;
use crate::numeration::{Digit, NumerationSystem, PairWord};

type Sym = (Digit, Digit);

/// An epsilon-free NFA over digit pairs.
#[derive(Debug, Clone)]
pub struct PairNfa {
    transitions: Vec<Vec<(Sym, usize)>>,
    start: Vec<usize>,
    accept: Vec<bool>,
}

#[derive(Default)]
struct Thompson {
    eps: Vec<Vec<usize>>,
    sym: Vec<Vec<(Sym, usize)>>,
}

impl Thompson {
    fn state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.sym.push(Vec::new());
        self.eps.len() - 1
    }

    /// Returns `(entry, exit)` of a fragment recognising `r`.
    fn build(&mut self, r: &PairRegex) -> (usize, usize) {
        match r {
            PairRegex::Epsilon => {
                let s = self.state();
                let t = self.state();
                self.eps[s].push(t);
                (s, t)
            }
            PairRegex::Symbol(a, b) => {
                let s = self.state();
                let t = self.state();
                self.sym[s].push(((*a, *b), t));
                (s, t)
            }
            PairRegex::Concat(xs) => {
                let s = self.state();
                let mut cur = s;
                for x in xs {
                    let (i, o) = self.build(x);
                    self.eps[cur].push(i);
                    cur = o;
                }
                (s, cur)
            }
            PairRegex::Union(xs) => {
                let s = self.state();
                let t = self.state();
                for x in xs {
                    let (i, o) = self.build(x);
                    self.eps[s].push(i);
                    self.eps[o].push(t);
                }
                (s, t)
            }
            PairRegex::Star(x) => {
                let s = self.state();
                let t = self.state();
                let (i, o) = self.build(x);
                self.eps[s].push(i);
                self.eps[s].push(t);
                self.eps[o].push(i);
                self.eps[o].push(t);
                (s, t)
            }
        }
    }

    fn closure(&self, q: usize) -> Vec<usize> {
        let mut seen = vec![false; self.eps.len()];
        let mut stack = vec![q];
        seen[q] = true;
        let mut out = Vec::new();
        while let Some(p) = stack.pop() {
            out.push(p);
            for &r in &self.eps[p] {
                if !seen[r] {
                    seen[r] = true;
                    stack.push(r);
                }
            }
        }
        out
    }
}

impl PairNfa {
    pub fn from_regex(r: &PairRegex) -> Self {
        let mut th = Thompson::default();
        let (entry, exit) = th.build(r);
        let n = th.eps.len();
        let mut transitions = vec![Vec::new(); n];
        let mut accept = vec![false; n];
        for q in 0..n {
            let cl = th.closure(q);
            accept[q] = cl.contains(&exit);
            let mut edges: Vec<(Sym, usize)> = cl
                .iter()
                .flat_map(|&p| th.sym[p].iter().copied())
                .collect();
            edges.sort_unstable();
            edges.dedup();
            transitions[q] = edges;
        }
        PairNfa {
            transitions,
            start: vec![entry],
            accept,
        }
        .trimmed()
    }

    /// Drop states unreachable from the start set, renumbering the rest.
    fn trimmed(self) -> Self {
        let n = self.transitions.len();
        let mut keep = vec![false; n];
        let mut stack = self.start.clone();
        for &s in &stack {
            keep[s] = true;
        }
        while let Some(q) = stack.pop() {
            for &(_, r) in &self.transitions[q] {
                if !keep[r] {
                    keep[r] = true;
                    stack.push(r);
                }
            }
        }
        let mut renumber = vec![usize::MAX; n];
        let mut next = 0;
        for q in 0..n {
            if keep[q] {
                renumber[q] = next;
                next += 1;
            }
        }
        let transitions = (0..n)
            .filter(|&q| keep[q])
            .map(|q| {
                self.transitions[q]
                    .iter()
                    .map(|&(s, r)| (s, renumber[r]))
                    .collect()
            })
            .collect();
        let accept = (0..n).filter(|&q| keep[q]).map(|q| self.accept[q]).collect();
        let start = self.start.iter().map(|&s| renumber[s]).collect();
        PairNfa {
            transitions,
            start,
            accept,
        }
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    fn step(&self, set: &[usize], sym: Sym) -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .flat_map(|&q| {
                self.transitions[q]
                    .iter()
                    .filter(move |&&(s, _)| s == sym)
                    .map(|&(_, r)| r)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn accepting(&self, set: &[usize]) -> bool {
        set.iter().any(|&q| self.accept[q])
    }

    pub fn accepts(&self, w: &[Sym]) -> bool {
        let mut set = self.start.clone();
        for &sym in w {
            set = self.step(&set, sym);
            if set.is_empty() {
                return false;
            }
        }
        self.accepting(&set)
    }

    /// Every accepted pair word of length at most `max_len` over the digits
    /// of `ns` that is canonical (no leading `[0,0]`) and whose tracks are
    /// both valid representations, as a set of values.
    pub fn enumerate_accepted(&self, ns: &NumerationSystem, max_len: usize) -> BTreeSet<(u64, u64)> {
        let radix = ns.radix() as Digit;
        let alphabet: Vec<Sym> = (0..radix)
            .flat_map(|a| (0..radix).map(move |b| (a, b)))
            .collect();
        let mut out = BTreeSet::new();
        let mut word = Vec::with_capacity(max_len);
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(self.start.clone(), 0)];
        // Depth-first over (state set, next symbol index); `word` mirrors the path.
        if self.accepting(&self.start) {
            out.insert((0, 0));
        }
        while let Some((set, next)) = stack.last_mut() {
            if word.len() >= max_len || *next >= alphabet.len() {
                stack.pop();
                word.pop();
                continue;
            }
            let sym = alphabet[*next];
            *next += 1;
            if word.is_empty() && sym == (0, 0) {
                continue;
            }
            let succ = self.step(set, sym);
            if succ.is_empty() {
                continue;
            }
            word.push(sym);
            if self.accepting(&succ) {
                if let Some(v) = ns.pair_values(&PairWord(word.clone())) {
                    out.insert(v);
                }
            }
            stack.push((succ, 0));
        }
        out
    }
}

/// Whether the canonical pair word `w` is in the language of `r`.
pub fn regex_accepts(r: &PairRegex, w: &PairWord) -> bool {
    PairNfa::from_regex(r).accepts(w.as_slice())
}

/// See [`PairNfa::enumerate_accepted`].
pub fn enumerate_accepted(
    r: &PairRegex,
    ns: &NumerationSystem,
    max_len: usize,
) -> BTreeSet<(u64, u64)> {
    PairNfa::from_regex(r).enumerate_accepted(ns, max_len)
}
