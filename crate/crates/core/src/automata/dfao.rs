//! Deterministic finite automata with output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::numeration::{Digit, NumerationSystem};
use crate::{Error, Result};

/// `(Q, Σ, δ, q0, Δ, τ)` with `Σ = {0, .., input_size - 1}`; `δ` and `τ` are
/// total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfao {
    state_names: Vec<String>,
    input_size: usize,
    delta: Vec<Vec<usize>>,
    initial: usize,
    outputs: Vec<String>,
    tau: Vec<usize>,
}

impl Dfao {
    /// `delta[q][d]` is the successor of `q` on digit `d`; `tau[q]` indexes
    /// into `outputs`.
    pub fn new(
        state_names: Vec<String>,
        input_size: usize,
        delta: Vec<Vec<usize>>,
        initial: usize,
        outputs: Vec<String>,
        tau: Vec<usize>,
    ) -> Result<Self> {
        let n = state_names.len();
        if n == 0 || delta.len() != n || tau.len() != n || initial >= n {
            return Err(Error::InvalidAutomaton(
                "state names, transitions and outputs must cover the same states".into(),
            ));
        }
        if let Some(q) = delta.iter().position(|row| row.len() != input_size) {
            return Err(Error::InvalidAutomaton(format!(
                "state {} is missing transitions",
                state_names[q]
            )));
        }
        if delta.iter().flatten().any(|&r| r >= n) {
            return Err(Error::InvalidAutomaton("transition to unknown state".into()));
        }
        if tau.iter().any(|&o| o >= outputs.len()) {
            return Err(Error::InvalidAutomaton("output letter out of range".into()));
        }
        Ok(Dfao {
            state_names,
            input_size,
            delta,
            initial,
            outputs,
            tau,
        })
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn input_size(&self) -> usize {
        self.input_size
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn outputs(&self) -> &[String] {
        &self.outputs
    }

    pub fn transition(&self, q: usize, d: Digit) -> Option<usize> {
        self.delta.get(q)?.get(d as usize).copied()
    }

    /// `δ*(q0, w)`.
    pub fn run(&self, w: &[Digit]) -> Result<usize> {
        w.iter().try_fold(self.initial, |q, &d| {
            self.transition(q, d).ok_or(Error::DigitOutOfAlphabet {
                digit: d,
                size: self.input_size,
            })
        })
    }

    /// Index into [`outputs`](Self::outputs) of `τ(δ*(q0, w))`.
    pub fn output_index(&self, w: &[Digit]) -> Result<usize> {
        self.run(w).map(|q| self.tau[q])
    }

    /// The `n`-th term generated by this automaton, reading `rep(n)` most
    /// significant digit first.
    pub fn output(&self, n: u64, ns: &NumerationSystem) -> Result<&str> {
        let idx = self.output_index(&ns.rep(n))?;
        Ok(&self.outputs[idx])
    }

    /// Text form: `initial: q`, then `output: q letter` per state, then
    /// `q digit -> r` per transition. `#` starts a comment.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "initial: {}", self.state_names[self.initial]).unwrap();
        for (q, name) in self.state_names.iter().enumerate() {
            writeln!(s, "output: {} {}", name, self.outputs[self.tau[q]]).unwrap();
        }
        for (q, row) in self.delta.iter().enumerate() {
            for (d, &r) in row.iter().enumerate() {
                writeln!(s, "{} {} -> {}", self.state_names[q], d, self.state_names[r]).unwrap();
            }
        }
        s
    }

    /// Parse the text form written by [`to_text`](Self::to_text). States are
    /// numbered in order of first mention; output letters in order of first
    /// use.
    pub fn parse_text(text: &str) -> Result<Dfao> {
        let mut names: Vec<String> = Vec::new();
        let index = |name: &str, names: &mut Vec<String>| -> usize {
            match names.iter().position(|n| n == name) {
                Some(k) => k,
                None => {
                    names.push(name.to_string());
                    names.len() - 1
                }
            }
        };
        let mut initial = None;
        let mut outputs: Vec<String> = Vec::new();
        let mut tau: BTreeMap<usize, usize> = BTreeMap::new();
        let mut edges: BTreeMap<(usize, Digit), usize> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Format {
                line: lineno + 1,
                msg,
            };
            if let Some(rest) = line.strip_prefix("initial:") {
                let name = rest.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(err("expected `initial: <state>`".into()));
                }
                initial = Some(index(name, &mut names));
            } else if let Some(rest) = line.strip_prefix("output:") {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [state, letter] = parts[..] else {
                    return Err(err("expected `output: <state> <letter>`".into()));
                };
                let q = index(state, &mut names);
                let o = match outputs.iter().position(|l| l == letter) {
                    Some(k) => k,
                    None => {
                        outputs.push(letter.to_string());
                        outputs.len() - 1
                    }
                };
                if tau.insert(q, o).is_some() {
                    return Err(err(format!("duplicate output for state {state}")));
                }
            } else {
                let parts: Vec<&str> = line.split_whitespace().collect();
                let [from, digit, "->", to] = parts[..] else {
                    return Err(err("expected `<state> <digit> -> <state>`".into()));
                };
                let d: Digit = digit
                    .parse()
                    .map_err(|_| err(format!("`{digit}` is not a digit")))?;
                let q = index(from, &mut names);
                let r = index(to, &mut names);
                if edges.insert((q, d), r).is_some() {
                    return Err(err(format!("duplicate transition {from} {digit}")));
                }
            }
        }
        let initial = initial.ok_or(Error::Format {
            line: 0,
            msg: "missing `initial:` line".into(),
        })?;
        let input_size = edges.keys().map(|&(_, d)| d as usize + 1).max().unwrap_or(0);
        let mut delta = vec![Vec::with_capacity(input_size); names.len()];
        for (q, row) in delta.iter_mut().enumerate() {
            for d in 0..input_size {
                let r = edges.get(&(q, d as Digit)).ok_or_else(|| {
                    Error::InvalidAutomaton(format!("no transition from {} on {d}", names[q]))
                })?;
                row.push(*r);
            }
        }
        let tau = (0..names.len())
            .map(|q| {
                tau.get(&q).copied().ok_or_else(|| {
                    Error::InvalidAutomaton(format!("no output for state {}", names[q]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Dfao::new(names, input_size, delta, initial, outputs, tau)
    }

    /// Graphviz rendering. Parallel edges are merged into one labelled
    /// `d1,d2`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph {} {{", dot_id(name)).unwrap();
        writeln!(s, "  rankdir=LR;").unwrap();
        writeln!(s, "  __start [shape=point];").unwrap();
        for (q, n) in self.state_names.iter().enumerate() {
            writeln!(
                s,
                "  {} [shape=circle, label=\"{}/{}\"];",
                dot_id(n),
                n,
                self.outputs[self.tau[q]]
            )
            .unwrap();
        }
        writeln!(s, "  __start -> {};", dot_id(&self.state_names[self.initial])).unwrap();
        for (q, row) in self.delta.iter().enumerate() {
            let mut grouped: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (d, &r) in row.iter().enumerate() {
                grouped.entry(r).or_default().push(d);
            }
            for (r, digits) in grouped {
                let label: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
                writeln!(
                    s,
                    "  {} -> {} [label=\"{}\"];",
                    dot_id(&self.state_names[q]),
                    dot_id(&self.state_names[r]),
                    label.join(",")
                )
                .unwrap();
            }
        }
        s.push_str("}\n");
        s
    }

    /// Parse the subset of DOT produced by [`to_dot`](Self::to_dot).
    pub fn parse_dot(text: &str) -> Result<Dfao> {
        let mut lines = text.lines().enumerate();
        let header = lines.next().map(|(_, l)| l.trim()).unwrap_or("");
        if !(header.starts_with("digraph") && header.ends_with('{')) {
            return Err(Error::Format {
                line: 1,
                msg: "expected `digraph <name> {`".into(),
            });
        }
        let mut out = String::new();
        for (lineno, raw) in lines {
            let line = raw.trim().trim_end_matches(';');
            let err = |msg: &str| Error::Format {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            if line.is_empty() || line == "}" || line.starts_with("rankdir") {
                continue;
            }
            if line.starts_with("__start [") {
                continue;
            }
            if let Some(target) = line.strip_prefix("__start -> ") {
                writeln!(out, "initial: {}", undot_id(target)).unwrap();
            } else if let Some((lhs, attrs)) = line.split_once(" [") {
                let label = attrs
                    .split_once("label=\"")
                    .and_then(|(_, rest)| rest.split_once('"'))
                    .map(|(l, _)| l)
                    .ok_or_else(|| err("missing label"))?;
                if let Some((from, to)) = lhs.split_once(" -> ") {
                    for d in label.split(',') {
                        writeln!(out, "{} {} -> {}", undot_id(from), d.trim(), undot_id(to)).unwrap();
                    }
                } else {
                    let (_, letter) = label.rsplit_once('/').ok_or_else(|| err("bad state label"))?;
                    writeln!(out, "output: {} {}", undot_id(lhs), letter).unwrap();
                }
            } else {
                return Err(err("unrecognised statement"));
            }
        }
        Dfao::parse_text(&out)
    }
}

fn dot_id(name: &str) -> String {
    format!("\"{}\"", name.replace('"', "'"))
}

fn undot_id(id: &str) -> &str {
    id.trim().trim_matches('"')
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|k| format!("{prefix}{k}")).collect()
}

fn letters(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Fibonacci word over Zeckendorf representations. The drawn automaton has
/// no transition on 1 from state 1; since valid representations never
/// contain `11`, that move goes to an added sink state.
pub fn fibonacci_dfao() -> Dfao {
    let mut states = names("", 2);
    states.push("dead".into());
    Dfao::new(
        states,
        2,
        vec![vec![0, 1], vec![0, 2], vec![2, 2]],
        0,
        letters(&["a", "b"]),
        vec![0, 1, 0],
    )
    .expect("catalog automaton")
}

pub fn thue_morse_dfao() -> Dfao {
    Dfao::new(
        names("q", 2),
        2,
        vec![vec![0, 1], vec![1, 0]],
        0,
        letters(&["a", "b"]),
        vec![0, 1],
    )
    .expect("catalog automaton")
}

pub fn period_doubling_dfao() -> Dfao {
    Dfao::new(
        names("q", 2),
        2,
        vec![vec![0, 1], vec![0, 0]],
        0,
        letters(&["a", "b"]),
        vec![0, 1],
    )
    .expect("catalog automaton")
}

pub fn mephisto_waltz_dfao() -> Dfao {
    Dfao::new(
        names("q", 2),
        3,
        vec![vec![0, 0, 1], vec![1, 1, 0]],
        0,
        letters(&["a", "b"]),
        vec![0, 1],
    )
    .expect("catalog automaton")
}

pub fn rudin_shapiro_dfao() -> Dfao {
    Dfao::new(
        names("q", 4),
        2,
        vec![vec![0, 1], vec![0, 2], vec![3, 1], vec![3, 2]],
        0,
        letters(&["1", "-1"]),
        vec![0, 0, 1, 1],
    )
    .expect("catalog automaton")
}

pub fn paper_folding_dfao() -> Dfao {
    Dfao::new(
        names("q", 4),
        2,
        vec![vec![0, 1], vec![2, 1], vec![0, 3], vec![2, 3]],
        0,
        letters(&["1", "-1"]),
        vec![0, 0, 1, 1],
    )
    .expect("catalog automaton")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_outputs() {
        let z = NumerationSystem::zeckendorf();
        let b2 = NumerationSystem::positional(2);
        assert_eq!(fibonacci_dfao().output(0, &z).unwrap(), "a");
        let f: String = (0..8).map(|n| fibonacci_dfao().output(n, &z).unwrap().to_string()).collect();
        assert_eq!(f, "abaababa");
        assert_eq!(thue_morse_dfao().output(3, &b2).unwrap(), "a");
        assert_eq!(rudin_shapiro_dfao().output(3, &b2).unwrap(), "-1");
    }

    #[test]
    fn digit_out_of_alphabet() {
        let tm = thue_morse_dfao();
        assert_eq!(
            tm.run(&[1, 2]),
            Err(Error::DigitOutOfAlphabet { digit: 2, size: 2 })
        );
        let b3 = NumerationSystem::positional(3);
        assert!(tm.output(2, &b3).is_err());
    }

    #[test]
    fn text_round_trip() {
        for d in [
            fibonacci_dfao(),
            thue_morse_dfao(),
            period_doubling_dfao(),
            mephisto_waltz_dfao(),
            rudin_shapiro_dfao(),
            paper_folding_dfao(),
        ] {
            assert_eq!(Dfao::parse_text(&d.to_text()).unwrap(), d);
            assert_eq!(Dfao::parse_dot(&d.to_dot("m")).unwrap(), d);
        }
    }

    #[test]
    fn text_errors() {
        assert!(matches!(
            Dfao::parse_text("q0 0 -> q0\n"),
            Err(Error::Format { line: 0, .. })
        ));
        let missing = "initial: q0\noutput: q0 a\noutput: q1 b\nq0 0 -> q0\nq0 1 -> q1\nq1 0 -> q0\n";
        assert!(matches!(Dfao::parse_text(missing), Err(Error::InvalidAutomaton(_))));
        assert!(matches!(
            Dfao::parse_text("initial: q0\nq0 x -> q0\n"),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            Dfao::parse_text("initial: q0\noutput q0 a\n"),
            Err(Error::Format { line: 2, .. })
        ));
    }

    #[test]
    fn dot_merges_parallel_edges() {
        let dot = period_doubling_dfao().to_dot("pd");
        assert!(dot.starts_with("digraph \"pd\" {"));
        assert!(dot.contains("\"q1\" -> \"q0\" [label=\"0,1\"]"));
    }
}
