//! The `seqfact` command line, as a library so it can be driven from tests.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use seqfact::automata::{parse_pair_regex, PairNfa};
use seqfact::factorize::{self, FactorKind, Factorization};
use seqfact::numeration::NumerationSystem;
use seqfact::sequences::{render_word, Letter, SequenceGenerator, SequenceId};
use seqfact::theorems::{self, ClosedForm, GoodRepRegex, Variant};
use seqfact::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "seqfact", version, about = "Automatic sequences and their z- and c-factorizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a prefix of a catalog sequence.
    Seq {
        name: SequenceId,
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: SeqFormat,
    },
    /// z-factorization of a catalog sequence or of a finite word.
    Zfact(FactArgs),
    /// c-factorization of a catalog sequence or of a finite word.
    Cfact(FactArgs),
    /// Representation of a natural number.
    Rep {
        n: u64,
        #[arg(long, default_value = "base2")]
        system: String,
    },
    /// Value of a representation.
    Val {
        word: String,
        #[arg(long, default_value = "base2")]
        system: String,
    },
    /// Enumerate the pairs accepted by a pair expression, or check them
    /// against a factorization predicate.
    Regex {
        expr: String,
        #[arg(long, default_value = "base2")]
        system: String,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Only test whether this pair word (`[1,1][0,0]`) is accepted.
        #[arg(long)]
        accepts: Option<String>,
        /// Check every accepted pair against the predicate on this sequence.
        #[arg(long)]
        check: Option<SequenceId>,
        #[arg(long, default_value = "z")]
        kind: FactorKind,
    },
    /// Verify one closed form and its goodrep expression.
    CheckTheorem {
        name: SequenceId,
        kind: FactorKind,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long, default_value_t = theorems::DEFAULT_REGEX_LEN)]
        max_len: usize,
        /// Use repaired expressions where the transcription is known to be wrong.
        #[arg(long)]
        errata: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Run every check; exit status is their conjunction.
    CheckAll {
        #[arg(long)]
        errata: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Print the DFAO generating a catalog sequence.
    ExportDfao {
        name: SequenceId,
        #[arg(long, value_enum, default_value = "dot")]
        format: DfaoFormat,
    },
}

#[derive(clap::Args, Debug)]
struct FactArgs {
    name: Option<SequenceId>,
    /// Factorize this finite word instead of a catalog sequence.
    #[arg(long, conflicts_with = "name")]
    word: Option<String>,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, value_enum, default_value = "table")]
    format: FactFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SeqFormat {
    Plain,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FactFormat {
    Table,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DfaoFormat {
    Dot,
    Text,
}

/// Failure with an exit code and a message for stderr.
struct Fail(i32, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PrefixTooLarge { .. } => EXIT_FAILED,
            _ => EXIT_USAGE,
        };
        Fail(code, e.to_string())
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail(EXIT_FAILED, e.to_string())
    }
}

type CmdResult = Result<i32, Fail>;

/// Run with `argv` (including the program name). Output goes to `out`,
/// diagnostics to `err`; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    let cap = seqfact::prefix_cap();
    match cmd {
        Command::Seq {
            name,
            length,
            format,
        } => cmd_seq(name, length, format, cap, out),
        Command::Zfact(args) => cmd_fact(FactorKind::Z, args, cap, out),
        Command::Cfact(args) => cmd_fact(FactorKind::C, args, cap, out),
        Command::Rep { n, system } => {
            let ns = parse_system(&system)?;
            let w = ns.rep(n);
            let s = if w.is_empty() {
                "0".to_string()
            } else {
                ns.format_digits(&w)
            };
            writeln!(out, "{s}")?;
            Ok(EXIT_OK)
        }
        Command::Val { word, system } => {
            let ns = parse_system(&system)?;
            let digits = if word == "ε" { Vec::new() } else { ns.parse_digits(&word)? };
            writeln!(out, "{}", ns.val(&digits)?)?;
            Ok(EXIT_OK)
        }
        Command::Regex {
            expr,
            system,
            max_len,
            accepts,
            check,
            kind,
        } => cmd_regex(&expr, &system, max_len, accepts, check, kind, cap, out),
        Command::CheckTheorem {
            name,
            kind,
            m_max,
            max_len,
            errata,
            format,
        } => cmd_check_theorem(name, kind, m_max, max_len, errata, format, cap, out),
        Command::CheckAll { errata, format } => {
            let r = theorems::run_suite(errata, cap);
            match format {
                ReportFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&to_sorted(&r)).unwrap())?
                }
                ReportFormat::Text => {
                    for e in &r.entries {
                        let tag = if e.pass { "PASS" } else { "FAIL" };
                        if e.detail.is_empty() {
                            writeln!(out, "{tag} {}", e.name)?;
                        } else {
                            writeln!(out, "{tag} {}: {}", e.name, e.detail)?;
                        }
                    }
                    let failed = r.entries.iter().filter(|e| !e.pass).count();
                    writeln!(out, "{} of {} checks passed", r.entries.len() - failed, r.entries.len())?;
                }
            }
            Ok(if r.pass { EXIT_OK } else { EXIT_FAILED })
        }
        Command::ExportDfao { name, format } => {
            let g = SequenceGenerator::catalog(name);
            let d = g.spec().dfao();
            match format {
                DfaoFormat::Dot => write!(out, "{}", d.to_dot(name.short_name()))?,
                DfaoFormat::Text => write!(out, "{}", d.to_text())?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// `base2`, `base3`, `base<k>`, a bare `k`, or `zeckendorf`/`fib`.
fn parse_system(s: &str) -> Result<NumerationSystem, Fail> {
    let t = s.trim().to_ascii_lowercase();
    if matches!(t.as_str(), "zeckendorf" | "fib" | "fibonacci" | "msd_fib") {
        return Ok(NumerationSystem::zeckendorf());
    }
    let digits = t
        .strip_prefix("msd_")
        .or_else(|| t.strip_prefix("base"))
        .unwrap_or(&t);
    match digits.parse::<u8>() {
        Ok(k @ 2..=36) => Ok(NumerationSystem::positional(k)),
        _ => Err(Fail(EXIT_USAGE, format!("--system: unknown numeration system `{s}`"))),
    }
}

/// JSON value of a letter: integers stay integers.
fn letter_json(name: &str) -> Value {
    match name.parse::<i64>() {
        Ok(v) => json!(v),
        Err(_) => json!(name),
    }
}

fn cmd_seq(name: SequenceId, length: usize, format: SeqFormat, cap: usize, out: &mut dyn Write) -> CmdResult {
    if length > cap {
        return Err(Error::PrefixTooLarge { required: length, cap }.into());
    }
    let mut g = SequenceGenerator::catalog(name);
    let spec = g.spec().clone();
    let w = g.prefix(length);
    match format {
        SeqFormat::Plain => writeln!(out, "{}", spec.render(w))?,
        SeqFormat::Json => {
            let letters: Vec<Value> = w.iter().map(|&l| letter_json(&spec.letters()[l as usize])).collect();
            let v = json!({ "sequence": name.short_name(), "length": length, "letters": letters });
            writeln!(out, "{}", serde_json::to_string(&v).unwrap())?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_fact(kind: FactorKind, args: FactArgs, cap: usize, out: &mut dyn Write) -> CmdResult {
    let (x, names, f): (Vec<Letter>, Vec<String>, Factorization) = match (args.name, args.word) {
        (_, Some(word)) => {
            let mut names: Vec<String> = Vec::new();
            let mut x = Vec::new();
            for c in word.chars() {
                let s = c.to_string();
                let l = match names.iter().position(|n| *n == s) {
                    Some(l) => l,
                    None => {
                        names.push(s);
                        names.len() - 1
                    }
                };
                if l >= 126 {
                    return Err(Fail(EXIT_USAGE, "--word: too many distinct letters".into()));
                }
                x.push(l as Letter);
            }
            let f = factorize::factorize_fast(&x, kind, args.count);
            (x, names, f)
        }
        (Some(name), None) => {
            let mut g = SequenceGenerator::catalog(name);
            let f = factorize::factorize_sequence(&mut g, kind, args.count, cap)?;
            let names = g.spec().letters().to_vec();
            (g.materialized().to_vec(), names, f)
        }
        (None, None) => {
            return Err(Fail(EXIT_USAGE, "expected a sequence name or --word".into()));
        }
    };
    let rows: Vec<(usize, usize, usize, String)> = f
        .factors
        .iter()
        .enumerate()
        .map(|(m, fac)| (m, fac.start, fac.length, render_word(&names, &x[fac.start..fac.start + fac.length])))
        .collect();
    match args.format {
        FactFormat::Csv => {
            writeln!(out, "m,start,length,word")?;
            for (m, i, n, w) in &rows {
                writeln!(out, "{m},{i},{n},{w}")?;
            }
        }
        FactFormat::Json => {
            let pairs: Vec<Value> = rows
                .iter()
                .map(|(_, i, n, w)| json!({ "start": i, "length": n, "word": w }))
                .collect();
            let kind = match kind {
                FactorKind::Z => "Z",
                FactorKind::C => "C",
            };
            writeln!(out, "{}", serde_json::to_string(&json!({ "kind": kind, "pairs": pairs })).unwrap())?;
        }
        FactFormat::Table => {
            writeln!(out, "{:>4} {:>10} {:>10}  word", "m", "start", "length")?;
            for (m, i, n, w) in &rows {
                writeln!(out, "{m:>4} {i:>10} {n:>10}  {w}")?;
            }
            if f.settled < f.len() {
                writeln!(out, "(last factor runs to the end of the word)")?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_regex(
    expr: &str,
    system: &str,
    max_len: usize,
    accepts: Option<String>,
    check: Option<SequenceId>,
    kind: FactorKind,
    cap: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let r = parse_pair_regex(expr)?;
    if let Some(seq) = check {
        let gr = GoodRepRegex {
            sequence: seq,
            kind,
            verbatim: Box::leak(expr.to_string().into_boxed_str()),
            corrected: None,
            note: None,
        };
        let rep = theorems::verify_regex_implication(&gr, Variant::Verbatim, max_len, cap)?;
        writeln!(out, "{} pairs checked against {seq} {kind}", rep.checked)?;
        for (i, n) in &rep.counterexamples {
            writeln!(out, "counterexample: ({i},{n})")?;
        }
        writeln!(out, "{}", if rep.pass { "PASS" } else { "FAIL" })?;
        return Ok(if rep.pass { EXIT_OK } else { EXIT_FAILED });
    }
    let ns = parse_system(system)?;
    r.check_digits(ns.radix())?;
    let nfa = PairNfa::from_regex(&r);
    if let Some(w) = accepts {
        let w: seqfact::numeration::PairWord = w.parse()?;
        let yes = nfa.accepts(w.as_slice());
        writeln!(out, "{yes}")?;
        return Ok(if yes { EXIT_OK } else { EXIT_FAILED });
    }
    for (i, n) in nfa.enumerate_accepted(&ns, max_len) {
        writeln!(out, "({i},{n})")?;
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_check_theorem(
    name: SequenceId,
    kind: FactorKind,
    m_max: Option<usize>,
    max_len: usize,
    errata: bool,
    format: ReportFormat,
    cap: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let cf = ClosedForm::catalog(name, kind);
    let m_max = match m_max {
        Some(m) => m,
        None => theorems::feasible_m_max(&cf, cap, theorems::default_m_max(name)).unwrap_or(0),
    };
    let closed = theorems::verify_closed_form(&cf, m_max, cap)?;
    let variant = if errata { Variant::Corrected } else { Variant::Verbatim };
    let gr = GoodRepRegex::catalog(name, kind);
    let regex = theorems::verify_regex_implication(&gr, variant, max_len, cap)?;
    let pass = closed.pass && regex.pass;
    match format {
        ReportFormat::Json => {
            let v = json!({ "closed_form": to_sorted(&closed), "regex": to_sorted(&regex), "pass": pass });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap())?;
        }
        ReportFormat::Text => {
            writeln!(out, "{name} {kind}: closed form for m <= {m_max} (prefix {})", closed.prefix_len)?;
            for row in &closed.rows {
                let mark = if row.ok { "ok" } else { "MISMATCH" };
                let exp = row.expected.map_or("undefined".to_string(), |(i, n)| format!("({i},{n})"));
                writeln!(out, "  m={:<3} {exp:<24} {mark}", row.m)?;
                if !row.ok {
                    writeln!(out, "         brute force gives ({},{})", row.actual.0, row.actual.1)?;
                }
            }
            writeln!(out, "  tiling: {}", if closed.tiling { "ok" } else { "broken" })?;
            for w in &closed.warnings {
                writeln!(out, "  warning: {w}")?;
            }
            writeln!(
                out,
                "{name} {kind}: {:?} expression, {} pairs up to length {max_len}",
                variant, regex.checked
            )?;
            for (i, n) in &regex.counterexamples {
                writeln!(out, "  counterexample: ({i},{n}) does not satisfy the predicate")?;
            }
            for (i, n) in &regex.missing {
                writeln!(out, "  warning: factor ({i},{n}) is not accepted")?;
            }
            if let Some(note) = &regex.note {
                writeln!(out, "  note: {note}")?;
            }
            writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
        }
    }
    Ok(if pass { EXIT_OK } else { EXIT_FAILED })
}

/// Serialize through `Value`, whose maps keep keys sorted.
fn to_sorted<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap()
}
