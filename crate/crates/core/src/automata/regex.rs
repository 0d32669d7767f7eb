//! Regular expressions over digit pairs in the bracket syntax
//! `[0,0]*[1,1]([1,0][0,0])* | [0,0]*[0,1]`.
//!
//! Grammar, lowest precedence first:
//!
//! ```text
//! union  := concat ('|' concat)*
//! concat := repeat*
//! repeat := atom '*'*
//! atom   := '[' digit ',' digit ']' | '(' union ')'
//! ```
//!
//! Whitespace (including newlines) is insignificant. An empty alternative or
//! `()` denotes the empty word.

use std::fmt;

use crate::numeration::Digit;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairRegex {
    Epsilon,
    Symbol(Digit, Digit),
    Concat(Vec<PairRegex>),
    Union(Vec<PairRegex>),
    Star(Box<PairRegex>),
}

impl PairRegex {
    /// Largest digit used on either track, if any symbol occurs.
    pub fn max_digit(&self) -> Option<Digit> {
        match self {
            PairRegex::Epsilon => None,
            PairRegex::Symbol(a, b) => Some(*a.max(b)),
            PairRegex::Concat(xs) | PairRegex::Union(xs) => {
                xs.iter().filter_map(PairRegex::max_digit).max()
            }
            PairRegex::Star(x) => x.max_digit(),
        }
    }

    /// Checks every symbol lies in `0..radix` on both tracks.
    pub fn check_digits(&self, radix: usize) -> Result<()> {
        match self.max_digit() {
            Some(d) if d as usize >= radix => Err(Error::Syntax {
                pos: 0,
                msg: format!("digit {d} is not below the radix {radix}"),
            }),
            _ => Ok(()),
        }
    }

    pub fn nullable(&self) -> bool {
        match self {
            PairRegex::Epsilon | PairRegex::Star(_) => true,
            PairRegex::Symbol(..) => false,
            PairRegex::Concat(xs) => xs.iter().all(PairRegex::nullable),
            PairRegex::Union(xs) => xs.iter().any(PairRegex::nullable),
        }
    }
}

pub fn parse_pair_regex(text: &str) -> Result<PairRegex> {
    let tokens: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let ast = p.union()?;
    match p.peek() {
        None => Ok(ast),
        Some((at, ')')) => Err(Error::Syntax {
            pos: at,
            msg: "unbalanced `)`".into(),
        }),
        Some((at, c)) => Err(Error::Syntax {
            pos: at,
            msg: format!("unexpected `{c}`"),
        }),
    }
}

struct Parser {
    tokens: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.tokens.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |(at, _)| at)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.bump() {
            Some((_, c)) if c == want => Ok(()),
            Some((at, c)) => Err(Error::Syntax {
                pos: at,
                msg: format!("expected `{want}`, found `{c}`"),
            }),
            None => Err(Error::Syntax {
                pos: self.end,
                msg: format!("expected `{want}` before end of input"),
            }),
        }
    }

    fn digit(&mut self) -> Result<Digit> {
        match self.bump() {
            Some((_, c)) if c.is_ascii_digit() => Ok(c as u8 - b'0'),
            Some((at, c)) => Err(Error::Syntax {
                pos: at,
                msg: format!("expected a digit, found `{c}`"),
            }),
            None => Err(Error::Syntax {
                pos: self.end,
                msg: "expected a digit before end of input".into(),
            }),
        }
    }

    fn union(&mut self) -> Result<PairRegex> {
        let mut alts = vec![self.concat()?];
        while let Some((_, '|')) = self.peek() {
            self.bump();
            alts.push(self.concat()?);
        }
        Ok(if alts.len() == 1 {
            alts.pop().unwrap()
        } else {
            PairRegex::Union(alts)
        })
    }

    fn concat(&mut self) -> Result<PairRegex> {
        let mut parts = Vec::new();
        while let Some((_, c)) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            parts.push(self.repeat()?);
        }
        Ok(match parts.len() {
            0 => PairRegex::Epsilon,
            1 => parts.pop().unwrap(),
            _ => PairRegex::Concat(parts),
        })
    }

    fn repeat(&mut self) -> Result<PairRegex> {
        let mut atom = self.atom()?;
        while let Some((_, '*')) = self.peek() {
            self.bump();
            if !matches!(atom, PairRegex::Star(_)) {
                atom = PairRegex::Star(Box::new(atom));
            }
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<PairRegex> {
        let at = self.here();
        match self.bump() {
            Some((_, '[')) => {
                let a = self.digit()?;
                self.expect(',')?;
                let b = self.digit()?;
                self.expect(']')?;
                Ok(PairRegex::Symbol(a, b))
            }
            Some((_, '(')) => {
                let inner = self.union()?;
                match self.bump() {
                    Some((_, ')')) => Ok(inner),
                    _ => Err(Error::Syntax {
                        pos: at,
                        msg: "unbalanced `(`".into(),
                    }),
                }
            }
            Some((_, c)) => Err(Error::Syntax {
                pos: at,
                msg: format!("unexpected `{c}`"),
            }),
            None => Err(Error::Syntax {
                pos: self.end,
                msg: "unexpected end of input".into(),
            }),
        }
    }
}

impl fmt::Display for PairRegex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(r: &PairRegex, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
            // ctx: 0 = union operand, 1 = concat operand, 2 = star operand
            match r {
                PairRegex::Epsilon => f.write_str("()"),
                PairRegex::Symbol(a, b) => write!(f, "[{a},{b}]"),
                PairRegex::Star(x) => {
                    go(x, f, 2)?;
                    f.write_str("*")
                }
                PairRegex::Concat(xs) => {
                    if ctx >= 2 {
                        f.write_str("(")?;
                    }
                    for x in xs {
                        let inner = if matches!(x, PairRegex::Concat(_)) { 2 } else { 1 };
                        go(x, f, inner)?;
                    }
                    if ctx >= 2 {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
                PairRegex::Union(xs) => {
                    if ctx >= 1 {
                        f.write_str("(")?;
                    }
                    for (k, x) in xs.iter().enumerate() {
                        if k > 0 {
                            f.write_str(" | ")?;
                        }
                        let inner = if matches!(x, PairRegex::Union(_)) { 1 } else { 0 };
                        go(x, f, inner)?;
                    }
                    if ctx >= 1 {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use PairRegex::*;

    #[test]
    fn parses_prefix_star() {
        let ast = parse_pair_regex("[0,0]*[0,1]").unwrap();
        assert_eq!(ast, Concat(vec![Star(Box::new(Symbol(0, 0))), Symbol(0, 1)]));
    }

    #[test]
    fn parses_group_star() {
        let ast = parse_pair_regex("[0,0]*[1,1][0,0]([1,0][0,0])*").unwrap();
        assert_eq!(
            ast,
            Concat(vec![
                Star(Box::new(Symbol(0, 0))),
                Symbol(1, 1),
                Symbol(0, 0),
                Star(Box::new(Concat(vec![Symbol(1, 0), Symbol(0, 0)]))),
            ])
        );
    }

    #[test]
    fn union_has_lowest_precedence() {
        let ast = parse_pair_regex("[0,1] | [1,1]\n  | [1,0][0,0]").unwrap();
        assert_eq!(
            ast,
            Union(vec![
                Symbol(0, 1),
                Symbol(1, 1),
                Concat(vec![Symbol(1, 0), Symbol(0, 0)])
            ])
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(parse_pair_regex("[0,1"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_pair_regex("([0,1]"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_pair_regex("[0,1])"), Err(Error::Syntax { pos: 5, .. })));
        assert!(matches!(parse_pair_regex("[0,x]"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_pair_regex("*"), Err(Error::Syntax { pos: 0, .. })));
    }

    #[test]
    fn epsilon_forms() {
        assert_eq!(parse_pair_regex("").unwrap(), Epsilon);
        assert_eq!(parse_pair_regex("()").unwrap(), Epsilon);
        assert!(parse_pair_regex("[0,1] |").unwrap().nullable());
    }

    #[test]
    fn digit_check() {
        let ast = parse_pair_regex("[0,0]*[1,2]").unwrap();
        assert!(ast.check_digits(3).is_ok());
        assert!(ast.check_digits(2).is_err());
    }
}
