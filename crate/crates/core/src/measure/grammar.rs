//! Text form of set descriptors.
//!
//! ```text
//! set     := union (("+" | "-") COUNT)*
//! union   := atom (("|" | "∪") atom)*
//! atom    := "N" | "N" "\" "{" ints "}" | "N" "(" k "," n ")" | "E" | "O"
//!          | "Z" | "Z" "\" "{" ints "}" | "squares" | "pairs" | "Q1" | "Q2"
//!          | "P" "(" set ")" | "num" "[" rat "," rat (")" | "]") "@" base
//!          | "(" set ")"
//! ```

use std::fmt;

use num_bigint::BigInt;

use super::SetDescriptor;
use crate::error::SyntaxError;
use crate::rational::{parse_rational, Rational};

const MAX_DEPTH: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    /// Unsigned integer or decimal/fraction literal.
    Number(String),
    Punct(char),
    End,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    position: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Word(chars[start..i].iter().collect()),
                position: start,
            });
        } else if c.is_ascii_digit() {
            while i < chars.len() && (chars[i].is_ascii_digit() || matches!(chars[i], '.' | '/')) {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Number(chars[start..i].iter().collect()),
                position: start,
            });
        } else if c == 'ℕ' || c == 'ℤ' {
            let word = if c == 'ℕ' { "N" } else { "Z" };
            out.push(Spanned {
                tok: Tok::Word(word.into()),
                position: start,
            });
            i += 1;
        } else if "\\{}()[],@+-|∪".contains(c) {
            // "\\" is accepted as a shell-escaped "\"
            if c == '\\' && chars.get(i + 1) == Some(&'\\') {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Punct(if c == '∪' { '|' } else { c }),
                position: start,
            });
            i += 1;
        } else {
            return Err(SyntaxError {
                position: start,
                expected: vec!["set name".into(), "number".into(), "punctuation".into()],
                found: format!("'{c}'"),
            });
        }
    }
    out.push(Spanned {
        tok: Tok::End,
        position: chars.len(),
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn position(&self) -> usize {
        self.toks[self.pos].position
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail(&self, expected: &[&str]) -> SyntaxError {
        let found = match self.peek() {
            Tok::Word(w) | Tok::Number(w) => format!("'{w}'"),
            Tok::Punct(c) => format!("'{c}'"),
            Tok::End => "end of input".into(),
        };
        SyntaxError {
            position: self.position(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Punct(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.fail(&[&format!("'{c}'")]))
        }
    }

    fn set(&mut self) -> Result<SetDescriptor, SyntaxError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.fail(&["shallower nesting"]));
        }
        let mut result = self.union()?;
        loop {
            let plus = if self.eat('+') {
                true
            } else if self.eat('-') {
                false
            } else {
                break;
            };
            let count = self.unsigned::<u64>("element count")?;
            result = if plus {
                SetDescriptor::plus(result, count)
            } else {
                SetDescriptor::minus(result, count)
            };
        }
        self.depth -= 1;
        Ok(result)
    }

    fn union(&mut self) -> Result<SetDescriptor, SyntaxError> {
        let first = self.atom()?;
        if self.peek() != &Tok::Punct('|') {
            return Ok(first);
        }
        let mut members = vec![first];
        while self.eat('|') {
            members.push(self.atom()?);
        }
        Ok(SetDescriptor::DisjointUnion(members))
    }

    fn atom(&mut self) -> Result<SetDescriptor, SyntaxError> {
        const ATOMS: [&str; 11] = [
            "N", "Z", "E", "O", "squares", "pairs", "Q1", "Q2", "P(", "num[", "(",
        ];
        if self.eat('(') {
            let inner = self.set()?;
            self.expect(')')?;
            return Ok(inner);
        }
        let Tok::Word(word) = self.peek().clone() else {
            return Err(self.fail(&ATOMS));
        };
        self.bump();
        Ok(match word.as_str() {
            "N" => {
                if self.eat('(') {
                    let k = self.unsigned::<u64>("k")?;
                    self.expect(',')?;
                    let n = self.unsigned::<u64>("n")?;
                    self.expect(')')?;
                    SetDescriptor::Progression { k, n }
                } else if self.eat('\\') {
                    SetDescriptor::NaturalsMinus(self.int_list()?)
                } else {
                    SetDescriptor::Naturals
                }
            }
            "E" => SetDescriptor::Progression { k: 2, n: 2 },
            "O" => SetDescriptor::Progression { k: 1, n: 2 },
            "Z" => {
                if self.eat('\\') {
                    SetDescriptor::IntegersMinus(self.int_list()?)
                } else {
                    SetDescriptor::Integers
                }
            }
            "squares" => SetDescriptor::Squares,
            "pairs" => SetDescriptor::Pairs,
            "Q1" => SetDescriptor::Q1,
            "Q2" => SetDescriptor::Q2,
            "P" => {
                self.expect('(')?;
                let inner = self.set()?;
                self.expect(')')?;
                SetDescriptor::power_set(inner)
            }
            "num" => {
                self.expect('[')?;
                let lower = self.rational()?;
                self.expect(',')?;
                let upper = self.rational()?;
                let closed_upper = if self.eat(']') {
                    true
                } else if self.eat(')') {
                    false
                } else {
                    return Err(self.fail(&["')'", "']'"]));
                };
                self.expect('@')?;
                let base = self.unsigned::<u64>("numeral base")?;
                SetDescriptor::IntervalNumerals {
                    base,
                    lower,
                    upper,
                    closed_upper,
                }
            }
            _ => {
                self.pos -= 1;
                return Err(self.fail(&ATOMS));
            }
        })
    }

    fn int_list(&mut self) -> Result<Vec<BigInt>, SyntaxError> {
        self.expect('{')?;
        let mut items = Vec::new();
        if self.eat('}') {
            return Ok(items);
        }
        loop {
            let negative = self.eat('-');
            let value: BigInt = self.unsigned("integer")?;
            items.push(if negative { -value } else { value });
            if self.eat('}') {
                return Ok(items);
            }
            self.expect(',')?;
        }
    }

    fn unsigned<T: std::str::FromStr>(&mut self, what: &str) -> Result<T, SyntaxError> {
        if let Tok::Number(text) = self.peek() {
            if let Ok(v) = text.parse::<T>() {
                self.bump();
                return Ok(v);
            }
        }
        Err(self.fail(&[what]))
    }

    fn rational(&mut self) -> Result<Rational, SyntaxError> {
        let negative = self.eat('-');
        if let Tok::Number(text) = self.peek() {
            if let Some(v) = parse_rational(text) {
                self.bump();
                return Ok(if negative { -v } else { v });
            }
        }
        Err(self.fail(&["rational number"]))
    }
}

/// Parses the textual set notation, e.g. `N \ {3,5}` or `num[1,2)@10`.
pub fn parse_set(text: &str) -> Result<SetDescriptor, SyntaxError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
        depth: 0,
    };
    let set = parser.set()?;
    if parser.peek() != &Tok::End {
        return Err(parser.fail(&["'+'", "'-'", "'|'", "end of input"]));
    }
    Ok(set)
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for SetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetDescriptor::Naturals => f.write_str("N"),
            SetDescriptor::NaturalsMinus(items) => write!(f, "N \\ {{{}}}", join(items)),
            SetDescriptor::Progression { k, n } => write!(f, "N({k},{n})"),
            SetDescriptor::Integers => f.write_str("Z"),
            SetDescriptor::IntegersMinus(items) => write!(f, "Z \\ {{{}}}", join(items)),
            SetDescriptor::Squares => f.write_str("squares"),
            SetDescriptor::Pairs => f.write_str("pairs"),
            SetDescriptor::Q1 => f.write_str("Q1"),
            SetDescriptor::Q2 => f.write_str("Q2"),
            SetDescriptor::PowerSet(inner) => write!(f, "P({inner})"),
            SetDescriptor::IntervalNumerals {
                base,
                lower,
                upper,
                closed_upper,
            } => {
                let close = if *closed_upper { ']' } else { ')' };
                write!(f, "num[{lower},{upper}{close}@{base}")
            }
            SetDescriptor::DisjointUnion(members) => {
                let parts: Vec<String> = members
                    .iter()
                    .map(|m| match m {
                        SetDescriptor::DisjointUnion(_)
                        | SetDescriptor::PlusElements(..)
                        | SetDescriptor::MinusElements(..) => format!("({m})"),
                        _ => m.to_string(),
                    })
                    .collect();
                f.write_str(&parts.join(" | "))
            }
            SetDescriptor::MinusElements(inner, count) => write!(f, "{inner} - {count}"),
            SetDescriptor::PlusElements(inner, count) => write!(f, "{inner} + {count}"),
        }
    }
}
