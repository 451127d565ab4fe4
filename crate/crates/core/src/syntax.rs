//! Text format for gross-numbers.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := primary ("^" unary)?          right associative
//! primary := NUMBER | "G" | "①" | "(" expr ")"
//! NUMBER  := digits ("." digits)?
//! ```
//!
//! The printer emits the canonical form, e.g. `3*G^2 - G + 1`, which the
//! parser reads back to the same value.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{ArithError, Error, SyntaxError};
use crate::number::{GrossNumber, GrossTerm, DEFAULT_DIV_TERMS};
use crate::rational::{parse_decimal, Rational};

/// Parenthesis nesting accepted before the parser gives up.
pub const MAX_DEPTH: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Number,
    Grossone,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl TokenKind {
    fn describe(self) -> &'static str {
        match self {
            TokenKind::Number => "number",
            TokenKind::Grossone => "G",
            TokenKind::Plus => "'+'",
            TokenKind::Minus => "'-'",
            TokenKind::Star => "'*'",
            TokenKind::Slash => "'/'",
            TokenKind::Caret => "'^'",
            TokenKind::LParen => "'('",
            TokenKind::RParen => "')'",
            TokenKind::End => "end of input",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Character offset of the first character.
    pub position: usize,
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(TokenKind::Plus),
            '-' | '\u{2212}' => Some(TokenKind::Minus),
            '*' | '\u{00d7}' | '\u{00b7}' => Some(TokenKind::Star),
            '/' | '\u{00f7}' => Some(TokenKind::Slash),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            'G' | '①' => Some(TokenKind::Grossone),
            _ => None,
        };
        if let Some(kind) = single {
            tokens.push(Token {
                kind,
                lexeme: c.to_string(),
                position: i,
            });
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                i += 1;
                let frac_start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i == frac_start {
                    return Err(SyntaxError {
                        position: i,
                        expected: vec!["digit".into()],
                        found: found_at(&chars, i),
                    });
                }
            }
            tokens.push(Token {
                kind: TokenKind::Number,
                lexeme: chars[start..i].iter().collect(),
                position: start,
            });
            continue;
        }
        return Err(SyntaxError {
            position: i,
            expected: vec![
                "number".into(),
                "G".into(),
                "operator".into(),
                "parenthesis".into(),
            ],
            found: format!("'{c}'"),
        });
    }
    tokens.push(Token {
        kind: TokenKind::End,
        lexeme: String::new(),
        position: chars.len(),
    });
    Ok(tokens)
}

fn found_at(chars: &[char], i: usize) -> String {
    chars
        .get(i)
        .map(|c| format!("'{c}'"))
        .unwrap_or_else(|| "end of input".into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Number(Rational),
    Grossone,
    Neg(Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    fn binary(op: BinaryOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }
}

impl fmt::Display for Expr {
    /// Fully parenthesized rendering, mostly for debugging.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(r) => write!(f, "{r}"),
            Expr::Grossone => f.write_str("G"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary(op, l, r) => {
                let sym = match op {
                    BinaryOp::Add => "+",
                    BinaryOp::Sub => "-",
                    BinaryOp::Mul => "*",
                    BinaryOp::Div => "/",
                    BinaryOp::Pow => "^",
                };
                write!(f, "({l} {sym} {r})")
            }
        }
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn advance(&mut self) -> Token {
        let token = self.tokens[self.pos].clone();
        if token.kind != TokenKind::End {
            self.pos += 1;
        }
        token
    }

    fn error(&self, expected: &[TokenKind]) -> SyntaxError {
        let token = self.peek();
        let found = match token.kind {
            TokenKind::End => "end of input".to_string(),
            _ => format!("'{}'", token.lexeme),
        };
        SyntaxError {
            position: token.position,
            expected: expected.iter().map(|k| k.describe().to_string()).collect(),
            found,
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().kind {
                TokenKind::Plus => BinaryOp::Add,
                TokenKind::Minus => BinaryOp::Sub,
                _ => return Ok(lhs),
            };
            self.advance();
            lhs = Expr::binary(op, lhs, self.term()?);
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek().kind {
                TokenKind::Star => BinaryOp::Mul,
                TokenKind::Slash => BinaryOp::Div,
                _ => return Ok(lhs),
            };
            self.advance();
            lhs = Expr::binary(op, lhs, self.unary()?);
        }
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if self.peek().kind == TokenKind::Minus {
            self.advance();
            self.enter()?;
            let inner = self.unary();
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.primary()?;
        if self.peek().kind != TokenKind::Caret {
            return Ok(base);
        }
        self.advance();
        self.enter()?;
        let exponent = self.unary();
        self.depth -= 1;
        Ok(Expr::binary(BinaryOp::Pow, base, exponent?))
    }

    fn primary(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek().kind {
            TokenKind::Number => {
                let token = self.advance();
                let value = parse_decimal(&token.lexeme).ok_or_else(|| SyntaxError {
                    position: token.position,
                    expected: vec!["number".into()],
                    found: format!("'{}'", token.lexeme),
                })?;
                Ok(Expr::Number(value))
            }
            TokenKind::Grossone => {
                self.advance();
                Ok(Expr::Grossone)
            }
            TokenKind::LParen => {
                self.advance();
                self.enter()?;
                let inner = self.expr();
                self.depth -= 1;
                let inner = inner?;
                if self.peek().kind != TokenKind::RParen {
                    return Err(self.error(&[
                        TokenKind::Plus,
                        TokenKind::Minus,
                        TokenKind::Star,
                        TokenKind::Slash,
                        TokenKind::Caret,
                        TokenKind::RParen,
                    ]));
                }
                self.advance();
                Ok(inner)
            }
            _ => Err(self.error(&[
                TokenKind::Number,
                TokenKind::Grossone,
                TokenKind::LParen,
                TokenKind::Minus,
            ])),
        }
    }

    fn enter(&mut self) -> Result<(), SyntaxError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            let token = self.peek();
            return Err(SyntaxError {
                position: token.position,
                expected: vec![format!("at most {MAX_DEPTH} levels of nesting")],
                found: "deeper nesting".into(),
            });
        }
        Ok(())
    }
}

pub fn parse(text: &str) -> Result<Expr, SyntaxError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        depth: 0,
    };
    let expr = parser.expr()?;
    if parser.peek().kind != TokenKind::End {
        return Err(parser.error(&[
            TokenKind::Plus,
            TokenKind::Minus,
            TokenKind::Star,
            TokenKind::Slash,
            TokenKind::Caret,
            TokenKind::End,
        ]));
    }
    Ok(expr)
}

/// Evaluates with the default division budget.
pub fn eval(expr: &Expr) -> Result<GrossNumber, ArithError> {
    eval_with(expr, DEFAULT_DIV_TERMS)
}

pub fn eval_with(expr: &Expr, max_div_terms: usize) -> Result<GrossNumber, ArithError> {
    Ok(match expr {
        Expr::Number(r) => GrossNumber::from_rational(r.clone()),
        Expr::Grossone => GrossNumber::grossone(),
        Expr::Neg(inner) => -eval_with(inner, max_div_terms)?,
        Expr::Binary(op, lhs, rhs) => {
            let a = eval_with(lhs, max_div_terms)?;
            let b = eval_with(rhs, max_div_terms)?;
            match op {
                BinaryOp::Add => &a + &b,
                BinaryOp::Sub => &a - &b,
                BinaryOp::Mul => &a * &b,
                BinaryOp::Div => a.div(&b, max_div_terms)?,
                BinaryOp::Pow => a.pow_with(&b, max_div_terms)?,
            }
        }
    })
}

/// Parse and evaluate in one step.
pub fn evaluate(text: &str) -> Result<GrossNumber, Error> {
    evaluate_with(text, DEFAULT_DIV_TERMS)
}

pub fn evaluate_with(text: &str, max_div_terms: usize) -> Result<GrossNumber, Error> {
    let expr = parse(text)?;
    Ok(eval_with(&expr, max_div_terms)?)
}

/// Printer options.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Style {
    /// Write ① instead of `G`.
    pub unicode: bool,
}

impl Style {
    pub fn unit(&self) -> &'static str {
        if self.unicode {
            "①"
        } else {
            "G"
        }
    }
}

/// Canonical ASCII rendering.
pub fn print(x: &GrossNumber) -> String {
    print_styled(x, Style::default())
}

pub fn print_styled(x: &GrossNumber, style: Style) -> String {
    let mut out = String::new();
    for (i, t) in x.terms().iter().enumerate() {
        let negative = t.coefficient.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&term_magnitude(t, style));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn term_magnitude(t: &GrossTerm, style: Style) -> String {
    let digit = t.coefficient.abs();
    if t.exponent.is_zero() {
        return digit.to_string();
    }
    let power = if t.exponent.is_one() {
        style.unit().to_string()
    } else if t.exponent.is_integer() && t.exponent.is_positive() {
        format!("{}^{}", style.unit(), t.exponent)
    } else {
        format!("{}^({})", style.unit(), t.exponent)
    };
    if digit.is_one() {
        power
    } else {
        format!("{digit}*{power}")
    }
}
