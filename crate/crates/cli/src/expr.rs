//! Weight expressions: integers, `x<i>`/`y<j>`, `+ - *`, `^` with a
//! nonnegative integer exponent, and parentheses.
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' digits)?
//! atom    := digits | ('x' | 'y') digits | '(' sum ')'
//! ```

use std::fmt;

use num_bigint::{BigInt, BigUint};
use spantree_core::{Polynomial, VarKind, Variable};

use crate::ParseError;

pub const MAX_TERMS: u64 = 100_000;
pub const MAX_DEGREE: u64 = 1_000_000;
pub const MAX_BITS: u64 = 1 << 20;

struct SizeBound {
    terms: u64,
    degree: u64,
    bits: u64,
}

fn log2_ceil(n: u64) -> u64 {
    u64::from(n.max(1).next_power_of_two().trailing_zeros())
}

/// `C(t + k - 1, k)`, the number of monomials of a `k`-fold product of `t`
/// terms, saturating at `u64::MAX`.
fn multiset_count(t: u64, k: u64) -> u64 {
    if t <= 1 || k == 0 {
        return 1;
    }
    let mut acc: u128 = 1;
    for i in 1..=k.min(t - 1) {
        // C(t+k-1, i) from C(t+k-1, i-1), symmetric in k and t-1
        acc = acc * u128::from(t - 1 + k - i + 1) / u128::from(i);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightExpr {
    Int(BigUint),
    Var(Variable),
    Neg(Box<WeightExpr>),
    Add(Box<WeightExpr>, Box<WeightExpr>),
    Sub(Box<WeightExpr>, Box<WeightExpr>),
    Mul(Box<WeightExpr>, Box<WeightExpr>),
    Pow(Box<WeightExpr>, u32),
}

impl WeightExpr {
    fn precedence(&self) -> u8 {
        match self {
            WeightExpr::Add(..) | WeightExpr::Sub(..) => 1,
            WeightExpr::Mul(..) => 2,
            WeightExpr::Neg(_) => 3,
            WeightExpr::Pow(..) => 4,
            WeightExpr::Int(_) | WeightExpr::Var(_) => 5,
        }
    }

    /// Every variable occurring in the expression, in order of appearance.
    pub fn variables(&self) -> Vec<Variable> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut Vec<Variable>) {
        match self {
            WeightExpr::Int(_) => {}
            WeightExpr::Var(v) => out.push(*v),
            WeightExpr::Neg(e) | WeightExpr::Pow(e, _) => e.collect_variables(out),
            WeightExpr::Add(a, b) | WeightExpr::Sub(a, b) | WeightExpr::Mul(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }

    /// Upper bounds on the term count, total degree and coefficient bit
    /// length of the expansion, saturating.
    fn size_bound(&self) -> SizeBound {
        match self {
            WeightExpr::Int(n) => SizeBound {
                terms: 1,
                degree: 0,
                bits: n.bits().max(1),
            },
            WeightExpr::Var(_) => SizeBound {
                terms: 1,
                degree: 1,
                bits: 1,
            },
            WeightExpr::Neg(e) => e.size_bound(),
            WeightExpr::Add(a, b) | WeightExpr::Sub(a, b) => {
                let (a, b) = (a.size_bound(), b.size_bound());
                SizeBound {
                    terms: a.terms.saturating_add(b.terms),
                    degree: a.degree.max(b.degree),
                    bits: a.bits.max(b.bits).saturating_add(1),
                }
            }
            WeightExpr::Mul(a, b) => {
                let (a, b) = (a.size_bound(), b.size_bound());
                SizeBound {
                    terms: a.terms.saturating_mul(b.terms),
                    degree: a.degree.saturating_add(b.degree),
                    bits: a
                        .bits
                        .saturating_add(b.bits)
                        .saturating_add(log2_ceil(a.terms.min(b.terms))),
                }
            }
            WeightExpr::Pow(e, k) => {
                let e = e.size_bound();
                let k = u64::from(*k);
                SizeBound {
                    terms: multiset_count(e.terms, k),
                    degree: e.degree.saturating_mul(k),
                    bits: e.bits.saturating_add(log2_ceil(e.terms)).saturating_mul(k).max(1),
                }
            }
        }
    }

    /// Expands into a canonical polynomial.
    ///
    /// Fails with [`ParseError::TooLarge`] when the expansion could exceed
    /// [`MAX_TERMS`] terms, [`MAX_DEGREE`] total degree or [`MAX_BITS`]-bit
    /// coefficients.
    pub fn lower(&self) -> Result<Polynomial, ParseError> {
        let bound = self.size_bound();
        if bound.terms > MAX_TERMS || bound.degree > MAX_DEGREE || bound.bits > MAX_BITS {
            return Err(ParseError::TooLarge);
        }
        Ok(self.lower_unchecked())
    }

    fn lower_unchecked(&self) -> Polynomial {
        match self {
            WeightExpr::Int(n) => Polynomial::constant(BigInt::from(n.clone())),
            WeightExpr::Var(v) => Polynomial::var(*v),
            WeightExpr::Neg(e) => -e.lower_unchecked(),
            WeightExpr::Add(a, b) => a.lower_unchecked() + b.lower_unchecked(),
            WeightExpr::Sub(a, b) => a.lower_unchecked() - b.lower_unchecked(),
            WeightExpr::Mul(a, b) => a.lower_unchecked() * b.lower_unchecked(),
            WeightExpr::Pow(e, k) => e.lower_unchecked().pow(*k),
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, parens: bool) -> fmt::Result {
        if parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        match self {
            WeightExpr::Int(n) => write!(f, "{n}"),
            WeightExpr::Var(v) => write!(f, "{v}"),
            WeightExpr::Neg(e) => {
                f.write_str("-")?;
                e.fmt_child(f, e.precedence() < p)
            }
            WeightExpr::Pow(e, k) => {
                e.fmt_child(f, e.precedence() < 5)?;
                write!(f, "^{k}")
            }
            WeightExpr::Add(a, b) | WeightExpr::Sub(a, b) | WeightExpr::Mul(a, b) => {
                let op = match self {
                    WeightExpr::Add(..) => " + ",
                    WeightExpr::Sub(..) => " - ",
                    _ => "*",
                };
                // left-associative: only the right operand needs parens at equal precedence
                a.fmt_child(f, a.precedence() < p)?;
                f.write_str(op)?;
                b.fmt_child(f, b.precedence() <= p)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigUint),
    Var(Variable),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("integer {n}"),
            Token::Var(v) => format!("variable {v}"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

/// Position of a token: 1-based line and column (in characters).
#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn tokenize(text: &str, start: Pos) -> Result<Vec<(Token, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut pos = start;
    let mut i = 0;
    let syntax = |pos: Pos, message: String| ParseError::Syntax {
        line: pos.line,
        column: pos.column,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let here = pos;
        let single = match c {
            ' ' | '\t' | '\r' => None,
            '\n' => {
                pos = Pos {
                    line: pos.line + 1,
                    column: 1,
                };
                i += 1;
                continue;
            }
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '*' => Some(Token::Star),
            '^' => Some(Token::Caret),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            '0'..='9' | 'x' | 'y' => {
                let digits_from = if c.is_ascii_digit() { i } else { i + 1 };
                let mut end = digits_from;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                let digits: String = chars[digits_from..end].iter().collect();
                let token = if c.is_ascii_digit() {
                    Token::Int(digits.parse().expect("nonempty digit string"))
                } else {
                    if digits.is_empty() {
                        return Err(syntax(here, format!("expected an index after '{c}'")));
                    }
                    let kind = if c == 'x' { VarKind::X } else { VarKind::Y };
                    let var = digits
                        .parse::<u32>()
                        .ok()
                        .and_then(|index| Variable::try_new(kind, index))
                        .ok_or_else(|| syntax(here, format!("invalid variable index {c}{digits}")))?;
                    Token::Var(var)
                };
                tokens.push((token, here));
                pos.column += end - i;
                i = end;
                continue;
            }
            other => return Err(syntax(here, format!("unexpected character {other:?}"))),
        };
        if let Some(token) = single {
            tokens.push((token, here));
        }
        pos.column += 1;
        i += 1;
    }
    tokens.push((Token::Eof, pos));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, Pos)>,
    cursor: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.cursor].0
    }

    fn pos(&self) -> Pos {
        self.tokens[self.cursor].1
    }

    fn advance(&mut self) -> Token {
        let token = self.tokens[self.cursor].0.clone();
        if token != Token::Eof {
            self.cursor += 1;
        }
        token
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let pos = self.pos();
        ParseError::Syntax {
            line: pos.line,
            column: pos.column,
            message: format!("expected {expected}, found {}", self.peek().describe()),
        }
    }

    fn sum(&mut self) -> Result<WeightExpr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.advance();
                    lhs = WeightExpr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Token::Minus => {
                    self.advance();
                    lhs = WeightExpr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<WeightExpr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Token::Star {
            self.advance();
            lhs = WeightExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<WeightExpr, ParseError> {
        if *self.peek() == Token::Minus {
            self.advance();
            return Ok(WeightExpr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<WeightExpr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.advance();
        let pos = self.pos();
        match self.peek() {
            Token::Minus => Err(ParseError::ExponentNegative {
                line: pos.line,
                column: pos.column,
            }),
            Token::Int(k) => {
                let k = u32::try_from(k.clone()).map_err(|_| ParseError::Syntax {
                    line: pos.line,
                    column: pos.column,
                    message: format!("exponent {k} is too large"),
                })?;
                self.advance();
                Ok(WeightExpr::Pow(Box::new(base), k))
            }
            _ => Err(self.unexpected("an exponent")),
        }
    }

    fn atom(&mut self) -> Result<WeightExpr, ParseError> {
        match self.peek() {
            Token::Int(_) | Token::Var(_) => match self.advance() {
                Token::Int(n) => Ok(WeightExpr::Int(n)),
                Token::Var(v) => Ok(WeightExpr::Var(v)),
                _ => unreachable!(),
            },
            Token::LParen => {
                self.advance();
                let inner = self.sum()?;
                if *self.peek() != Token::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.advance();
                Ok(inner)
            }
            _ => Err(self.unexpected("an integer, a variable or '('")),
        }
    }
}

/// Parses a weight expression. Positions in errors are 1-based.
pub fn parse_weight_expr(text: &str) -> Result<WeightExpr, ParseError> {
    parse_weight_expr_at(text, 1, 1)
}

/// Parses `text` as if it started at the given line and column.
pub(crate) fn parse_weight_expr_at(text: &str, line: usize, column: usize) -> Result<WeightExpr, ParseError> {
    let tokens = tokenize(text, Pos { line, column })?;
    let mut parser = Parser { tokens, cursor: 0 };
    let expr = parser.sum()?;
    if *parser.peek() != Token::Eof {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(expr)
}

/// Parses and lowers in one step.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    parse_weight_expr(text)?.lower()
}
