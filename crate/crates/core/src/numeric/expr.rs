//! Expression trees for surface generators, with exact rational constants,
//! a recursive descent parser and symbolic differentiation.
//!
//! Grammar:
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := base ('^' exponent)?
//! exponent := int | '(' int ('/' int)? ')'      (int may carry a sign)
//! base     := number | 'u' | 'v' | func '(' expr ')' | '(' expr ')'
//! func     := sin | cos | tan | exp | log | sqrt | abs
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::exactpoly::{fmt_rational, int, Poly2, Rational, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Abs,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "log" => Func::Log,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }
}

/// Expression over `u`, `v` with exact rational constants and exponents.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(Rational),
    Var(Var),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, Rational),
    Func(Func, Box<Expr>),
}

impl Expr {
    pub fn constant(c: Rational) -> Expr {
        Expr::Const(c)
    }

    pub fn int(n: i64) -> Expr {
        Expr::Const(int(n))
    }

    pub fn var(v: Var) -> Expr {
        Expr::Var(v)
    }

    pub fn u() -> Expr {
        Expr::Var(Var::U)
    }

    pub fn v() -> Expr {
        Expr::Var(Var::V)
    }

    fn as_const(&self) -> Option<&Rational> {
        match self {
            Expr::Const(c) => Some(c),
            _ => None,
        }
    }

    pub fn sum(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Expr::Const(x + y),
            (Some(x), _) if x.is_zero() => b,
            (_, Some(y)) if y.is_zero() => a,
            (_, Some(y)) if y.is_negative() => Expr::Sub(Box::new(a), Box::new(Expr::Const(-y))),
            _ => match b {
                Expr::Neg(inner) => Expr::Sub(Box::new(a), inner),
                b => Expr::Add(Box::new(a), Box::new(b)),
            },
        }
    }

    pub fn difference(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Expr::Const(x - y),
            (_, Some(y)) if y.is_zero() => a,
            (Some(x), _) if x.is_zero() => Expr::negate(b),
            _ => match b {
                Expr::Neg(inner) => Expr::Add(Box::new(a), inner),
                b => Expr::Sub(Box::new(a), Box::new(b)),
            },
        }
    }

    pub fn product(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Expr::Const(x * y),
            (Some(x), _) if x.is_zero() => Expr::int(0),
            (_, Some(y)) if y.is_zero() => Expr::int(0),
            (Some(x), _) if x.is_one() => b,
            (_, Some(y)) if y.is_one() => a,
            (Some(x), _) if *x == int(-1) => Expr::negate(b),
            (_, Some(y)) if *y == int(-1) => Expr::negate(a),
            // keep constants on the left and merge nested constant factors
            (None, Some(_)) => Expr::product(b, a),
            (Some(x), None) => match b {
                Expr::Mul(l, r) if l.as_const().is_some() => {
                    Expr::product(Expr::Const(x * l.as_const().unwrap()), *r)
                }
                Expr::Neg(inner) => Expr::product(Expr::Const(-x), *inner),
                b => Expr::Mul(Box::new(a), Box::new(b)),
            },
            _ => Expr::Mul(Box::new(a), Box::new(b)),
        }
    }

    pub fn quotient(a: Expr, b: Expr) -> Expr {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) if !y.is_zero() => Expr::Const(x / y),
            (Some(x), _) if x.is_zero() => Expr::int(0),
            (_, Some(y)) if y.is_one() => a,
            (_, Some(y)) if !y.is_zero() => Expr::product(Expr::Const(y.recip()), a),
            _ => Expr::Div(Box::new(a), Box::new(b)),
        }
    }

    pub fn negate(a: Expr) -> Expr {
        match a {
            Expr::Const(c) => Expr::Const(-c),
            Expr::Neg(inner) => *inner,
            a => Expr::Neg(Box::new(a)),
        }
    }

    pub fn pow(base: Expr, exponent: Rational) -> Expr {
        if exponent.is_zero() {
            return Expr::int(1);
        }
        if exponent.is_one() {
            return base;
        }
        match base {
            Expr::Const(c) if exponent.is_integer() && !(c.is_zero() && exponent.is_negative()) => {
                let n = exponent.to_integer().to_i64().unwrap_or(0);
                Expr::Const(crate::radalg::rational_pow(&c, n))
            }
            base => Expr::Pow(Box::new(base), exponent),
        }
    }

    pub fn func(f: Func, arg: Expr) -> Expr {
        Expr::Func(f, Box::new(arg))
    }

    pub fn depends_on(&self, var: Var) -> bool {
        match self {
            Expr::Const(_) => false,
            Expr::Var(v) => *v == var,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.depends_on(var) || b.depends_on(var)
            }
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Func(_, a) => a.depends_on(var),
        }
    }

    /// Symbolic partial derivative.
    pub fn diff(&self, var: Var) -> Expr {
        if !self.depends_on(var) {
            return Expr::int(0);
        }
        match self {
            Expr::Const(_) => Expr::int(0),
            Expr::Var(v) => Expr::int(if *v == var { 1 } else { 0 }),
            Expr::Add(a, b) => Expr::sum(a.diff(var), b.diff(var)),
            Expr::Sub(a, b) => Expr::difference(a.diff(var), b.diff(var)),
            Expr::Mul(a, b) => Expr::sum(
                Expr::product(a.diff(var), (**b).clone()),
                Expr::product((**a).clone(), b.diff(var)),
            ),
            Expr::Div(a, b) => {
                let (a, b) = (&**a, &**b);
                if !b.depends_on(var) {
                    return Expr::quotient(a.diff(var), b.clone());
                }
                Expr::quotient(
                    Expr::difference(
                        Expr::product(a.diff(var), b.clone()),
                        Expr::product(a.clone(), b.diff(var)),
                    ),
                    Expr::pow(b.clone(), int(2)),
                )
            }
            Expr::Neg(a) => Expr::negate(a.diff(var)),
            Expr::Pow(a, r) => Expr::product(
                Expr::product(
                    Expr::Const(r.clone()),
                    Expr::pow((**a).clone(), r - Rational::one()),
                ),
                a.diff(var),
            ),
            Expr::Func(f, a) => {
                let inner = a.diff(var);
                let a = (**a).clone();
                let outer = match f {
                    Func::Sin => Expr::func(Func::Cos, a),
                    Func::Cos => Expr::negate(Expr::func(Func::Sin, a)),
                    Func::Tan => Expr::pow(Expr::func(Func::Cos, a), int(-2)),
                    Func::Exp => Expr::func(Func::Exp, a),
                    // d/dx log|x| = 1/x away from x = 0
                    Func::Log => match a {
                        Expr::Func(Func::Abs, x) => return Expr::quotient(x.diff(var), *x),
                        a => Expr::quotient(Expr::int(1), a),
                    },
                    Func::Sqrt => Expr::quotient(
                        Expr::int(1),
                        Expr::product(Expr::int(2), Expr::func(Func::Sqrt, a)),
                    ),
                    Func::Abs => Expr::quotient(a.clone(), Expr::func(Func::Abs, a)),
                };
                Expr::product(outer, inner)
            }
        }
    }

    /// Floating-point value; fails with a domain error naming the offending
    /// sub-expression.
    pub fn eval(&self, u: f64, v: f64) -> Result<f64> {
        let value = match self {
            Expr::Const(c) => c.to_f64().unwrap_or(f64::NAN),
            Expr::Var(Var::U) => u,
            Expr::Var(Var::V) => v,
            Expr::Add(a, b) => a.eval(u, v)? + b.eval(u, v)?,
            Expr::Sub(a, b) => a.eval(u, v)? - b.eval(u, v)?,
            Expr::Mul(a, b) => a.eval(u, v)? * b.eval(u, v)?,
            Expr::Div(a, b) => {
                let den = b.eval(u, v)?;
                if den == 0.0 {
                    return Err(self.domain("division by zero"));
                }
                a.eval(u, v)? / den
            }
            Expr::Neg(a) => -a.eval(u, v)?,
            Expr::Pow(a, r) => {
                let base = a.eval(u, v)?;
                if r.is_integer() {
                    let n = r.to_integer().to_i32().unwrap_or(i32::MAX);
                    if base == 0.0 && n < 0 {
                        return Err(self.domain("negative power of zero"));
                    }
                    base.powi(n)
                } else {
                    if base <= 0.0 {
                        return Err(self.domain("fractional power of a non-positive base"));
                    }
                    base.powf(r.to_f64().unwrap_or(f64::NAN))
                }
            }
            Expr::Func(f, a) => {
                let x = a.eval(u, v)?;
                match f {
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Tan => {
                        if x.cos() == 0.0 {
                            return Err(self.domain("pole of tan"));
                        }
                        x.tan()
                    }
                    Func::Exp => x.exp(),
                    Func::Log => {
                        if x <= 0.0 {
                            return Err(self.domain("log of a non-positive value"));
                        }
                        x.ln()
                    }
                    Func::Sqrt => {
                        if x < 0.0 {
                            return Err(self.domain("square root of a negative value"));
                        }
                        x.sqrt()
                    }
                    Func::Abs => x.abs(),
                }
            }
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(self.domain("non-finite value"))
        }
    }

    fn domain(&self, reason: &str) -> Error {
        Error::Domain {
            expr: self.to_string(),
            reason: reason.to_string(),
        }
    }

    /// Exact polynomial form, when the expression is a polynomial with
    /// rational coefficients.
    pub fn to_poly(&self) -> Option<Poly2> {
        Some(match self {
            Expr::Const(c) => Poly2::constant(c.clone()),
            Expr::Var(v) => Poly2::var(*v),
            Expr::Add(a, b) => a.to_poly()? + b.to_poly()?,
            Expr::Sub(a, b) => a.to_poly()? - b.to_poly()?,
            Expr::Mul(a, b) => a.to_poly()? * b.to_poly()?,
            Expr::Div(a, b) => {
                let den = b.to_poly()?.as_constant()?;
                if den.is_zero() {
                    return None;
                }
                a.to_poly()?.scale(&den.recip())
            }
            Expr::Neg(a) => -a.to_poly()?,
            Expr::Pow(a, r) => {
                if !r.is_integer() || r.is_negative() {
                    return None;
                }
                a.to_poly()?.pow(r.to_integer().to_u32()?)
            }
            Expr::Func(..) => return None,
        })
    }

    pub fn from_poly(p: &Poly2) -> Expr {
        let mut ordered: Vec<_> = p.terms().collect();
        ordered.sort_by_key(|&((i, j), _)| std::cmp::Reverse((i + j, i)));
        ordered.into_iter().fold(Expr::int(0), |acc, ((i, j), c)| {
            let m = Expr::product(
                Expr::pow(Expr::u(), int(i as i64)),
                Expr::pow(Expr::v(), int(j as i64)),
            );
            Expr::sum(acc, Expr::product(Expr::Const(c.clone()), m))
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Const(c) if !c.is_integer() => 2,
            Expr::Neg(_) => 3,
            Expr::Const(c) if c.is_negative() => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => fmt_rational(c, f),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Add(a, b) => {
                write_child(f, a, 1)?;
                f.write_str(" + ")?;
                write_child(f, b, 2)
            }
            Expr::Sub(a, b) => {
                write_child(f, a, 1)?;
                f.write_str(" - ")?;
                write_child(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_child(f, a, 2)?;
                f.write_str("*")?;
                write_child(f, b, 3)
            }
            Expr::Div(a, b) => {
                write_child(f, a, 2)?;
                f.write_str("/")?;
                write_child(f, b, 3)
            }
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_child(f, a, 3)
            }
            Expr::Pow(a, r) => {
                write_child(f, a, 5)?;
                if r.is_integer() && !r.is_negative() {
                    write!(f, "^{}", r.numer())
                } else {
                    f.write_str("^(")?;
                    fmt_rational(r, f)?;
                    f.write_str(")")
                }
            }
            Expr::Func(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Rational, String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Token {
    fn text(&self) -> String {
        match self {
            Token::Number(_, s) | Token::Ident(s) => s.clone(),
            Token::Plus => "+".into(),
            Token::Minus => "-".into(),
            Token::Star => "*".into(),
            Token::Slash => "/".into(),
            Token::Caret => "^".into(),
            Token::LParen => "(".into(),
            Token::RParen => ")".into(),
        }
    }
}

fn err(position: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { position, kind }
}

fn tokenize(text: &str) -> std::result::Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, ch) = chars[k];
        match ch {
            c if c.is_whitespace() => {
                k += 1;
            }
            '0'..='9' | '.' => {
                let start = k;
                while k < chars.len() && (chars[k].1.is_ascii_digit() || chars[k].1 == '.') {
                    k += 1;
                }
                let s: String = chars[start..k].iter().map(|&(_, c)| c).collect();
                let value = parse_decimal(&s)
                    .ok_or_else(|| err(pos, ParseErrorKind::InvalidNumber(s.clone())))?;
                out.push((pos, Token::Number(value, s)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = k;
                while k < chars.len() && chars[k].1.is_ascii_alphanumeric() {
                    k += 1;
                }
                let s: String = chars[start..k].iter().map(|&(_, c)| c).collect();
                out.push((pos, Token::Ident(s)));
            }
            _ => {
                let tok = match ch {
                    '+' => Token::Plus,
                    '-' | '\u{2212}' => Token::Minus,
                    '*' | '\u{00b7}' => Token::Star,
                    '/' => Token::Slash,
                    '^' => Token::Caret,
                    '(' => Token::LParen,
                    ')' => Token::RParen,
                    other => return Err(err(pos, ParseErrorKind::UnexpectedChar(other))),
                };
                out.push((pos, tok));
                k += 1;
            }
        }
    }
    Ok(out)
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (whole, frac) = match s.split_once('.') {
        Some((w, f)) => (w, f),
        None => (s, ""),
    };
    if (whole.is_empty() && frac.is_empty()) || frac.contains('.') {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let n: BigInt = digits.parse().ok()?;
    let d = BigInt::from(10u32).pow(frac.len() as u32);
    Some(Rational::new(n, d))
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => err(self.offset(), ParseErrorKind::UnexpectedToken(t.text())),
            None => err(self.end, ParseErrorKind::UnexpectedEnd),
        }
    }

    fn expect(&mut self, want: Token) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn expr(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = Expr::sum(acc, self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = Expr::difference(acc, self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = Expr::product(acc, self.unary()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let den = self.unary()?;
                    if den.as_const().is_some_and(Zero::is_zero) {
                        return Err(err(
                            at,
                            ParseErrorKind::InvalidNumber("division by zero".into()),
                        ));
                    }
                    acc = Expr::quotient(acc, den);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> std::result::Result<Expr, ParseError> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(Expr::negate(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> std::result::Result<Expr, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exponent = self.exponent()?;
        if self.peek() == Some(&Token::Caret) {
            return Err(err(
                self.offset(),
                ParseErrorKind::InvalidExponent("chained powers need parentheses".into()),
            ));
        }
        if base.as_const().is_some_and(Zero::is_zero) && exponent.is_negative() {
            return Err(err(
                self.offset(),
                ParseErrorKind::InvalidExponent("negative power of zero".into()),
            ));
        }
        Ok(Expr::pow(base, exponent))
    }

    fn signed_int(&mut self) -> std::result::Result<BigInt, ParseError> {
        let negative = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.offset();
        match self.next() {
            Some(Token::Number(n, text)) if n.is_integer() && !text.contains('.') => {
                let n = n.to_integer();
                Ok(if negative { -n } else { n })
            }
            Some(t) => Err(err(at, ParseErrorKind::InvalidExponent(t.text()))),
            None => Err(err(self.end, ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn exponent(&mut self) -> std::result::Result<Rational, ParseError> {
        if self.peek() == Some(&Token::LParen) {
            self.pos += 1;
            let num = self.signed_int()?;
            let den = if self.peek() == Some(&Token::Slash) {
                self.pos += 1;
                let at = self.offset();
                let d = self.signed_int()?;
                if d.is_zero() {
                    return Err(err(
                        at,
                        ParseErrorKind::InvalidExponent("zero denominator".into()),
                    ));
                }
                d
            } else {
                BigInt::one()
            };
            self.expect(Token::RParen)?;
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(self.signed_int()?))
        }
    }

    fn base(&mut self) -> std::result::Result<Expr, ParseError> {
        let at = self.offset();
        match self.next() {
            Some(Token::Number(n, _)) => Ok(Expr::Const(n)),
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Some(Token::Ident(name)) => match name.as_str() {
                "u" => Ok(Expr::u()),
                "v" => Ok(Expr::v()),
                other => match Func::from_name(other) {
                    Some(func) => {
                        self.expect(Token::LParen)?;
                        let arg = self.expr()?;
                        self.expect(Token::RParen)?;
                        Ok(Expr::func(func, arg))
                    }
                    None => Err(err(at, ParseErrorKind::UnknownIdentifier(name))),
                },
            },
            Some(t) => {
                self.pos -= 1;
                Err(err(at, ParseErrorKind::UnexpectedToken(t.text())))
            }
            None => Err(err(self.end, ParseErrorKind::UnexpectedEnd)),
        }
    }
}

/// Parses an expression in `u` and `v`.
pub fn parse_expr(text: &str) -> std::result::Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}

impl std::str::FromStr for Expr {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_expr(s)
    }
}
