//! Ring specs, ideal expressions and series literals.
//!
//! Ring specs are `g1,g2,...` (numerical semigroup) or `axis:n`. Ideal
//! expressions follow
//!
//! ```text
//! expr  := R | m | canonical | conductor | mpow:S | gens:LIST
//!        | trace(expr) | inverse(expr) | closure(expr)
//!        | colon(expr, expr) | product(expr, expr, ...) | sum(expr, expr, ...)
//! ```
//!
//! Whitespace is ignored. Over a semigroup ring `gens:` takes integer values
//! and stops at the first comma not followed by an integer, so
//! `colon(gens:8,9, m)` reads as expected. Over an axis ring only `m`,
//! `mpow:S` and `gens:` are accepted, the latter with series such as
//! `a - b, 2*c^3`; the branches are named `a`, `b`, `c`, ... in order.

use std::fmt;
use std::sync::Arc;

use elias_core::series::{int, power_generators, BranchedRingModel, SeriesElement};
use elias_core::{NumericalSemigroup, ValueIdeal};
use num_traits::Zero;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Zero-based character offset into the input.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }

    /// The input with a caret under the offending character.
    pub fn render(&self, src: &str) -> String {
        format!("{src}\n{}^ {}", " ".repeat(self.position), self.message)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.message, self.position + 1)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n = text
                .parse()
                .map_err(|_| ParseError::new(start, "integer out of range"))?;
            out.push((start, Tok::Int(n)));
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "(),:+-*^/".contains(c) {
            out.push((start, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::new(start, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Cursor {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Cursor {
    fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Cursor {
            toks: tokenize(src)?,
            pos: 0,
            end: src.chars().count(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(p, _)| p)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let negative = self.eat('-');
        match self.peek() {
            Some(&Tok::Int(n)) => {
                self.pos += 1;
                Ok(if negative { -n } else { n })
            }
            _ => Err(self.error("expected an integer")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("unexpected trailing input")),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.offset(), message)
    }
}

#[derive(Debug, Clone)]
pub enum Ring {
    Semigroup(Arc<NumericalSemigroup>),
    Axes(usize),
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Semigroup(h) => write!(f, "{h}"),
            Ring::Axes(n) => write!(f, "axis:{n}"),
        }
    }
}

pub fn parse_ring(src: &str) -> Result<Ring, CliError> {
    let mut cur = Cursor::new(src)?;
    if let Some(Tok::Ident(name)) = cur.peek() {
        if name != "axis" {
            return Err(cur.error(format!("unknown ring '{name}'")).into());
        }
        cur.next();
        cur.expect(':')?;
        let at = cur.offset();
        let n = cur.int()?;
        cur.finish()?;
        if n < 2 {
            return Err(ParseError::new(at, "an axis ring needs at least two branches").into());
        }
        return Ok(Ring::Axes(n as usize));
    }
    let mut gens = vec![cur.int()?];
    while cur.eat(',') {
        gens.push(cur.int()?);
    }
    cur.finish()?;
    Ok(Ring::Semigroup(Arc::new(NumericalSemigroup::from_generators(&gens)?)))
}

#[derive(Debug, Clone, PartialEq)]
pub enum IdealExpr {
    Unit,
    Maximal,
    Power(u32),
    Gens(Vec<i64>),
    SeriesGens(Vec<SeriesElement>),
    Canonical,
    Conductor,
    Trace(Box<IdealExpr>),
    Inverse(Box<IdealExpr>),
    Closure(Box<IdealExpr>),
    Colon(Box<IdealExpr>, Box<IdealExpr>),
    Product(Vec<IdealExpr>),
    Sum(Vec<IdealExpr>),
}

pub fn parse_ideal(src: &str, ring: &Ring) -> Result<IdealExpr, ParseError> {
    let mut cur = Cursor::new(src)?;
    let expr = match ring {
        Ring::Semigroup(_) => expr(&mut cur)?,
        Ring::Axes(n) => axis_expr(&mut cur, *n)?,
    };
    cur.finish()?;
    Ok(expr)
}

fn ident(cur: &mut Cursor) -> Result<(usize, String), ParseError> {
    let at = cur.offset();
    match cur.next() {
        Some(Tok::Ident(name)) => Ok((at, name)),
        _ => Err(ParseError::new(at, "expected an ideal expression")),
    }
}

fn power(cur: &mut Cursor) -> Result<u32, ParseError> {
    cur.expect(':')?;
    let at = cur.offset();
    let s = cur.int()?;
    u32::try_from(s).map_err(|_| ParseError::new(at, "power must be non-negative"))
}

fn expr(cur: &mut Cursor) -> Result<IdealExpr, ParseError> {
    let (at, name) = ident(cur)?;
    let leaf = match name.as_str() {
        "R" => Some(IdealExpr::Unit),
        "m" => Some(IdealExpr::Maximal),
        "canonical" => Some(IdealExpr::Canonical),
        "conductor" => Some(IdealExpr::Conductor),
        "mpow" => Some(IdealExpr::Power(power(cur)?)),
        "gens" => {
            cur.expect(':')?;
            let mut vals = vec![cur.int()?];
            while cur.peek() == Some(&Tok::Sym(','))
                && matches!(
                    (cur.peek_at(1), cur.peek_at(2)),
                    (Some(Tok::Int(_)), _) | (Some(Tok::Sym('-')), Some(Tok::Int(_)))
                )
            {
                cur.next();
                vals.push(cur.int()?);
            }
            Some(IdealExpr::Gens(vals))
        }
        _ => None,
    };
    if let Some(leaf) = leaf {
        return Ok(leaf);
    }
    let arity = match name.as_str() {
        "trace" | "inverse" | "closure" => 1..=1,
        "colon" => 2..=2,
        "product" | "sum" => 2..=usize::MAX,
        _ => return Err(ParseError::new(at, format!("unknown ideal '{name}'"))),
    };
    cur.expect('(')?;
    let mut args = vec![expr(cur)?];
    while cur.eat(',') {
        args.push(expr(cur)?);
    }
    if !arity.contains(&args.len()) {
        return Err(cur.error(format!("'{name}' takes {} arguments, got {}", arity_text(&arity), args.len())));
    }
    cur.expect(')')?;
    let mut args = args.into_iter();
    let mut one = || Box::new(args.next().expect("arity checked"));
    Ok(match name.as_str() {
        "trace" => IdealExpr::Trace(one()),
        "inverse" => IdealExpr::Inverse(one()),
        "closure" => IdealExpr::Closure(one()),
        "colon" => IdealExpr::Colon(one(), one()),
        "product" => IdealExpr::Product(args.collect()),
        _ => IdealExpr::Sum(args.collect()),
    })
}

fn arity_text(arity: &std::ops::RangeInclusive<usize>) -> String {
    if arity.end() == &usize::MAX {
        format!("at least {}", arity.start())
    } else {
        arity.start().to_string()
    }
}

fn axis_expr(cur: &mut Cursor, branches: usize) -> Result<IdealExpr, ParseError> {
    let (at, name) = ident(cur)?;
    match name.as_str() {
        "m" => Ok(IdealExpr::Maximal),
        "mpow" => Ok(IdealExpr::Power(power(cur)?)),
        "gens" => {
            cur.expect(':')?;
            let mut gens = vec![series(cur, branches)?];
            while cur.eat(',') {
                gens.push(series(cur, branches)?);
            }
            Ok(IdealExpr::SeriesGens(gens))
        }
        _ => Err(ParseError::new(
            at,
            format!("'{name}' is not available over axis rings (use m, mpow:S or gens:)"),
        )),
    }
}

/// Parses a complete series literal over `branches` lines; the variable
/// names are `t` for one branch and `a`, `b`, ... otherwise.
pub fn parse_series(src: &str, branches: usize) -> Result<SeriesElement, ParseError> {
    let mut cur = Cursor::new(src)?;
    let s = series(&mut cur, branches)?;
    cur.finish()?;
    Ok(s)
}

fn branch_of(name: &str, branches: usize) -> Option<usize> {
    if branches == 1 {
        return (name == "t").then_some(0);
    }
    let mut chars = name.chars();
    match (chars.next(), chars.next()) {
        (Some(c @ 'a'..='z'), None) => Some(c as usize - 'a' as usize).filter(|&b| b < branches),
        _ => None,
    }
}

fn series(cur: &mut Cursor, branches: usize) -> Result<SeriesElement, ParseError> {
    let mut acc = SeriesElement::zero(branches);
    let mut first = true;
    loop {
        let negative = if cur.eat('-') {
            true
        } else if first || cur.eat('+') {
            false
        } else {
            break;
        };
        first = false;
        let term = term(cur, branches)?;
        acc = if negative { &acc - &term } else { &acc + &term };
        if !matches!(cur.peek(), Some(Tok::Sym('+' | '-'))) {
            break;
        }
    }
    Ok(acc)
}

fn term(cur: &mut Cursor, branches: usize) -> Result<SeriesElement, ParseError> {
    let mut coef = None;
    if let Some(&Tok::Int(n)) = cur.peek() {
        cur.next();
        let mut c = int(n);
        if cur.eat('/') {
            let at = cur.offset();
            let d = cur.int()?;
            if d == 0 {
                return Err(ParseError::new(at, "zero denominator"));
            }
            c /= int(d);
        }
        coef = Some(c);
        if !cur.eat('*') {
            return Ok(SeriesElement::constant(branches, coef.expect("just set")));
        }
    }
    let at = cur.offset();
    let name = match cur.next() {
        Some(Tok::Ident(name)) => name,
        _ => return Err(ParseError::new(at, "expected a coefficient or a variable")),
    };
    let branch = branch_of(&name, branches)
        .ok_or_else(|| ParseError::new(at, format!("unknown variable '{name}'")))?;
    let exp = if cur.eat('^') { cur.int()? } else { 1 };
    let c = coef.unwrap_or_else(|| int(1));
    if c.is_zero() {
        return Ok(SeriesElement::zero(branches));
    }
    Ok(SeriesElement::monomial(branches, branch, exp, c))
}

/// Evaluates `expr` to a value ideal of `h`.
pub fn eval(expr: &IdealExpr, h: &Arc<NumericalSemigroup>) -> Result<ValueIdeal, CliError> {
    let many = |args: &[IdealExpr]| -> Result<Vec<ValueIdeal>, CliError> {
        args.iter().map(|a| eval(a, h)).collect()
    };
    Ok(match expr {
        IdealExpr::Unit => ValueIdeal::unit(h),
        IdealExpr::Maximal => ValueIdeal::maximal(h),
        IdealExpr::Power(s) => ValueIdeal::mpower(h, *s),
        IdealExpr::Gens(vals) => ValueIdeal::from_generators(h, vals)?,
        IdealExpr::Canonical => ValueIdeal::canonical(h),
        IdealExpr::Conductor => ValueIdeal::conductor(h),
        IdealExpr::Trace(a) => eval(a, h)?.trace(),
        IdealExpr::Inverse(a) => eval(a, h)?.inverse(),
        IdealExpr::Closure(a) => eval(a, h)?.integral_closure()?,
        IdealExpr::Colon(a, b) => eval(a, h)?.colon(&eval(b, h)?)?,
        IdealExpr::Product(args) => many(args)?
            .into_iter()
            .try_fold(ValueIdeal::unit(h), |acc, i| acc.product(&i))?,
        IdealExpr::Sum(args) => {
            let mut parts = many(args)?.into_iter();
            let first = parts.next().expect("at least two arguments");
            parts.try_fold(first, |acc, i| acc.sum(&i))?
        }
        IdealExpr::SeriesGens(_) => {
            return Err(CliError::Unsupported("series generators over a semigroup ring".into()))
        }
    })
}

/// Generators of an axis-ring ideal expression inside `model`.
pub fn eval_series(
    expr: &IdealExpr,
    model: &BranchedRingModel,
) -> Result<Vec<SeriesElement>, CliError> {
    match expr {
        IdealExpr::Maximal => Ok(model.maximal_ideal_generators().to_vec()),
        IdealExpr::Power(s) => Ok(power_generators(model, *s)),
        IdealExpr::SeriesGens(gens) => Ok(gens.clone()),
        _ => Err(CliError::Unsupported("only m, mpow:S and gens: over axis rings".into())),
    }
}
