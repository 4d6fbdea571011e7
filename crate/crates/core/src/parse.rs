//! Recursive-descent parsing of scalars, polynomials, rational functions,
//! Ore elements and B₁ operators.
//!
//! One expression grammar serves every value kind:
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := power (('*'|'/')? power)*
//! power  := atom ('^' nat)?
//! atom   := int | ident | '(' expr ')'
//! ```
//!
//! Juxtaposition multiplies, so `2x` reads as `2*x`. Which identifiers are
//! allowed, and what `/` may divide by, depends on the value kind.

use num_bigint::BigInt;
use thiserror::Error;

use crate::error::Result;
use crate::ore::{OreAlgebra, OreElement};
use crate::poly::{Poly, RationalFunction};
use crate::scalar::{FieldDescriptor, FieldElement, Rational};
use crate::weyl::B1Operator;

/// Exponents above this are rejected rather than expanded.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {}", .expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<String> },
    #[error("unknown variable '{name}' at offset {offset}")]
    UnknownVariable { offset: usize, name: String },
    #[error("'{what}' at offset {offset} is not in {field}")]
    NotInField {
        offset: usize,
        what: String,
        field: String,
    },
    #[error("at offset {offset}: {message}")]
    Domain { offset: usize, message: String },
}

impl ParseError {
    pub fn syntax(offset: usize, expected: &[&str]) -> Self {
        ParseError::Syntax {
            offset,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownVariable { offset, .. }
            | ParseError::NotInField { offset, .. }
            | ParseError::Domain { offset, .. } => *offset,
        }
    }
}

type PResult<T> = std::result::Result<T, ParseError>;

enum Lookup<V> {
    Value(V),
    Unknown,
    NotInField(String),
}

trait Evaluator {
    type Value: Clone;
    fn integer(&self, n: BigInt) -> Self::Value;
    fn variable(&self, name: &str) -> Lookup<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> std::result::Result<Self::Value, String>;
    fn one(&self) -> Self::Value;
}

struct Parser<'s, E> {
    src: &'s str,
    pos: usize,
    eval: E,
}

impl<'s, E: Evaluator> Parser<'s, E> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn run(mut self) -> PResult<E::Value> {
        if self.peek().is_none() {
            return Err(ParseError::syntax(self.pos, &["expression"]));
        }
        let v = self.expr()?;
        if self.peek().is_some() {
            return Err(ParseError::syntax(self.pos, &["'+'", "'-'", "'*'", "'/'", "end of input"]));
        }
        Ok(v)
    }

    fn expr(&mut self) -> PResult<E::Value> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { self.eval.neg(&first) } else { first };
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.eval.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.eval.add(&acc, &self.eval.neg(&t));
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(')
    }

    fn term(&mut self) -> PResult<E::Value> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                let p = self.power()?;
                acc = self.eval.mul(&acc, &p);
            } else if self.peek() == Some('/') {
                let at = self.pos;
                self.pos += 1;
                let p = self.power()?;
                acc = self
                    .eval
                    .div(&acc, &p)
                    .map_err(|message| ParseError::Domain { offset: at, message })?;
            } else if self.starts_atom() {
                let p = self.power()?;
                acc = self.eval.mul(&acc, &p);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> PResult<E::Value> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(ParseError::syntax(start, &["natural number"]));
        }
        self.pos += digits;
        let exp = self.src[start..self.pos]
            .parse::<u32>()
            .ok()
            .filter(|e| *e <= MAX_EXPONENT)
            .ok_or_else(|| ParseError::Domain {
                offset: start,
                message: format!("exponent exceeds {MAX_EXPONENT}"),
            })?;
        let mut acc = self.eval.one();
        for _ in 0..exp {
            acc = self.eval.mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> PResult<E::Value> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(ParseError::syntax(self.pos, &["number", "variable", "'('"])),
        };
        let rest = &self.src[start..];
        if self.eat('(') {
            let v = self.expr()?;
            if !self.eat(')') {
                return Err(ParseError::syntax(self.pos, &["')'"]));
            }
            return Ok(v);
        }
        let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
        if digits > 0 {
            self.pos += digits;
            let n: BigInt = rest[..digits].parse().expect("ascii digits");
            return Ok(self.eval.integer(n));
        }
        let ident = rest
            .bytes()
            .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
            .count();
        if ident > 0 {
            let name = &rest[..ident];
            self.pos += ident;
            return match self.eval.variable(name) {
                Lookup::Value(v) => Ok(v),
                Lookup::Unknown => Err(ParseError::UnknownVariable {
                    offset: start,
                    name: name.to_string(),
                }),
                Lookup::NotInField(field) => Err(ParseError::NotInField {
                    offset: start,
                    what: name.to_string(),
                    field,
                }),
            };
        }
        Err(ParseError::syntax(start, &["number", "variable", "'('"]))
    }
}

fn parse_with<E: Evaluator>(src: &str, eval: E) -> Result<E::Value> {
    Ok(Parser { src, pos: 0, eval }.run()?)
}

fn zeta_lookup<V>(field: &FieldDescriptor, wrap: impl Fn(FieldElement) -> V) -> Lookup<V> {
    if field.is_rational() {
        Lookup::NotInField(field.to_string())
    } else {
        Lookup::Value(wrap(field.zeta()))
    }
}

struct ScalarEval(FieldDescriptor);

impl Evaluator for ScalarEval {
    type Value = FieldElement;
    fn integer(&self, n: BigInt) -> FieldElement {
        self.0.from_rational(Rational::from_integer(n))
    }
    fn variable(&self, name: &str) -> Lookup<FieldElement> {
        match name {
            "zeta" => zeta_lookup(&self.0, |z| z),
            _ => Lookup::Unknown,
        }
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a + b
    }
    fn neg(&self, a: &FieldElement) -> FieldElement {
        -a
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a * b
    }
    fn div(&self, a: &FieldElement, b: &FieldElement) -> std::result::Result<FieldElement, String> {
        a.checked_div(b).map_err(|e| e.to_string())
    }
    fn one(&self) -> FieldElement {
        self.0.one()
    }
}

struct PolyEval(FieldDescriptor);

fn constant_of(p: &Poly) -> Option<FieldElement> {
    (p.is_constant()).then(|| p.coeff(0))
}

impl Evaluator for PolyEval {
    type Value = Poly;
    fn integer(&self, n: BigInt) -> Poly {
        Poly::constant(&ScalarEval(self.0.clone()).integer(n))
    }
    fn variable(&self, name: &str) -> Lookup<Poly> {
        match name {
            "x" => Lookup::Value(Poly::x(&self.0)),
            "zeta" => zeta_lookup(&self.0, |z| Poly::constant(&z)),
            _ => Lookup::Unknown,
        }
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }
    fn neg(&self, a: &Poly) -> Poly {
        -a
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a * b
    }
    fn div(&self, a: &Poly, b: &Poly) -> std::result::Result<Poly, String> {
        let c = constant_of(b).ok_or("division by a nonconstant polynomial")?;
        let inv = c.inv().map_err(|e| e.to_string())?;
        Ok(a.scale(&inv))
    }
    fn one(&self) -> Poly {
        Poly::one(&self.0)
    }
}

struct RatFunEval;

impl Evaluator for RatFunEval {
    type Value = RationalFunction;
    fn integer(&self, n: BigInt) -> RationalFunction {
        RationalFunction::from_poly(PolyEval(FieldDescriptor::rational()).integer(n))
    }
    fn variable(&self, name: &str) -> Lookup<RationalFunction> {
        match name {
            "x" => Lookup::Value(RationalFunction::x(&FieldDescriptor::rational())),
            "zeta" => Lookup::NotInField("Q".into()),
            _ => Lookup::Unknown,
        }
    }
    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a + b
    }
    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        -a
    }
    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a * b
    }
    fn div(&self, a: &RationalFunction, b: &RationalFunction) -> std::result::Result<RationalFunction, String> {
        a.checked_div(b).map_err(|e| e.to_string())
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one(&FieldDescriptor::rational())
    }
}

struct OreEval(OreAlgebra);

impl Evaluator for OreEval {
    type Value = OreElement;
    fn integer(&self, n: BigInt) -> OreElement {
        self.0.from_poly(PolyEval(self.0.field().clone()).integer(n))
    }
    fn variable(&self, name: &str) -> Lookup<OreElement> {
        match name {
            "x" => Lookup::Value(self.0.x()),
            "y" => Lookup::Value(self.0.y()),
            "zeta" => zeta_lookup(self.0.field(), |z| self.0.scalar(&z)),
            _ => Lookup::Unknown,
        }
    }
    fn add(&self, a: &OreElement, b: &OreElement) -> OreElement {
        a + b
    }
    fn neg(&self, a: &OreElement) -> OreElement {
        -a
    }
    fn mul(&self, a: &OreElement, b: &OreElement) -> OreElement {
        a * b
    }
    fn div(&self, a: &OreElement, b: &OreElement) -> std::result::Result<OreElement, String> {
        let c = b
            .as_poly()
            .as_ref()
            .and_then(constant_of)
            .ok_or("division by a non-scalar element")?;
        let inv = c.inv().map_err(|e| e.to_string())?;
        Ok(a.scale(&inv))
    }
    fn one(&self) -> OreElement {
        self.0.one()
    }
}

struct B1Eval;

impl Evaluator for B1Eval {
    type Value = B1Operator;
    fn integer(&self, n: BigInt) -> B1Operator {
        B1Operator::from_function(RatFunEval.integer(n))
    }
    fn variable(&self, name: &str) -> Lookup<B1Operator> {
        match name {
            "x" => Lookup::Value(B1Operator::x()),
            "D" => Lookup::Value(B1Operator::d()),
            "zeta" => Lookup::NotInField("Q".into()),
            _ => Lookup::Unknown,
        }
    }
    fn add(&self, a: &B1Operator, b: &B1Operator) -> B1Operator {
        a + b
    }
    fn neg(&self, a: &B1Operator) -> B1Operator {
        -a
    }
    fn mul(&self, a: &B1Operator, b: &B1Operator) -> B1Operator {
        a * b
    }
    fn div(&self, a: &B1Operator, b: &B1Operator) -> std::result::Result<B1Operator, String> {
        if b.order().unwrap_or(0) > 0 {
            return Err("division by an operator involving D".into());
        }
        let inv = b.coeff(0).inv().map_err(|e| e.to_string())?;
        Ok(a * &B1Operator::from_function(inv))
    }
    fn one(&self) -> B1Operator {
        B1Operator::one()
    }
}

/// A field element such as `1/2 + 3*zeta^2`.
pub fn parse_scalar(src: &str, field: &FieldDescriptor) -> Result<FieldElement> {
    parse_with(src, ScalarEval(field.clone()))
}

pub fn parse_rational(src: &str) -> Result<Rational> {
    let v = parse_scalar(src, &FieldDescriptor::rational())?;
    Ok(v.as_rational().expect("rational field").clone())
}

/// A polynomial in `x` over `field`, e.g. `x^3 - x` or `(zeta)*x + 1`.
///
/// ```
/// use orext::{parse::parse_poly, FieldDescriptor};
/// let p = parse_poly("1/2*x^2 + 3", &FieldDescriptor::rational()).unwrap();
/// assert_eq!(p.to_string(), "1/2*x^2+3");
/// assert_eq!(parse_poly("x^^2", &FieldDescriptor::rational()).unwrap_err().to_string(),
///            "syntax error at offset 2: expected natural number");
/// ```
pub fn parse_poly(src: &str, field: &FieldDescriptor) -> Result<Poly> {
    parse_with(src, PolyEval(field.clone()))
}

/// A rational function in `x` over ℚ, e.g. `2*x/(x^2-1)`.
pub fn parse_ratfun(src: &str) -> Result<RationalFunction> {
    parse_with(src, RatFunEval)
}

/// An element of Λ(f) in `x` and `y`; products are brought into normal form,
/// so `y*x` reads as `x*y + f`.
pub fn parse_ore(src: &str, algebra: &OreAlgebra) -> Result<OreElement> {
    parse_with(src, OreEval(algebra.clone()))
}

/// An operator of B₁ in `x` and `D` (for ∂).
pub fn parse_b1(src: &str) -> Result<B1Operator> {
    parse_with(src, B1Eval)
}
