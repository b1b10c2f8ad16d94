//! Ring specs and polynomial literals.
//!
//! ```text
//! ring  := "ZZ" | "ZZmod" "(" int ")" | poly | "quot" "(" poly "," "[" exprs "]" ")"
//! poly  := "poly" "(" field "," "[" idents "]" ")"
//! field := "QQ" | "GF" "(" int ")"
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := "-" unary | atom ("^" int)?
//! atom  := int | ident | "(" expr ")"
//! ```
//!
//! Division is only by nonzero constants of a coefficient field.

use super::field::Field;
use super::ring::{CompRing, Elem, PolyRing};
use crate::error::KrullError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// A parse failure at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TextError {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl TextError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        TextError {
            offset,
            message: message.into(),
            expected: Vec::new(),
        }
    }

    fn expected(offset: usize, found: &str, expected: &[&str]) -> Self {
        TextError {
            offset,
            message: format!("unexpected {found}"),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn into_krull(self, text: &str) -> KrullError {
        let (line, col) = line_col(text, self.offset);
        let mut msg = format!("{line}:{col}: {}", self.message);
        if !self.expected.is_empty() {
            msg.push_str(&format!(" (expected {})", self.expected.join(" or ")));
        }
        KrullError::input(msg)
    }
}

/// 1-based line and column of a byte offset.
pub fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, col)
}

pub fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_alphabetic()) && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("integer `{n}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, TextError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(text[s..i].parse().expect("digits")), s));
        } else if c.is_ascii_alphabetic() {
            let s = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[s..i].to_string()), s));
        } else if "+-*/^()[],".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            return Err(TextError::new(i, format!("unexpected character `{ch}`")));
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), TextError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(TextError::expected(self.offset(), &describe(self.peek()), &[&format!("`{c}`")]))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), TextError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            t => Err(TextError::expected(self.offset(), &describe(t), &[&format!("`{kw}`")])),
        }
    }

    fn int(&mut self) -> Result<BigInt, TextError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(n)
            }
            t => Err(TextError::expected(self.offset(), &describe(&t), &["integer"])),
        }
    }

    fn end(&self) -> Result<(), TextError> {
        match self.peek() {
            Tok::End => Ok(()),
            t => Err(TextError::expected(self.offset(), &describe(t), &["end of input"])),
        }
    }

    fn expr(&mut self, r: &CompRing) -> Result<Elem, TextError> {
        let mut acc = self.term(r)?;
        loop {
            if self.eat('+') {
                let t = self.term(r)?;
                acc = r.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term(r)?;
                acc = r.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, r: &CompRing) -> Result<Elem, TextError> {
        let mut acc = self.unary(r)?;
        loop {
            if self.eat('*') {
                let t = self.unary(r)?;
                acc = r.mul(&acc, &t);
            } else if *self.peek() == Tok::Sym('/') {
                let at = self.offset();
                self.pos += 1;
                let d = self.unary(r)?;
                acc = divide(r, &acc, &d).ok_or_else(|| {
                    TextError::new(at, "division is only by nonzero constants of a coefficient field")
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self, r: &CompRing) -> Result<Elem, TextError> {
        if self.eat('-') {
            let v = self.unary(r)?;
            return Ok(r.neg(&v));
        }
        let base = self.atom(r)?;
        if self.eat('^') {
            let at = self.offset();
            let e = self.int()?;
            let e = e.to_u32().ok_or_else(|| TextError::new(at, "exponent too large"))?;
            return Ok(r.pow(&base, e));
        }
        Ok(base)
    }

    fn atom(&mut self, r: &CompRing) -> Result<Elem, TextError> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => Ok(r.from_int(n)),
            Tok::Ident(name) => r.var(&name).map_err(|e| TextError::new(at, message_of(e))),
            Tok::Sym('(') => {
                let v = self.expr(r)?;
                self.expect(')')?;
                Ok(v)
            }
            t => Err(TextError::expected(at, &describe(&t), &["integer", "variable", "`(`", "`-`"])),
        }
    }

    fn field(&mut self) -> Result<Field, TextError> {
        let at = self.offset();
        match self.bump() {
            Tok::Ident(s) if s == "QQ" => Ok(Field::Rationals),
            Tok::Ident(s) if s == "GF" => {
                self.expect('(')?;
                let pat = self.offset();
                let p = self.int()?;
                self.expect(')')?;
                let p = p.to_u64().ok_or_else(|| TextError::new(pat, "characteristic too large"))?;
                Field::prime(p).map_err(|e| TextError::new(pat, message_of(e)))
            }
            t => Err(TextError::expected(at, &describe(&t), &["`QQ`", "`GF`"])),
        }
    }

    fn poly_ring(&mut self) -> Result<PolyRing, TextError> {
        self.keyword("poly")?;
        self.expect('(')?;
        let field = self.field()?;
        self.expect(',')?;
        self.expect('[')?;
        let at = self.offset();
        let mut vars = Vec::new();
        if !self.eat(']') {
            loop {
                match self.bump() {
                    Tok::Ident(v) => vars.push(v),
                    t => return Err(TextError::expected(self.toks[self.pos.saturating_sub(1)].1, &describe(&t), &["variable"])),
                }
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        self.expect(')')?;
        PolyRing::new(field, vars).map_err(|e| TextError::new(at, message_of(e)))
    }

    fn ring(&mut self) -> Result<CompRing, TextError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Ident(s) if s == "ZZ" => {
                self.pos += 1;
                Ok(CompRing::Integers)
            }
            Tok::Ident(s) if s == "ZZmod" => {
                self.pos += 1;
                self.expect('(')?;
                let nat = self.offset();
                let n = self.int()?;
                self.expect(')')?;
                CompRing::integers_mod(n).map_err(|e| TextError::new(nat, message_of(e)))
            }
            Tok::Ident(s) if s == "poly" => Ok(CompRing::Poly(self.poly_ring()?)),
            Tok::Ident(s) if s == "quot" => {
                self.pos += 1;
                self.expect('(')?;
                let base = self.poly_ring()?;
                self.expect(',')?;
                self.expect('[')?;
                let host = CompRing::Poly(base.clone());
                let mut modulus = Vec::new();
                if !self.eat(']') {
                    loop {
                        modulus.push(self.expr(&host)?.as_poly().clone());
                        if self.eat(']') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                self.expect(')')?;
                CompRing::quotient(base, modulus).map_err(|e| TextError::new(at, message_of(e)))
            }
            t => Err(TextError::expected(at, &describe(&t), &["`ZZ`", "`ZZmod`", "`poly`", "`quot`"])),
        }
    }
}

fn message_of(e: KrullError) -> String {
    match e {
        KrullError::Input(m) | KrullError::Resource(m) | KrullError::Contract(m) | KrullError::Unsupported(m) => m,
    }
}

fn divide(r: &CompRing, a: &Elem, d: &Elem) -> Option<Elem> {
    let field = r.field()?;
    let c = d.as_poly().as_constant()?;
    if c.is_zero() {
        return None;
    }
    let inv: BigRational = field.inv(&c);
    Some(r.mul(a, &r.from_scalar(&inv)?))
}

pub fn parse_elem(r: &CompRing, text: &str) -> Result<Elem, TextError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr(r)?;
    p.end()?;
    Ok(e)
}

pub fn parse_ring(text: &str) -> Result<CompRing, TextError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let r = p.ring()?;
    p.end()?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_round_trip() {
        let r = CompRing::parse("poly(QQ, [x, y])").unwrap();
        for s in ["x^2 - 2*x*y + 1/2", "-x + y", "0", "3*x^3*y - 7"] {
            let e = r.parse_elem(s).unwrap();
            assert_eq!(r.parse_elem(&r.format(&e)).unwrap(), e);
        }
        let e = r.parse_elem("(x+y)^2 - (x-y)^2").unwrap();
        assert_eq!(r.format(&e), "4*x*y");
    }

    #[test]
    fn ring_specs_round_trip() {
        for s in ["ZZ", "ZZmod(12)", "poly(QQ, [x, y])", "poly(GF(101), [x, y, z])", "quot(poly(QQ, [t]), [t^2 + 1])"] {
            let r = CompRing::parse(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn errors_point_at_the_problem() {
        let e = parse_ring("poly(QQ, [x,])").unwrap_err();
        assert_eq!(e.offset, 12);
        assert!(parse_ring("poly(GF(12), [x])").is_err());
        assert!(parse_ring("ZZmod(0)").is_err());
        let zz = CompRing::Integers;
        assert!(parse_elem(&zz, "x").is_err());
        assert!(parse_elem(&zz, "1/2").is_err());
        assert_eq!(line_col("ab\ncd", 4), (2, 2));
    }
}
