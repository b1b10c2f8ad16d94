//! The input language.
//!
//! ```text
//! file      = { decl } ;
//! decl      = lattice | ring | morphism ;
//! lattice   = "lattice" ident "{" { gens | rel } "}" ;
//! gens      = "gens" ":" [ ident { "," ident } ] ";" ;
//! rel       = "rel" ":" [ idents ] "|-" [ idents ] ";" ;
//! ring      = "ring" ident "=" ring-spec ";" ;
//! morphism  = "morphism" ident ":" ident "->" ident "{" { ident "->" term ";" } "}" ;
//! term      = meet { "|" meet } ;
//! meet      = atom { "&" atom } ;
//! atom      = ident | "0" | "1" | "(" term ")" ;
//! chain     = level { "|" level } ;
//! level     = "{" [ terms ] ";" [ terms ] "}" ;
//! ident     = [a-zA-Z][a-zA-Z0-9_]* ;
//! ```
//!
//! `ring-spec` is the ring grammar of `krull_core::rings::parse`. `#`
//! starts a comment that runs to the end of the line. `⊢`, `→`, `∧`, `∨`
//! are accepted for `|-`, `->`, `&`, `|`.

use std::fmt;

use krull_core::rings::parse::{line_col, parse_ring};
use krull_core::rings::CompRing;
use serde::Serialize;

/// Machine-readable error classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorCode {
    Lexical,
    Syntax,
    Name,
    Arity,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Lexical => "lexical",
            ErrorCode::Syntax => "syntax",
            ErrorCode::Name => "name",
            ErrorCode::Arity => "arity",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseError {
    pub code: ErrorCode,
    pub line: usize,
    pub col: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {} error: {}", self.line, self.col, self.code.as_str(), self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

/// Position in the source, 1-based.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

/// An identifier with its position; equality ignores the position.
#[derive(Clone, Debug)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

impl PartialEq for Ident {
    fn eq(&self, o: &Self) -> bool {
        self.name == o.name
    }
}

impl Eq for Ident {}

impl Ident {
    pub fn new(name: impl Into<String>) -> Self {
        Ident {
            name: name.into(),
            pos: Pos::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Gen(Ident),
    Zero,
    One,
    Meet(Vec<Term>),
    Join(Vec<Term>),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Gen(i) => f.write_str(&i.name),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Join(ts) => {
                let parts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
                f.write_str(&parts.join(" | "))
            }
            Term::Meet(ts) => {
                let parts: Vec<String> = ts
                    .iter()
                    .map(|t| match t {
                        Term::Join(_) => format!("({t})"),
                        _ => t.to_string(),
                    })
                    .collect();
                f.write_str(&parts.join(" & "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeDecl {
    pub name: Ident,
    pub gens: Vec<Ident>,
    pub rels: Vec<(Vec<Ident>, Vec<Ident>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: Ident,
    pub ring: CompRing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismDecl {
    pub name: Ident,
    pub dom: Ident,
    pub cod: Ident,
    pub images: Vec<(Ident, Term)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Lattice(LatticeDecl),
    Ring(RingDecl),
    Morphism(MorphismDecl),
}

impl Decl {
    pub fn name(&self) -> &Ident {
        match self {
            Decl::Lattice(d) => &d.name,
            Decl::Ring(d) => &d.name,
            Decl::Morphism(d) => &d.name,
        }
    }
}

fn names(xs: &[Ident]) -> String {
    xs.iter().map(|i| i.name.as_str()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decl::Lattice(d) => {
                writeln!(f, "lattice {} {{", d.name.name)?;
                writeln!(f, "  gens: {};", names(&d.gens))?;
                for (l, r) in &d.rels {
                    let (l, r) = (names(l), names(r));
                    let l = if l.is_empty() { l } else { l + " " };
                    let r = if r.is_empty() { r } else { " ".to_string() + &r };
                    writeln!(f, "  rel: {l}|-{r};")?;
                }
                writeln!(f, "}}")
            }
            Decl::Ring(d) => writeln!(f, "ring {} = {};", d.name.name, d.ring),
            Decl::Morphism(d) => {
                writeln!(f, "morphism {} : {} -> {} {{", d.name.name, d.dom.name, d.cod.name)?;
                for (g, t) in &d.images {
                    writeln!(f, "  {} -> {t};", g.name)?;
                }
                writeln!(f, "}}")
            }
        }
    }
}

/// One-level idealistic prime as written: `{ J ; U }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelText {
    pub j: Vec<Term>,
    pub u: Vec<Term>,
}

// ------------------------------------------------------------------ lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Colon,
    Comma,
    Turnstile,
    Arrow,
    Amp,
    Bar,
    Eq,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Num(s) => format!("number `{s}`"),
            Tok::Eof => "end of input".into(),
            t => format!("`{}`", t.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Semi => ";",
            Tok::Colon => ":",
            Tok::Comma => ",",
            Tok::Turnstile => "|-",
            Tok::Arrow => "->",
            Tok::Amp => "&",
            Tok::Bar => "|",
            Tok::Eq => "=",
            _ => "",
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    off: usize,
}

impl<'a> Lexer<'a> {
    fn skip_trivia(&mut self) {
        loop {
            let rest = &self.src[self.off..];
            let trimmed = rest.trim_start();
            self.off += rest.len() - trimmed.len();
            if trimmed.starts_with('#') {
                self.off += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    fn pos(&self, off: usize) -> Pos {
        let (line, col) = line_col(self.src, off);
        Pos { line, col }
    }

    /// Next token and its start offset.
    fn next(&mut self) -> Result<(Tok, usize), ParseError> {
        self.skip_trivia();
        let start = self.off;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((Tok::Eof, start));
        };
        let two = |s: &str| rest.starts_with(s);
        let (tok, len) = if c.is_ascii_alphabetic() {
            let len = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            (Tok::Ident(rest[..len].to_string()), len)
        } else if c.is_ascii_digit() {
            let len = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
            (Tok::Num(rest[..len].to_string()), len)
        } else if two("|-") {
            (Tok::Turnstile, 2)
        } else if two("->") {
            (Tok::Arrow, 2)
        } else {
            let t = match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ';' => Tok::Semi,
                ':' => Tok::Colon,
                ',' => Tok::Comma,
                '&' | '∧' => Tok::Amp,
                '|' | '∨' => Tok::Bar,
                '=' => Tok::Eq,
                '⊢' => Tok::Turnstile,
                '→' => Tok::Arrow,
                _ => {
                    let p = self.pos(start);
                    return Err(ParseError {
                        code: ErrorCode::Lexical,
                        line: p.line,
                        col: p.col,
                        message: format!("unexpected character `{c}`"),
                        expected: vec![],
                    });
                }
            };
            (t, c.len_utf8())
        };
        self.off = start + len;
        Ok((tok, start))
    }
}

// ----------------------------------------------------------------- parser

struct Parser<'a> {
    lex: Lexer<'a>,
    tok: Tok,
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ParseError> {
        let mut lex = Lexer { src, off: 0 };
        let (tok, at) = lex.next()?;
        Ok(Parser { lex, tok, at })
    }

    fn bump(&mut self) -> Result<Tok, ParseError> {
        let (tok, at) = self.lex.next()?;
        self.at = at;
        Ok(std::mem::replace(&mut self.tok, tok))
    }

    fn pos(&self) -> Pos {
        self.lex.pos(self.at)
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let p = self.pos();
        ParseError {
            code: ErrorCode::Syntax,
            line: p.line,
            col: p.col,
            message: format!("unexpected {}", self.tok.describe()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if self.tok == t {
            self.bump()?;
            Ok(())
        } else {
            Err(self.error(&[&format!("`{}`", t.symbol())]))
        }
    }

    fn ident(&mut self) -> Result<Ident, ParseError> {
        let pos = self.pos();
        match &self.tok {
            Tok::Ident(s) => {
                let name = s.clone();
                self.bump()?;
                Ok(Ident { name, pos })
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match &self.tok {
            Tok::Ident(s) if s == kw => {
                self.bump()?;
                Ok(())
            }
            _ => Err(self.error(&[&format!("`{kw}`")])),
        }
    }

    fn file(&mut self) -> Result<Vec<Decl>, ParseError> {
        let mut out = Vec::new();
        loop {
            match &self.tok {
                Tok::Eof => return Ok(out),
                Tok::Ident(s) if s == "lattice" => out.push(Decl::Lattice(self.lattice()?)),
                Tok::Ident(s) if s == "ring" => out.push(Decl::Ring(self.ring()?)),
                Tok::Ident(s) if s == "morphism" => out.push(Decl::Morphism(self.morphism()?)),
                _ => return Err(self.error(&["`lattice`", "`ring`", "`morphism`", "end of input"])),
            }
        }
    }

    fn ident_list(&mut self, stop: &Tok) -> Result<Vec<Ident>, ParseError> {
        let mut out = Vec::new();
        if self.tok == *stop {
            return Ok(out);
        }
        out.push(self.ident()?);
        while self.tok == Tok::Comma {
            self.bump()?;
            out.push(self.ident()?);
        }
        Ok(out)
    }

    fn lattice(&mut self) -> Result<LatticeDecl, ParseError> {
        self.keyword("lattice")?;
        let name = self.ident()?;
        self.expect(Tok::LBrace)?;
        let (mut gens, mut rels) = (Vec::new(), Vec::new());
        loop {
            match &self.tok {
                Tok::RBrace => {
                    self.bump()?;
                    return Ok(LatticeDecl { name, gens, rels });
                }
                Tok::Ident(s) if s == "gens" => {
                    self.bump()?;
                    self.expect(Tok::Colon)?;
                    gens.extend(self.ident_list(&Tok::Semi)?);
                    if self.tok != Tok::Semi {
                        return Err(self.error(&["`,`", "`;`"]));
                    }
                    self.bump()?;
                }
                Tok::Ident(s) if s == "rel" => {
                    self.bump()?;
                    self.expect(Tok::Colon)?;
                    let lhs = self.ident_list(&Tok::Turnstile)?;
                    if self.tok != Tok::Turnstile {
                        return Err(self.error(&["`,`", "`|-`"]));
                    }
                    self.bump()?;
                    let rhs = self.ident_list(&Tok::Semi)?;
                    if self.tok != Tok::Semi {
                        return Err(self.error(&["`,`", "`;`"]));
                    }
                    self.bump()?;
                    rels.push((lhs, rhs));
                }
                _ => return Err(self.error(&["`gens`", "`rel`", "`}`"])),
            }
        }
    }

    fn ring(&mut self) -> Result<RingDecl, ParseError> {
        self.keyword("ring")?;
        let name = self.ident()?;
        if self.tok != Tok::Eq {
            return Err(self.error(&["`=`"]));
        }
        // the ring spec is handed to the ring parser verbatim
        let src = self.lex.src;
        let start = self.lex.off;
        let Some(len) = src[start..].find(';') else {
            let p = self.lex.pos(src.len());
            return Err(ParseError {
                code: ErrorCode::Syntax,
                line: p.line,
                col: p.col,
                message: "unterminated ring declaration".into(),
                expected: vec!["`;`".into()],
            });
        };
        let text = &src[start..start + len];
        let ring = parse_ring(text).map_err(|e| {
            let p = self.lex.pos(start + e.offset);
            ParseError {
                code: ErrorCode::Syntax,
                line: p.line,
                col: p.col,
                message: e.message,
                expected: e.expected,
            }
        })?;
        self.lex.off = start + len;
        self.bump()?;
        self.expect(Tok::Semi)?;
        Ok(RingDecl { name, ring })
    }

    fn morphism(&mut self) -> Result<MorphismDecl, ParseError> {
        self.keyword("morphism")?;
        let name = self.ident()?;
        self.expect(Tok::Colon)?;
        let dom = self.ident()?;
        self.expect(Tok::Arrow)?;
        let cod = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut images = Vec::new();
        while self.tok != Tok::RBrace {
            if !matches!(self.tok, Tok::Ident(_)) {
                return Err(self.error(&["identifier", "`}`"]));
            }
            let g = self.ident()?;
            self.expect(Tok::Arrow)?;
            let t = self.term()?;
            self.expect(Tok::Semi)?;
            images.push((g, t));
        }
        self.bump()?;
        Ok(MorphismDecl { name, dom, cod, images })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut parts = Vec::new();
        push_flat(&mut parts, self.meet()?, true);
        while self.tok == Tok::Bar {
            self.bump()?;
            push_flat(&mut parts, self.meet()?, true);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Term::Join(parts) })
    }

    fn meet(&mut self) -> Result<Term, ParseError> {
        let mut parts = Vec::new();
        push_flat(&mut parts, self.atom()?, false);
        while self.tok == Tok::Amp {
            self.bump()?;
            push_flat(&mut parts, self.atom()?, false);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Term::Meet(parts) })
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match &self.tok {
            Tok::Ident(_) => Ok(Term::Gen(self.ident()?)),
            Tok::Num(s) if s == "0" => {
                self.bump()?;
                Ok(Term::Zero)
            }
            Tok::Num(s) if s == "1" => {
                self.bump()?;
                Ok(Term::One)
            }
            Tok::LParen => {
                self.bump()?;
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            _ => Err(self.error(&["identifier", "`0`", "`1`", "`(`"])),
        }
    }

    fn terms(&mut self, stop: &Tok) -> Result<Vec<Term>, ParseError> {
        let mut out = Vec::new();
        if self.tok == *stop {
            return Ok(out);
        }
        out.push(self.term()?);
        while self.tok == Tok::Comma {
            self.bump()?;
            out.push(self.term()?);
        }
        Ok(out)
    }

    fn chain(&mut self) -> Result<Vec<LevelText>, ParseError> {
        let mut levels = Vec::new();
        loop {
            self.expect(Tok::LBrace)?;
            let j = self.terms(&Tok::Semi)?;
            if self.tok != Tok::Semi {
                return Err(self.error(&["`,`", "`;`"]));
            }
            self.bump()?;
            let u = self.terms(&Tok::RBrace)?;
            if self.tok != Tok::RBrace {
                return Err(self.error(&["`,`", "`}`"]));
            }
            self.bump()?;
            levels.push(LevelText { j, u });
            match self.tok {
                Tok::Bar => {
                    self.bump()?;
                }
                Tok::Eof => return Ok(levels),
                _ => return Err(self.error(&["`|`", "end of input"])),
            }
        }
    }

    fn end(&self) -> Result<(), ParseError> {
        if self.tok == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }
}

/// Parses a whole input file into declarations, without name resolution.
/// Appends `t`, splicing in its operands when it has the same operator, so
/// `(a | b) | c` and `a | b | c` parse alike.
fn push_flat(parts: &mut Vec<Term>, t: Term, join: bool) {
    match t {
        Term::Join(ts) if join => parts.extend(ts),
        Term::Meet(ts) if !join => parts.extend(ts),
        t => parts.push(t),
    }
}

pub fn parse_decls(src: &str) -> Result<Vec<Decl>, ParseError> {
    Parser::new(src)?.file()
}

/// Parses a single lattice term such as `a & (b | c)`.
pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(src)?;
    let t = p.term()?;
    p.end()?;
    Ok(t)
}

/// Parses chain text `{ J ; U } | { J ; U } | …`.
pub fn parse_chain(src: &str) -> Result<Vec<LevelText>, ParseError> {
    Parser::new(src)?.chain()
}

/// Prints declarations in a form `parse_decls` reads back.
pub fn print_decls(decls: &[Decl]) -> String {
    decls.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_declaration() {
        let d = parse_decls("lattice T { gens: a, b, c; rel: a, b |- c; rel: |- a, c; rel: b |- ; }").unwrap();
        let Decl::Lattice(l) = &d[0] else { panic!() };
        assert_eq!(l.gens.len(), 3);
        assert_eq!(l.rels[1].0.len(), 0);
        assert_eq!(l.rels[2].1.len(), 0);
    }

    #[test]
    fn positions_and_codes() {
        let e = parse_decls("lattice T {\n  gens: a;\n  rel a |- ;\n}").unwrap_err();
        assert_eq!((e.code, e.line, e.col), (ErrorCode::Syntax, 3, 7));
        assert_eq!(e.expected, vec!["`:`"]);
        let e = parse_decls("lattice T { gens: a$; }").unwrap_err();
        assert_eq!((e.code, e.col), (ErrorCode::Lexical, 20));
        let e = parse_decls("ring A = poly(QQ, [x,,y]);").unwrap_err();
        assert_eq!((e.code, e.line, e.col), (ErrorCode::Syntax, 1, 22));
    }

    #[test]
    fn terms_print_with_precedence() {
        let t = parse_term("a & (b | c) | 0").unwrap();
        assert_eq!(t.to_string(), "a & (b | c) | 0");
        assert_eq!(parse_term(&t.to_string()).unwrap(), t);
        assert!(parse_term("a &").is_err());
        assert_eq!(parse_term("(a | b) | (c)").unwrap(), parse_term("a | b | c").unwrap());
        assert_eq!(parse_term("a & ((b & c))").unwrap(), parse_term("a & b & c").unwrap());
    }

    #[test]
    fn chains() {
        let c = parse_chain("{ j1, j2 ; u1 } | { ; u2 } | { j3 ; }").unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!((c[1].j.len(), c[1].u.len()), (0, 1));
        let c = parse_chain("{ a | b ; }").unwrap();
        assert!(matches!(c[0].j[0], Term::Join(_)));
        assert!(parse_chain("{ a }").is_err());
    }

    #[test]
    fn print_round_trip() {
        let src = "# sample\nlattice T { gens: a, b; rel: a |- b; }\nring A = quot(poly(QQ,[t]),[t^2+1]);\nmorphism f : T -> T { a -> a & b; b -> 1; }\n";
        let d = parse_decls(src).unwrap();
        assert_eq!(parse_decls(&print_decls(&d)).unwrap(), d);
    }
}
