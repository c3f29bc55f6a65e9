use std::fmt;

use num_traits::Zero;

use crate::exact::CRational;

use super::{Exponent, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl std::error::Error for ParseError {}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: expected one of {{{}}}, found {}",
            self.position,
            self.expected.join(", "),
            self.found
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Nat(String),
    Ident(String),
    Literal(String),
    Sym(&'static str),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Literal(s) => format!("literal `[{s}]`"),
            Tok::Sym(s) => format!("`{s}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

const SYMBOLS: [&str; 11] = ["..", "+", "-", "*", "/", "^", "(", ")", "=", ";", ","];

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Nat(text[start..i].to_string())));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if c == b'[' {
            let start = i;
            let close = text[i..].find(']').ok_or(ParseError {
                position: text.len(),
                expected: vec!["]"],
                found: "end of input".into(),
            })?;
            out.push((start, Tok::Literal(text[i + 1..i + close].trim().to_string())));
            i += close + 1;
        } else if let Some(sym) = SYMBOLS.iter().find(|s| text[i..].starts_with(**s)) {
            out.push((i, Tok::Sym(sym)));
            i += sym.len();
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(ParseError {
                position: i,
                expected: vec!["operator", "operand"],
                found: format!("character `{ch}`"),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

const OPERAND: [&str; 7] = ["number", "[literal]", "identifier", "(", "-", "sum", "conj"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            position: self.offset(),
            expected: expected.to_vec(),
            found: self.peek().describe(),
        }
    }

    fn eat(&mut self, sym: &'static str) -> bool {
        if *self.peek() == Tok::Sym(sym) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &'static str) -> PResult<()> {
        if self.eat(sym) {
            Ok(())
        } else {
            Err(self.error(&[sym]))
        }
    }

    fn expr(&mut self) -> PResult<Term<CRational>> {
        let mut lhs = self.product()?;
        loop {
            if self.eat("+") {
                lhs = Term::add(lhs, self.product()?);
            } else if self.eat("-") {
                lhs = Term::sub(lhs, self.product()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> PResult<Term<CRational>> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat("*") {
                lhs = Term::mul(lhs, self.unary()?);
            } else if self.eat("/") {
                lhs = Term::div(lhs, self.unary()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> PResult<Term<CRational>> {
        if self.eat("-") {
            let operand = self.unary()?;
            return Ok(Term::sub(Term::Const(CRational::zero()), operand));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Term<CRational>> {
        let base = self.primary()?;
        if !self.eat("^") {
            return Ok(base);
        }
        let exp = match self.peek().clone() {
            Tok::Nat(digits) => {
                let n: u32 = digits.parse().map_err(|_| self.error(&["exponent >= 1"]))?;
                if n == 0 {
                    return Err(self.error(&["exponent >= 1"]));
                }
                self.bump();
                Exponent::Literal(n)
            }
            Tok::Ident(name) if !is_keyword(&name) => {
                self.bump();
                Exponent::Index(name)
            }
            _ => return Err(self.error(&["exponent >= 1", "sum index"])),
        };
        Ok(Term::Pow(Box::new(base), exp))
    }

    fn primary(&mut self) -> PResult<Term<CRational>> {
        match self.peek().clone() {
            Tok::Nat(digits) => {
                self.bump();
                let v: CRational = digits.parse().map_err(|_| self.error(&["number"]))?;
                Ok(Term::Const(v))
            }
            Tok::Literal(text) => {
                let at = self.offset();
                let v: CRational = text.parse().map_err(|_| ParseError {
                    position: at,
                    expected: vec!["rational or complex literal"],
                    found: format!("`[{text}]`"),
                })?;
                self.bump();
                Ok(Term::Const(v))
            }
            Tok::Ident(name) if name == "sum" => {
                self.bump();
                self.sum()
            }
            Tok::Ident(name) if name == "conj" => {
                self.bump();
                self.expect("(")?;
                let inner = self.expr()?;
                self.expect(")")?;
                Ok(Term::conj(inner))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Term::Var(name))
            }
            Tok::Sym("(") => {
                self.bump();
                let inner = self.expr()?;
                self.expect(")")?;
                Ok(inner)
            }
            _ => Err(self.error(&OPERAND)),
        }
    }

    fn sum(&mut self) -> PResult<Term<CRational>> {
        self.expect("(")?;
        let index = match self.peek().clone() {
            Tok::Ident(name) if !is_keyword(&name) => {
                self.bump();
                name
            }
            _ => return Err(self.error(&["sum index"])),
        };
        self.expect("=")?;
        let lower = self.int()?;
        self.expect("..")?;
        let upper_at = self.pos;
        let upper = self.int()?;
        if upper < lower {
            self.pos = upper_at;
            return Err(self.error(&["upper bound >= lower bound"]));
        }
        self.expect(";")?;
        let body = self.expr()?;
        self.expect(")")?;
        Ok(Term::sum(index, lower, upper, body))
    }

    fn int(&mut self) -> PResult<i64> {
        let negative = self.eat("-");
        match self.peek().clone() {
            Tok::Nat(digits) => {
                let v: i64 = digits.parse().map_err(|_| self.error(&["integer"]))?;
                self.bump();
                Ok(if negative { -v } else { v })
            }
            _ => Err(self.error(&["integer"])),
        }
    }
}

fn is_keyword(name: &str) -> bool {
    name == "sum" || name == "conj"
}

/// Parses the term syntax described in the module documentation.
pub fn parse_term(text: &str) -> Result<Term<CRational>, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let t = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["+", "-", "*", "/", "^", "end of input"]));
    }
    Ok(t)
}
