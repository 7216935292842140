//! Text syntax for polynomials.
//!
//! Grammar (whitespace insensitive, implicit multiplication rejected):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Printing emits terms in descending order with coefficients in the
//! symmetric range `(-p/2, p/2]`, e.g. `x^2*y - 3*z + 1`.

use std::fmt;
use std::sync::Arc;

use super::poly::Polynomial;
use super::ring::PolyRing;
use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) | Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
        }
    }
}

struct Parser<'r> {
    ring: &'r Arc<PolyRing>,
    toks: Vec<(Tok, usize)>,
    idx: usize,
    line: usize,
    col_offset: usize,
    end_col: usize,
}

impl Polynomial {
    /// Parses a polynomial over `ring`.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial, ParseError> {
        Self::parse_at(ring, text, 1, 1)
    }

    /// Like [`Polynomial::parse`], reporting errors relative to a position
    /// inside a larger document (`column` is where `text` starts).
    pub fn parse_at(
        ring: &Arc<PolyRing>,
        text: &str,
        line: usize,
        column: usize,
    ) -> Result<Polynomial, ParseError> {
        let col_offset = column.saturating_sub(1);
        let toks = tokenize(text, line, col_offset)?;
        let mut parser = Parser {
            ring,
            toks,
            idx: 0,
            line,
            col_offset,
            end_col: text.chars().count() + 1,
        };
        if parser.toks.is_empty() {
            return Err(parser.error_at(parser.end_col, "expected a polynomial".into()));
        }
        let poly = parser.expr()?;
        if let Some((tok, col)) = parser.toks.get(parser.idx) {
            return Err(parser.error_at(
                *col,
                format!("unexpected {tok}; implicit multiplication is not allowed"),
            ));
        }
        Ok(poly)
    }
}

fn tokenize(text: &str, line: usize, col_offset: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            toks.push((tok, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            toks.push((Tok::Int(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(ParseError {
                line,
                column: col + col_offset,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(toks)
}

impl Parser<'_> {
    fn error_at(&self, col: usize, message: String) -> ParseError {
        ParseError {
            line: self.line,
            column: col + self.col_offset,
            message,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end_col, |(_, c)| *c)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.idx += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.idx += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.idx += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.idx += 1;
            let col = self.col();
            match self.peek().cloned() {
                Some(Tok::Int(digits)) => {
                    self.idx += 1;
                    let k: u32 = digits
                        .parse()
                        .ok()
                        .filter(|&k| k <= u16::MAX as u32)
                        .ok_or_else(|| {
                            self.error_at(col, format!("exponent `{digits}` is too large"))
                        })?;
                    Ok(base.pow(k))
                }
                Some(tok) => Err(self.error_at(
                    col,
                    format!("expected a nonnegative integer exponent, found {tok}"),
                )),
                None => Err(self.error_at(col, "expected an exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(digits)) => {
                self.idx += 1;
                let p = self.ring.field().modulus() as u64;
                let value = digits
                    .bytes()
                    .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(Polynomial::constant(self.ring, value as i64))
            }
            Some(Tok::Ident(name)) => {
                self.idx += 1;
                match self.ring.vars().index_of(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(self.error_at(col, format!("unknown variable `{name}`"))),
                }
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.idx += 1;
                        Ok(inner)
                    }
                    _ => Err(self.error_at(self.col(), "expected `)`".into())),
                }
            }
            Some(tok) => Err(self.error_at(col, format!("unexpected {tok}"))),
            None => Err(self.error_at(col, "unexpected end of input".into())),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.ring().field();
        let names = self.ring().var_names();
        for (i, (mono, coeff)) in self.terms().enumerate() {
            let c = field.to_signed(coeff);
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || mono.is_one() {
                factors.push(mag.to_string());
            }
            for (v, &e) in mono.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[v].clone()),
                    _ => factors.push(format!("{}^{}", names[v], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::drl(65521, ["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let r = ring();
        let f = Polynomial::parse(&r, "(x + y)*(x - y) - 3").unwrap();
        assert_eq!(f.to_string(), "x^2 - y^2 - 3");
        let g = Polynomial::parse(&r, "-x*z + 2*y^2*x + 65522").unwrap();
        assert_eq!(g.to_string(), "2*x*y^2 - x*z + 1");
        assert_eq!(Polynomial::parse(&r, "x - x").unwrap().to_string(), "0");
        assert_eq!(Polynomial::parse(&r, "-(-y)").unwrap().to_string(), "y");
        assert_eq!(Polynomial::parse(&r, "2^3*z^0").unwrap().to_string(), "8");
    }

    #[test]
    fn implicit_multiplication_rejected() {
        let r = ring();
        let err = Polynomial::parse(&r, "2x").unwrap_err();
        assert_eq!(err.column, 2);
        let err = Polynomial::parse(&r, "x y").unwrap_err();
        assert_eq!(err.column, 3);
        assert!(Polynomial::parse(&r, "(x)(y)").is_err());
    }

    #[test]
    fn positioned_errors() {
        let r = ring();
        let err = Polynomial::parse_at(&r, "x + w", 4, 1).unwrap_err();
        assert_eq!((err.line, err.column), (4, 5));
        assert!(err.message.contains("unknown variable `w`"));
        let err = Polynomial::parse(&r, "x^").unwrap_err();
        assert!(err.message.contains("exponent"));
        let err = Polynomial::parse(&r, "x^-1").unwrap_err();
        assert_eq!(err.column, 3);
        assert!(Polynomial::parse(&r, "(x + y").is_err());
        assert!(Polynomial::parse(&r, "x $ y").is_err());
        assert!(Polynomial::parse(&r, "").is_err());
        assert!(Polynomial::parse(&r, "x +").is_err());
    }

    fn poly_strategy() -> impl Strategy<Value = Polynomial> {
        let r = ring();
        proptest::collection::vec((proptest::collection::vec(0u32..4, 3), 0u32..65521), 0..6)
            .prop_map(move |terms| {
                Polynomial::from_terms(
                    &r,
                    terms
                        .into_iter()
                        .map(|(e, c)| (crate::arith::Monomial::from_exponents(&e).unwrap(), c)),
                )
            })
    }

    proptest! {
        #[test]
        fn print_parse_fixed_point(f in poly_strategy()) {
            let printed = f.to_string();
            let reparsed = Polynomial::parse(f.ring(), &printed).unwrap();
            prop_assert_eq!(&reparsed, &f);
            prop_assert_eq!(reparsed.to_string(), printed);
        }
    }
}
