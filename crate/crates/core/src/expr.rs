//! Parser for noncommutative polynomial expressions such as
//! `2*x*y^3*x*y - 5*y*x*y*x*y^2`.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! coeff  := integer ['/' integer]
//! factor := generator ['^' integer]        (exponent >= 1)
//! ```
//!
//! `*` is mandatory between factors, so generator names may be longer than
//! one character. Whitespace is insignificant. A term must contain at least
//! one generator: the free algebra has no unity. Coefficients may be
//! fractions `n/d` when `d` is invertible in the scalar ring. The lone
//! literal `0` is the zero polynomial, which is how it renders.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::Associative;
use crate::error::{ParseError, ParseErrorKind};
use crate::freealg::{FreeAlgebra, FreePolynomial, Word};
use crate::scalars::Ring;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn err(pos: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { pos, kind }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'/' => out.push((start, Tok::Slash)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i]
                    .parse::<u64>()
                    .map_err(|_| err(start, ParseErrorKind::Overflow))?;
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(err(start, ParseErrorKind::UnexpectedChar(ch)));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, R: Ring> {
    alg: &'a FreeAlgebra<R>,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl<R: Ring> Parser<'_, R> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn prev_pos(&self) -> usize {
        self.toks[self.at - 1].0
    }

    fn expr(&mut self) -> Result<FreePolynomial<R::Elem>, ParseError> {
        if self.toks.is_empty() {
            return Err(err(0, ParseErrorKind::Empty));
        }
        let mut acc = self.alg.zero();
        // the rendering of the zero polynomial
        if let [(_, Tok::Int(0))] = self.toks.as_slice() {
            return Ok(acc);
        }
        let mut negate = false;
        if let Some(Tok::Plus | Tok::Minus) = self.peek() {
            negate = self.peek() == Some(&Tok::Minus);
            self.at += 1;
        }
        loop {
            let (c, word) = self.term()?;
            let c = if negate { self.alg.ring().neg(&c) } else { c };
            acc = self.alg.add(&acc, &self.alg.term(word, c));
            match self.peek() {
                None => return Ok(acc),
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(Tok::Slash) => {
                    return Err(err(self.pos(), ParseErrorKind::UnexpectedChar('/')))
                }
                Some(_) => return Err(err(self.pos(), ParseErrorKind::MissingStar)),
            }
            self.at += 1;
        }
    }

    fn term(&mut self) -> Result<(R::Elem, Word), ParseError> {
        let start = self.pos();
        let ring = self.alg.ring();
        let mut coeff = ring.one();
        let mut letters: Vec<u16> = Vec::new();
        match self.peek() {
            Some(Tok::Int(_)) => coeff = self.coefficient()?,
            Some(Tok::Ident(_)) => self.factor(&mut letters)?,
            Some(_) => return Err(err(self.prev_pos(), ParseErrorKind::DanglingOperator)),
            None => {
                let p = if self.at == 0 { 0 } else { self.prev_pos() };
                return Err(err(p, ParseErrorKind::DanglingOperator));
            }
        }
        while let Some(Tok::Star) = self.peek() {
            self.at += 1;
            match self.peek() {
                Some(Tok::Ident(_)) => self.factor(&mut letters)?,
                _ => return Err(err(self.prev_pos(), ParseErrorKind::DanglingOperator)),
            }
        }
        if let Some(Tok::Ident(_) | Tok::Int(_)) = self.peek() {
            return Err(err(self.pos(), ParseErrorKind::MissingStar));
        }
        match Word::new(letters) {
            Some(w) => Ok((coeff, w)),
            None => Err(err(start, ParseErrorKind::ConstantTerm)),
        }
    }

    fn integer(&mut self) -> Result<R::Elem, ParseError> {
        let pos = self.pos();
        let Some(Tok::Int(n)) = self.peek() else {
            let p = if self.at == 0 { 0 } else { self.prev_pos() };
            return Err(err(p, ParseErrorKind::DanglingOperator));
        };
        let n = i64::try_from(*n).map_err(|_| err(pos, ParseErrorKind::Overflow))?;
        self.at += 1;
        Ok(self.alg.ring().from_int(n))
    }

    fn coefficient(&mut self) -> Result<R::Elem, ParseError> {
        let num = self.integer()?;
        if self.peek() != Some(&Tok::Slash) {
            return Ok(num);
        }
        self.at += 1;
        let pos = self.pos();
        let den = self.integer()?;
        self.alg
            .ring()
            .div(&num, &den)
            .map_err(|_| err(pos, ParseErrorKind::BadDenominator))
    }

    fn factor(&mut self, letters: &mut Vec<u16>) -> Result<(), ParseError> {
        let pos = self.pos();
        let Some(Tok::Ident(name)) = self.peek().cloned() else {
            unreachable!("caller checked for an identifier");
        };
        let g = self
            .alg
            .generator_index(&name)
            .ok_or_else(|| err(pos, ParseErrorKind::UnknownGenerator(name.clone())))?;
        self.at += 1;
        let mut exp = 1u64;
        if let Some(Tok::Caret) = self.peek() {
            self.at += 1;
            match self.peek() {
                Some(Tok::Int(0)) | Some(Tok::Minus) => {
                    return Err(err(self.pos(), ParseErrorKind::BadExponent))
                }
                Some(Tok::Int(n)) => {
                    if *n > u16::MAX as u64 {
                        return Err(err(self.pos(), ParseErrorKind::Overflow));
                    }
                    exp = *n;
                    self.at += 1;
                }
                _ => return Err(err(self.prev_pos(), ParseErrorKind::DanglingOperator)),
            }
        }
        letters.extend(core::iter::repeat_n(g as u16, exp as usize));
        Ok(())
    }
}

/// Parses an expression over the generators of `alg`; integer coefficients
/// map into the algebra's scalar ring.
pub fn parse_poly<R: Ring>(
    text: &str,
    alg: &FreeAlgebra<R>,
) -> Result<FreePolynomial<R::Elem>, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        alg,
        toks,
        at: 0,
        end: text.len(),
    };
    p.expr()
}

/// Parses a single word such as `y^2*x*y*x*y^2`.
pub fn parse_word<R: Ring>(text: &str, alg: &FreeAlgebra<R>) -> Result<Word, ParseError> {
    let p = parse_poly(text, alg)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if alg.ring().is_one(c) => Ok(w.clone()),
        _ => Err(err(0, ParseErrorKind::NotAWord)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{PrimeField, Rationals};

    fn alg() -> FreeAlgebra<Rationals> {
        FreeAlgebra::new(Rationals, &["x", "y"])
    }

    fn kind(text: &str) -> (usize, ParseErrorKind) {
        let e = parse_poly(text, &alg()).unwrap_err();
        (e.pos, e.kind)
    }

    #[test]
    fn parses_relations() {
        let a = alg();
        let h1 = parse_poly("2*x*y^3*x*y - 5*y*x*y*x*y^2 - 2*y*x*y^3*x + 5*y^2*x*y*x*y", &a)
            .unwrap();
        assert_eq!(h1.num_terms(), 4);
        let h2 = parse_poly("2*y*x*y^3*x*y - 5*y^2*x*y*x*y^2", &a).unwrap();
        assert_eq!(a.render(&h2), "-5*y^2*x*y*x*y^2 + 2*y*x*y^3*x*y");
    }

    #[test]
    fn collects_like_terms() {
        let a = alg();
        let p = parse_poly("x*y + 2*x*y - 3*x*y + y", &a).unwrap();
        assert_eq!(a.render(&p), "y");
        let p = parse_poly("  - x  *  x ", &a).unwrap();
        assert_eq!(a.render(&p), "-x^2");
    }

    #[test]
    fn malformed_inputs_point_at_the_token() {
        assert_eq!(kind("x^0"), (2, ParseErrorKind::BadExponent));
        assert_eq!(kind("x^-1"), (2, ParseErrorKind::BadExponent));
        assert_eq!(kind(""), (0, ParseErrorKind::Empty));
        assert_eq!(kind("   "), (0, ParseErrorKind::Empty));
        assert_eq!(kind("x +"), (2, ParseErrorKind::DanglingOperator));
        assert_eq!(kind("x * * y"), (2, ParseErrorKind::DanglingOperator));
        assert_eq!(kind("x^"), (1, ParseErrorKind::DanglingOperator));
        assert_eq!(kind("x*z"), (2, ParseErrorKind::UnknownGenerator("z".into())));
        assert_eq!(kind("x y"), (2, ParseErrorKind::MissingStar));
        assert_eq!(kind("2x"), (1, ParseErrorKind::MissingStar));
        assert_eq!(kind("x # y"), (2, ParseErrorKind::UnexpectedChar('#')));
        assert_eq!(kind("3 + x"), (0, ParseErrorKind::ConstantTerm));
        assert_eq!(kind("0 + x"), (0, ParseErrorKind::ConstantTerm));
        assert_eq!(
            kind("99999999999999999999*x"),
            (0, ParseErrorKind::Overflow)
        );
    }

    #[test]
    fn fractional_coefficients() {
        let a = alg();
        let p = parse_poly("-5/2*y^2*x*y*x*y + 1/2*x + 2/4*x", &a).unwrap();
        assert_eq!(a.render(&p), "-5/2*y^2*x*y*x*y + x");
        assert_eq!(parse_poly(&a.render(&p), &a).unwrap(), p);
        assert_eq!(kind("1/0*x"), (2, ParseErrorKind::BadDenominator));
        assert_eq!(kind("1/*x"), (1, ParseErrorKind::DanglingOperator));
        assert_eq!(kind("x/2"), (1, ParseErrorKind::UnexpectedChar('/')));
        let f7 = FreeAlgebra::new(PrimeField::new(7).unwrap(), &["x"]);
        assert_eq!(f7.render(&parse_poly("1/2*x", &f7).unwrap()), "4*x");
        assert!(parse_poly("1/7*x", &f7).is_err());
    }

    #[test]
    fn multi_character_generators() {
        let a = FreeAlgebra::new(Rationals, &["u1", "u2"]);
        let p = parse_poly("u1^2*u2 - u2*u1", &a).unwrap();
        assert_eq!(a.render(&p), "u1^2*u2 - u2*u1");
    }

    #[test]
    fn words() {
        let a = alg();
        let w = parse_word("y^2*x*y*x*y^2", &a).unwrap();
        assert_eq!(w.degree(), 7);
        assert!(parse_word("2*x", &a).is_err());
    }
}
