//! Recursive-descent parser for the text format printed by `Zh`'s `Display`.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ['^' ['-'] INT]
//! atom   := NUMBER | 'i' | VAR | 'N' | 'Ny' | 'Nw' | '(' expr ')'
//! NUMBER := INT ['/' INT] ['i']
//! VAR    := ('z'|'y'|'w') ('1'|'2') ('1'|'2')
//! ```
//! Division is only allowed by units: constants times powers of norms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Alphabet, Var};
use crate::qi::Qi;
use crate::zh::Zh;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Qi),
    Int(u32),
    Var(Var),
    Norm(Alphabet),
    Op(char),
    End,
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err<T>(&self, pos: usize, expected: &str) -> Result<T> {
        Err(Error::Parse { pos, expected: expected.into() })
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap()
    }

    fn peek_byte(&self, off: usize) -> Option<u8> {
        self.s.get(self.pos + off).copied()
    }

    fn next(&mut self) -> Result<(usize, Tok)> {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(c) = self.peek_byte(0) else {
            return Ok((start, Tok::End));
        };
        if c.is_ascii_digit() {
            let n: BigInt = self.digits().parse().unwrap();
            let mut r = BigRational::from_integer(n);
            let mut rational = false;
            if self.peek_byte(0) == Some(b'/') && self.peek_byte(1).is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
                let d: BigInt = self.digits().parse().unwrap();
                if d.is_zero() {
                    return self.err(start, "a nonzero denominator");
                }
                r /= BigRational::from_integer(d);
                rational = true;
            }
            if self.peek_byte(0) == Some(b'i') && !self.peek_byte(1).is_some_and(|b| b.is_ascii_alphanumeric()) {
                self.pos += 1;
                return Ok((start, Tok::Num(Qi::new(BigRational::zero(), r))));
            }
            if !rational && r.denom() == &BigInt::from(1) {
                if let Ok(k) = u32::try_from(r.numer()) {
                    return Ok((start, Tok::Int(k)));
                }
            }
            return Ok((start, Tok::Num(Qi::from_rational(r))));
        }
        let alpha = match c {
            b'z' => Some(Alphabet::Z),
            b'y' => Some(Alphabet::Zp),
            b'w' => Some(Alphabet::W),
            _ => None,
        };
        if let Some(alpha) = alpha {
            let (r, k) = (self.peek_byte(1), self.peek_byte(2));
            let ok = |b: Option<u8>| matches!(b, Some(b'1') | Some(b'2'));
            if !ok(r) || !ok(k) {
                return self.err(start, "a variable like z11, y21 or w22");
            }
            self.pos += 3;
            let v = alpha.var((r.unwrap() - b'1') as usize, (k.unwrap() - b'1') as usize);
            return Ok((start, Tok::Var(v)));
        }
        if c == b'N' {
            self.pos += 1;
            let a = match self.peek_byte(0) {
                Some(b'y') => Alphabet::Zp,
                Some(b'w') => Alphabet::W,
                Some(b'z') => Alphabet::Z,
                _ => return Ok((start, Tok::Norm(Alphabet::Z))),
            };
            self.pos += 1;
            return Ok((start, Tok::Norm(a)));
        }
        if c == b'i' && !self.peek_byte(1).is_some_and(|b| b.is_ascii_alphanumeric()) {
            self.pos += 1;
            return Ok((start, Tok::Num(Qi::i())));
        }
        if b"+-*/^()".contains(&c) {
            self.pos += 1;
            return Ok((start, Tok::Op(c as char)));
        }
        self.err(start, "a number, variable, N, operator or parenthesis")
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    tok: Tok,
    at: usize,
}

impl<'a> Parser<'a> {
    fn bump(&mut self) -> Result<()> {
        let (at, tok) = self.lex.next()?;
        self.at = at;
        self.tok = tok;
        Ok(())
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse { pos: self.at, expected: expected.into() })
    }

    fn expr(&mut self) -> Result<Zh> {
        let mut neg = false;
        if let Tok::Op(c @ ('+' | '-')) = self.tok {
            neg = c == '-';
            self.bump()?;
        }
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        while let Tok::Op(c @ ('+' | '-')) = self.tok {
            self.bump()?;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Zh> {
        let mut acc = self.factor()?;
        while let Tok::Op(c @ ('*' | '/')) = self.tok {
            let at = self.at;
            self.bump()?;
            let f = self.factor()?;
            acc = if c == '*' {
                &acc * &f
            } else {
                acc.checked_div(&f).map_err(|_| Error::Parse {
                    pos: at,
                    expected: "a divisor that is a constant times powers of N".into(),
                })?
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Zh> {
        let base = self.atom()?;
        if self.tok != Tok::Op('^') {
            return Ok(base);
        }
        self.bump()?;
        let neg = if self.tok == Tok::Op('-') {
            self.bump()?;
            true
        } else {
            false
        };
        let Tok::Int(e) = self.tok else {
            return self.err("a non-negative integer exponent");
        };
        let at = self.at;
        self.bump()?;
        if neg {
            let inv = base.inv().map_err(|_| Error::Parse {
                pos: at,
                expected: "an invertible base for a negative exponent".into(),
            })?;
            Ok(inv.pow(e))
        } else {
            Ok(base.pow(e))
        }
    }

    fn atom(&mut self) -> Result<Zh> {
        let out = match self.tok.clone() {
            Tok::Num(q) => Zh::constant(q),
            Tok::Int(k) => Zh::constant(Qi::int(k as i64)),
            Tok::Var(v) => Zh::var(v),
            Tok::Norm(a) => Zh::norm_pow(a, 1),
            Tok::Op('(') => {
                self.bump()?;
                let e = self.expr()?;
                if self.tok != Tok::Op(')') {
                    return self.err("')'");
                }
                e
            }
            _ => return self.err("a number, variable, N or '('"),
        };
        self.bump()?;
        Ok(out)
    }
}

pub fn parse_zh(s: &str) -> Result<Zh> {
    let mut p = Parser { lex: Lexer { s: s.as_bytes(), pos: 0 }, tok: Tok::End, at: 0 };
    p.bump()?;
    let e = p.expr()?;
    if p.tok != Tok::End {
        return p.err("an operator or end of input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_zh("1/2i").unwrap(), Zh::constant(Qi::from_parts(0, 1, 1, 2)));
        assert_eq!(parse_zh("3/2+1/2i").unwrap(), Zh::constant(Qi::from_parts(3, 2, 1, 2)));
        assert_eq!(parse_zh("z11/2").unwrap(), Zh::var(Alphabet::Z.var(0, 0)).scale(&Qi::frac(1, 2)));
        assert_eq!(parse_zh("N^-2").unwrap(), Zh::norm_pow(Alphabet::Z, -2));
        assert_eq!("-3/4+1/2i".parse::<Qi>().unwrap(), Qi::from_parts(-3, 4, 1, 2));
    }

    #[test]
    fn errors_carry_position() {
        match parse_zh("z11 + z3") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        match parse_zh("z11 / z22") {
            Err(Error::Parse { pos, expected }) => {
                assert_eq!(pos, 4);
                assert!(expected.contains("powers of N"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_zh("(z11"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_zh("z11 z12"), Err(Error::Parse { pos: 4, .. })));
    }

    #[test]
    fn division_by_norm_products() {
        let f = parse_zh("z11 / (2*N*Nw)").unwrap();
        assert_eq!(f.den(Alphabet::Z), 1);
        assert_eq!(f.den(Alphabet::W), 1);
        assert_eq!(f.to_string(), "1/2*z11 / N / Nw");
    }
}
