//! Text form of polynomials.
//!
//! ```text
//! poly   := "0" | term (" + " term)*
//! term   := "1" | factor ("*" factor)*
//! factor := "w" INDEX ("^" EXP)?
//! ```
//!
//! `INDEX` is in `1..=k` and `EXP >= 1`. Whitespace around `+` and at either
//! end is accepted; [`Polynomial`]'s `Display` writes the canonical form.

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

pub fn parse(text: &str, k: usize) -> Result<Polynomial> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
        k,
    }
    .poly()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    k: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn poly(mut self) -> Result<Polynomial> {
        self.skip_ws();
        if self.peek() == Some(b'0') {
            self.pos += 1;
            self.skip_ws();
            return match self.peek() {
                None => Ok(Polynomial::zero(self.k)),
                Some(_) => self.err("\"0\" must stand alone"),
            };
        }
        let mut out = Polynomial::zero(self.k);
        loop {
            out.toggle(self.term()?);
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(c) => {
                    return self.err(format!(
                        "expected '+' or end of input, found {:?}",
                        c as char
                    ))
                }
            }
        }
    }

    fn term(&mut self) -> Result<Monomial> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Monomial::one(self.k));
        }
        let mut exps = vec![0u32; self.k];
        loop {
            let (index, e) = self.factor()?;
            exps[index - 1] = exps[index - 1]
                .checked_add(e)
                .ok_or(Error::ExponentOverflow)?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(Monomial::new(exps));
            }
        }
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        if self.peek() != Some(b'w') {
            return self.err("expected 'w', '1' or '0'");
        }
        self.pos += 1;
        let k = self.k;
        let index = self.digits()?.parse::<usize>().unwrap_or(usize::MAX);
        if !(1..=k).contains(&index) {
            return Err(Error::VariableOutOfRange { index, k });
        }
        let mut e = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let digits = self.digits()?;
            e = digits.parse::<u32>().map_err(|_| Error::ExponentOverflow)?;
            if e == 0 {
                return self.err("exponent must be at least 1");
            }
        }
        Ok((index, e))
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a decimal number");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }
}
