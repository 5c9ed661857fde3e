//! Small recursive-descent parser for polynomial expressions such as
//! `"x1^2 - 1/2*x1*x2 + 3"` or `"(u - 1)^2"`.
//!
//! Variables are `x`, `u` or `z`, optionally followed by a 1-based index.
//! A bare stem is only accepted when `nvars == 1`.

use num_traits::Zero;

use super::{ArithError, Polynomial, Rational};

pub fn parse_polynomial(src: &str, nvars: usize) -> Result<Polynomial, ArithError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        nvars,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ArithError {
        ArithError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ArithError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ArithError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    if d.len() > 1 || !d.terms().all(|(m, _)| m.is_one()) {
                        return Err(self.err("division only by numeric constants"));
                    }
                    let c = d.constant_term();
                    if c.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial, ArithError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64, ArithError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("number too large"))
    }

    fn atom(&mut self) -> Result<Polynomial, ArithError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v: Rational = Rational::from_integer(s.parse().unwrap());
                Ok(Polynomial::constant(self.nvars, v))
            }
            Some(b'x') | Some(b'u') | Some(b'z') => {
                self.pos += 1;
                let has_index = self.pos < self.src.len() && self.src[self.pos].is_ascii_digit();
                let j = if has_index {
                    let at = self.pos;
                    let k = self.integer()? as usize;
                    if k == 0 || k > self.nvars {
                        self.pos = at;
                        return Err(
                            self.err(&format!("variable index {k} outside 1..={}", self.nvars))
                        );
                    }
                    k - 1
                } else if self.nvars == 1 {
                    0
                } else {
                    return Err(self.err("variable needs an index when N > 1"));
                };
                Ok(Polynomial::var(self.nvars, j))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
