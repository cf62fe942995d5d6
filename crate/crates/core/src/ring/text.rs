//! Text form shared by the univariate and bivariate polynomials:
//! `t^3 + t^2 - 1`, `-t^-2 + t^-1`, `s^2*t^2 - s*t + 1`, `0`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial syntax error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// Writes terms (already in display order) as a signed sum.
pub(super) fn write_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a BigInt, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let sign = match (first, c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        first = false;
        let abs = c.abs();
        if mono.is_empty() {
            write!(f, "{sign}{abs}")?;
        } else if abs.is_one() {
            write!(f, "{sign}{mono}")?;
        } else {
            write!(f, "{sign}{abs}*{mono}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn signed_exponent(&mut self) -> Result<i64, ParseError> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let at = self.pos;
        let magnitude: i64 = self.digits()?.try_into().map_err(|_| ParseError {
            position: at,
            message: "exponent out of range".into(),
        })?;
        Ok(if negative { -magnitude } else { magnitude })
    }
}

/// Parses a signed sum of monomials in the given variables. Each returned
/// term carries its coefficient and one exponent per variable.
pub(super) fn parse_sum(src: &str, vars: &[char]) -> Result<Vec<(BigInt, Vec<i64>)>, ParseError> {
    let mut cur = Cursor {
        src: src.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let negative = match cur.peek() {
            None if first => return Err(cur.error("empty polynomial")),
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                false
            }
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            Some(_) if first => false,
            Some(c) => return Err(cur.error(format!("expected '+' or '-', found '{}'", c as char))),
        };
        first = false;
        let (mut coeff, exps) = parse_term(&mut cur, vars)?;
        if negative {
            coeff = -coeff;
        }
        terms.push((coeff, exps));
    }
    Ok(terms)
}

fn parse_term(cur: &mut Cursor<'_>, vars: &[char]) -> Result<(BigInt, Vec<i64>), ParseError> {
    let mut coeff = BigInt::one();
    let mut exps = vec![0i64; vars.len()];
    let mut factors = 0;
    loop {
        match cur.peek() {
            Some(b) if b.is_ascii_digit() => coeff *= cur.digits()?,
            Some(b) if vars.contains(&(b as char)) => {
                cur.pos += 1;
                let idx = vars.iter().position(|&v| v == b as char).unwrap();
                let e = if cur.peek() == Some(b'^') {
                    cur.pos += 1;
                    cur.signed_exponent()?
                } else {
                    1
                };
                exps[idx] += e;
            }
            Some(b) if factors == 0 => {
                return Err(cur.error(format!("unexpected '{}'", b as char)));
            }
            None if factors == 0 => return Err(cur.error("missing term")),
            _ => break,
        }
        factors += 1;
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
            match cur.peek() {
                Some(b) if b.is_ascii_digit() || vars.contains(&(b as char)) => {}
                _ => return Err(cur.error("expected factor after '*'")),
            }
        }
    }
    Ok((coeff, exps))
}
