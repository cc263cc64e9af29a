//! Canonical text form of rational functions and a parser for the same
//! expression language (integers, `q`, `t`, `+ - * / ^`, parentheses).

use std::fmt::{self, Write};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::ratfunc::QTRational;
use super::zpoly::ZPoly;
use crate::error::Error;

fn monomial_text(i: usize, j: usize) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("q".to_string()),
        _ => parts.push(format!("q^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("t".to_string()),
        _ => parts.push(format!("t^{j}")),
    }
    parts.join("*")
}

/// Terms sorted descending by `(deg_q, deg_t)`, e.g. `-q*t + 1`.
fn poly_text(z: &ZPoly) -> String {
    let mut terms: Vec<(usize, usize, &BigInt)> = z.terms().collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.reverse();
    let mut out = String::new();
    for (k, (i, j, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = monomial_text(i, j);
        if mono.is_empty() {
            write!(out, "{mag}").unwrap();
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            write!(out, "{mag}*{mono}").unwrap();
        }
    }
    out
}

fn wrapped(z: &ZPoly) -> String {
    let s = poly_text(z);
    if z.term_count() > 1 {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_is_one() {
            f.write_str(&wrapped(self.num_z()))
        } else {
            let den = poly_text(self.den_z());
            // a bare product after `/` would bind only its first factor
            let den = if self.den_z().term_count() > 1 || den.contains('*') { format!("({den})") } else { den };
            write!(f, "{}/{den}", wrapped(self.num_z()))
        }
    }
}

impl FromStr for QTRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(v)
    }
}

impl Serialize for QTRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QTRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
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

    fn expr(&mut self) -> Result<QTRational, Error> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QTRational, Error> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<QTRational, Error> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QTRational, Error> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn atom(&mut self) -> Result<QTRational, Error> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(QTRational::q())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(QTRational::t())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(QTRational::from_int(self.integer()?)),
            _ => Err(self.err("expected operand")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["0", "1", "-3", "q", "(-q*t + 1)", "(q + 1)/(-t + 1)", "-q/(-t + 1)", "1/2", "(q^2*t^3 - 5*q + 7)/(2*t^2 + 3)", "-1/(2*t)", "q/(3*t)", "1/t^2", "3/(4*q*t)"] {
            let v: QTRational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
            let w: QTRational = v.to_string().parse().unwrap();
            assert_eq!(v, w);
        }
    }

    #[test]
    fn parse_errors() {
        assert!("q +".parse::<QTRational>().is_err());
        assert!("1/(q-q)".parse::<QTRational>().is_err());
        assert!("(q".parse::<QTRational>().is_err());
        assert!("x".parse::<QTRational>().is_err());
    }
}
