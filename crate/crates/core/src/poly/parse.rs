//! Recursive-descent parser for polynomial text such as `x3^2*x5 - 1/2*x0 + 7`
//! or `(x0 - 2)*(x1 - 2)`. Parsing happens over `Q`; the result is then
//! checked against the requested domain.

use super::{Domain, Monomial, MultiPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

/// `x<i>` is variable `i`; `t` is variable 0.
pub(super) fn default_var(name: &str) -> Option<u16> {
    if name == "t" {
        return Some(0);
    }
    name.strip_prefix('x')?.parse().ok()
}

pub(super) fn parse(text: &str, domain: Domain, var: &dyn Fn(&str) -> Option<u16>) -> Result<MultiPoly> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, var };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.s.len() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    poly.to_domain(domain).map_err(|e| Error::parse(0, format!("not a polynomial over {}: {e}", domain.name())))
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    var: &'a dyn Fn(&str) -> Option<u16>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc.add(&rhs)? } else { acc.sub(&rhs)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == b'*' {
                acc.mul(&rhs)?
            } else {
                let c = match rhs.terms() {
                    [(m, c)] if m.is_one() => c.clone(),
                    // zero has no terms, so it lands in the error arm
                    _ => return Err(Error::parse(at, "can only divide by a nonzero constant")),
                };
                acc.scale(&(BigRational::from_integer(1.into()) / c))?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let digits = self.take_while(|c| c.is_ascii_digit());
            let e: u32 = digits.parse().map_err(|_| Error::parse(at, "expected an exponent"))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> String {
        let start = self.pos;
        while self.pos < self.s.len() && f(self.s[self.pos]) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let n: BigInt = digits.parse().expect("digits");
                Ok(MultiPoly::monomial(Domain::Q, Monomial::one(), n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
                let v = (self.var)(&name).ok_or_else(|| Error::parse(at, format!("unknown variable {name:?}")))?;
                Ok(MultiPoly::var(Domain::Q, v))
            }
            Some(_) => Err(Error::parse(self.pos, "unexpected character")),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products_and_powers() {
        let p = MultiPoly::parse("(x0 - 2)*(x1 - 2)", Domain::Z).unwrap();
        assert_eq!(p.to_string(), "x0*x1 - 2*x0 - 2*x1 + 4");
        let t = MultiPoly::parse("t^3 - 3*t + 2", Domain::Z).unwrap();
        assert_eq!(t.to_string(), "x0^3 - 3*x0 + 2");
        let r = MultiPoly::parse("x0 - 2/3", Domain::Q).unwrap();
        assert_eq!(r.to_string(), "x0 - 2/3");
    }

    #[test]
    fn errors_have_offsets() {
        assert!(matches!(MultiPoly::parse("x0 +", Domain::Q), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(MultiPoly::parse("x0 $", Domain::Q), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(MultiPoly::parse("y + 1", Domain::Q), Err(Error::Parse { offset: 0, .. })));
        assert!(MultiPoly::parse("x0 / x1", Domain::Q).is_err());
        assert!(MultiPoly::parse("(x0", Domain::Q).is_err());
    }

    #[test]
    fn custom_names() {
        let names = |s: &str| ["w", "x", "y", "z"].iter().position(|n| *n == s).map(|i| i as u16);
        let p = MultiPoly::parse_with("w - 4/5*x", Domain::Q, &names).unwrap();
        assert_eq!(p.to_string(), "x0 - 4/5*x1");
    }
}
