use num_bigint::BigInt;
use num_traits::Signed;

use crate::scalars::{QuadExt, Rational, Ring};

use super::{MultiPoly, PolyError};

/// Parses a polynomial with coefficients in `Q` or a single `Q(sqrt d)`.
///
/// Accepts `+ - * /` (division by constants only), `^` with nonnegative
/// integer exponents, parentheses, decimal integers, identifiers, and
/// `sqrt(n)` for a positive integer `n`.
pub fn parse_poly(src: &str) -> Result<MultiPoly<QuadExt>, PolyError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, radicand: None };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses a polynomial and requires rational coefficients.
pub fn parse_rational_poly(src: &str) -> Result<MultiPoly<Rational>, PolyError> {
    let p = parse_poly(src)?;
    if p.terms().any(|(_, c)| !c.is_rational()) {
        return Err(PolyError::Parse { offset: 0, message: "irrational coefficient".into() });
    }
    Ok(p.map_coeffs(|c| c.rat_part().clone()))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    radicand: Option<u64>,
}

type Poly = MultiPoly<QuadExt>;

impl Parser<'_> {
    fn error(&self, message: &str) -> PolyError {
        PolyError::Parse { offset: self.pos, message: message.to_string() }
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

    fn expect(&mut self, c: u8) -> Result<(), PolyError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc + &t } else { acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let f = self.unary()?;
            if c == b'*' {
                acc = acc * &f;
            } else {
                let Some(k) = f.as_constant() else {
                    self.pos = at;
                    return Err(self.error("division by a non-constant"));
                };
                let Ok(inv) = k.checked_inv() else {
                    self.pos = at;
                    return Err(self.error("division by zero"));
                };
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, PolyError> {
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

    fn power(&mut self) -> Result<Poly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.integer()?;
            let e: u32 = n.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Poly, PolyError> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Poly::constant(QuadExt::rational(Rational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                if name == "sqrt" && self.peek() == Some(b'(') {
                    self.pos += 1;
                    let at = self.pos;
                    let n = self.integer()?;
                    self.expect(b')')?;
                    return self.surd(n, at).map(Poly::constant);
                }
                Ok(Poly::var(name))
            }
            Some(_) => Err(self.error("unexpected character")),
        }
    }

    fn surd(&mut self, n: BigInt, at: usize) -> Result<QuadExt, PolyError> {
        let fail = |m: &str| PolyError::Parse { offset: at, message: m.to_string() };
        if !n.is_positive() {
            return Err(fail("sqrt of a non-positive integer"));
        }
        let mut n: u64 = (&n).try_into().ok().filter(|&v: &u64| v <= 1_000_000_000_000).ok_or_else(|| fail("radicand too large"))?;
        let mut outside = 1u64;
        let mut p = 2u64;
        while p * p <= n {
            while n.is_multiple_of(p * p) {
                n /= p * p;
                outside *= p;
            }
            p += 1;
        }
        let k = Rational::from_integer(outside.into());
        if n == 1 {
            return Ok(QuadExt::rational(k));
        }
        match self.radicand {
            Some(d) if d != n => return Err(fail(&format!("mixed radicands {d} and {n}"))),
            _ => self.radicand = Some(n),
        }
        QuadExt::new(Rational::from_integer(0.into()), k, n).map_err(|e| fail(&e.to_string()))
    }
}

impl From<&MultiPoly<Rational>> for MultiPoly<QuadExt> {
    fn from(p: &MultiPoly<Rational>) -> Self {
        p.map_coeffs(|c| QuadExt::rational(c.clone()))
    }
}
