//! Text syntax for polynomials and vector fields.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | 'x' i ['^' k] | 't' j | 'dx' i | 'dt' j | '(' expr ')'
//! ```
//!
//! `x_i` are even, `t_j` odd, `dx_i`, `dt_j` the partial derivatives. Indices
//! start at 1. Products are taken in the written order, so `t2*t1` is
//! `-t1*t2`. A field term is a polynomial times a field, e.g. `3*x1^2*dt1`.

use crate::exactlin::Scalar;

use super::{PolyError, SuperPolynomial, SuperVectorField};

#[derive(Debug, Clone)]
enum Value {
    Poly(SuperPolynomial),
    Field(SuperVectorField),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
    m: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.into() }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| PolyError::Parse { pos: start, msg: "expected a number".into() })
    }

    fn index(&mut self, bound: usize, what: &str) -> Result<usize, PolyError> {
        let at = self.pos;
        let i = self.number()? as usize;
        if i == 0 || i > bound {
            return Err(PolyError::Parse { pos: at, msg: format!("{what} index {i} out of range 1..={bound}") });
        }
        Ok(i - 1)
    }

    fn expr(&mut self) -> Result<Value, PolyError> {
        let neg = self.eat(b'-');
        let mut acc = self.term()?;
        if neg {
            acc = scale(acc, &Scalar::from_int(-1));
        }
        loop {
            let sign = match self.peek() {
                Some(b'+') => 1,
                Some(b'-') => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let at = self.pos;
            let t = self.term()?;
            acc = add(acc, &Scalar::from_int(sign), t).map_err(|m| PolyError::Parse { pos: at, msg: m })?;
        }
    }

    fn term(&mut self) -> Result<Value, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let at = self.pos;
            let f = self.factor()?;
            acc = match (acc, f) {
                (Value::Poly(a), Value::Poly(b)) => Value::Poly(a.mul(&b)),
                (Value::Poly(a), Value::Field(b)) => Value::Field(b.left_mul(&a)),
                (Value::Field(_), _) => return Err(PolyError::Parse { pos: at, msg: "a field must be the last factor".into() }),
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value, PolyError> {
        let (n, m) = (self.n, self.m);
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.number()?;
                let den = if self.eat(b'/') { self.number()? } else { 1 };
                if den == 0 {
                    return Err(self.err("zero denominator"));
                }
                let c = Scalar::ratio(num as i64, den as i64);
                Ok(Value::Poly(SuperPolynomial::constant(n, m, c)))
            }
            Some(b'x') => {
                self.pos += 1;
                let i = self.index(n, "even variable")?;
                let mut p = SuperPolynomial::x(n, m, i);
                if self.eat(b'^') {
                    let k = self.number()?;
                    p = (0..k).fold(SuperPolynomial::one(n, m), |acc, _| acc.mul(&SuperPolynomial::x(n, m, i)));
                }
                Ok(Value::Poly(p))
            }
            Some(b't') => {
                self.pos += 1;
                let j = self.index(m, "odd variable")?;
                Ok(Value::Poly(SuperPolynomial::theta(n, m, j)))
            }
            Some(b'd') => {
                self.pos += 1;
                let slot = match self.src.get(self.pos) {
                    Some(b'x') => {
                        self.pos += 1;
                        self.index(n, "even variable")?
                    }
                    Some(b't') => {
                        self.pos += 1;
                        n + self.index(m, "odd variable")?
                    }
                    _ => return Err(self.err("expected dx or dt")),
                };
                Ok(Value::Field(SuperVectorField::single(slot, SuperPolynomial::one(n, m))))
            }
            Some(c) => Err(self.err(format!("unexpected '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn scale(v: Value, c: &Scalar) -> Value {
    match v {
        Value::Poly(p) => Value::Poly(p.scale(c)),
        Value::Field(f) => Value::Field(SuperVectorField::zero(f.n(), f.m()).add_scaled(c, &f)),
    }
}

fn add(a: Value, c: &Scalar, b: Value) -> Result<Value, String> {
    match (a, b) {
        (Value::Poly(a), Value::Poly(b)) => Ok(Value::Poly(a.add_scaled(c, &b))),
        (Value::Field(a), Value::Field(b)) => Ok(Value::Field(a.add_scaled(c, &b))),
        _ => Err("cannot add a polynomial and a field".into()),
    }
}

fn run(src: &str, n: usize, m: usize) -> Result<Value, PolyError> {
    if m > 32 {
        return Err(PolyError::Shape("at most 32 odd variables are supported".into()));
    }
    let mut p = Parser { src: src.as_bytes(), pos: 0, n, m };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

/// Parses a polynomial in `n` even and `m` odd variables.
pub fn parse_poly(src: &str, n: usize, m: usize) -> Result<SuperPolynomial, PolyError> {
    match run(src, n, m)? {
        Value::Poly(p) => Ok(p),
        Value::Field(_) => Err(PolyError::Parse { pos: 0, msg: "expected a polynomial, found a vector field".into() }),
    }
}

/// Parses a vector field; a bare `0` is the zero field.
pub fn parse_field(src: &str, n: usize, m: usize) -> Result<SuperVectorField, PolyError> {
    match run(src, n, m)? {
        Value::Field(f) => Ok(f),
        Value::Poly(p) if p.is_zero() => Ok(SuperVectorField::zero(n, m)),
        Value::Poly(_) => Err(PolyError::Parse { pos: 0, msg: "expected a vector field, found a polynomial".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        for s in ["3*x1^2*t1 + 1/2*x2", "-t1*t2", "0", "x1 - 1"] {
            assert_eq!(parse_poly(s, 2, 2).unwrap().to_string(), s);
        }
        assert_eq!(parse_poly("t2*t1", 0, 2).unwrap().to_string(), "-t1*t2");
        for s in ["x1*dx1", "-t1*dx1 + (x1 + 2)*dt1", "dt1"] {
            assert_eq!(parse_field(s, 1, 1).unwrap().to_string(), s);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_poly("x3", 2, 0), Err(PolyError::Parse { pos: 1, .. })));
        assert!(parse_poly("x1 +", 1, 0).is_err());
        assert!(parse_poly("dx1", 1, 0).is_err());
        assert!(parse_field("dx1*x1", 1, 0).is_err());
        assert!(parse_field("x1 + dx1", 1, 0).is_err());
    }
}
