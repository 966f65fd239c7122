//! Text syntax for identity templates.
//!
//! ```text
//! sum      := '0' | [sign] term (('+' | '-') term)*
//! term     := [number ['*']] factor* ['*'] body
//! factor   := 'A_{' L L L '}' | 'B_{' L L L L '}'
//! body     := '(' sum ')' | ops | expr
//! ops      := ('T' ['1' | '2'] '(' expr ')')+
//! expr     := primary (('∘' | 'o') '_' sub primary)*
//! primary  := L | '[' expr ',' expr ']' '_' sub | '(' expr ')'
//! sub      := L | '{' expr '}'
//! ```
//!
//! `L` is one of `X Y Z U V`. A parenthesized sum after a coefficient is
//! distributed, so `1/2(A_{VYZ}[[X,Y]_U,Z]_V + ...)` parses as expected.

use super::template::{Expr, IdentityTemplate, Letter, SignFactor, Term, TemplateError};
use crate::exactlin::Scalar;

pub fn parse_template(src: &str) -> Result<IdentityTemplate, TemplateError> {
    let mut p = Parser { chars: src.char_indices().collect(), pos: 0, src_len: src.len() };
    let t = p.sum()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    t.typecheck()?;
    Ok(t)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    src_len: usize,
}

impl Parser {
    fn err(&self, msg: &str) -> TemplateError {
        let pos = self.chars.get(self.pos).map_or(self.src_len, |c| c.0);
        TemplateError::Parse { pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn peek_at(&mut self, k: usize) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos + k).map(|c| c.1)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, want: char) -> Result<(), TemplateError> {
        match self.bump() {
            Some(c) if c == want => Ok(()),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err(&format!("expected {want:?}")))
            }
        }
    }

    fn is_minus(c: char) -> bool {
        c == '-' || c == '−'
    }

    fn sum(&mut self) -> Result<IdentityTemplate, TemplateError> {
        if self.peek() == Some('0') && !matches!(self.peek_at(1), Some('0'..='9' | '/' | '*' | '(')) {
            self.pos += 1;
            return Ok(IdentityTemplate::zero());
        }
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(c) if Self::is_minus(c) => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            for t in self.term()? {
                terms.push(if negate { t.negated() } else { t });
            }
            match self.peek() {
                Some(c) if Self::is_minus(c) => negate = true,
                Some('+') => negate = false,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(IdentityTemplate::new(terms))
    }

    fn number(&mut self) -> Result<Option<Scalar>, TemplateError> {
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(None);
        }
        let mut s = String::new();
        while let Some(c) = self.chars.get(self.pos).map(|c| c.1) {
            if c.is_ascii_digit() || c == '/' {
                s.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        s.parse::<Scalar>().map(Some).map_err(|_| self.err("bad coefficient"))
    }

    /// One term, possibly expanding to several when a group is distributed.
    fn term(&mut self) -> Result<Vec<Term>, TemplateError> {
        let coef = self.number()?.unwrap_or_else(Scalar::one);
        if self.peek() == Some('*') {
            self.pos += 1;
        }
        let mut signs = Vec::new();
        while let (Some(c @ ('A' | 'B')), Some('_')) = (self.peek(), self.peek_at(1)) {
            self.pos += 2;
            self.expect('{')?;
            let n = if c == 'A' { 3 } else { 4 };
            let mut ls = Vec::with_capacity(n);
            for _ in 0..n {
                ls.push(self.letter()?);
            }
            self.expect('}')?;
            signs.push(if n == 3 {
                SignFactor::A([ls[0], ls[1], ls[2]])
            } else {
                SignFactor::B([ls[0], ls[1], ls[2], ls[3]])
            });
            if self.peek() == Some('*') {
                self.pos += 1;
            }
        }
        match self.peek() {
            Some('(') => {
                let save = self.pos;
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(')')?;
                if matches!(self.peek(), Some('∘' | 'o')) {
                    // The group was the left operand of a Jordan product.
                    self.pos = save;
                    let e = self.expr()?;
                    return Ok(vec![Term::new(coef, signs, e)]);
                }
                Ok(inner
                    .terms
                    .into_iter()
                    .map(|t| {
                        let mut all = signs.clone();
                        all.extend(t.signs);
                        Term::new(&coef * &t.coef, all, t.expr)
                    })
                    .collect())
            }
            Some('T') => Ok(vec![Term::new(coef, signs, self.ops()?)]),
            _ => Ok(vec![Term::new(coef, signs, self.expr()?)]),
        }
    }

    fn ops(&mut self) -> Result<Expr, TemplateError> {
        let mut factors = Vec::new();
        while self.peek() == Some('T') {
            self.pos += 1;
            if matches!(self.chars.get(self.pos).map(|c| c.1), Some('1' | '2')) {
                self.pos += 1;
            }
            self.expect('(')?;
            factors.push(self.expr()?);
            self.expect(')')?;
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Word(factors) })
    }

    fn letter(&mut self) -> Result<Letter, TemplateError> {
        match self.peek().and_then(Letter::from_char) {
            Some(l) => {
                self.pos += 1;
                Ok(l)
            }
            None => Err(self.err("expected one of X, Y, Z, U, V")),
        }
    }

    fn expr(&mut self) -> Result<Expr, TemplateError> {
        let mut left = self.primary()?;
        while matches!(self.peek(), Some('∘' | 'o')) {
            self.pos += 1;
            self.expect('_')?;
            let sub = self.sub()?;
            let right = self.primary()?;
            left = Expr::jordan(left, right, sub);
        }
        Ok(left)
    }

    fn primary(&mut self) -> Result<Expr, TemplateError> {
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let l = self.expr()?;
                self.expect(',')?;
                let r = self.expr()?;
                self.expect(']')?;
                self.expect('_')?;
                let s = self.sub()?;
                Ok(Expr::iso(l, r, s))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => Ok(Expr::Letter(self.letter()?)),
        }
    }

    fn sub(&mut self) -> Result<Expr, TemplateError> {
        if self.peek() == Some('{') {
            self.pos += 1;
            let e = self.expr()?;
            self.expect('}')?;
            Ok(e)
        } else {
            Ok(Expr::Letter(self.letter()?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    fn l(x: Letter) -> Expr {
        Expr::letter(x)
    }

    #[test]
    fn parses_basic_forms() {
        let t = parse_template("[X,Y]_U").unwrap();
        assert_eq!(t.terms, vec![Term::new(Scalar::one(), vec![], Expr::iso(l(X), l(Y), l(U)))]);
        let t = parse_template("-A_{XUY}[Y,X]_U").unwrap();
        assert_eq!(t.terms[0].coef, Scalar::from_int(-1));
        assert_eq!(t.terms[0].signs, vec![SignFactor::A([X, U, Y])]);
        let t = parse_template("X∘_{U∘_Z V}Y").unwrap();
        assert_eq!(t.terms[0].expr, Expr::jordan(l(X), l(Y), Expr::jordan(l(U), l(V), l(Z))));
        assert_eq!(parse_template("0").unwrap(), IdentityTemplate::zero());
    }

    #[test]
    fn distributes_groups() {
        let t = parse_template("1/2(A_{VYZ}[[X,Y]_U,Z]_V + [X,[Z,Y]_V]_U) - 1/2([X,Y]_{[U,V]_Z})").unwrap();
        assert_eq!(t.terms.len(), 3);
        assert_eq!(t.terms[0].coef, Scalar::ratio(1, 2));
        assert_eq!(t.terms[2].coef, Scalar::ratio(-1, 2));
    }

    #[test]
    fn jordan_with_grouped_left_operand() {
        let t = parse_template("A_{VYZ}(X∘_U Y)∘_V Z").unwrap();
        assert_eq!(t.terms[0].expr, Expr::jordan(Expr::jordan(l(X), l(Y), l(U)), l(Z), l(V)));
    }

    #[test]
    fn operator_words() {
        let t = parse_template("T2(U)T1(X)T2(V) - A_{UXV}T2(V)T1(X)T2(U)").unwrap();
        assert_eq!(t.terms[0].expr, Expr::Word(vec![l(U), l(X), l(V)]));
        let t = parse_template("T1([X,Y]_U)").unwrap();
        assert_eq!(t.terms[0].expr, Expr::iso(l(X), l(Y), l(U)));
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_template("[X,Y]_"), Err(TemplateError::Parse { .. })));
        assert!(matches!(parse_template("[X,U]_V"), Err(TemplateError::IllTyped(_))));
        assert!(parse_template("[X,Y]_U )").is_err());
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "A_{VYZ}[[X,Y]_U,Z]_V + A_{UZV}[X,[Z,Y]_U]_V - 1/2*B_{XZUV}[[Z,X]_V,Y]_U",
            "X∘_U(Z∘_V Y) - A_{VYZ}((X∘_U Y)∘_V Z) + B_{XZUV}((Z∘_V X)∘_U Y)",
            "T1([X,Y]_U) - T1(X)T2(U)T1(Y) + A_{XUY}T1(Y)T2(U)T1(X)",
            "X∘_{U∘_Z V}Y",
        ] {
            let t = parse_template(src).unwrap();
            let again = parse_template(&t.to_string()).unwrap();
            assert_eq!(t, again, "{src} -> {t}");
        }
    }
}
