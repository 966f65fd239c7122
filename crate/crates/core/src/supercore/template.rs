use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Parity;
use crate::exactlin::Scalar;

/// The five formal letters. `X, Y, Z` live in one space of the pair and
/// `U, V` in the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    X,
    Y,
    Z,
    U,
    V,
}

impl Letter {
    pub const ALL: [Letter; 5] = [Letter::X, Letter::Y, Letter::Z, Letter::U, Letter::V];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_char(c: char) -> Option<Letter> {
        Some(match c {
            'X' => Letter::X,
            'Y' => Letter::Y,
            'Z' => Letter::Z,
            'U' => Letter::U,
            'V' => Letter::V,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        ['X', 'Y', 'Z', 'U', 'V'][self.index()]
    }

    /// 0 for `X, Y, Z`; 1 for `U, V`.
    pub fn home_side(self) -> u8 {
        u8::from(matches!(self, Letter::U | Letter::V))
    }

    pub fn mask(self) -> u8 {
        1 << self.index()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BracketKind {
    /// `[X,Y]_U`, modelled by `XUY - A·YUX`.
    Iso,
    /// `X ∘_U Y`, modelled by `XUY + A·YUX`.
    Jordan,
}

impl BracketKind {
    /// Sign in front of the `A·YUX` word.
    pub fn model_sign(self) -> i64 {
        match self {
            BracketKind::Iso => -1,
            BracketKind::Jordan => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Expr {
    Letter(Letter),
    Bracket { kind: BracketKind, left: Box<Expr>, right: Box<Expr>, sub: Box<Expr> },
    /// Operator product `T(a)T(b)...`, used by representation identities.
    Word(Vec<Expr>),
}

impl Expr {
    pub fn letter(l: Letter) -> Self {
        Expr::Letter(l)
    }

    pub fn iso(left: Expr, right: Expr, sub: Expr) -> Self {
        Expr::Bracket { kind: BracketKind::Iso, left: Box::new(left), right: Box::new(right), sub: Box::new(sub) }
    }

    pub fn jordan(left: Expr, right: Expr, sub: Expr) -> Self {
        Expr::Bracket { kind: BracketKind::Jordan, left: Box::new(left), right: Box::new(right), sub: Box::new(sub) }
    }

    /// Bitmask of letters occurring in the expression.
    pub fn letter_mask(&self) -> u8 {
        match self {
            Expr::Letter(l) => l.mask(),
            Expr::Bracket { left, right, sub, .. } => left.letter_mask() | right.letter_mask() | sub.letter_mask(),
            Expr::Word(fs) => fs.iter().fold(0, |m, f| m | f.letter_mask()),
        }
    }

    /// Parity of the expression given letter parities as a bitmask.
    pub fn parity(&self, pm: u8) -> Parity {
        match self {
            Expr::Letter(l) => Parity::new((pm >> l.index()) & 1),
            Expr::Bracket { left, right, sub, .. } => left.parity(pm) + right.parity(pm) + sub.parity(pm),
            Expr::Word(fs) => fs.iter().fold(Parity::EVEN, |p, f| p + f.parity(pm)),
        }
    }

    /// Left and right operands exchanged (brackets) or factors reversed (words).
    pub fn swapped(&self) -> Expr {
        match self {
            Expr::Letter(_) => self.clone(),
            Expr::Bracket { kind, left, right, sub } => {
                Expr::Bracket { kind: *kind, left: right.clone(), right: left.clone(), sub: sub.clone() }
            }
            Expr::Word(fs) => Expr::Word(fs.iter().rev().cloned().collect()),
        }
    }

    /// Side (0 or 1, relative to the letters' home sides) of an element-valued
    /// expression.
    pub fn typecheck(&self) -> Result<TermType, TemplateError> {
        match self {
            Expr::Letter(l) => Ok(TermType::Element(l.home_side())),
            Expr::Bracket { left, right, sub, .. } => {
                let (l, r, s) = (left.element_side()?, right.element_side()?, sub.element_side()?);
                if l != r || s == l {
                    return Err(TemplateError::IllTyped(self.to_string()));
                }
                Ok(TermType::Element(l))
            }
            Expr::Word(fs) => {
                if fs.len() < 2 {
                    return Err(TemplateError::IllTyped(self.to_string()));
                }
                let sides = fs.iter().map(Expr::element_side).collect::<Result<Vec<_>, _>>()?;
                if sides.windows(2).any(|w| w[0] == w[1]) {
                    return Err(TemplateError::IllTyped(self.to_string()));
                }
                Ok(TermType::Operator)
            }
        }
    }

    fn element_side(&self) -> Result<u8, TemplateError> {
        match self.typecheck()? {
            TermType::Element(s) => Ok(s),
            TermType::Operator => Err(TemplateError::IllTyped(self.to_string())),
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Bracket { kind: BracketKind::Jordan, .. } => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }

    fn fmt_sub(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Letter(l) => write!(f, "{}", l.as_char()),
            _ => write!(f, "{{{self}}}"),
        }
    }

    fn fmt_operator(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.typecheck() {
            Ok(TermType::Element(1)) => "T2",
            _ => "T1",
        };
        write!(f, "{t}({self})")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Letter(l) => write!(f, "{}", l.as_char()),
            Expr::Bracket { kind: BracketKind::Iso, left, right, sub } => {
                write!(f, "[{left},{right}]_")?;
                sub.fmt_sub(f)
            }
            Expr::Bracket { kind: BracketKind::Jordan, left, right, sub } => {
                left.fmt_operand(f)?;
                write!(f, "∘_")?;
                sub.fmt_sub(f)?;
                if matches!(**sub, Expr::Letter(_)) && matches!(**right, Expr::Letter(_)) {
                    write!(f, " ")?;
                }
                right.fmt_operand(f)
            }
            Expr::Word(fs) => {
                for x in fs {
                    x.fmt_operator(f)?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermType {
    /// An element of side 0 (home of `X, Y, Z`) or side 1 (home of `U, V`).
    Element(u8),
    /// An operator product on a representation space.
    Operator,
}

/// A sign factor `A_{abc}` or `B_{abcd}` over formal letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignFactor {
    A([Letter; 3]),
    B([Letter; 4]),
}

impl SignFactor {
    /// Quadratic monomials of the exponent, each a letter bitmask. A mask with
    /// one bit stands for `p(a)p(a) = p(a)`.
    pub fn monomials(&self) -> Vec<u8> {
        let ls: &[Letter] = match self {
            SignFactor::A(l) => l,
            SignFactor::B(l) => l,
        };
        (0..ls.len()).map(|i| ls[i].mask() | ls[(i + 1) % ls.len()].mask()).collect()
    }

    pub fn bit(&self, pm: u8) -> u8 {
        self.monomials().iter().fold(0, |acc, &m| acc ^ u8::from(pm & m == m))
    }
}

impl fmt::Display for SignFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, ls): (char, &[Letter]) = match self {
            SignFactor::A(l) => ('A', l),
            SignFactor::B(l) => ('B', l),
        };
        write!(f, "{name}_{{")?;
        for l in ls {
            write!(f, "{}", l.as_char())?;
        }
        write!(f, "}}")
    }
}

/// `coef · (product of sign factors) · expr`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    pub coef: Scalar,
    pub signs: Vec<SignFactor>,
    pub expr: Expr,
}

impl Term {
    pub fn new(coef: Scalar, signs: Vec<SignFactor>, expr: Expr) -> Self {
        Term { coef, signs, expr }
    }

    /// Exponent bit of the product of the sign factors.
    pub fn sign_bit(&self, pm: u8) -> u8 {
        self.signs.iter().fold(0, |acc, s| acc ^ s.bit(pm))
    }

    /// `coef` times the evaluated sign.
    pub fn signed_coef(&self, pm: u8) -> Scalar {
        if self.sign_bit(pm) == 1 {
            -&self.coef
        } else {
            self.coef.clone()
        }
    }

    pub fn negated(&self) -> Term {
        Term { coef: -&self.coef, signs: self.signs.clone(), expr: self.expr.clone() }
    }

    /// Packs the term's quadratic sign exponent as monomial masks, for the
    /// hot evaluation loops.
    pub fn compiled_monomials(&self) -> Vec<u8> {
        self.signs.iter().flat_map(SignFactor::monomials).collect()
    }
}

/// A formal sum of terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IdentityTemplate {
    pub terms: Vec<Term>,
}

impl IdentityTemplate {
    pub fn new(terms: Vec<Term>) -> Self {
        IdentityTemplate { terms }
    }

    pub fn zero() -> Self {
        IdentityTemplate { terms: Vec::new() }
    }

    pub fn letter_mask(&self) -> u8 {
        self.terms.iter().fold(0, |m, t| m | t.expr.letter_mask())
    }

    /// Checks that every term is well typed and that element-valued terms
    /// agree on their side. Returns the common type (`None` for the empty sum).
    pub fn typecheck(&self) -> Result<Option<TermType>, TemplateError> {
        let mut common: Option<TermType> = None;
        let mut element_side: Option<u8> = None;
        for t in &self.terms {
            let ty = t.expr.typecheck()?;
            if let TermType::Element(s) = ty {
                if element_side.is_some_and(|e| e != s) {
                    return Err(TemplateError::IllTyped(t.expr.to_string()));
                }
                element_side = Some(s);
            }
            common = match (common, ty) {
                (None, t) => Some(t),
                (Some(TermType::Operator), _) | (_, TermType::Operator) => Some(TermType::Operator),
                (c, _) => c,
            };
        }
        Ok(common)
    }

    pub fn negated(&self) -> Self {
        IdentityTemplate { terms: self.terms.iter().map(Term::negated).collect() }
    }
}

impl fmt::Display for IdentityTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let operator_context = matches!(self.typecheck(), Ok(Some(TermType::Operator)));
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coef.is_negative();
            let mag = t.coef.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            for s in &t.signs {
                write!(f, "{s}")?;
            }
            match &t.expr {
                e @ Expr::Word(_) => write!(f, "{e}")?,
                e if operator_context => e.fmt_operator(f)?,
                e if t.signs.is_empty() => write!(f, "{e}")?,
                e @ Expr::Bracket { kind: BracketKind::Jordan, .. } => write!(f, "({e})")?,
                e => write!(f, "{e}")?,
            }
        }
        Ok(())
    }
}

/// `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Identity {
    pub lhs: IdentityTemplate,
    pub rhs: IdentityTemplate,
}

impl Identity {
    pub fn new(lhs: IdentityTemplate, rhs: IdentityTemplate) -> Self {
        Identity { lhs, rhs }
    }

    pub fn parse(lhs: &str, rhs: &str) -> Result<Self, TemplateError> {
        Ok(Identity { lhs: super::parse_template(lhs)?, rhs: super::parse_template(rhs)? })
    }

    /// `lhs - rhs` as a single sum.
    pub fn zero_form(&self) -> IdentityTemplate {
        let mut terms = self.lhs.terms.clone();
        terms.extend(self.rhs.terms.iter().map(Term::negated));
        IdentityTemplate { terms }
    }

    pub fn letter_mask(&self) -> u8 {
        self.lhs.letter_mask() | self.rhs.letter_mask()
    }

    pub fn typecheck(&self) -> Result<(), TemplateError> {
        self.zero_form().typecheck().map(|_| ())
    }

    /// Element-valued terms' side in the zero form, or `None` for operator
    /// identities and the empty identity.
    pub fn element_side(&self) -> Result<Option<u8>, TemplateError> {
        Ok(match self.zero_form().typecheck()? {
            Some(TermType::Element(s)) => Some(s),
            _ => None,
        })
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TemplateError {
    #[error("ill-typed nesting in {0}")]
    IllTyped(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    #[test]
    fn typecheck_catches_wrong_sides() {
        let bad = Expr::iso(Expr::letter(X), Expr::letter(U), Expr::letter(V));
        assert!(matches!(bad.typecheck(), Err(TemplateError::IllTyped(_))));
        let good = Expr::iso(Expr::letter(U), Expr::letter(V), Expr::letter(X));
        assert_eq!(good.typecheck(), Ok(TermType::Element(1)));
        let word = Expr::Word(vec![Expr::letter(X), Expr::letter(Y)]);
        assert!(word.typecheck().is_err());
    }

    #[test]
    fn sign_factor_bits() {
        let a = SignFactor::A([X, U, Y]);
        // p(X)=1, p(U)=0, p(Y)=1 -> exponent 1
        assert_eq!(a.bit(X.mask() | Y.mask()), 1);
        assert_eq!(a.bit(0), 0);
        // repeated letter: A_{XXX} = (-1)^{3p(X)}
        assert_eq!(SignFactor::A([X, X, X]).bit(X.mask()), 1);
    }
}
