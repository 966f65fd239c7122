//! Parity bookkeeping, the sign factors `A` and `B`, identity templates and
//! the free-envelope validator.

mod catalog;
mod expand;
mod parse;
mod template;

pub use catalog::{catalog_entry, identity_catalog, minimal_correction, CatalogIdentity, Modification, TermChange};
pub use expand::{expand_template, validate_identity, AssignmentVerdict, ValidationReport, WordDiff};
pub use parse::parse_template;
pub use template::{
    BracketKind, Expr, Identity, IdentityTemplate, Letter, SignFactor, Term, TermType, TemplateError,
};

use std::collections::HashSet;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exactlin::Scalar;

/// A `Z/2` degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Parity(u8);

impl Parity {
    pub const EVEN: Parity = Parity(0);
    pub const ODD: Parity = Parity(1);

    pub fn new(bit: u8) -> Self {
        Parity(bit & 1)
    }

    pub fn bit(self) -> u8 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 == 1
    }

    pub fn flip(self) -> Self {
        Parity(self.0 ^ 1)
    }

    /// The product `p(a)·p(b)` as a bit.
    pub fn mul(self, other: Parity) -> u8 {
        self.0 & other.0
    }
}

impl Add for Parity {
    type Output = Parity;
    /// Addition in Z/2.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity(self.0 ^ rhs.0)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Parity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.0)
    }
}

impl<'de> Deserialize<'de> for Parity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match u8::deserialize(d)? {
            b @ (0 | 1) => Ok(Parity(b)),
            b => Err(serde::de::Error::custom(format!("parity must be 0 or 1, got {b}"))),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("{labels} labels but {parities} parities")]
    LengthMismatch { labels: usize, parities: usize },
}

/// A finite graded basis: ordered labels, each with a parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SuperSpace {
    labels: Vec<String>,
    parities: Vec<Parity>,
}

impl SuperSpace {
    pub fn new(labels: Vec<String>, parities: Vec<Parity>) -> Result<Self, SpaceError> {
        if labels.len() != parities.len() {
            return Err(SpaceError::LengthMismatch { labels: labels.len(), parities: parities.len() });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(SpaceError::DuplicateLabel(l.clone()));
            }
        }
        Ok(SuperSpace { labels, parities })
    }

    pub fn empty() -> Self {
        SuperSpace { labels: Vec::new(), parities: Vec::new() }
    }

    /// Labels `prefix0, prefix1, ...` with the given parities.
    pub fn numbered(prefix: &str, parities: Vec<Parity>) -> Self {
        let labels = (0..parities.len()).map(|i| format!("{prefix}{i}")).collect();
        SuperSpace { labels, parities }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parities.iter().filter(|p| !p.is_odd()).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Same labels with every parity toggled.
    pub fn flipped(&self) -> Self {
        SuperSpace { labels: self.labels.clone(), parities: self.parities.iter().map(|p| p.flip()).collect() }
    }

    /// Parity of a vector if it is homogeneous, `None` otherwise (zero counts as even).
    pub fn vector_parity(&self, v: &[Scalar]) -> Option<Parity> {
        let mut seen: Option<Parity> = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match seen {
                None => seen = Some(self.parities[i]),
                Some(p) if p != self.parities[i] => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(Parity::EVEN))
    }

    /// `"e|o"` dimension string, e.g. `"5|4"`.
    pub fn dims_string(&self) -> String {
        format!("{}|{}", self.even_dim(), self.odd_dim())
    }
}

impl<'de> Deserialize<'de> for SuperSpace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            labels: Vec<String>,
            parities: Vec<Parity>,
        }
        let raw = Raw::deserialize(d)?;
        SuperSpace::new(raw.labels, raw.parities).map_err(serde::de::Error::custom)
    }
}

/// Exponent bit of `A_{XYZ}`.
#[inline]
pub fn sign_a_bit(p1: Parity, p2: Parity, p3: Parity) -> u8 {
    p1.mul(p2) ^ p2.mul(p3) ^ p3.mul(p1)
}

/// Exponent bit of `B_{XYZW}`.
#[inline]
pub fn sign_b_bit(p1: Parity, p2: Parity, p3: Parity, p4: Parity) -> u8 {
    p1.mul(p2) ^ p2.mul(p3) ^ p3.mul(p4) ^ p4.mul(p1)
}

/// `A_{XYZ} = (-1)^{p(X)p(Y) + p(Y)p(Z) + p(Z)p(X)}`.
pub fn sign_a(p1: Parity, p2: Parity, p3: Parity) -> Scalar {
    Scalar::sign(sign_a_bit(p1, p2, p3))
}

/// `B_{XYZW} = (-1)^{p(X)p(Y) + p(Y)p(Z) + p(Z)p(W) + p(W)p(X)}`.
pub fn sign_b(p1: Parity, p2: Parity, p3: Parity, p4: Parity) -> Scalar {
    Scalar::sign(sign_b_bit(p1, p2, p3, p4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(b: u8) -> Parity {
        Parity::new(b)
    }

    #[test]
    fn sign_a_examples() {
        assert_eq!(sign_a(p(0), p(0), p(0)), Scalar::one());
        assert_eq!(sign_a(p(1), p(1), p(1)), Scalar::from_int(-1));
        assert_eq!(sign_a(p(1), p(0), p(1)), Scalar::from_int(-1));
    }

    #[test]
    fn sign_b_examples() {
        assert_eq!(sign_b(p(0), p(0), p(0), p(0)), Scalar::one());
        assert_eq!(sign_b(p(1), p(1), p(1), p(1)), Scalar::one());
        assert_eq!(sign_b(p(1), p(1), p(0), p(0)), Scalar::from_int(-1));
    }

    #[test]
    fn space_rejects_duplicates() {
        let r = SuperSpace::new(vec!["a".into(), "a".into()], vec![Parity::EVEN, Parity::ODD]);
        assert_eq!(r, Err(SpaceError::DuplicateLabel("a".into())));
        let s = SuperSpace::new(vec!["a".into(), "b".into()], vec![Parity::EVEN, Parity::ODD]).unwrap();
        assert_eq!(s.dims_string(), "1|1");
        assert_eq!(s.flipped().parity(0), Parity::ODD);
    }

    #[test]
    fn parity_serde_rejects_two() {
        assert!(serde_json::from_str::<Parity>("2").is_err());
        assert_eq!(serde_json::from_str::<Parity>("1").unwrap(), Parity::ODD);
    }
}
