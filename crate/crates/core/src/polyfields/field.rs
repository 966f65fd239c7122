use std::fmt;

use crate::exactlin::Scalar;
use crate::supercore::Parity;

use super::{PolyError, SuperPolynomial};

/// `Σ c_i ∂/∂x_i + Σ c_j ∂/∂θ_j`, coefficients on the left. Slot `k < n` is
/// `∂/∂x_{k+1}`, slot `n + j` is `∂/∂θ_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperVectorField {
    n: usize,
    m: usize,
    coeffs: Vec<SuperPolynomial>,
}

impl SuperVectorField {
    pub fn zero(n: usize, m: usize) -> Self {
        SuperVectorField { n, m, coeffs: vec![SuperPolynomial::zero(n, m); n + m] }
    }

    pub fn from_coeffs(n: usize, m: usize, coeffs: Vec<SuperPolynomial>) -> Result<Self, PolyError> {
        if coeffs.len() != n + m || coeffs.iter().any(|c| (c.n(), c.m()) != (n, m)) {
            return Err(PolyError::Shape(format!("a field on {n}|{m} variables needs {} coefficients over the same variables", n + m)));
        }
        Ok(SuperVectorField { n, m, coeffs })
    }

    /// `c·∂_k` for one slot.
    pub fn single(k: usize, c: SuperPolynomial) -> Self {
        let mut f = Self::zero(c.n(), c.m());
        f.coeffs[k] = c;
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[SuperPolynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SuperPolynomial::is_zero)
    }

    fn slot_parity(&self, k: usize) -> Parity {
        Parity::new(u8::from(k >= self.n))
    }

    /// Parity of a homogeneous field; zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut seen = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = c.parity()? + self.slot_parity(k);
            match seen {
                Some(q) if q != p => return None,
                _ => seen = Some(p),
            }
        }
        Some(seen.unwrap_or(Parity::EVEN))
    }

    /// Largest coefficient degree.
    pub fn degree(&self) -> u32 {
        self.coeffs.iter().map(SuperPolynomial::degree).max().unwrap_or(0)
    }

    pub(super) fn check_poly(&self, f: &SuperPolynomial) -> Result<(), PolyError> {
        if (self.n, self.m) != (f.n(), f.m()) {
            return Err(PolyError::Mismatch { left: (self.n, self.m), right: (f.n(), f.m()) });
        }
        Ok(())
    }

    /// `X(f)`.
    pub fn apply(&self, f: &SuperPolynomial) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero(self.n, self.m);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = if k < self.n { f.d_even(k) } else { f.d_odd(k - self.n) };
            out = out.add(&c.mul(&d));
        }
        out
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SuperVectorField) -> SuperVectorField {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_scaled(c, b)).collect();
        SuperVectorField { n: self.n, m: self.m, coeffs }
    }

    /// The field `f·X`, acting as `g ↦ f·X(g)`.
    pub fn left_mul(&self, f: &SuperPolynomial) -> SuperVectorField {
        let coeffs = self.coeffs.iter().map(|c| f.mul(c)).collect();
        SuperVectorField { n: self.n, m: self.m, coeffs }
    }

    /// Super Lie bracket `XY - (-1)^{p(X)p(Y)}YX` of homogeneous fields.
    pub fn lie_bracket(&self, other: &SuperVectorField) -> Result<SuperVectorField, PolyError> {
        let (px, py) = (self.parity().ok_or(PolyError::Inhomogeneous)?, other.parity().ok_or(PolyError::Inhomogeneous)?);
        let s = Scalar::sign(px.mul(py));
        let coeffs = (0..self.n + self.m)
            .map(|k| self.apply(&other.coeffs[k]).add_scaled(&-&s, &other.apply(&self.coeffs[k])))
            .collect();
        Ok(SuperVectorField { n: self.n, m: self.m, coeffs })
    }
}

/// `X(f)` with the variable sets checked.
pub fn vf_apply(x: &SuperVectorField, f: &SuperPolynomial) -> Result<SuperPolynomial, PolyError> {
    x.check_poly(f)?;
    Ok(x.apply(f))
}

impl fmt::Display for SuperVectorField {
    /// Canonical text, e.g. `x1^2*dx1 - t1*dt2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = if k < self.n { format!("dx{}", k + 1) } else { format!("dt{}", k - self.n + 1) };
            let text = c.to_string();
            let single = c.terms().count() == 1;
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if single => (true, rest.to_string()),
                _ => (false, text),
            };
            if !first || neg {
                write!(f, "{}", match (first, neg) {
                    (true, _) => "-",
                    (false, true) => " - ",
                    (false, false) => " + ",
                })?;
            }
            first = false;
            match (single, body.as_str()) {
                (true, "1") => write!(f, "{d}")?,
                (true, _) => write!(f, "{body}*{d}")?,
                (false, _) => write!(f, "({body})*{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
