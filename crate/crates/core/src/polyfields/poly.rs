use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::exactlin::Scalar;
use crate::supercore::Parity;

use super::PolyError;

/// `x^e θ_S`: even exponents and a bitmask of odd variables, always written
/// with the odd factors in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exps: Vec<u32>,
    pub odd: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n], odd: 0 }
    }

    pub fn parity(&self) -> Parity {
        Parity::new((self.odd.count_ones() % 2) as u8)
    }

    /// Total degree, odd variables counted with weight one.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum::<u32>() + self.odd.count_ones()
    }

    /// Product of two monomials with its Koszul sign, `None` when an odd
    /// variable repeats.
    fn mul(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        if self.odd & other.odd != 0 {
            return None;
        }
        // Each odd factor of `other` moves left past the larger ones of `self`.
        let mut swaps = 0;
        let mut rest = other.odd;
        while rest != 0 {
            let j = rest.trailing_zeros();
            swaps += (self.odd >> (j + 1)).count_ones();
            rest &= rest - 1;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Some((Monomial { exps, odd: self.odd | other.odd }, swaps % 2 == 1))
    }
}

/// An element of `O(n|m)` restricted to polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperPolynomial {
    n: usize,
    m: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl SuperPolynomial {
    pub fn zero(n: usize, m: usize) -> Self {
        SuperPolynomial { n, m, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, m: usize, c: Scalar) -> Self {
        let mut p = Self::zero(n, m);
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn one(n: usize, m: usize) -> Self {
        Self::constant(n, m, Scalar::one())
    }

    /// The even coordinate `x_i` (0-based).
    pub fn x(n: usize, m: usize, i: usize) -> Self {
        let mut mono = Monomial::one(n);
        mono.exps[i] = 1;
        Self::monomial(n, m, mono, Scalar::one())
    }

    /// The odd coordinate `θ_j` (0-based).
    pub fn theta(n: usize, m: usize, j: usize) -> Self {
        Self::monomial(n, m, Monomial { exps: vec![0; n], odd: 1 << j }, Scalar::one())
    }

    pub fn monomial(n: usize, m: usize, mono: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(n, m);
        p.add_term(mono, c);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Parity of a homogeneous polynomial; zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next().unwrap_or(Parity::EVEN);
        it.all(|p| p == first).then_some(first)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub(super) fn check_same(&self, other: &SuperPolynomial) -> Result<(), PolyError> {
        if (self.n, self.m) != (other.n, other.m) {
            return Err(PolyError::Mismatch { left: (self.n, self.m), right: (other.n, other.m) });
        }
        Ok(())
    }

    pub fn add(&self, other: &SuperPolynomial) -> SuperPolynomial {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SuperPolynomial) -> SuperPolynomial {
        self.add_scaled(&Scalar::from_int(-1), other)
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), c * v);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SuperPolynomial {
        Self::zero(self.n, self.m).add_scaled(c, self)
    }

    /// Supercommutative product. Panics if the variable counts differ; use
    /// [`poly_mul`] for a checked version.
    pub fn mul(&self, other: &SuperPolynomial) -> SuperPolynomial {
        assert_eq!((self.n, self.m), (other.n, other.m), "polynomials over different variable sets");
        let mut out = Self::zero(self.n, self.m);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((mono, neg)) = a.mul(b) {
                    let c = ca * cb;
                    out.add_term(mono, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// `∂f/∂x_i`.
    pub fn d_even(&self, i: usize) -> SuperPolynomial {
        let mut out = Self::zero(self.n, self.m);
        for (k, c) in &self.terms {
            let e = k.exps[i];
            if e > 0 {
                let mut mono = k.clone();
                mono.exps[i] -= 1;
                out.add_term(mono, c * &Scalar::from_int(e as i64));
            }
        }
        out
    }

    /// Left derivative `∂f/∂θ_j`: `θ_j` is moved to the front first.
    pub fn d_odd(&self, j: usize) -> SuperPolynomial {
        let mut out = Self::zero(self.n, self.m);
        for (k, c) in &self.terms {
            if k.odd >> j & 1 == 1 {
                let before = (k.odd & ((1 << j) - 1)).count_ones();
                let mono = Monomial { exps: k.exps.clone(), odd: k.odd & !(1 << j) };
                out.add_term(mono, if before % 2 == 1 { -c } else { c.clone() });
            }
        }
        out
    }
}

/// Checked supercommutative product.
pub fn poly_mul(f: &SuperPolynomial, g: &SuperPolynomial) -> Result<SuperPolynomial, PolyError> {
    f.check_same(g)?;
    Ok(f.mul(g))
}

impl fmt::Display for SuperPolynomial {
    /// Canonical text form, e.g. `3*x1^2*t1 + 1/2*x2`. Terms run from the
    /// highest monomial in the internal order down.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mono, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            for (i, &e) in mono.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{e}", i + 1)),
                }
            }
            for j in 0..self.m {
                if mono.odd >> j & 1 == 1 {
                    factors.push(format!("t{}", j + 1));
                }
            }
            let abs = c.abs();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grassmann_rules() {
        let (t1, t2) = (SuperPolynomial::theta(0, 2, 0), SuperPolynomial::theta(0, 2, 1));
        assert!(t1.mul(&t1).is_zero());
        assert_eq!(t2.mul(&t1), t1.mul(&t2).scale(&Scalar::from_int(-1)));
        assert_eq!(t1.mul(&t2).d_odd(0), t2);
        assert_eq!(t1.mul(&t2).d_odd(1), t1.scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn display() {
        let x = SuperPolynomial::x(2, 1, 0);
        let p = x.mul(&x).mul(&SuperPolynomial::theta(2, 1, 0)).scale(&Scalar::from_int(3));
        let q = p.add(&SuperPolynomial::x(2, 1, 1).scale(&Scalar::ratio(1, 2)));
        assert_eq!(q.to_string(), "3*x1^2*t1 + 1/2*x2");
        assert_eq!(SuperPolynomial::zero(1, 0).to_string(), "0");
    }
}
