//! Isotopic and super-Jordan pairs as structure constants, with exhaustive
//! axiom checkers over homogeneous basis tuples.

mod checks;
mod eval;
mod io;
mod report;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlin::sparse::{self, Accumulator};
use crate::exactlin::{SVec, Scalar};
use crate::supercore::{Parity, SuperSpace};

pub use checks::{
    check_compatibility, check_evenness, check_jacobi_analog, check_super_jordan, check_symmetry, verify,
    verify_with, CheckOptions,
};
pub use eval::{check_identity, eval_on_elements, ElementAlgebra};
pub use report::{AxiomReport, Entry, Failure, Residual, DEFAULT_MAX_FAILURES};

/// Which family of brackets a pair carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Kind {
    /// Isocommutators, graded antisymmetric.
    Isotopic,
    /// Jordan products, graded symmetric.
    SuperJordan,
}

impl Kind {
    pub fn toggled(self) -> Kind {
        match self {
            Kind::Isotopic => Kind::SuperJordan,
            Kind::SuperJordan => Kind::Isotopic,
        }
    }
}

/// One of the two spaces of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(i: u8) -> Side {
        if i & 1 == 0 {
            Side::First
        } else {
            Side::Second
        }
    }

    pub fn other(self) -> Side {
        Side::from_index(self.index() ^ 1)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("vector of length {found} does not belong to a space of dimension {expected}")]
    SpaceMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for a space of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("check requires a pair of kind {expected:?}, found {found:?}")]
    WrongKind { expected: Kind, found: Kind },
    #[error("malformed pair: {0}")]
    Malformed(String),
}

/// `m1(u, x, y) = [x, y]_u` with `u ∈ V2`, `x, y ∈ V1`, and symmetrically
/// `m2(x, u, v) = [u, v]_x`. Tensors are stored flat, indexed by
/// `(sub, left, right)`; absent outputs are empty vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairStructure {
    v1: SuperSpace,
    v2: SuperSpace,
    kind: Kind,
    m1: Vec<SVec>,
    m2: Vec<SVec>,
}

impl PairStructure {
    /// The pair with all brackets zero.
    pub fn zero(v1: SuperSpace, v2: SuperSpace, kind: Kind) -> Self {
        let (d1, d2) = (v1.dim(), v2.dim());
        PairStructure { m1: vec![Vec::new(); d2 * d1 * d1], m2: vec![Vec::new(); d1 * d2 * d2], v1, v2, kind }
    }

    /// Builds a pair by evaluating `f(side, sub, left, right)` on every basis
    /// triple, where `side` is the space holding `left` and `right`.
    pub fn from_fn(
        v1: SuperSpace,
        v2: SuperSpace,
        kind: Kind,
        mut f: impl FnMut(Side, usize, usize, usize) -> SVec,
    ) -> Self {
        let mut p = PairStructure::zero(v1, v2, kind);
        for side in [Side::First, Side::Second] {
            let (d, e) = (p.space(side).dim(), p.space(side.other()).dim());
            for s in 0..e {
                for a in 0..d {
                    for b in 0..d {
                        let out = f(side, s, a, b);
                        let i = p.slot(side, s, a, b);
                        p.tensor_mut(side)[i] = out.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    }
                }
            }
        }
        p
    }

    pub fn v1(&self) -> &SuperSpace {
        &self.v1
    }

    pub fn v2(&self) -> &SuperSpace {
        &self.v2
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn space(&self, side: Side) -> &SuperSpace {
        match side {
            Side::First => &self.v1,
            Side::Second => &self.v2,
        }
    }

    fn tensor(&self, side: Side) -> &[SVec] {
        match side {
            Side::First => &self.m1,
            Side::Second => &self.m2,
        }
    }

    fn tensor_mut(&mut self, side: Side) -> &mut Vec<SVec> {
        match side {
            Side::First => &mut self.m1,
            Side::Second => &mut self.m2,
        }
    }

    #[inline]
    fn slot(&self, side: Side, sub: usize, a: usize, b: usize) -> usize {
        let d = self.space(side).dim();
        (sub * d + a) * d + b
    }

    /// Structure constants of `[e_a, e_b]_{f_sub}` where `e_a, e_b` are basis
    /// vectors of `side` and `f_sub` of the other space.
    #[inline]
    pub fn m(&self, side: Side, sub: usize, a: usize, b: usize) -> &SVec {
        &self.tensor(side)[self.slot(side, sub, a, b)]
    }

    /// Sets one structure constant vector, dropping zero coefficients.
    pub fn set(&mut self, side: Side, sub: usize, a: usize, b: usize, out: SVec) -> Result<(), PairError> {
        let (d, e) = (self.space(side).dim(), self.space(side.other()).dim());
        for (i, dim) in [(sub, e), (a, d), (b, d)] {
            if i >= dim {
                return Err(PairError::IndexOutOfRange { index: i, dim });
            }
        }
        if let Some(&(k, _)) = out.iter().find(|(k, _)| *k >= d) {
            return Err(PairError::IndexOutOfRange { index: k, dim: d });
        }
        let mut acc = Accumulator::new(d);
        for (k, c) in &out {
            acc.add(*k, c);
        }
        let slot = self.slot(side, sub, a, b);
        self.tensor_mut(side)[slot] = acc.take();
        Ok(())
    }

    /// Nonzero structure constants as `(sub, left, right, output)`, in index order.
    pub fn entries(&self, side: Side) -> impl Iterator<Item = (usize, usize, usize, &SVec)> + '_ {
        let d = self.space(side).dim();
        self.tensor(side).iter().enumerate().filter(|(_, v)| !v.is_empty()).map(move |(i, v)| {
            let (sub, rest) = (i / (d * d), i % (d * d));
            (sub, rest / d, rest % d, v)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.m1.iter().chain(&self.m2).all(Vec::is_empty)
    }

    /// Trilinear evaluation of `[x, y]_u`, where `x, y` lie in `side` and `u`
    /// in the other space.
    pub fn bracket(&self, side: Side, u: &[Scalar], x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, PairError> {
        let (d, e) = (self.space(side).dim(), self.space(side.other()).dim());
        for (v, dim) in [(u, e), (x, d), (y, d)] {
            if v.len() != dim {
                return Err(PairError::SpaceMismatch { expected: dim, found: v.len() });
            }
        }
        Ok(sparse::to_dense(&self.bracket_sparse(side, &sparse::from_dense(u), &sparse::from_dense(x), &sparse::from_dense(y)), d))
    }

    /// Sparse trilinear evaluation; indices are trusted.
    pub fn bracket_sparse(&self, side: Side, u: &SVec, x: &SVec, y: &SVec) -> SVec {
        let mut acc = Accumulator::new(self.space(side).dim());
        for (s, cs) in u {
            for (a, ca) in x {
                let csa = cs * ca;
                for (b, cb) in y {
                    let c = &csa * cb;
                    for (k, ck) in self.m(side, *s, *a, *b) {
                        acc.add_mul(*k, &c, ck);
                    }
                }
            }
        }
        acc.take()
    }

    /// Same constants, every basis parity toggled, kind toggled.
    pub fn parity_flip(&self) -> PairStructure {
        PairStructure { v1: self.v1.flipped(), v2: self.v2.flipped(), kind: self.kind.toggled(), ..self.clone() }
    }

    /// The pair with the roles of the two spaces exchanged.
    pub fn swap_sides(&self) -> PairStructure {
        PairStructure {
            v1: self.v2.clone(),
            v2: self.v1.clone(),
            kind: self.kind,
            m1: self.m2.clone(),
            m2: self.m1.clone(),
        }
    }

    /// The same structure with every constant multiplied by `c`.
    pub fn scaled(&self, c: &Scalar) -> PairStructure {
        let f = |t: &Vec<SVec>| t.iter().map(|v| sparse::scale(v, c)).collect();
        PairStructure { m1: f(&self.m1), m2: f(&self.m2), ..self.clone() }
    }

    pub fn parity(&self, side: Side, i: usize) -> Parity {
        self.space(side).parity(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl_n0(n: usize) -> PairStructure {
        // Plain n×n matrices with the isocommutator of the associative product.
        let sp = SuperSpace::new(
            (0..n).flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1))).collect(),
            vec![Parity::EVEN; n * n],
        )
        .unwrap();
        let prod = |a: usize, b: usize, c: usize| -> Option<usize> {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            let (m, q) = (c / n, c % n);
            (j == k && l == m).then_some(i * n + q)
        };
        PairStructure::from_fn(sp.clone(), sp, Kind::Isotopic, |_, u, x, y| {
            let mut out = Vec::new();
            if let Some(k) = prod(x, u, y) {
                out.push((k, Scalar::one()));
            }
            if let Some(k) = prod(y, u, x) {
                out.push((k, Scalar::from_int(-1)));
            }
            let mut acc = Accumulator::new(n * n);
            for (k, c) in out {
                acc.add(k, &c);
            }
            acc.take()
        })
    }

    #[test]
    fn bracket_examples() {
        let p = gl_n0(1);
        let one = vec![Scalar::one()];
        assert_eq!(p.bracket(Side::First, &one, &one, &one).unwrap(), vec![Scalar::zero()]);
        let p = gl_n0(2);
        let e = |i: usize| sparse::to_dense(&sparse::unit(i), 4);
        // [E12, E11]_{E21} = E11
        assert_eq!(p.bracket(Side::First, &e(2), &e(1), &e(0)).unwrap(), e(0));
        let z = vec![Scalar::zero(); 4];
        assert_eq!(p.bracket(Side::First, &z, &z, &z).unwrap(), z);
        assert!(matches!(p.bracket(Side::Second, &one, &z, &z), Err(PairError::SpaceMismatch { .. })));
    }

    #[test]
    fn parity_flip_is_involution() {
        let p = gl_n0(2);
        let f = p.parity_flip();
        assert_eq!(f.kind(), Kind::SuperJordan);
        assert!(f.v1().parities().iter().all(|p| p.is_odd()));
        assert_eq!(f.parity_flip(), p);
    }

    #[test]
    fn entries_round_trip_through_set() {
        let p = gl_n0(2);
        let mut q = PairStructure::zero(p.v1().clone(), p.v2().clone(), Kind::Isotopic);
        for side in [Side::First, Side::Second] {
            for (s, a, b, v) in p.entries(side) {
                q.set(side, s, a, b, v.clone()).unwrap();
            }
        }
        assert_eq!(p, q);
        assert!(q.set(Side::First, 9, 0, 0, vec![]).is_err());
    }
}
