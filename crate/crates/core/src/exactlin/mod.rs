//! Exact rational scalars and dense linear algebra.

mod echelon;
mod matrix;
mod scalar;
pub mod sparse;

pub use echelon::Echelon;
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use sparse::SVec;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
}

/// Result of [`rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

/// Reduced row-echelon form by Gauss-Jordan elimination.
///
/// The first nonzero entry of each column below the current row is used as
/// the pivot, so the result is deterministic (and unique anyway).
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].recip().expect("pivot is nonzero");
        for j in c..cols {
            let v = &a[(r, j)] * &inv;
            a[(r, j)] = v;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let v = &a[(i, j)] - &(&f * &a[(r, j)]);
                a[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { rank: pivots.len(), reduced: a, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Basis of the null space `{x : m x = 0}`, one vector per free column.
pub fn kernel(m: &Matrix) -> Vec<Vec<Scalar>> {
    let Rref { reduced, pivots, .. } = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -&reduced[(r, f)];
        }
        out.push(v);
    }
    out
}

fn check_lengths(vs: &[Vec<Scalar>], n: usize) -> Result<(), LinError> {
    match vs.iter().find(|v| v.len() != n) {
        Some(v) => Err(LinError::DimensionMismatch { expected: n, found: v.len() }),
        None => Ok(()),
    }
}

/// Canonical basis of the span of `vs` (the nonzero rows of their rref).
pub fn span_basis(vs: &[Vec<Scalar>], ambient: usize) -> Result<Vec<Vec<Scalar>>, LinError> {
    check_lengths(vs, ambient)?;
    if vs.is_empty() {
        return Ok(Vec::new());
    }
    let r = rref(&Matrix::from_rows(vs.to_vec())?);
    Ok((0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect())
}

/// Coefficients expressing `v` in terms of `basis`, or `None` if `v` is not in
/// the span. With a dependent basis, free coefficients are set to zero.
pub fn solve_in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinError> {
    let n = v.len();
    check_lengths(basis, n)?;
    let k = basis.len();
    let mut m = Matrix::zeros(n, k + 1);
    for (j, b) in basis.iter().enumerate() {
        for i in 0..n {
            m[(i, j)] = b[i].clone();
        }
    }
    for i in 0..n {
        m[(i, k)] = v[i].clone();
    }
    let r = rref(&m);
    if r.pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = vec![Scalar::zero(); k];
    for (row, &p) in r.pivots.iter().enumerate() {
        coeffs[p] = r.reduced[(row, k)].clone();
    }
    Ok(Some(coeffs))
}

/// Basis of `span(a) ∩ span(b)`, both living in `ambient` dimensions.
pub fn intersect_spans(
    a: &[Vec<Scalar>],
    b: &[Vec<Scalar>],
    ambient: usize,
) -> Result<Vec<Vec<Scalar>>, LinError> {
    check_lengths(a, ambient)?;
    check_lengths(b, ambient)?;
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let (k, l) = (a.len(), b.len());
    let mut m = Matrix::zeros(ambient, k + l);
    for i in 0..ambient {
        for j in 0..k {
            m[(i, j)] = a[j][i].clone();
        }
        for j in 0..l {
            m[(i, k + j)] = -&b[j][i];
        }
    }
    let mut common = Vec::new();
    for z in kernel(&m) {
        let mut v = vec![Scalar::zero(); ambient];
        for j in 0..k {
            if z[j].is_zero() {
                continue;
            }
            for i in 0..ambient {
                v[i].add_mul(&z[j], &a[j][i]);
            }
        }
        common.push(v);
    }
    span_basis(&common, ambient)
}

/// Precomputed elimination data for repeated coordinate lookups in a fixed
/// span with a linearly independent basis.
#[derive(Debug, Clone)]
pub struct SpanCoords {
    ambient: usize,
    /// Reduced echelon rows `R = E·B`.
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    /// The transform `E` with `R = E·B`.
    transform: Vec<Vec<Scalar>>,
}

impl SpanCoords {
    pub fn new(basis: &[Vec<Scalar>], ambient: usize) -> Result<Self, LinError> {
        check_lengths(basis, ambient)?;
        let k = basis.len();
        let mut aug = Matrix::zeros(k, ambient + k);
        for (i, b) in basis.iter().enumerate() {
            for j in 0..ambient {
                aug[(i, j)] = b[j].clone();
            }
            aug[(i, ambient + i)] = Scalar::one();
        }
        let r = rref(&aug);
        let pivots: Vec<usize> = r.pivots.iter().copied().filter(|&p| p < ambient).collect();
        if pivots.len() < k {
            return Err(LinError::Dependent);
        }
        let rows = (0..k).map(|i| r.reduced.row(i)[..ambient].to_vec()).collect();
        let transform = (0..k).map(|i| r.reduced.row(i)[ambient..].to_vec()).collect();
        Ok(SpanCoords { ambient, rows, pivots, transform })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Coordinates of `v` in the original basis, or `None` when outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinError> {
        if v.len() != self.ambient {
            return Err(LinError::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        let mut residual = v.to_vec();
        let mut c = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = residual[p].clone();
            if !f.is_zero() {
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        residual[j] -= &(&f * x);
                    }
                }
            }
            c.push(f);
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        let k = self.rows.len();
        let mut out = vec![Scalar::zero(); k];
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for j in 0..k {
                out[j].add_mul(ci, &self.transform[i][j]);
            }
        }
        Ok(Some(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn rref_identity() {
        let r = rref(&Matrix::identity(3));
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.reduced, Matrix::identity(3));
    }

    #[test]
    fn rref_zero() {
        assert_eq!(rref(&Matrix::zeros(2, 4)).rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let r = rref(&Matrix::from_ints(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.reduced, Matrix::from_ints(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn solve_examples() {
        let e1 = v(&[1, 0]);
        assert_eq!(solve_in_span(std::slice::from_ref(&e1), &v(&[3, 0])).unwrap(), Some(v(&[3])));
        assert_eq!(solve_in_span(&[e1], &v(&[0, 1])).unwrap(), None);
        let basis = [v(&[1, 1]), v(&[0, 1])];
        assert_eq!(solve_in_span(&basis, &v(&[1, 0])).unwrap(), Some(v(&[1, -1])));
        assert!(matches!(
            solve_in_span(&[v(&[1])], &v(&[1, 0])),
            Err(LinError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn intersect_examples() {
        let e1 = v(&[1, 0]);
        let e2 = v(&[0, 1]);
        assert_eq!(intersect_spans(std::slice::from_ref(&e1), std::slice::from_ref(&e1), 2).unwrap(), vec![e1.clone()]);
        assert!(intersect_spans(&[e1], &[e2], 2).unwrap().is_empty());
        // 2x2 matrices flattened row-major
        let sym = [v(&[1, 0, 0, 0]), v(&[0, 1, 1, 0]), v(&[0, 0, 0, 1])];
        let anti = [v(&[0, 1, -1, 0])];
        assert!(intersect_spans(&sym, &anti, 4).unwrap().is_empty());
        assert!(intersect_spans(&sym, &[v(&[1])], 4).is_err());
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for z in k {
            assert!(m.mul_vec(&z).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn span_coords_matches_solve() {
        let basis = [v(&[1, 1, 0]), v(&[0, 1, 1])];
        let sc = SpanCoords::new(&basis, 3).unwrap();
        assert_eq!(sc.coords(&v(&[2, 5, 3])).unwrap(), Some(v(&[2, 3])));
        assert_eq!(sc.coords(&v(&[1, 0, 0])).unwrap(), None);
        assert_eq!(SpanCoords::new(&[v(&[1, 1]), v(&[2, 2])], 2).unwrap_err(), LinError::Dependent);
    }
}
