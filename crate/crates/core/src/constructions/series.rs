//! The classical series of isotopic pairs inside `Mat(n|m)`.

use serde::{Deserialize, Serialize};

use crate::exactlin::{kernel, Matrix, Scalar};
use crate::pairs::Kind;

use super::envelope::{envelope_pair, EnvelopePair, MatrixSpan, SuperMatrixSpace};
use super::ConstructionError;

/// How `M^t` is read in the block conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Transpose {
    /// `(A B; C D)^t = (A^t C^t; B^t D^t)`.
    Plain,
    /// `(A B; C D)^st = (A^t C^t; -B^t D^t)`.
    Super,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Block {
    A,
    C,
    D,
}

/// A linear condition on the entries of a block matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rel {
    /// `(M^t)_{ij} = sign · M_{ij}` for every `(i, j)` in the block. On the
    /// `C` block this reads `B^t = sign · C`.
    Transposed(Block, i64),
    /// `A = D` and `B = C` (needs `n = m`).
    QShift,
}

fn in_block(sp: &SuperMatrixSpace, b: Block, i: usize, j: usize) -> bool {
    let (ri, cj) = (i >= sp.n, j >= sp.n);
    match b {
        Block::A => !ri && !cj,
        Block::C => ri && !cj,
        Block::D => ri && cj,
    }
}

fn constrained_span(sp: &SuperMatrixSpace, rels: &[Rel], tr: Transpose) -> Vec<Matrix> {
    let s = sp.size();
    let idx = |i: usize, j: usize| i * s + j;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for rel in rels {
        match *rel {
            Rel::Transposed(block, sign) => {
                for i in 0..s {
                    for j in 0..s {
                        if !in_block(sp, block, i, j) {
                            continue;
                        }
                        let mut r = vec![Scalar::zero(); s * s];
                        let t_sign = match tr {
                            Transpose::Plain => 1,
                            Transpose::Super => {
                                let p = sp.entry_parity(i, j).bit() * sp.index_parity(i).bit();
                                1 - 2 * i64::from(p)
                            }
                        };
                        r[idx(j, i)] += &Scalar::from_int(t_sign);
                        r[idx(i, j)] -= &Scalar::from_int(sign);
                        rows.push(r);
                    }
                }
            }
            Rel::QShift => {
                let n = sp.n;
                for i in 0..n {
                    for j in 0..n {
                        for (a, b) in [((i, j), (i + n, j + n)), ((i, j + n), (i + n, j))] {
                            let mut r = vec![Scalar::zero(); s * s];
                            r[idx(a.0, a.1)] = Scalar::one();
                            r[idx(b.0, b.1)] = Scalar::from_int(-1);
                            rows.push(r);
                        }
                    }
                }
            }
        }
    }
    let gens: Vec<Matrix> = if rows.is_empty() {
        sp.full_basis()
    } else {
        let m = Matrix::from_rows(rows).expect("rows have equal length");
        kernel(&m).into_iter().map(|v| Matrix::from_vec(s, s, v).expect("flat length")).collect()
    };
    sp.homogeneous_span(&gens)
}

fn cut(sp: &SuperMatrixSpace, r1: &[Rel], r2: &[Rel], tr: Transpose) -> Result<EnvelopePair, ConstructionError> {
    let s1 = MatrixSpan::new(sp, constrained_span(sp, r1, tr));
    let s2 = MatrixSpan::new(sp, constrained_span(sp, r2, tr));
    let mut ep = envelope_pair(sp, s1, s2, Kind::Isotopic)?;
    ep.transpose = Some(tr);
    Ok(ep)
}

/// Plain transpose first; supertranspose only if the plain reading is not closed.
fn cut_either(sp: &SuperMatrixSpace, r1: &[Rel], r2: &[Rel]) -> Result<EnvelopePair, ConstructionError> {
    match cut(sp, r1, r2, Transpose::Plain) {
        Ok(p) => Ok(p),
        Err(plain) => cut(sp, r1, r2, Transpose::Super).map_err(|_| plain),
    }
}

/// `gl(n, m)`: both spaces are all of `Mat(n|m)`.
pub fn series_gl(n: usize, m: usize) -> Result<EnvelopePair, ConstructionError> {
    if n + m == 0 {
        return Err(ConstructionError::BadInput("gl(n, m) needs n + m ≥ 1".into()));
    }
    let sp = SuperMatrixSpace::new(n, m);
    envelope_pair(&sp, MatrixSpan::full(&sp), MatrixSpan::full(&sp), Kind::Isotopic)
}

/// `osp^ε(n, m)`: `A^t = -A, D^t = D, B^t = εC` on the first space and
/// `X^t = X, W^t = -W, Y^t = εZ` on the second.
pub fn series_osp(n: usize, m: usize, eps: i64) -> Result<EnvelopePair, ConstructionError> {
    if n + m == 0 || eps.abs() != 1 {
        return Err(ConstructionError::BadInput("osp needs n + m ≥ 1 and ε = ±1".into()));
    }
    let sp = SuperMatrixSpace::new(n, m);
    let r1 = [Rel::Transposed(Block::A, -1), Rel::Transposed(Block::D, 1), Rel::Transposed(Block::C, eps)];
    let r2 = [Rel::Transposed(Block::A, 1), Rel::Transposed(Block::D, -1), Rel::Transposed(Block::C, eps)];
    cut_either(&sp, &r1, &r2)
}

/// `q(n)`: `A = D, B = C` and `X = W, Y = Z` inside `Mat(n|n)`.
pub fn series_q(n: usize) -> Result<EnvelopePair, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::BadInput("q(n) needs n ≥ 1".into()));
    }
    let sp = SuperMatrixSpace::new(n, n);
    cut_either(&sp, &[Rel::QShift], &[Rel::QShift])
}

/// `osq(n)` in the closed variant: inside `q(n)`, `A^t = -A, B^t = B` on the
/// first space and `X^t = -X, Y^t = Y` on the second.
pub fn series_osq(n: usize) -> Result<EnvelopePair, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::BadInput("osq(n) needs n ≥ 1".into()));
    }
    let sp = SuperMatrixSpace::new(n, n);
    let r = [Rel::QShift, Rel::Transposed(Block::A, -1), Rel::Transposed(Block::C, 1)];
    cut_either(&sp, &r, &r)
}

/// `osq(n)` with the conditions read verbatim: `A^t = A, B^t = -B` on the
/// first space and `X^t = -X, W^t = W` on the second, inside `q(n)`. This
/// reading is not closed; the error reports the dimensions of both spans.
pub fn series_osq_literal(n: usize) -> Result<EnvelopePair, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::BadInput("osq(n) needs n ≥ 1".into()));
    }
    let sp = SuperMatrixSpace::new(n, n);
    let r1 = [Rel::QShift, Rel::Transposed(Block::A, 1), Rel::Transposed(Block::C, -1)];
    let r2 = [Rel::QShift, Rel::Transposed(Block::A, -1), Rel::Transposed(Block::D, 1)];
    cut_either(&sp, &r1, &r2)
}

/// Dimension strings (`"e|o"`) of the two spans cut out by the literal osq
/// conditions, before any closure check.
pub fn osq_literal_dims(n: usize) -> [String; 2] {
    let sp = SuperMatrixSpace::new(n, n);
    let r1 = [Rel::QShift, Rel::Transposed(Block::A, 1), Rel::Transposed(Block::C, -1)];
    let r2 = [Rel::QShift, Rel::Transposed(Block::A, -1), Rel::Transposed(Block::D, 1)];
    [&r1, &r2].map(|r| {
        let b = constrained_span(&sp, r, Transpose::Plain);
        let odd = b.iter().filter(|m| sp.parity_of(m).is_some_and(|p| p.is_odd())).count();
        format!("{}|{}", b.len() - odd, odd)
    })
}

/// The isoquaternionic pair: `gl(2, 0)`, i.e. plain 2×2 matrices.
pub fn isoquaternionic_pair() -> EnvelopePair {
    series_gl(2, 0).expect("gl(2,0) is closed")
}
