//! A split representation of a pair as a representation of its polarized
//! superalgebra.
//!
//! Grading `H1` as given and `H2` shifted by one makes `T1(x)` and `T2(u)`
//! operators of parity `|x| = p(x) + 1`, matching the superalgebra. Then
//! `ρ(x) = T1(x)`, `ρ(u) = T2(u)`, `ρ(D(x,u)) = [T1(x), T2(u)]` and
//! commutators in `g0` go to commutators of images.

use serde::{Deserialize, Serialize};

use super::{check_rep, check_split, matrix_residual, PairRep, RepError, SplitData};
use crate::exactlin::{Matrix, Scalar};
use crate::pairs::{AxiomReport, Failure, Side, DEFAULT_MAX_FAILURES};
use crate::tkk::{superalgebra_with_companion, G0Origin, PolarizedSuperalgebra};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TkkRep {
    /// `ρ` on the superalgebra basis.
    pub images: Vec<Matrix>,
    pub report: AxiomReport,
}

fn supercommutator(a: &Matrix, pa: u8, b: &Matrix, pb: u8) -> Matrix {
    let mut c = a.mul(b);
    c.add_scaled(&-Scalar::sign(pa & pb), &b.mul(a));
    c
}

/// The superalgebra of the representation's pair with `g0` spanned by the
/// pairs `(D(x,u), [T1(x), T2(u)])`. The plain algebra's `g0` acts on
/// `V1 ⊕ V2` only and can identify elements whose images on `H` differ
/// (for the isoquaternionic pair `Σ_i D(E_ii, E_ii)` vanishes on `V` while
/// its image is the identity of `H`); this one keeps them apart.
pub fn rep_superalgebra(r: &PairRep) -> Result<PolarizedSuperalgebra, RepError> {
    superalgebra_with_companion(&r.pair, &r.t1, &r.t2).map_err(|e| RepError::Precondition(e.to_string()))
}

/// Assigns `ρ` on the basis of `a` and checks that it is a homomorphism of
/// superalgebras into `End(H)` with `H2` regraded.
pub fn tkk_rep_from_split(r: &PairRep, s: &SplitData, a: &PolarizedSuperalgebra) -> Result<TkkRep, RepError> {
    let (d1, d2) = (r.pair.v1().dim(), r.pair.v2().dim());
    if a.dim() != a.g0_dim() + d1 + d2 {
        return Err(RepError::Precondition("superalgebra was built from a different pair".into()));
    }
    let rep = check_rep(r);
    if !rep.pass() {
        return Err(RepError::Precondition(format!("representation fails {}", rep.failing_checks().join(", "))));
    }
    let split = check_split(r, s);
    if !split.pass() {
        return Err(RepError::Precondition(format!("split condition fails: {}", split.failing_checks().join(", "))));
    }
    let par = |i: usize| a.parity(i).bit();
    let mut images: Vec<Matrix> = Vec::with_capacity(a.dim());
    for (i, o) in a.origins().iter().enumerate() {
        let img = match *o {
            G0Origin::Generator { x, u } => {
                let (ix, iu) = (a.g1_index(Side::First, x), a.g1_index(Side::Second, u));
                supercommutator(&r.t1[x], par(ix), &r.t2[u], par(iu))
            }
            G0Origin::Commutator { a: p, b: q } => supercommutator(&images[p], par(p), &images[q], par(q)),
        };
        debug_assert_eq!(images.len(), i);
        images.push(img);
    }
    images.extend(r.t1.iter().cloned());
    images.extend(r.t2.iter().cloned());
    let n = r.dim();
    let mut report = AxiomReport::new("homomorphism", None);
    for x in 0..a.dim() {
        for y in 0..a.dim() {
            let mut res = Matrix::zeros(n, n);
            for (k, c) in a.bracket(x, y) {
                res.add_scaled(c, &images[*k]);
            }
            res = res.sub(&supercommutator(&images[x], par(x), &images[y], par(y)));
            report.record(
                (!res.is_zero()).then(|| Failure {
                    orientation: 0,
                    tuple: vec![x, y],
                    labels: vec![a.labels()[x].clone(), a.labels()[y].clone()],
                    residual: matrix_residual(&res),
                }),
                DEFAULT_MAX_FAILURES,
            );
        }
    }
    // Regraded parity of the basis of H: H2 is shifted by one.
    let mut shifted = vec![0u8; n];
    for &i in &s.h2 {
        shifted[i] = 1;
    }
    let hp = |i: usize| r.h.parity(i).bit() ^ shifted[i];
    let mut parity = AxiomReport::new("parity", None);
    for (x, img) in images.iter().enumerate() {
        let bad: Vec<_> = img.nonzeros().into_iter().filter(|(i, j, _)| hp(*i) != hp(*j) ^ par(x)).collect();
        parity.record(
            (!bad.is_empty()).then(|| Failure {
                orientation: 0,
                tuple: vec![x],
                labels: vec![a.labels()[x].clone()],
                residual: crate::pairs::Residual::Matrix { entries: bad },
            }),
            DEFAULT_MAX_FAILURES,
        );
    }
    Ok(TkkRep { images, report: AxiomReport::aggregate("tkk-rep", vec![parity, report]) })
}
