//! Passing between representations of `(g, k)`-type pairs and Lie
//! representations: `T0(X) = T2(1)T1(X)` one way, `T1(X) = Q⁻¹T0(X)`,
//! `T2(1) = Q` the other.

use serde::{Deserialize, Serialize};

use super::{matrix_residual, PairRep, RepError};
use crate::constructions::{gk_pair, LieData};
use crate::exactlin::Matrix;
use crate::pairs::{AxiomReport, Failure, Side, DEFAULT_MAX_FAILURES};
use crate::supercore::{Parity, SuperSpace};

/// `X ↦ T0(X)` with the check that it respects the bracket `[X,Y]_1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieRep {
    pub mats: Vec<Matrix>,
    pub report: AxiomReport,
}

pub fn lie_from_pair_rep(r: &PairRep) -> Result<LieRep, RepError> {
    let v2 = r.pair.v2();
    if v2.dim() != 1 || v2.parity(0).is_odd() {
        return Err(RepError::Precondition(format!("second space must be 1|0, found {}", v2.dims_string())));
    }
    let mats: Vec<Matrix> = r.t1.iter().map(|t| r.t2[0].mul(t)).collect();
    let v1 = r.pair.v1();
    let mut report = AxiomReport::new("lie-homomorphism", None);
    for x in 0..v1.dim() {
        for y in 0..v1.dim() {
            let mut res = r.op_of(Side::First, r.pair.m(Side::First, 0, x, y));
            res = r.t2[0].mul(&res);
            res.add_scaled(&-crate::Scalar::one(), &mats[x].mul(&mats[y]));
            res.add_scaled(&super::sgn(Parity::new(v1.parity(x).mul(v1.parity(y)))), &mats[y].mul(&mats[x]));
            report.record(
                (!res.is_zero()).then(|| Failure {
                    orientation: 0,
                    tuple: vec![x, y],
                    labels: vec![v1.label(x).into(), v1.label(y).into()],
                    residual: matrix_residual(&res),
                }),
                DEFAULT_MAX_FAILURES,
            );
        }
    }
    Ok(LieRep { mats, report })
}

/// The representation of `(g, k)` with `T1(X) = Q⁻¹T0(X)` and `T2(1) = Q`.
/// A singular `Q` is rejected; constructions with degenerate `Q` (extremal
/// projectors, Mickelsson algebras) are not supported.
pub fn pair_rep_from_lie(g: &LieData, t0: &[Matrix], q: &Matrix) -> Result<PairRep, RepError> {
    let n = q.rows();
    if !q.is_square() {
        return Err(RepError::Shape("Q must be square".into()));
    }
    if t0.len() != g.dim() || t0.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(RepError::Shape(format!("expected {} operators of size {n}x{n}", g.dim())));
    }
    if q.rank() < n {
        return Err(RepError::Singular(format!(
            "Q has rank {} < {n}; degenerate Q (extremal projector or Mickelsson constructions) is out of scope",
            q.rank()
        )));
    }
    let qi = q.inverse()?;
    let h = SuperSpace::numbered("h", vec![Parity::EVEN; n]);
    PairRep::new(gk_pair(g), h, t0.iter().map(|t| qi.mul(t)).collect(), vec![q.clone()])
}
