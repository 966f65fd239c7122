//! Graph-representations: families `T1^α` (`α < N1`) and `T2^β` (`β < N2`)
//! on one space, coupled by `N1 × N2` matrices `P` and `Q`:
//!
//! ```text
//! T1^α([X,Y]_U) = Σ_β P_{αβ} (T1^α(X)T2^β(U)T1^α(Y) - A_{XUY} T1^α(Y)T2^β(U)T1^α(X))
//! T2^β([U,V]_X) = Σ_α Q_{αβ} (T2^β(U)T1^α(X)T2^β(V) - A_{UXV} T2^β(V)T1^α(X)T2^β(U))
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{evenness_report, matrix_residual, RepError};
use crate::exactlin::{Matrix, SVec, Scalar};
use crate::pairs::{AxiomReport, Failure, PairStructure, Side, DEFAULT_MAX_FAILURES};
use crate::supercore::{sign_a, SuperSpace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphRep {
    pub pair: PairStructure,
    pub h: SuperSpace,
    /// `t1[α][k] = T1^α(e_k)`.
    pub t1: Vec<Vec<Matrix>>,
    pub t2: Vec<Vec<Matrix>>,
    pub p: Matrix,
    pub q: Matrix,
}

impl GraphRep {
    fn validate(&self) -> Result<(), RepError> {
        let (n1, n2, n) = (self.t1.len(), self.t2.len(), self.h.dim());
        for (name, m) in [("P", &self.p), ("Q", &self.q)] {
            if m.rows() != n1 || m.cols() != n2 {
                return Err(RepError::Shape(format!("{name} is {}x{}, expected {n1}x{n2}", m.rows(), m.cols())));
            }
        }
        let ok = |fam: &[Vec<Matrix>], d: usize| {
            fam.iter().all(|f| f.len() == d && f.iter().all(|m| m.rows() == n && m.cols() == n))
        };
        if !ok(&self.t1, self.pair.v1().dim()) || !ok(&self.t2, self.pair.v2().dim()) {
            return Err(RepError::Shape("family operators do not match the pair or H".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(src: &str) -> Result<Self, RepError> {
        let g: GraphRep = serde_json::from_str(src).map_err(|e| RepError::Malformed(e.to_string()))?;
        g.validate()?;
        Ok(g)
    }
}

fn combo(ops: &[Matrix], v: &SVec, n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for (k, c) in v {
        m.add_scaled(c, &ops[*k]);
    }
    m
}

/// One side of the graph identities. `own` is the family indexed by the
/// outer label, `other` the summed family, `coef(a, b)` the coupling.
fn side_report(
    g: &GraphRep,
    side: Side,
    own: &[Vec<Matrix>],
    other: &[Vec<Matrix>],
    coef: impl Fn(usize, usize) -> Scalar + Sync,
    name: &str,
) -> AxiomReport {
    let n = g.h.dim();
    let (sp, osp) = (g.pair.space(side), g.pair.space(side.other()));
    let (d, e) = (sp.dim(), osp.dim());
    let parts: Vec<AxiomReport> = (0..own.len())
        .into_par_iter()
        .map(|a| {
            let mut rep = AxiomReport::new(format!("{name}[{}]", a + 1), None);
            let t = &own[a];
            // Enumerate in the letter order X Y Z U V of each identity.
            let triples: Vec<(usize, usize, usize)> = if side == Side::First {
                (0..d).flat_map(|x| (0..d).flat_map(move |y| (0..e).map(move |u| (x, y, u)))).collect()
            } else {
                (0..e).flat_map(|u| (0..d).flat_map(move |x| (0..d).map(move |y| (x, y, u)))).collect()
            };
            for (x, y, u) in triples {
                let br = g.pair.m(side, u, x, y);
                let mut res = combo(t, br, n);
                let s = sign_a(sp.parity(x), osp.parity(u), sp.parity(y));
                for (b, fam) in other.iter().enumerate() {
                    let c = coef(a, b);
                    if c.is_zero() {
                        continue;
                    }
                    let mut w = t[x].mul(&fam[u]).mul(&t[y]);
                    w.add_scaled(&-&s, &t[y].mul(&fam[u]).mul(&t[x]));
                    res.add_scaled(&-&c, &w);
                }
                rep.record(
                    (!res.is_zero()).then(|| Failure {
                        orientation: 0,
                        tuple: if side == Side::First { vec![x, y, u] } else { vec![u, x, y] },
                        labels: if side == Side::First {
                            vec![sp.label(x).into(), sp.label(y).into(), osp.label(u).into()]
                        } else {
                            vec![osp.label(u).into(), sp.label(x).into(), sp.label(y).into()]
                        },
                        residual: matrix_residual(&res),
                    }),
                    DEFAULT_MAX_FAILURES,
                );
            }
            rep
        })
        .collect();
    AxiomReport::aggregate(name, parts)
}

/// Both graph identities on every family member and basis triple, plus
/// evenness of every operator.
pub fn check_graph_rep(g: &GraphRep) -> Result<AxiomReport, RepError> {
    g.validate()?;
    let mut fams = Vec::new();
    for (a, f) in g.t1.iter().enumerate() {
        fams.push((g.pair.v1(), &f[..], format!("T1^{}", a + 1)));
    }
    for (b, f) in g.t2.iter().enumerate() {
        fams.push((g.pair.v2(), &f[..], format!("T2^{}", b + 1)));
    }
    let even = evenness_report(&g.h, &fams);
    let first = side_report(g, Side::First, &g.t1, &g.t2, |a, b| g.p[(a, b)].clone(), "graph-first");
    let second = side_report(g, Side::Second, &g.t2, &g.t1, |b, a| g.q[(a, b)].clone(), "graph-second");
    Ok(AxiomReport::aggregate("graph-rep", vec![even, first, second]))
}

/// Structural equality of two reports ignoring names and identity forms:
/// the same counts and the same recorded failures up to their labels.
/// Single-child aggregates compare like their child.
pub fn reports_agree(a: &AxiomReport, b: &AxiomReport) -> bool {
    let unwrap = |r: &AxiomReport| -> AxiomReport {
        let mut r = r.clone();
        while r.parts.len() == 1 {
            r = r.parts.remove(0);
        }
        r
    };
    let (a, b) = (unwrap(a), unwrap(b));
    a.total == b.total
        && a.failure_count == b.failure_count
        && a.failures.len() == b.failures.len()
        && a.failures.iter().zip(&b.failures).all(|(x, y)| {
            x.orientation == y.orientation && x.tuple == y.tuple && x.residual == y.residual
        })
        && a.parts.len() == b.parts.len()
        && a.parts.iter().zip(&b.parts).all(|(x, y)| reports_agree(x, y))
}
