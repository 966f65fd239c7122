//! Representations of isotopic pairs on superspaces, split representations,
//! the word-module engines that build highest-weight and induced modules,
//! conversions to Lie representations, the superalgebra lift and
//! graph-representations.
//!
//! A representation assigns `T1(X) ∈ End(H)` to each basis vector of `V1` and
//! `T2(U)` to each basis vector of `V2`, subject to
//!
//! ```text
//! T1([X,Y]_U) = T1(X)T2(U)T1(Y) - A_{XUY} T1(Y)T2(U)T1(X)
//! T2([U,V]_X) = T2(U)T1(X)T2(V) - A_{UXV} T2(V)T1(X)T2(U)
//! ```

mod graph;
mod lie;
mod lift;
mod words;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::EnvelopePair;
use crate::exactlin::{LinError, Matrix, SVec, Scalar};
use crate::pairs::{eval_on_elements, AxiomReport, Failure, PairStructure, Residual, Side, DEFAULT_MAX_FAILURES};
use crate::supercore::{catalog_entry, Expr, IdentityTemplate, Letter, Parity, SuperSpace, TemplateError, Term, TermType};

pub use graph::{check_graph_rep, reports_agree, GraphRep};
pub use lie::{lie_from_pair_rep, pair_rep_from_lie, LieRep};
pub use lift::{rep_superalgebra, tkk_rep_from_split, TkkRep};
pub use words::{
    diagonal_grading, hw_split_module, induced_split_module, isoquaternion_fundamental, weight_characters, DimEntry,
    GradedPairData, Subpair, WordModule,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("subspace is not closed under the brackets: {0}")]
    NotClosed(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// A representation of a pair on `h`, one operator per basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairRep {
    pub pair: PairStructure,
    pub h: SuperSpace,
    pub t1: Vec<Matrix>,
    pub t2: Vec<Matrix>,
}

impl PairRep {
    pub fn new(pair: PairStructure, h: SuperSpace, t1: Vec<Matrix>, t2: Vec<Matrix>) -> Result<Self, RepError> {
        let r = PairRep { pair, h, t1, t2 };
        r.validate()?;
        Ok(r)
    }

    /// All operators zero.
    pub fn zero(pair: PairStructure, h: SuperSpace) -> Self {
        let n = h.dim();
        let t1 = vec![Matrix::zeros(n, n); pair.v1().dim()];
        let t2 = vec![Matrix::zeros(n, n); pair.v2().dim()];
        PairRep { pair, h, t1, t2 }
    }

    fn validate(&self) -> Result<(), RepError> {
        let n = self.h.dim();
        if self.t1.len() != self.pair.v1().dim() || self.t2.len() != self.pair.v2().dim() {
            return Err(RepError::Shape("one operator per basis vector is required".into()));
        }
        if self.t1.iter().chain(&self.t2).any(|m| m.rows() != n || m.cols() != n) {
            return Err(RepError::Shape(format!("operators must be {n}x{n}")));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    pub fn ops(&self, side: Side) -> &[Matrix] {
        match side {
            Side::First => &self.t1,
            Side::Second => &self.t2,
        }
    }

    /// `T_side(v)` for a vector `v` in basis coordinates.
    pub fn op_of(&self, side: Side, v: &SVec) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (k, c) in v {
            m.add_scaled(c, &self.ops(side)[*k]);
        }
        m
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(src: &str) -> Result<Self, RepError> {
        let r: PairRep = serde_json::from_str(src).map_err(|e| RepError::Malformed(e.to_string()))?;
        r.validate()?;
        Ok(r)
    }
}

/// `H = H1 ⊕ H2` as index sets into the basis of `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitData {
    pub h1: Vec<usize>,
    pub h2: Vec<usize>,
}

impl SplitData {
    /// `true` if the two sets partition `0..n`.
    pub fn partitions(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        for &i in self.h1.iter().chain(&self.h2) {
            if i >= n || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        seen.into_iter().all(|s| s)
    }
}

pub(crate) fn matrix_residual(m: &Matrix) -> Residual {
    Residual::Matrix { entries: m.nonzeros() }
}

/// Each operator must shift parity by its generator's parity.
pub(crate) fn evenness_report(h: &SuperSpace, families: &[(&SuperSpace, &[Matrix], String)]) -> AxiomReport {
    let mut r = AxiomReport::new("evenness", None);
    for (space, ops, tag) in families {
        for (k, m) in ops.iter().enumerate() {
            let p = space.parity(k);
            let bad: Vec<_> = m.nonzeros().into_iter().filter(|(i, j, _)| h.parity(*i) != h.parity(*j) + p).collect();
            r.record(
                (!bad.is_empty()).then(|| Failure {
                    orientation: 0,
                    tuple: vec![k],
                    labels: vec![format!("{tag}({})", space.label(k))],
                    residual: Residual::Matrix { entries: bad },
                }),
                DEFAULT_MAX_FAILURES,
            );
        }
    }
    r
}

fn eval_element(p: &PairStructure, e: &Expr, pm: u8, binding: &[Option<SVec>; 5]) -> Result<SVec, TemplateError> {
    let t = IdentityTemplate::new(vec![Term::new(Scalar::one(), vec![], e.clone())]);
    eval_on_elements(p, &t, 0, pm, binding)
}

/// Evaluates an operator-valued template: element terms `e` become
/// `T_side(e)`, words become operator products.
fn eval_operator(r: &PairRep, t: &IdentityTemplate, pm: u8, binding: &[Option<SVec>; 5]) -> Result<Matrix, TemplateError> {
    let n = r.dim();
    let mut acc = Matrix::zeros(n, n);
    for term in &t.terms {
        let m = match (&term.expr, term.expr.typecheck()?) {
            (Expr::Word(fs), TermType::Operator) => {
                let mut m = Matrix::identity(n);
                for f in fs {
                    let TermType::Element(s) = f.typecheck()? else { unreachable!("typechecked word") };
                    m = m.mul(&r.op_of(Side::from_index(s), &eval_element(&r.pair, f, pm, binding)?));
                }
                m
            }
            (e, TermType::Element(s)) => r.op_of(Side::from_index(s), &eval_element(&r.pair, e, pm, binding)?),
            (e, _) => return Err(TemplateError::IllTyped(e.to_string())),
        };
        acc.add_scaled(&term.signed_coef(pm), &m);
    }
    Ok(acc)
}

/// Runs one catalog identity over all basis bindings of its letters, in
/// letter order `X Y Z U V`.
fn rep_identity_report(r: &PairRep, id: &str) -> AxiomReport {
    let entry = catalog_entry(id);
    let zero = entry.adopted.zero_form();
    let letters: Vec<Letter> = Letter::ALL.into_iter().filter(|l| zero.letter_mask() & l.mask() != 0).collect();
    let space = |l: Letter| r.pair.space(Side::from_index(l.home_side()));
    let dims: Vec<usize> = letters.iter().map(|&l| space(l).dim()).collect();
    let total: usize = dims.iter().product();
    let chunks: Vec<AxiomReport> = (0..dims.first().copied().unwrap_or(1))
        .into_par_iter()
        .map(|first| {
            let mut rep = AxiomReport::new(id, Some(entry.form_id()));
            let inner = total / dims.first().copied().unwrap_or(1).max(1);
            for rest in 0..inner {
                let mut tuple = vec![first];
                let mut q = rest;
                for d in dims.iter().skip(1).rev() {
                    tuple.insert(1, q % d);
                    q /= d;
                }
                let mut binding: [Option<SVec>; 5] = Default::default();
                let mut pm = 0u8;
                for (l, &i) in letters.iter().zip(&tuple) {
                    binding[l.index()] = Some(crate::exactlin::sparse::unit(i));
                    if space(*l).parity(i).is_odd() {
                        pm |= l.mask();
                    }
                }
                let m = eval_operator(r, &zero, pm, &binding).expect("catalog identities are well typed");
                rep.record(
                    (!m.is_zero()).then(|| Failure {
                        orientation: 0,
                        labels: letters.iter().zip(&tuple).map(|(l, &i)| space(*l).label(i).to_string()).collect(),
                        tuple: tuple.clone(),
                        residual: matrix_residual(&m),
                    }),
                    DEFAULT_MAX_FAILURES,
                );
            }
            rep
        })
        .collect();
    let mut out = AxiomReport::new(id, Some(entry.form_id()));
    for c in chunks {
        out.absorb(c, DEFAULT_MAX_FAILURES);
    }
    out
}

/// Both representation identities on all basis triples, plus evenness of
/// every operator.
pub fn check_rep(r: &PairRep) -> AxiomReport {
    let even = evenness_report(
        &r.h,
        &[(r.pair.v1(), &r.t1[..], "T1".to_string()), (r.pair.v2(), &r.t2[..], "T2".to_string())],
    );
    AxiomReport::aggregate("rep", vec![even, rep_identity_report(r, "rep-first"), rep_identity_report(r, "rep-second")])
}

/// The four split conditions. Fails with a note if `s` does not partition
/// the basis of `H`.
pub fn check_split(r: &PairRep, s: &SplitData) -> AxiomReport {
    let n = r.dim();
    let mut part = AxiomReport::new("partition", None);
    part.record((!s.partitions(n)).then(|| Failure {
        orientation: 0,
        tuple: vec![],
        labels: vec![],
        residual: Residual::note(format!("index sets do not partition 0..{n}")),
    }), DEFAULT_MAX_FAILURES);
    if !part.pass() {
        return AxiomReport::aggregate("split", vec![part]);
    }
    // Entries of T from column set `from` into rows outside `to` must vanish.
    let check = |name: &str, ops: &[Matrix], space: &SuperSpace, from: &[usize], to: &[usize]| {
        let mut rep = AxiomReport::new(name, None);
        let mut inside = vec![false; n];
        for &i in to {
            inside[i] = true;
        }
        for (k, m) in ops.iter().enumerate() {
            let mut bad = Vec::new();
            for &j in from {
                for (i, row_ok) in inside.iter().enumerate() {
                    if !row_ok && !m[(i, j)].is_zero() {
                        bad.push((i, j, m[(i, j)].clone()));
                    }
                }
            }
            rep.record(
                (!bad.is_empty()).then(|| Failure {
                    orientation: 0,
                    tuple: vec![k],
                    labels: vec![space.label(k).to_string()],
                    residual: Residual::Matrix { entries: bad },
                }),
                DEFAULT_MAX_FAILURES,
            );
        }
        rep
    };
    let (v1, v2) = (r.pair.v1(), r.pair.v2());
    AxiomReport::aggregate(
        "split",
        vec![
            part,
            check("T1-kills-H2", &r.t1, v1, &s.h2, &[]),
            check("T1-maps-H1-to-H2", &r.t1, v1, &s.h1, &s.h2),
            check("T2-kills-H1", &r.t2, v2, &s.h1, &[]),
            check("T2-maps-H2-to-H1", &r.t2, v2, &s.h2, &s.h1),
        ],
    )
}

/// Operators with independent random entries from `{-2..2}` on an even
/// `n`-dimensional space. Almost never a representation; used as negative
/// samples.
pub fn random_rep(pair: &PairStructure, n: usize, rng: &mut crate::rng::Lcg) -> PairRep {
    let mut r = PairRep::zero(pair.clone(), SuperSpace::numbered("h", vec![Parity::EVEN; n]));
    for m in r.t1.iter_mut().chain(r.t2.iter_mut()) {
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = rng.coef();
            }
        }
    }
    r
}

/// `H` is the column superspace of the envelope and `T_i` sends a basis
/// vector to its matrix.
pub fn tautological_rep(ep: &EnvelopePair) -> PairRep {
    let s = ep.space.size();
    let h = SuperSpace::numbered("c", (0..s).map(|i| ep.space.index_parity(i)).collect());
    PairRep {
        pair: ep.pair.clone(),
        h,
        t1: ep.span(Side::First).basis.clone(),
        t2: ep.span(Side::Second).basis.clone(),
    }
}

/// `(-1)^{p}` as a scalar.
pub(crate) fn sgn(p: Parity) -> Scalar {
    Scalar::sign(p.bit())
}
