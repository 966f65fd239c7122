//! Lie algebras by structure constants, the Killing form, magnetic pairs and
//! the `(g, k)` pair.

use serde::{Deserialize, Serialize};

use crate::exactlin::sparse::{self, Accumulator};
use crate::exactlin::{Matrix, SVec, Scalar};
use crate::pairs::{AxiomReport, Failure, Kind, PairStructure, Residual, Side, DEFAULT_MAX_FAILURES};
use crate::supercore::{Parity, SuperSpace};

use super::ConstructionError;

/// An ordinary (purely even) Lie algebra: `[e_a, e_b] = Σ c^k_{ab} e_k`,
/// optionally with a bilinear form `η`.
/// `[a, b] = Σ c·e_k` as `(a, b, [(k, c)])`.
type BracketRow<'a> = (usize, usize, &'a [(usize, i64)]);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieData {
    pub labels: Vec<String>,
    /// Flat `[a][b]` table of bracket outputs.
    brackets: Vec<SVec>,
    pub form: Option<Matrix>,
}

impl LieData {
    /// Validates antisymmetry and the Jacobi identity, and invariance and
    /// symmetry of the form when one is given.
    pub fn new(labels: Vec<String>, brackets: Vec<SVec>, form: Option<Matrix>) -> Result<Self, ConstructionError> {
        let n = labels.len();
        if brackets.len() != n * n {
            return Err(ConstructionError::BadLieData(format!("expected {} bracket entries", n * n)));
        }
        let brackets: Vec<SVec> = brackets
            .into_iter()
            .map(|v| {
                let mut acc = Accumulator::new(n);
                for (k, c) in &v {
                    acc.add(*k, c);
                }
                acc.take()
            })
            .collect();
        let g = LieData { labels, brackets, form: None };
        for a in 0..n {
            for b in 0..n {
                if sparse::add_scaled(g.bracket(a, b), &Scalar::one(), g.bracket(b, a)) != Vec::new() {
                    return Err(ConstructionError::BadLieData(format!("[{a},{b}] is not antisymmetric")));
                }
                for c in 0..n {
                    let mut acc = Accumulator::new(n);
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for (k, ck) in g.bracket(y, z) {
                            for (l, cl) in g.bracket(x, *k) {
                                acc.add_mul(*l, ck, cl);
                            }
                        }
                    }
                    if !acc.take().is_empty() {
                        return Err(ConstructionError::BadLieData(format!("Jacobi fails on ({a},{b},{c})")));
                    }
                }
            }
        }
        match form {
            Some(f) => g.with_form(f),
            None => Ok(g),
        }
    }

    /// Attaches a symmetric invariant form.
    pub fn with_form(mut self, f: Matrix) -> Result<Self, ConstructionError> {
        let n = self.dim();
        if f.rows() != n || f.cols() != n {
            return Err(ConstructionError::BadForm("form has the wrong shape".into()));
        }
        if f.transpose() != f {
            return Err(ConstructionError::BadForm("form is not symmetric".into()));
        }
        for z in 0..n {
            let ad = self.ad(z);
            // η([z,x],y) + η(x,[z,y]) = 0  ⇔  ad^t η + η ad = 0
            if !ad.transpose().mul(&f).add(&f.mul(&ad)).is_zero() {
                return Err(ConstructionError::BadForm(format!("form is not invariant under {}", self.labels[z])));
            }
        }
        self.form = Some(f);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn bracket(&self, a: usize, b: usize) -> &SVec {
        &self.brackets[a * self.dim() + b]
    }

    /// `[x, y]` for coordinate vectors.
    pub fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut acc = Accumulator::new(n);
        for (a, ca) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, cb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = ca * cb;
                for (k, ck) in self.bracket(a, b) {
                    acc.add_mul(*k, &c, ck);
                }
            }
        }
        sparse::to_dense(&acc.take(), n)
    }

    /// `c^k_{ab}`.
    pub fn constant(&self, a: usize, b: usize, k: usize) -> Scalar {
        self.bracket(a, b).iter().find(|(i, _)| *i == k).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// Matrix of `ad e_a`; column `k` holds `[e_a, e_k]`.
    pub fn ad(&self, a: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            for (i, c) in self.bracket(a, k) {
                m[(*i, k)] = c.clone();
            }
        }
        m
    }

    pub fn space(&self) -> SuperSpace {
        SuperSpace::new(self.labels.clone(), vec![Parity::EVEN; self.dim()]).expect("labels are distinct")
    }

    fn from_table(labels: &[&str], table: &[BracketRow]) -> LieData {
        let n = labels.len();
        let mut br = vec![Vec::new(); n * n];
        for &(a, b, out) in table {
            let v: SVec = out.iter().map(|&(k, c)| (k, Scalar::from_int(c))).collect();
            br[b * n + a] = sparse::scale(&v, &Scalar::from_int(-1));
            br[a * n + b] = v;
        }
        LieData::new(labels.iter().map(|s| s.to_string()).collect(), br, None).expect("built-in algebra is valid")
    }

    /// `sl(2)` on `{e, h, f}` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> LieData {
        LieData::from_table(&["e", "h", "f"], &[(1, 0, &[(0, 2)]), (1, 2, &[(2, -2)]), (0, 2, &[(1, 1)])])
    }

    /// `so(3)` on `{L1, L2, L3}` with `[L1,L2] = L3` and cyclic.
    pub fn so3() -> LieData {
        LieData::from_table(&["L1", "L2", "L3"], &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (2, 0, &[(1, 1)])])
    }

    pub fn abelian(n: usize) -> LieData {
        let labels = (1..=n).map(|i| format!("a{i}")).collect();
        LieData::new(labels, vec![Vec::new(); n * n], None).expect("abelian algebra is valid")
    }
}

/// `κ(x, y) = tr(ad x · ad y)`.
pub fn killing_form(g: &LieData) -> Matrix {
    let n = g.dim();
    let ads: Vec<Matrix> = (0..n).map(|a| g.ad(a)).collect();
    let mut k = Matrix::zeros(n, n);
    for a in 0..n {
        for b in a..n {
            let t = ads[a].mul(&ads[b]).trace();
            k[(a, b)] = t.clone();
            k[(b, a)] = t;
        }
    }
    k
}

/// The pair over `(g, g)` with `[X, Y]_U = sign·((X,U)Y - (U,Y)X)` on `V1`
/// and the opposite sign on `V2`, for a symmetric invariant nondegenerate
/// form. Equal signs on both sides break the compatibility identity.
pub fn magnetic_pair(g: &LieData, form: &Matrix, sign: i64) -> Result<PairStructure, ConstructionError> {
    if sign.abs() != 1 {
        return Err(ConstructionError::BadInput("sign must be ±1".into()));
    }
    let g = g.clone().with_form(form.clone())?;
    if form.rank() < g.dim() {
        return Err(ConstructionError::BadForm("form is degenerate".into()));
    }
    let s = Scalar::from_int(sign);
    let sp = g.space();
    Ok(PairStructure::from_fn(sp.clone(), sp, Kind::Isotopic, |side, u, x, y| {
        // The two sides carry opposite signs.
        let s = if side == Side::First { s.clone() } else { -&s };
        let mut acc = Accumulator::new(g.dim());
        acc.add(y, &(&s * &form[(x, u)]));
        acc.add(x, &-(&s * &form[(u, y)]));
        acc.take()
    }))
}

/// Checks `ρ(z)[x,y]_u = [ρ(z)x, y]_u + [x, ρ(z)y]_u + [x, y]_{ρ(z)u}` for an
/// even action given by one matrix per acting basis element on each side.
pub fn check_equivariance(p: &PairStructure, act1: &[Matrix], act2: &[Matrix]) -> AxiomReport {
    let mut r = AxiomReport::new("equivariance", None);
    if act1.len() != act2.len() {
        r.record(Some(Failure { orientation: 0, tuple: vec![], labels: vec![], residual: Residual::note("action families differ in size") }), DEFAULT_MAX_FAILURES);
        return r;
    }
    let col = |m: &Matrix, j: usize| -> SVec { sparse::from_dense(&m.col(j)) };
    for side in [Side::First, Side::Second] {
        let (own, other) = match side {
            Side::First => (act1, act2),
            Side::Second => (act2, act1),
        };
        let (d, e) = (p.space(side).dim(), p.space(side.other()).dim());
        for z in 0..own.len() {
            for u in 0..e {
                for x in 0..d {
                    for y in 0..d {
                        let (ue, xe, ye) = (sparse::unit(u), sparse::unit(x), sparse::unit(y));
                        let lhs = sparse::from_dense(&own[z].mul_vec(&sparse::to_dense(p.m(side, u, x, y), d)));
                        let t1 = p.bracket_sparse(side, &ue, &col(&own[z], x), &ye);
                        let t2 = p.bracket_sparse(side, &ue, &xe, &col(&own[z], y));
                        let t3 = p.bracket_sparse(side, &col(&other[z], u), &xe, &ye);
                        let m1 = Scalar::from_int(-1);
                        let res = sparse::add_scaled(&sparse::add_scaled(&sparse::add_scaled(&lhs, &m1, &t1), &m1, &t2), &m1, &t3);
                        let failure = (!res.is_empty()).then(|| Failure {
                            orientation: side.index(),
                            tuple: vec![z, u, x, y],
                            labels: vec![
                                format!("z={z}"),
                                p.space(side.other()).label(u).to_string(),
                                p.space(side).label(x).to_string(),
                                p.space(side).label(y).to_string(),
                            ],
                            residual: Residual::vector(side.index(), &res),
                        });
                        r.record(failure, DEFAULT_MAX_FAILURES);
                    }
                }
            }
        }
    }
    r
}

/// The pair `(g, k)`: `V2` is the line spanned by `1`, `[x, y]_1 = [x, y]`,
/// and all brackets on `V2` vanish.
pub fn gk_pair(g: &LieData) -> PairStructure {
    let v2 = SuperSpace::new(vec!["1".into()], vec![Parity::EVEN]).expect("one label");
    PairStructure::from_fn(g.space(), v2, Kind::Isotopic, |side, _, a, b| match side {
        Side::First => g.bracket(a, b).clone(),
        Side::Second => Vec::new(),
    })
}
