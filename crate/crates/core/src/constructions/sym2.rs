//! The pair `(g, S²(g))` built from a Lie algebra with an invariant form.
//!
//! The `S²(g)` bracket is
//! `[m_{αβ}, m_{γδ}]_{e_ζ} = c_{βγζ}m_{αδ} + c_{αγζ}m_{βδ} + c_{βδζ}m_{αγ} + c_{αδζ}m_{βγ}`
//! with `c_{αβγ} = c^δ_{αβ}η_{γδ}`. The `g` bracket is available only in a
//! damaged form, `(η_{αγ}e^ρ_{βδ} - η_{αδ}e^ρ_{βγ})e_ρ`, and is built under
//! two readings of the undefined symbol `e^ρ_{βδ}`:
//!
//! * `literal`: the structure constants `c^ρ_{βδ}`;
//! * `c-substituted`: the lowered constants `c_{βδρ}`.
//!
//! Both are evaluated on the representatives `γ ≤ δ` and verified; neither is
//! assumed to pass.

use crate::exactlin::sparse::{self, Accumulator};
use crate::exactlin::{kernel, rref, Matrix, SVec, Scalar, SpanCoords};
use crate::pairs::{verify, AxiomReport, Failure, Kind, PairStructure, Residual, Side, DEFAULT_MAX_FAILURES};
use crate::supercore::{Parity, SuperSpace};

use super::lie::{check_equivariance, LieData};
use super::ConstructionError;

/// One reading of the printed formulas, with its verdicts.
#[derive(Debug, Clone)]
pub struct Sym2Reading {
    pub name: String,
    pub pair: PairStructure,
    pub report: AxiomReport,
    pub equivariance: AxiomReport,
    pub quotient: Option<QuotientPair>,
}

/// `(g, S²(g)/S²(g)^g)` with brackets induced from representatives.
#[derive(Debug, Clone)]
pub struct QuotientPair {
    pub pair: PairStructure,
    /// Whether the induced brackets are independent of representatives.
    pub well_defined: bool,
    pub report: AxiomReport,
}

#[derive(Debug, Clone)]
pub struct Sym2Result {
    pub readings: Vec<Sym2Reading>,
    /// Graded antisymmetry of the `S²(g)` bracket alone.
    pub m_antisymmetry: AxiomReport,
    /// Basis of `S²(g)^g` in `m_{αβ}` coordinates.
    pub invariants: Vec<Vec<Scalar>>,
}

impl Sym2Result {
    pub fn reading(&self, name: &str) -> Option<&Sym2Reading> {
        self.readings.iter().find(|r| r.name == name)
    }

    /// The literal reading.
    pub fn primary(&self) -> &Sym2Reading {
        &self.readings[0]
    }
}

/// Index of `m_{ab}` in the basis `{m_{ab} : a ≤ b}` ordered lexicographically.
fn sym_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    // Rows before `a` hold n, n-1, ..., n-a+1 entries.
    a * n - a * a.saturating_sub(1) / 2 + (b - a)
}

fn sym_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect()
}

/// Matrices of the `g`-action on `S²(g)`: `z·m_{ab} = [z,e_a]e_b + e_a[z,e_b]`.
pub fn sym2_action(g: &LieData) -> Vec<Matrix> {
    let n = g.dim();
    let pairs = sym_pairs(n);
    (0..n)
        .map(|z| {
            let mut m = Matrix::zeros(pairs.len(), pairs.len());
            for (col, &(a, b)) in pairs.iter().enumerate() {
                for (r, c) in g.bracket(z, a) {
                    m[(sym_index(n, *r, b), col)] += c;
                }
                for (r, c) in g.bracket(z, b) {
                    m[(sym_index(n, a, *r), col)] += c;
                }
            }
            m
        })
        .collect()
}

/// Basis of the invariants `S²(g)^g`.
pub fn sym2_invariants(g: &LieData) -> Vec<Vec<Scalar>> {
    let acts = sym2_action(g);
    let d = sym_pairs(g.dim()).len();
    if acts.is_empty() {
        return (0..d).map(|i| sparse::to_dense(&sparse::unit(i), d)).collect();
    }
    let rows: Vec<Vec<Scalar>> = acts.iter().flat_map(|m| (0..m.rows()).map(|i| m.row(i).to_vec())).collect();
    kernel(&Matrix::from_rows(rows).expect("equal row lengths"))
}

fn lowered<'a>(g: &'a LieData, eta: &Matrix) -> impl Fn(usize, usize, usize) -> Scalar + 'a {
    let eta = eta.clone();
    move |a, b, c| g.bracket(a, b).iter().fold(Scalar::zero(), |s, (d, k)| &s + &(k * &eta[(c, *d)]))
}

fn build_reading(g: &LieData, eta: &Matrix, name: &str) -> PairStructure {
    let n = g.dim();
    let pairs = sym_pairs(n);
    let low = lowered(g, eta);
    let v1 = g.space();
    let v2 = SuperSpace::new(
        pairs.iter().map(|&(a, b)| format!("m({},{})", g.labels[a], g.labels[b])).collect(),
        vec![Parity::EVEN; pairs.len()],
    )
    .expect("labels are distinct");
    let upper = name == "literal";
    PairStructure::from_fn(v1, v2, Kind::Isotopic, |side, sub, x, y| match side {
        Side::First => {
            let (gm, dl) = pairs[sub];
            let mut acc = Accumulator::new(n);
            for rho in 0..n {
                let (t1, t2) = if upper {
                    (g.constant(y, dl, rho), g.constant(y, gm, rho))
                } else {
                    (low(y, dl, rho), low(y, gm, rho))
                };
                let c = &(&eta[(x, gm)] * &t1) - &(&eta[(x, dl)] * &t2);
                acc.add(rho, &c);
            }
            acc.take()
        }
        Side::Second => {
            let z = sub;
            let ((al, be), (gm, dl)) = (pairs[x], pairs[y]);
            let mut acc = Accumulator::new(pairs.len());
            acc.add(sym_index(n, al, dl), &low(be, gm, z));
            acc.add(sym_index(n, be, dl), &low(al, gm, z));
            acc.add(sym_index(n, al, gm), &low(be, dl, z));
            acc.add(sym_index(n, be, gm), &low(al, dl, z));
            acc.take()
        }
    })
}

fn m_antisymmetry(p: &PairStructure) -> AxiomReport {
    let mut r = AxiomReport::new("m-antisymmetry", None);
    let (d, e) = (p.v2().dim(), p.v1().dim());
    for z in 0..e {
        for a in 0..d {
            for b in 0..d {
                let res = sparse::add_scaled(p.m(Side::Second, z, a, b), &Scalar::one(), p.m(Side::Second, z, b, a));
                let failure = (!res.is_empty()).then(|| Failure {
                    orientation: 1,
                    tuple: vec![z, a, b],
                    labels: vec![p.v1().label(z).into(), p.v2().label(a).into(), p.v2().label(b).into()],
                    residual: Residual::vector(1, &res),
                });
                r.record(failure, DEFAULT_MAX_FAILURES);
            }
        }
    }
    r
}

fn quotient(p: &PairStructure, inv: &[Vec<Scalar>]) -> QuotientPair {
    let d = p.v2().dim();
    let pivots = rref(&Matrix::from_rows(inv.to_vec()).expect("equal lengths")).pivots;
    let comp: Vec<usize> = (0..d).filter(|i| !pivots.contains(i)).collect();
    let mut full: Vec<Vec<Scalar>> = comp.iter().map(|&i| sparse::to_dense(&sparse::unit(i), d)).collect();
    full.extend(inv.iter().cloned());
    let coords = SpanCoords::new(&full, d).expect("complement plus invariants is a basis");
    let q = comp.len();
    let proj = |v: &SVec| -> SVec {
        let c = coords.coords(&sparse::to_dense(v, d)).expect("right length").expect("full span");
        sparse::from_dense(&c[..q])
    };
    let v2 = SuperSpace::new(comp.iter().map(|&i| format!("[{}]", p.v2().label(i))).collect(), vec![Parity::EVEN; q])
        .expect("labels are distinct");
    let pair = PairStructure::from_fn(p.v1().clone(), v2, Kind::Isotopic, |side, s, a, b| match side {
        Side::First => p.m(Side::First, comp[s], a, b).clone(),
        Side::Second => proj(p.m(Side::Second, s, comp[a], comp[b])),
    });
    let mut well_defined = true;
    for i in inv {
        let iv = sparse::from_dense(i);
        for a in 0..p.v1().dim() {
            for b in 0..p.v1().dim() {
                if !p.bracket_sparse(Side::First, &iv, &sparse::unit(a), &sparse::unit(b)).is_empty() {
                    well_defined = false;
                }
            }
            for m in 0..d {
                let um = sparse::unit(m);
                let l = p.bracket_sparse(Side::Second, &sparse::unit(a), &iv, &um);
                let r = p.bracket_sparse(Side::Second, &sparse::unit(a), &um, &iv);
                if !proj(&l).is_empty() || !proj(&r).is_empty() {
                    well_defined = false;
                }
            }
        }
    }
    let report = verify(&pair);
    QuotientPair { pair, well_defined, report }
}

/// Builds `(g, S²(g))` under both readings and reports every verdict.
pub fn sym2_pair(g: &LieData, eta: &Matrix) -> Result<Sym2Result, ConstructionError> {
    let g = g.clone().with_form(eta.clone())?;
    let invariants = sym2_invariants(&g);
    let ad: Vec<Matrix> = (0..g.dim()).map(|z| g.ad(z)).collect();
    let s2 = sym2_action(&g);
    let readings: Vec<Sym2Reading> = ["literal", "c-substituted"]
        .into_iter()
        .map(|name| {
            let pair = build_reading(&g, eta, name);
            let report = verify(&pair);
            let equivariance = check_equivariance(&pair, &ad, &s2);
            let quotient = (!invariants.is_empty()).then(|| quotient(&pair, &invariants));
            Sym2Reading { name: name.into(), pair, report, equivariance, quotient }
        })
        .collect();
    let m_antisymmetry = m_antisymmetry(&readings[0].pair);
    Ok(Sym2Result { readings, m_antisymmetry, invariants })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym_index_is_lexicographic() {
        for n in 1..5 {
            for (i, (a, b)) in sym_pairs(n).into_iter().enumerate() {
                assert_eq!(sym_index(n, a, b), i);
                assert_eq!(sym_index(n, b, a), i);
            }
        }
    }
}
