use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactlin::sparse::{self, Accumulator};
use crate::exactlin::{Echelon, Matrix, SVec, Scalar, SpanCoords};
use crate::pairs::{verify, AxiomReport, Failure, Kind, PairStructure, Residual, Side, DEFAULT_MAX_FAILURES};
use crate::supercore::Parity;

use super::TkkError;

/// Which summand a basis element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Part {
    G0,
    Plus,
    Minus,
}

/// How a `g0` basis element arose, for transporting it to representations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum G0Origin {
    /// `D(x, u) = [x, u]`.
    Generator { x: usize, u: usize },
    /// `[g0_a, g0_b]`.
    Commutator { a: usize, b: usize },
}

/// `g0 ⊕ g1⁺ ⊕ g1⁻` with `g1⁺ = V1`, `g1⁻ = V2`, on the basis
/// `g0` first, then `V1`, then `V2`. Parities on `g1` are the pair's
/// parities shifted by one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarizedSuperalgebra {
    labels: Vec<String>,
    parities: Vec<Parity>,
    parts: Vec<Part>,
    /// `[e_a, e_b]` at `a * dim + b`.
    table: Vec<SVec>,
    /// `g0` elements as operators on `V1 ⊕ V2` coordinates.
    g0_ops: Vec<Matrix>,
    origins: Vec<G0Origin>,
    /// Rounds of commutator closure until the span stopped growing.
    pub closure_rounds: usize,
}

impl PolarizedSuperalgebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn g0_dim(&self) -> usize {
        self.g0_ops.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn part(&self, i: usize) -> Part {
        self.parts[i]
    }

    pub fn origins(&self) -> &[G0Origin] {
        &self.origins
    }

    pub fn g0_op(&self, i: usize) -> &Matrix {
        &self.g0_ops[i]
    }

    /// Index of `x ∈ V1` (`Side::First`) or `u ∈ V2` in the full basis.
    pub fn g1_index(&self, side: Side, i: usize) -> usize {
        let d1 = self.parts.iter().filter(|p| **p == Part::Plus).count();
        self.g0_dim() + if side == Side::First { i } else { d1 + i }
    }

    pub fn bracket(&self, a: usize, b: usize) -> &SVec {
        &self.table[a * self.dim() + b]
    }

    /// Replaces one structure constant, for building counterexamples.
    pub fn set_bracket(&mut self, a: usize, b: usize, out: SVec) {
        let n = self.dim();
        self.table[a * n + b] = out;
    }

    /// `[a, v]` for a basis element `a` and a sparse vector `v`.
    pub fn bracket_left(&self, a: usize, v: &SVec) -> SVec {
        let mut acc = Accumulator::new(self.dim());
        for (k, c) in v {
            for (i, x) in self.bracket(a, *k) {
                acc.add_mul(*i, c, x);
            }
        }
        acc.take()
    }

    /// `[v, c]` for a sparse vector `v` and a basis element `c`.
    pub fn bracket_right(&self, v: &SVec, c: usize) -> SVec {
        let mut acc = Accumulator::new(self.dim());
        for (k, x) in v {
            for (i, y) in self.bracket(*k, c) {
                acc.add_mul(*i, x, y);
            }
        }
        acc.take()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(src: &str) -> Result<Self, TkkError> {
        let a: PolarizedSuperalgebra = serde_json::from_str(src).map_err(|e| TkkError::Malformed(e.to_string()))?;
        let n = a.labels.len();
        let n0 = a.parts.iter().filter(|p| **p == Part::G0).count();
        if a.parities.len() != n || a.parts.len() != n || a.table.len() != n * n || a.g0_ops.len() != n0 || a.origins.len() != n0 {
            return Err(TkkError::Malformed("table sizes do not match the basis".into()));
        }
        if a.table.iter().flatten().any(|(k, _)| *k >= n) {
            return Err(TkkError::Malformed("bracket index out of range".into()));
        }
        Ok(a)
    }
}

/// Parity of `e_i` of `V1 ⊕ V2` inside the superalgebra.
fn twisted(p: &PairStructure, k: usize) -> Parity {
    let d1 = p.v1().dim();
    if k < d1 {
        p.parity(Side::First, k).flip()
    } else {
        p.parity(Side::Second, k - d1).flip()
    }
}

/// `D(x, u)` on `V1 ⊕ V2`: `y ↦ [x, y]_u` and `v ↦ -(-1)^{|x||u|}[u, v]_x`
/// with `|·|` the shifted parity.
pub fn d_operator(p: &PairStructure, x: usize, u: usize) -> Matrix {
    let (d1, d2) = (p.v1().dim(), p.v2().dim());
    let mut m = Matrix::zeros(d1 + d2, d1 + d2);
    for y in 0..d1 {
        for (k, c) in p.m(Side::First, u, x, y) {
            m[(*k, y)] = c.clone();
        }
    }
    let xu = p.parity(Side::First, x).flip().mul(p.parity(Side::Second, u).flip());
    let s = -Scalar::sign(xu);
    for v in 0..d2 {
        for (k, c) in p.m(Side::Second, x, u, v) {
            m[(d1 + *k, d1 + v)] = &s * c;
        }
    }
    m
}

fn flat(m: &Matrix) -> SVec {
    sparse::from_dense(m.as_slice())
}

fn supercommutator(a: &Matrix, pa: Parity, b: &Matrix, pb: Parity) -> Matrix {
    let mut c = a.mul(b);
    c.add_scaled(&-Scalar::sign(pa.mul(pb)), &b.mul(a));
    c
}

/// The polarized superalgebra of an isotopic pair. `g0` is the closure of
/// the `D(x, u)` under supercommutators; every other bracket is read off
/// the operators.
pub fn superalgebra_from_pair(p: &PairStructure) -> Result<PolarizedSuperalgebra, TkkError> {
    if p.kind() != Kind::Isotopic {
        return Err(TkkError::WrongKind { expected: Kind::Isotopic, found: p.kind() });
    }
    let r = verify(p);
    if !r.pass() {
        return Err(TkkError::Precondition(format!("pair fails {}", r.failing_checks().join(", "))));
    }
    Ok(build(p, None))
}

/// Builds the superalgebra without checking that the pair verifies.
pub fn superalgebra_from_pair_unchecked(p: &PairStructure) -> PolarizedSuperalgebra {
    build(p, None)
}

/// The variant whose `g0` is spanned by the pairs `(D(x,u), [T1(x), T2(u)])`
/// and their supercommutators, for operators `T1`, `T2` on a space `H`
/// (supercommutators taken with the shifted parities). It maps onto the
/// algebra of [`superalgebra_from_pair`] with a kernel inside `g0` that acts
/// trivially on `V1 ⊕ V2`; the operators extend to it whenever they extend
/// at all.
pub fn superalgebra_with_companion(p: &PairStructure, t1: &[Matrix], t2: &[Matrix]) -> Result<PolarizedSuperalgebra, TkkError> {
    if p.kind() != Kind::Isotopic {
        return Err(TkkError::WrongKind { expected: Kind::Isotopic, found: p.kind() });
    }
    if t1.len() != p.v1().dim() || t2.len() != p.v2().dim() {
        return Err(TkkError::Precondition("one operator per basis vector is required".into()));
    }
    let h = t1.iter().chain(t2).map(Matrix::rows).next().unwrap_or(0);
    if t1.iter().chain(t2).any(|m| m.rows() != h || m.cols() != h) {
        return Err(TkkError::Precondition("operators must be square of one size".into()));
    }
    let r = verify(p);
    if !r.pass() {
        return Err(TkkError::Precondition(format!("pair fails {}", r.failing_checks().join(", "))));
    }
    Ok(build(p, Some((t1, t2))))
}

/// `a ⊕ b` as a block-diagonal matrix.
fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, k) = (a.rows(), b.rows());
    let mut m = Matrix::zeros(n + k, n + k);
    for (i, j, c) in a.nonzeros() {
        m[(i, j)] = c;
    }
    for (i, j, c) in b.nonzeros() {
        m[(n + i, n + j)] = c;
    }
    m
}

fn top_left(m: &Matrix, n: usize) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for (i, j, c) in m.nonzeros() {
        if i < n && j < n {
            out[(i, j)] = c;
        }
    }
    out
}

fn build(p: &PairStructure, companion: Option<(&[Matrix], &[Matrix])>) -> PolarizedSuperalgebra {
    let (d1, d2) = (p.v1().dim(), p.v2().dim());
    let d = d1 + d2;
    // The generator `[x, u]` as an operator, with the companion block if any.
    let generator = |x: usize, u: usize| -> Matrix {
        let dm = d_operator(p, x, u);
        match companion {
            None => dm,
            Some((t1, t2)) => {
                let c = supercommutator(&t1[x], twisted(p, x), &t2[u], twisted(p, d1 + u));
                block_diag(&dm, &c)
            }
        }
    };
    let mut ech = Echelon::new();
    let mut ops: Vec<Matrix> = Vec::new();
    let mut pars: Vec<Parity> = Vec::new();
    let mut origins = Vec::new();
    let mut labels = Vec::new();
    for x in 0..d1 {
        for u in 0..d2 {
            let m = generator(x, u);
            if ech.insert(&flat(&m)).is_some() {
                pars.push(p.parity(Side::First, x) + p.parity(Side::Second, u));
                ops.push(m);
                origins.push(G0Origin::Generator { x, u });
                labels.push(format!("D({},{})", p.v1().label(x), p.v2().label(u)));
            }
        }
    }
    // Breadth-first closure: each round commutes the newest elements with
    // everything found so far.
    let mut rounds = 0;
    let mut frontier = 0..ops.len();
    while !frontier.is_empty() {
        rounds += 1;
        let end = ops.len();
        for b in frontier.clone() {
            for a in 0..=b {
                let c = supercommutator(&ops[a], pars[a], &ops[b], pars[b]);
                if ech.insert(&flat(&c)).is_some() {
                    pars.push(pars[a] + pars[b]);
                    ops.push(c);
                    origins.push(G0Origin::Commutator { a, b });
                    labels.push(format!("[{},{}]", labels[a], labels[b]));
                }
            }
        }
        frontier = end..ops.len();
    }
    let n0 = ops.len();
    let n = n0 + d;
    let full = ops.first().map_or(d, Matrix::rows);
    let coords = SpanCoords::new(&ops.iter().map(|m| m.as_slice().to_vec()).collect::<Vec<_>>(), full * full)
        .expect("independent by construction");
    let g0_coords = |m: &Matrix| -> SVec {
        sparse::from_dense(&coords.coords(m.as_slice()).expect("right size").expect("g0 is closed"))
    };
    let mut parities = pars.clone();
    parities.extend((0..d).map(|k| twisted(p, k)));
    let mut parts = vec![Part::G0; n0];
    parts.extend(std::iter::repeat_n(Part::Plus, d1));
    parts.extend(std::iter::repeat_n(Part::Minus, d2));
    labels.extend(p.v1().labels().iter().cloned());
    labels.extend(p.v2().labels().iter().cloned());
    let gen_coords: Vec<SVec> = (0..d1).flat_map(|x| (0..d2).map(move |u| (x, u))).map(|(x, u)| g0_coords(&generator(x, u))).collect();
    let mut table = vec![SVec::new(); n * n];
    let shift = |v: SVec, by: usize| -> SVec { v.into_iter().map(|(k, c)| (k + by, c)).collect() };
    for a in 0..n0 {
        for b in 0..n0 {
            table[a * n + b] = g0_coords(&supercommutator(&ops[a], pars[a], &ops[b], pars[b]));
        }
        for k in 0..d {
            let col = shift(sparse::from_dense(&ops[a].col(k)), n0);
            let sign = -Scalar::sign(pars[a].mul(parities[n0 + k]));
            table[(n0 + k) * n + a] = sparse::scale(&col, &sign);
            table[a * n + n0 + k] = col;
        }
    }
    for x in 0..d1 {
        for u in 0..d2 {
            let (ix, iu) = (n0 + x, n0 + d1 + u);
            let v = gen_coords[x * d2 + u].clone();
            let sign = -Scalar::sign(parities[ix].mul(parities[iu]));
            table[iu * n + ix] = sparse::scale(&v, &sign);
            table[ix * n + iu] = v;
        }
    }
    let g0_ops = ops.iter().map(|m| top_left(m, d)).collect();
    PolarizedSuperalgebra { labels, parities, parts, table, g0_ops, origins, closure_rounds: rounds }
}

fn note_failure(tuple: Vec<usize>, a: &PolarizedSuperalgebra, res: &SVec) -> Failure {
    Failure {
        orientation: 0,
        tuple: tuple.clone(),
        labels: tuple.iter().map(|&i| a.labels[i].clone()).collect(),
        residual: Residual::vector(0, res),
    }
}

fn part_of_output(a: &PolarizedSuperalgebra, v: &SVec) -> Option<Part> {
    let mut seen = None;
    for (k, _) in v {
        match seen {
            Some(p) if p != a.parts[*k] => return None,
            _ => seen = Some(a.parts[*k]),
        }
    }
    seen
}

/// Exhaustive basis checks: parity of the table, graded antisymmetry,
/// super-Jacobi on all triples, polarization `[g1⁺, g1⁺] = [g1⁻, g1⁻] = 0`
/// and the grading `[g0, g1±] ⊆ g1±`, `[g0, g0] ⊆ g0`, `[g1⁺, g1⁻] ⊆ g0`.
pub fn check_superalgebra(a: &PolarizedSuperalgebra) -> AxiomReport {
    let n = a.dim();
    let max = DEFAULT_MAX_FAILURES;
    let mut parity = AxiomReport::new("parity", None);
    let mut anti = AxiomReport::new("antisymmetry", None);
    let mut polar = AxiomReport::new("polarization", None);
    let mut grading = AxiomReport::new("submodules", None);
    for i in 0..n {
        for j in 0..n {
            let v = a.bracket(i, j);
            let want = a.parities[i] + a.parities[j];
            parity.record(v.iter().any(|(k, _)| a.parities[*k] != want).then(|| note_failure(vec![i, j], a, v)), max);
            let sym = sparse::add_scaled(v, &Scalar::sign(a.parities[i].mul(a.parities[j])), a.bracket(j, i));
            anti.record((!sym.is_empty()).then(|| note_failure(vec![i, j], a, &sym)), max);
            let (pi, pj) = (a.parts[i], a.parts[j]);
            if pi == pj && pi != Part::G0 {
                polar.record((!v.is_empty()).then(|| note_failure(vec![i, j], a, v)), max);
                continue;
            }
            let want_part = match (pi, pj) {
                (Part::G0, q) | (q, Part::G0) => q,
                _ => Part::G0,
            };
            let ok = v.is_empty() || part_of_output(a, v) == Some(want_part);
            grading.record((!ok).then(|| note_failure(vec![i, j], a, v)), max);
        }
    }
    let chunks: Vec<AxiomReport> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut r = AxiomReport::new("super-jacobi", None);
            for j in 0..n {
                let ij = a.bracket(i, j);
                let s = Scalar::sign(a.parities[i].mul(a.parities[j]));
                for k in 0..n {
                    let lhs = a.bracket_left(i, a.bracket(j, k));
                    let t1 = a.bracket_right(ij, k);
                    let t2 = a.bracket_left(j, a.bracket(i, k));
                    let res = sparse::add_scaled(&sparse::add_scaled(&lhs, &-Scalar::one(), &t1), &-&s, &t2);
                    r.record((!res.is_empty()).then(|| note_failure(vec![i, j, k], a, &res)), max);
                }
            }
            r
        })
        .collect();
    let mut jacobi = AxiomReport::new("super-jacobi", None);
    for c in chunks {
        jacobi.absorb(c, max);
    }
    AxiomReport::aggregate("superalgebra", vec![parity, anti, polar, grading, jacobi])
}

/// `D[x, y]_u = [Dx, y]_u + (-1)^{|D||x|}[x, y]_{Du} + (-1)^{|D|(|x|+|u|)}[x, Dy]_u`
/// for every `g0` basis element `D`, and the same with the sides exchanged.
pub fn check_g0_equivariance(p: &PairStructure, a: &PolarizedSuperalgebra) -> AxiomReport {
    let (d1, d2) = (p.v1().dim(), p.v2().dim());
    let mut r = AxiomReport::new("g0-equivariance", None);
    for (di, op) in a.g0_ops.iter().enumerate() {
        let pd = a.parities[di];
        for side in [Side::First, Side::Second] {
            let (own, off, other) = match side {
                Side::First => (d1, 0, d2),
                Side::Second => (d2, d1, d1),
            };
            let other_off = if side == Side::First { d1 } else { 0 };
            let restrict = |col: usize, lo: usize, len: usize| -> SVec {
                op.col(col).into_iter().enumerate().skip(lo).take(len).filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k - lo, c)).collect()
            };
            let tw = |s: Side, i: usize| p.parity(s, i).flip();
            for u in 0..other {
                let du = restrict(other_off + u, other_off, other);
                let ue = sparse::unit(u);
                for x in 0..own {
                    let dx = restrict(off + x, off, own);
                    let xe = sparse::unit(x);
                    let s1 = Scalar::sign(pd.mul(tw(side, x)));
                    let s2 = Scalar::sign(pd.mul(tw(side, x) + tw(side.other(), u)));
                    for y in 0..own {
                        let ye = sparse::unit(y);
                        let inner = p.m(side, u, x, y);
                        let full: SVec = inner.iter().map(|(k, c)| (off + k, c.clone())).collect();
                        let lhs_full = sparse::from_dense(&op.mul_vec(&sparse::to_dense(&full, d1 + d2)));
                        let lhs: SVec = lhs_full.into_iter().filter(|(k, _)| *k >= off && *k < off + own).map(|(k, c)| (k - off, c)).collect();
                        let dy = restrict(off + y, off, own);
                        let mut rhs = p.bracket_sparse(side, &ue, &dx, &ye);
                        rhs = sparse::add_scaled(&rhs, &s1, &p.bracket_sparse(side, &du, &xe, &ye));
                        rhs = sparse::add_scaled(&rhs, &s2, &p.bracket_sparse(side, &ue, &xe, &dy));
                        let res = sparse::add_scaled(&lhs, &-Scalar::one(), &rhs);
                        let f = (!res.is_empty()).then(|| Failure {
                            orientation: side.index(),
                            tuple: vec![di, x, y, u],
                            labels: vec![
                                a.labels[di].clone(),
                                p.space(side).label(x).into(),
                                p.space(side).label(y).into(),
                                p.space(side.other()).label(u).into(),
                            ],
                            residual: Residual::vector(side.index(), &res),
                        });
                        r.record(f, DEFAULT_MAX_FAILURES);
                    }
                }
            }
        }
    }
    r
}
