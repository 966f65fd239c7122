//! The word-module engine.
//!
//! A module is grown from seed vectors (two vacua for highest-weight
//! modules, a split representation of a subpair for induced ones) by
//! applying generators. Every symbol is a formal word `g_k … g_1 s`; the
//! quotient is cut out by collected linear relations kept in echelon form,
//! with the newest symbol of a relation as its pivot:
//!
//! * every instance of both representation identities on every surviving
//!   symbol whose words already exist;
//! * module closure: if `w = Σ c_i w_i` then `g·w = Σ c_i g·w_i`.
//!
//! Words are built level by level. When no word of the newest level
//! survives, every surviving symbol has all its actions inside the module
//! and every relation instance on it has been imposed, so the quotient is
//! the universal module and the build has stabilized.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{check_rep, check_split, PairRep, RepError, SplitData};
use crate::constructions::EnvelopePair;
use crate::exactlin::{sparse, Echelon, Matrix, SVec, Scalar, SpanCoords};
use crate::pairs::{AxiomReport, Failure, PairStructure, Residual, Side, DEFAULT_MAX_FAILURES};
use crate::supercore::{sign_a, Parity, SuperSpace};

/// A pair with a `ℤ`-degree on each basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPairData {
    pub pair: PairStructure,
    pub deg1: Vec<i64>,
    pub deg2: Vec<i64>,
}

impl GradedPairData {
    pub fn new(pair: PairStructure, deg1: Vec<i64>, deg2: Vec<i64>) -> Result<Self, RepError> {
        if deg1.len() != pair.v1().dim() || deg2.len() != pair.v2().dim() {
            return Err(RepError::Shape("one degree per basis vector is required".into()));
        }
        Ok(GradedPairData { pair, deg1, deg2 })
    }

    pub fn degrees(&self, side: Side) -> &[i64] {
        match side {
            Side::First => &self.deg1,
            Side::Second => &self.deg2,
        }
    }

    /// Brackets add degrees, and the degree-zero subpair is trivial.
    pub fn check(&self) -> AxiomReport {
        let mut additive = AxiomReport::new("additive", None);
        let mut trivial = AxiomReport::new("degree-zero-trivial", None);
        for side in [Side::First, Side::Second] {
            let (d, od) = (self.degrees(side), self.degrees(side.other()));
            for (s, a, b, out) in self.pair.entries(side) {
                let want = d[a] + d[b] + od[s];
                let fail = |res: &SVec| Failure {
                    orientation: side.index(),
                    tuple: vec![a, b, s],
                    labels: vec![
                        self.pair.space(side).label(a).into(),
                        self.pair.space(side).label(b).into(),
                        self.pair.space(side.other()).label(s).into(),
                    ],
                    residual: Residual::vector(side.index(), res),
                };
                let bad: SVec = out.iter().filter(|(k, _)| d[*k] != want).cloned().collect();
                additive.record((!bad.is_empty()).then(|| fail(&bad)), DEFAULT_MAX_FAILURES);
                if d[a] == 0 && d[b] == 0 && od[s] == 0 {
                    trivial.record((!out.is_empty()).then(|| fail(out)), DEFAULT_MAX_FAILURES);
                }
            }
        }
        AxiomReport::aggregate("grading", vec![additive, trivial])
    }
}

/// Grades a matrix pair by `deg E_ij = j - i`.
pub fn diagonal_grading(ep: &EnvelopePair) -> Result<GradedPairData, RepError> {
    let deg = |side: Side| -> Result<Vec<i64>, RepError> {
        ep.span(side)
            .basis
            .iter()
            .zip(&ep.span(side).labels)
            .map(|(m, l)| {
                let ds: HashSet<i64> = m.nonzeros().iter().map(|(i, j, _)| *j as i64 - *i as i64).collect();
                match ds.len() {
                    0 => Ok(0),
                    1 => Ok(*ds.iter().next().expect("one")),
                    _ => Err(RepError::Precondition(format!("{l} is not homogeneous for the diagonal grading"))),
                }
            })
            .collect()
    };
    GradedPairData::new(ep.pair.clone(), deg(Side::First)?, deg(Side::Second)?)
}

/// Characters for weight `(j1, j2)` on a pair whose degree-zero part is
/// spanned by `E11, E22` on both sides: `χ_i(E11) = 0`, `χ_i(E22) = 2 j_i`.
pub fn weight_characters(g: &GradedPairData, j1: &Scalar, j2: &Scalar) -> Result<(Vec<Scalar>, Vec<Scalar>), RepError> {
    let mut out = Vec::new();
    for (side, j) in [(Side::First, j1), (Side::Second, j2)] {
        let sp = g.pair.space(side);
        let zero: Vec<&str> =
            (0..sp.dim()).filter(|&i| g.degrees(side)[i] == 0).map(|i| sp.label(i)).collect();
        if zero != ["E11", "E22"] {
            return Err(RepError::Precondition(format!(
                "weights need a degree-zero part spanned by E11, E22; found {}",
                zero.join(", ")
            )));
        }
        let mut chi = vec![Scalar::zero(); sp.dim()];
        chi[sp.index_of("E22").expect("checked")] = j * &Scalar::from_int(2);
        out.push(chi);
    }
    let chi2 = out.pop().expect("two sides");
    Ok((out.pop().expect("two sides"), chi2))
}

/// A subpair given by bases of subspaces of `V1` and `V2`, with its own
/// structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subpair {
    pub pair: PairStructure,
    /// Basis vectors in parent coordinates, per side.
    pub embed: [Vec<SVec>; 2],
}

fn combo_label(space: &SuperSpace, v: &SVec) -> String {
    if let [(k, c)] = &v[..] {
        if c.is_one() {
            return space.label(*k).to_string();
        }
    }
    let mut s = String::new();
    for (k, c) in v {
        let (neg, a) = (c.is_negative(), c.abs());
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { "-" } else { "+" });
        }
        if !a.is_one() {
            s.push_str(&a.to_string());
        }
        s.push_str(space.label(*k));
    }
    s
}

impl Subpair {
    /// Computes the induced brackets; fails if the span is not closed or a
    /// basis vector is inhomogeneous or dependent.
    pub fn new(parent: &PairStructure, b1: Vec<SVec>, b2: Vec<SVec>) -> Result<Self, RepError> {
        let embed = [b1, b2];
        let mut spaces = Vec::new();
        let mut coords = Vec::new();
        for side in [Side::First, Side::Second] {
            let sp = parent.space(side);
            let vs = &embed[side.index() as usize];
            let mut pars = Vec::new();
            for v in vs {
                let ps: HashSet<Parity> = v.iter().map(|(k, _)| sp.parity(*k)).collect();
                if ps.len() != 1 {
                    return Err(RepError::Precondition(format!("{} is not a nonzero homogeneous vector", combo_label(sp, v))));
                }
                pars.push(*ps.iter().next().expect("one"));
            }
            let labels: Vec<String> = vs.iter().map(|v| combo_label(sp, v)).collect();
            let space = SuperSpace::new(labels, pars.clone())
                .unwrap_or_else(|_| SuperSpace::numbered(if side == Side::First { "x" } else { "u" }, pars));
            let dense: Vec<Vec<Scalar>> = vs.iter().map(|v| sparse::to_dense(v, sp.dim())).collect();
            coords.push(SpanCoords::new(&dense, sp.dim()).map_err(|_| RepError::Precondition("dependent basis".into()))?);
            spaces.push(space);
        }
        let v2 = spaces.pop().expect("two");
        let v1 = spaces.pop().expect("two");
        let mut err = None;
        let pair = PairStructure::from_fn(v1, v2, parent.kind(), |side, s, a, b| {
            let i = side.index() as usize;
            let out = parent.bracket_sparse(side, &embed[1 - i][s], &embed[i][a], &embed[i][b]);
            match coords[i].coords(&sparse::to_dense(&out, parent.space(side).dim())).expect("sizes match") {
                Some(c) => sparse::from_dense(&c),
                None => {
                    err.get_or_insert_with(|| {
                        let (sp, osp) = (parent.space(side), parent.space(side.other()));
                        RepError::NotClosed(format!(
                            "[{},{}]_{} leaves the span",
                            combo_label(sp, &embed[i][a]),
                            combo_label(sp, &embed[i][b]),
                            combo_label(osp, &embed[1 - i][s])
                        ))
                    });
                    Vec::new()
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(Subpair { pair, embed }),
        }
    }

    /// The subpair spanned by the given basis vectors.
    pub fn of_indices(parent: &PairStructure, i1: &[usize], i2: &[usize]) -> Result<Self, RepError> {
        let units = |is: &[usize]| is.iter().map(|&i| sparse::unit(i)).collect();
        Subpair::new(parent, units(i1), units(i2))
    }

    pub fn full(parent: &PairStructure) -> Self {
        let i1: Vec<usize> = (0..parent.v1().dim()).collect();
        let i2: Vec<usize> = (0..parent.v2().dim()).collect();
        Subpair::of_indices(parent, &i1, &i2).expect("the whole pair is closed")
    }

    pub fn zero(parent: &PairStructure) -> Self {
        Subpair::of_indices(parent, &[], &[]).expect("zero is closed")
    }
}

/// Number of surviving words of one side, level and degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimEntry {
    /// 0 for `H1`, 1 for `H2`.
    pub side: u8,
    pub level: usize,
    pub degree: i64,
    pub dim: usize,
}

/// Outcome of a word-module build. `rep` and `split` are present only when
/// the build stabilized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordModule {
    pub rep: Option<PairRep>,
    pub split: Option<SplitData>,
    pub dims: Vec<DimEntry>,
    /// Per level: surviving symbols right after the new words were added,
    /// then after each relation-closure pass.
    pub history: Vec<Vec<usize>>,
    pub stabilized: bool,
    /// Levels of words built.
    pub levels: usize,
    /// Seeds stay independent and the subpair acts on them as the seed
    /// representation does.
    pub seed_embedded: bool,
}

impl WordModule {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().map(|d| d.dim).sum()
    }

    pub fn side_dim(&self, side: u8) -> usize {
        self.dims.iter().filter(|d| d.side == side).map(|d| d.dim).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

struct Sym {
    side: u8,
    level: usize,
    parity: Parity,
    degree: i64,
    label: String,
}

struct Engine {
    /// The parent pair in the adapted basis: subpair generators first.
    q: PairStructure,
    n_sub: [usize; 2],
    gen_deg: [Vec<i64>; 2],
    syms: Vec<Sym>,
    /// Generators with a defined action, per symbol.
    acted: Vec<Vec<usize>>,
    act: HashMap<(usize, usize), SVec>,
    ech: Echelon,
    done_id: HashSet<(usize, usize, usize, usize)>,
    done_mod: HashSet<(usize, usize)>,
}

fn add_into(acc: &mut BTreeMap<usize, Scalar>, v: &SVec, c: &Scalar) {
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(Scalar::zero);
        e.add_mul(c, x);
    }
}

fn collect(acc: BTreeMap<usize, Scalar>) -> SVec {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl Engine {
    fn gens(&self, t: u8) -> usize {
        self.q.space(Side::from_index(t)).dim()
    }

    fn new_sym(&mut self, s: Sym) -> usize {
        self.syms.push(s);
        self.acted.push(Vec::new());
        self.syms.len() - 1
    }

    fn set_act(&mut self, g: usize, s: usize, v: SVec) {
        self.act.insert((g, s), v);
        self.acted[s].push(g);
    }

    fn is_basis(&self, s: usize) -> bool {
        !self.ech.is_pivot(s)
    }

    /// `T_t(g) v`, or `None` while some needed word is not built yet.
    fn apply(&self, t: u8, g: usize, v: &SVec) -> Option<SVec> {
        let mut acc = BTreeMap::new();
        for (s, c) in self.ech.reduce(v) {
            if self.syms[s].side != t {
                continue;
            }
            add_into(&mut acc, self.act.get(&(g, s))?, &c);
        }
        Some(collect(acc))
    }

    fn apply_vec(&self, t: u8, e: &SVec, v: &SVec) -> Option<SVec> {
        let mut acc = BTreeMap::new();
        for (g, c) in e {
            add_into(&mut acc, &self.apply(t, *g, v)?, c);
        }
        Some(collect(acc))
    }

    fn level_survivors(&self, level: usize) -> usize {
        (0..self.syms.len()).filter(|&s| self.syms[s].level == level && self.is_basis(s)).count()
    }

    fn survivors(&self) -> usize {
        self.syms.len() - self.ech.rank()
    }

    fn expand(&mut self, level: usize) {
        let targets: Vec<usize> =
            (0..self.syms.len()).filter(|&s| self.syms[s].level == level && self.is_basis(s)).collect();
        for s in targets {
            let t = self.syms[s].side;
            let sp = self.q.space(Side::from_index(t)).clone();
            for g in 0..sp.dim() {
                if self.act.contains_key(&(g, s)) {
                    continue;
                }
                let sym = Sym {
                    side: 1 - t,
                    level: level + 1,
                    parity: self.syms[s].parity + sp.parity(g),
                    degree: self.syms[s].degree + self.gen_deg[t as usize][g],
                    label: format!("{} {}", sp.label(g), self.syms[s].label),
                };
                let w = self.new_sym(sym);
                self.set_act(g, s, sparse::unit(w));
            }
        }
    }

    /// One relation instance on symbol `s`, if all its words exist.
    fn identity_relation(&self, s: usize, x: usize, y: usize, u: usize) -> Option<SVec> {
        let t = self.syms[s].side;
        let o = 1 - t;
        let side = Side::from_index(t);
        let e = sparse::unit(s);
        let a = self.apply(t, x, &self.apply(o, u, &self.apply(t, y, &e)?)?)?;
        let b = self.apply(t, y, &self.apply(o, u, &self.apply(t, x, &e)?)?)?;
        let c = self.apply_vec(t, self.q.m(side, u, x, y), &e)?;
        let sp = self.q.space(side);
        let sign = sign_a(sp.parity(x), self.q.space(side.other()).parity(u), sp.parity(y));
        let r = sparse::add_scaled(&c, &-Scalar::one(), &a);
        Some(sparse::add_scaled(&r, &sign, &b))
    }

    /// Imposes relations until a pass adds nothing; records the survivor
    /// count after each pass.
    fn close(&mut self, history: &mut Vec<usize>) {
        loop {
            let mut added = false;
            for s in 0..self.syms.len() {
                if !self.is_basis(s) {
                    continue;
                }
                let t = self.syms[s].side;
                let (d, e) = (self.gens(t), self.gens(1 - t));
                for x in 0..d {
                    for y in 0..d {
                        for u in 0..e {
                            if self.done_id.contains(&(s, x, y, u)) {
                                continue;
                            }
                            if let Some(r) = self.identity_relation(s, x, y, u) {
                                self.done_id.insert((s, x, y, u));
                                added |= self.ech.insert(&r).is_some();
                            }
                        }
                    }
                }
            }
            let pivots: Vec<usize> = self.ech.pivots().collect();
            for k in pivots {
                let t = self.syms[k].side;
                for g in self.acted[k].clone() {
                    if self.done_mod.contains(&(g, k)) {
                        continue;
                    }
                    if let Some(rhs) = self.apply(t, g, &self.ech.reduce(&sparse::unit(k))) {
                        self.done_mod.insert((g, k));
                        let r = sparse::add_scaled(&self.act[&(g, k)], &-Scalar::one(), &rhs);
                        added |= self.ech.insert(&r).is_some();
                    }
                }
            }
            history.push(self.survivors());
            if !added {
                break;
            }
        }
    }
}

/// Builds the module induced from a split representation of a subpair.
fn run_engine(
    p: &PairStructure,
    sub: &Subpair,
    subrep: &PairRep,
    split: &SplitData,
    degrees: Option<[&[i64]; 2]>,
    cap: usize,
) -> Result<WordModule, RepError> {
    if cap == 0 {
        return Err(RepError::Precondition("cap must be at least 1".into()));
    }
    if subrep.pair != sub.pair {
        return Err(RepError::Precondition("seed representation is not a representation of the subpair".into()));
    }
    let r = check_rep(subrep);
    if !r.pass() {
        return Err(RepError::Precondition(format!("seed representation fails {}", r.failing_checks().join(", "))));
    }
    let sr = check_split(subrep, split);
    if !sr.pass() {
        return Err(RepError::Precondition(format!("seed representation is not split: {}", sr.failing_checks().join(", "))));
    }

    // Adapted basis per side: the subpair's basis, then unit vectors
    // completing it.
    let mut adapted: [Vec<SVec>; 2] = [Vec::new(), Vec::new()];
    let mut to_adapted: [Vec<SVec>; 2] = [Vec::new(), Vec::new()];
    let mut gen_deg: [Vec<i64>; 2] = [Vec::new(), Vec::new()];
    let mut spaces = Vec::new();
    for side in [Side::First, Side::Second] {
        let i = side.index() as usize;
        let sp = p.space(side);
        let mut ech = Echelon::new();
        let mut basis = sub.embed[i].clone();
        for v in &basis {
            ech.insert(v);
        }
        for k in 0..sp.dim() {
            if !ech.contains(&sparse::unit(k)) {
                ech.insert(&sparse::unit(k));
                basis.push(sparse::unit(k));
            }
        }
        let dense: Vec<Vec<Scalar>> = basis.iter().map(|v| sparse::to_dense(v, sp.dim())).collect();
        let coords = SpanCoords::new(&dense, sp.dim())?;
        to_adapted[i] = (0..sp.dim())
            .map(|k| sparse::from_dense(&coords.coords(&sparse::to_dense(&sparse::unit(k), sp.dim())).expect("size").expect("spans")))
            .collect();
        let sub_sp = sub.pair.space(side);
        let mut labels: Vec<String> = sub_sp.labels().to_vec();
        let mut pars: Vec<Parity> = sub_sp.parities().to_vec();
        for v in &basis[sub.embed[i].len()..] {
            labels.push(combo_label(sp, v));
            pars.push(sp.parity(v[0].0));
        }
        let space = SuperSpace::new(labels, pars.clone()).unwrap_or_else(|_| SuperSpace::numbered("g", pars));
        gen_deg[i] = basis
            .iter()
            .map(|v| degrees.map_or(0, |d| v.first().map_or(0, |(k, _)| d[i][*k])))
            .collect();
        adapted[i] = basis;
        spaces.push(space);
    }
    let v2 = spaces.pop().expect("two");
    let v1 = spaces.pop().expect("two");
    let q = PairStructure::from_fn(v1, v2, p.kind(), |side, s, a, b| {
        let i = side.index() as usize;
        let out = p.bracket_sparse(side, &adapted[1 - i][s], &adapted[i][a], &adapted[i][b]);
        let mut acc = BTreeMap::new();
        for (k, c) in &out {
            add_into(&mut acc, &to_adapted[i][*k], c);
        }
        collect(acc)
    });

    let mut eng = Engine {
        q,
        n_sub: [sub.embed[0].len(), sub.embed[1].len()],
        gen_deg,
        syms: Vec::new(),
        acted: Vec::new(),
        act: HashMap::new(),
        ech: Echelon::new(),
        done_id: HashSet::new(),
        done_mod: HashSet::new(),
    };
    let mut in_h2 = vec![false; subrep.dim()];
    for &i in &split.h2 {
        in_h2[i] = true;
    }
    for (i, h2) in in_h2.iter().enumerate() {
        eng.new_sym(Sym {
            side: u8::from(*h2),
            level: 0,
            parity: subrep.h.parity(i),
            degree: 0,
            label: subrep.h.label(i).to_string(),
        });
    }
    for (i, h2) in in_h2.iter().enumerate() {
        let t = usize::from(*h2);
        for g in 0..eng.n_sub[t] {
            let m = &subrep.ops(Side::from_index(t as u8))[g];
            let col: SVec = (0..subrep.dim()).filter(|&r| !m[(r, i)].is_zero()).map(|r| (r, m[(r, i)].clone())).collect();
            eng.set_act(g, i, col);
        }
    }

    let mut history = Vec::new();
    let mut stabilized = false;
    let mut levels = 0;
    for level in 0..cap {
        let mut h = Vec::new();
        eng.expand(level);
        levels = level + 1;
        h.push(eng.survivors());
        eng.close(&mut h);
        history.push(h);
        if eng.level_survivors(level + 1) == 0 {
            stabilized = true;
            break;
        }
    }

    let mut dims: BTreeMap<(usize, i64, u8), usize> = BTreeMap::new();
    for s in 0..eng.syms.len() {
        if eng.is_basis(s) {
            let sym = &eng.syms[s];
            *dims.entry((sym.level, sym.degree, sym.side)).or_default() += 1;
        }
    }
    let dims = dims.into_iter().map(|((level, degree, side), dim)| DimEntry { side, level, degree, dim }).collect();
    let seeds = subrep.dim();
    let mut out = WordModule { rep: None, split: None, dims, history, stabilized, levels, seed_embedded: false };
    if !stabilized {
        out.seed_embedded = (0..seeds).all(|s| eng.is_basis(s));
        return Ok(out);
    }

    let basis: Vec<usize> = (0..eng.syms.len()).filter(|&s| eng.is_basis(s)).collect();
    let n = basis.len();
    let mut pos = HashMap::new();
    for (j, &s) in basis.iter().enumerate() {
        pos.insert(s, j);
    }
    let labels: Vec<String> = basis.iter().map(|&s| eng.syms[s].label.clone()).collect();
    let pars: Vec<Parity> = basis.iter().map(|&s| eng.syms[s].parity).collect();
    let h = SuperSpace::new(labels, pars.clone()).unwrap_or_else(|_| SuperSpace::numbered("w", pars));
    let mut gen_ops: [Vec<Matrix>; 2] = [Vec::new(), Vec::new()];
    for t in 0..2u8 {
        for g in 0..eng.gens(t) {
            let mut m = Matrix::zeros(n, n);
            for (j, &s) in basis.iter().enumerate() {
                if eng.syms[s].side != t {
                    continue;
                }
                let v = eng.apply(t, g, &sparse::unit(s)).expect("stabilized modules are closed");
                for (k, c) in eng.ech.reduce(&v) {
                    m[(pos[&k], j)] = c;
                }
            }
            gen_ops[t as usize].push(m);
        }
    }
    let parent_ops = |t: usize| -> Vec<Matrix> {
        to_adapted[t]
            .iter()
            .map(|v| {
                let mut m = Matrix::zeros(n, n);
                for (g, c) in v {
                    m.add_scaled(c, &gen_ops[t][*g]);
                }
                m
            })
            .collect()
    };
    let rep = PairRep::new(p.clone(), h, parent_ops(0), parent_ops(1))?;
    let split_out = SplitData {
        h1: (0..n).filter(|&j| eng.syms[basis[j]].side == 0).collect(),
        h2: (0..n).filter(|&j| eng.syms[basis[j]].side == 1).collect(),
    };
    out.seed_embedded = (0..seeds).all(|s| eng.is_basis(s))
        && (0..2).all(|t| {
            (0..eng.n_sub[t]).all(|g| {
                let m = &subrep.ops(Side::from_index(t as u8))[g];
                (0..seeds).all(|j| (0..n).all(|i| {
                    let want = if i < seeds { m[(i, j)].clone() } else { Scalar::zero() };
                    gen_ops[t][g][(i, j)] == want
                }))
            })
        });
    out.rep = Some(rep);
    out.split = Some(split_out);
    Ok(out)
}

/// The module induced from a split representation `subrep` of `sub`.
pub fn induced_split_module(
    p: &PairStructure,
    sub: &Subpair,
    subrep: &PairRep,
    split: &SplitData,
    cap: usize,
) -> Result<WordModule, RepError> {
    run_engine(p, sub, subrep, split, None, cap)
}

/// The universal split highest-weight module: vacua `|0>1 ∈ H1` and
/// `|0>2 ∈ H2` with `X|0>1 = χ1(X)|0>2`, `U|0>2 = χ2(U)|0>1` in degree zero
/// and negative degrees acting by zero. `chi1`, `chi2` are given on the
/// whole basis and must vanish outside even degree-zero vectors.
pub fn hw_split_module(g: &GradedPairData, chi1: &[Scalar], chi2: &[Scalar], cap: usize) -> Result<WordModule, RepError> {
    let gr = g.check();
    if !gr.pass() {
        return Err(RepError::Precondition(format!("grading fails {}", gr.failing_checks().join(", "))));
    }
    let p = &g.pair;
    let mut nonpos: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for (t, (side, chi)) in [(Side::First, chi1), (Side::Second, chi2)].into_iter().enumerate() {
        let sp = p.space(side);
        if chi.len() != sp.dim() {
            return Err(RepError::Shape(format!("character {} needs {} values", t + 1, sp.dim())));
        }
        for k in 0..sp.dim() {
            let d = g.degrees(side)[k];
            if !chi[k].is_zero() && (d != 0 || sp.parity(k).is_odd()) {
                return Err(RepError::Precondition(format!("character {} is nonzero on {}", t + 1, sp.label(k))));
            }
            if d <= 0 {
                nonpos[t].push(k);
            }
        }
    }
    let sub = Subpair::of_indices(p, &nonpos[0], &nonpos[1])?;
    let h = SuperSpace::new(vec!["|0>1".into(), "|0>2".into()], vec![Parity::EVEN; 2]).expect("distinct");
    let mut seed = PairRep::zero(sub.pair.clone(), h);
    for (a, &k) in nonpos[0].iter().enumerate() {
        seed.t1[a][(1, 0)] = chi1[k].clone();
    }
    for (a, &k) in nonpos[1].iter().enumerate() {
        seed.t2[a][(0, 1)] = chi2[k].clone();
    }
    let split = SplitData { h1: vec![0], h2: vec![1] };
    run_engine(p, &sub, &seed, &split, Some([&g.deg1, &g.deg2]), cap)
}

/// The four-dimensional split representation of the isoquaternionic pair
/// with highest weight `(1/2, 1/2)`.
pub fn isoquaternion_fundamental() -> Result<(PairRep, SplitData), RepError> {
    let g = diagonal_grading(&crate::constructions::isoquaternionic_pair())?;
    let half = Scalar::ratio(1, 2);
    let (chi1, chi2) = weight_characters(&g, &half, &half)?;
    let m = hw_split_module(&g, &chi1, &chi2, 6)?;
    match (m.rep, m.split) {
        (Some(r), Some(s)) => Ok((r, s)),
        _ => Err(RepError::Precondition("highest-weight module did not stabilize within 6 levels".into())),
    }
}
