//! Polarized Lie supertriple systems.
//!
//! The checker tests this axiom set on all basis triples (and 5-tuples),
//! with `a, b, ...` standing for parities:
//!
//! 1. `[a,b,c] = -(-1)^{ab}[b,a,c]`
//! 2. `(-1)^{ac}[a,b,c] + (-1)^{ba}[b,c,a] + (-1)^{cb}[c,a,b] = 0`
//! 3. `[a,b,[c,d,e]] = [[a,b,c],d,e] + (-1)^{(a+b)c}[c,[a,b,d],e] + (-1)^{(a+b)(c+d)}[c,d,[a,b,e]]`
//!
//! plus evenness of the product and polarization: a triple with all three
//! arguments in the same summand is zero.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactlin::sparse::{self, Accumulator};
use crate::exactlin::{SVec, Scalar};
use crate::pairs::{check_super_jordan, AxiomReport, Failure, Kind, PairStructure, Residual, Side, DEFAULT_MAX_FAILURES};
use crate::supercore::{Parity, SuperSpace};

use super::TkkError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarizedLTS {
    /// `V1 ⊕ V2`, `V1` first.
    space: SuperSpace,
    d1: usize,
    /// `[e_a, e_b, e_c]` at `(a * dim + b) * dim + c`.
    table: Vec<SVec>,
}

impl PolarizedLTS {
    pub fn zero(space: SuperSpace, d1: usize) -> Self {
        let n = space.dim();
        PolarizedLTS { space, d1, table: vec![SVec::new(); n * n * n] }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn first_dim(&self) -> usize {
        self.d1
    }

    pub fn triple(&self, a: usize, b: usize, c: usize) -> &SVec {
        let n = self.dim();
        &self.table[(a * n + b) * n + c]
    }

    pub fn set_triple(&mut self, a: usize, b: usize, c: usize, out: SVec) {
        let n = self.dim();
        self.table[(a * n + b) * n + c] = out;
    }

    fn par(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    fn summand(&self, i: usize) -> bool {
        i < self.d1
    }

    /// Trilinear extension with the first, second or third slot sparse.
    fn apply(&self, v: &SVec, slot: usize, fixed: [usize; 2]) -> SVec {
        let mut acc = Accumulator::new(self.dim());
        for (k, c) in v {
            let t = match slot {
                0 => self.triple(*k, fixed[0], fixed[1]),
                1 => self.triple(fixed[0], *k, fixed[1]),
                _ => self.triple(fixed[0], fixed[1], *k),
            };
            for (i, x) in t {
                acc.add_mul(*i, c, x);
            }
        }
        acc.take()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(src: &str) -> Result<Self, TkkError> {
        let l: PolarizedLTS = serde_json::from_str(src).map_err(|e| TkkError::Malformed(e.to_string()))?;
        let n = l.space.dim();
        if l.d1 > n || l.table.len() != n * n * n || l.table.iter().flatten().any(|(k, _)| *k >= n) {
            return Err(TkkError::Malformed("triple table does not match the space".into()));
        }
        Ok(l)
    }
}

/// The triple system on `V1 ⊕ V2` of a super-Jordan pair:
/// `[x,u,y] = x∘_u y`, `[u,x,v] = u∘_x v`,
/// `[u,x,y] = -(-1)^{p(u)p(x)} x∘_u y`, `[x,u,v] = -(-1)^{p(x)p(u)} u∘_x v`,
/// and zero when the first two arguments share a summand.
pub fn lts_from_pair(p: &PairStructure) -> Result<PolarizedLTS, TkkError> {
    if p.kind() != Kind::SuperJordan {
        return Err(TkkError::WrongKind { expected: Kind::SuperJordan, found: p.kind() });
    }
    let r = check_super_jordan(p).expect("kind checked");
    if !r.pass() {
        return Err(TkkError::Precondition("pair fails the super-Jordan identity".into()));
    }
    Ok(lts_unchecked(p))
}

fn lts_unchecked(p: &PairStructure) -> PolarizedLTS {
    let (d1, d2) = (p.v1().dim(), p.v2().dim());
    let mut labels: Vec<String> = p.v1().labels().to_vec();
    labels.extend(p.v2().labels().iter().cloned());
    let mut pars = p.v1().parities().to_vec();
    pars.extend_from_slice(p.v2().parities());
    let space = SuperSpace::new(labels.clone(), pars.clone()).unwrap_or_else(|_| {
        // Labels may repeat across the two spaces.
        let tagged = (0..d1).map(|i| format!("{}@1", labels[i])).chain((0..d2).map(|i| format!("{}@2", labels[d1 + i]))).collect();
        SuperSpace::new(tagged, pars.clone()).expect("tagged labels are distinct")
    });
    let mut l = PolarizedLTS::zero(space, d1);
    let shift = |v: &SVec, by: usize| -> SVec { v.iter().map(|(k, c)| (k + by, c.clone())).collect() };
    for x in 0..d1 {
        for u in 0..d2 {
            let s = -Scalar::sign(p.parity(Side::First, x).mul(p.parity(Side::Second, u)));
            for y in 0..d1 {
                let v = p.m(Side::First, u, x, y);
                l.set_triple(x, d1 + u, y, v.clone());
                l.set_triple(d1 + u, x, y, sparse::scale(v, &s));
            }
            for v in 0..d2 {
                let w = shift(p.m(Side::Second, x, u, v), d1);
                l.set_triple(d1 + u, x, d1 + v, w.clone());
                l.set_triple(x, d1 + u, d1 + v, sparse::scale(&w, &s));
            }
        }
    }
    l
}

fn fail(l: &PolarizedLTS, tuple: Vec<usize>, res: &SVec) -> Failure {
    Failure {
        orientation: 0,
        labels: tuple.iter().map(|&i| l.space.label(i).to_string()).collect(),
        tuple,
        residual: Residual::vector(0, res),
    }
}

/// Exhaustive check of the documented axiom set.
pub fn check_lts_axioms(l: &PolarizedLTS) -> AxiomReport {
    let n = l.dim();
    let max = DEFAULT_MAX_FAILURES;
    let sg = |p: u8| Scalar::sign(p);
    let mut parity = AxiomReport::new("parity", None);
    let mut polar = AxiomReport::new("polarization", None);
    let mut anti = AxiomReport::new("antisymmetry", None);
    let mut cyclic = AxiomReport::new("cyclic", None);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let t = l.triple(a, b, c);
                let want = l.par(a) + l.par(b) + l.par(c);
                parity.record(t.iter().any(|(k, _)| l.par(*k) != want).then(|| fail(l, vec![a, b, c], t)), max);
                let same = l.summand(a) == l.summand(b) && l.summand(b) == l.summand(c);
                if same {
                    polar.record((!t.is_empty()).then(|| fail(l, vec![a, b, c], t)), max);
                }
                let r = sparse::add_scaled(t, &sg(l.par(a).mul(l.par(b))), l.triple(b, a, c));
                anti.record((!r.is_empty()).then(|| fail(l, vec![a, b, c], &r)), max);
                let mut r = sparse::scale(t, &sg(l.par(a).mul(l.par(c))));
                r = sparse::add_scaled(&r, &sg(l.par(b).mul(l.par(a))), l.triple(b, c, a));
                r = sparse::add_scaled(&r, &sg(l.par(c).mul(l.par(b))), l.triple(c, a, b));
                cyclic.record((!r.is_empty()).then(|| fail(l, vec![a, b, c], &r)), max);
            }
        }
    }
    let chunks: Vec<AxiomReport> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut r = AxiomReport::new("derivation", None);
            for b in 0..n {
                let pab = l.par(a) + l.par(b);
                for c in 0..n {
                    let abc = l.triple(a, b, c);
                    for d in 0..n {
                        let abd = l.triple(a, b, d);
                        let cd = l.par(c) + l.par(d);
                        for e in 0..n {
                            let lhs = l.apply(l.triple(c, d, e), 2, [a, b]);
                            let t1 = l.apply(abc, 0, [d, e]);
                            let t2 = l.apply(abd, 1, [c, e]);
                            let t3 = l.apply(l.triple(a, b, e), 2, [c, d]);
                            let mut res = sparse::add_scaled(&lhs, &-Scalar::one(), &t1);
                            res = sparse::add_scaled(&res, &-sg(pab.mul(l.par(c))), &t2);
                            res = sparse::add_scaled(&res, &-sg(pab.mul(cd)), &t3);
                            r.record((!res.is_empty()).then(|| fail(l, vec![a, b, c, d, e], &res)), max);
                        }
                    }
                }
            }
            r
        })
        .collect();
    let mut deriv = AxiomReport::new("derivation", None);
    for c in chunks {
        deriv.absorb(c, max);
    }
    AxiomReport::aggregate("lts", vec![parity, polar, anti, cyclic, deriv])
}
