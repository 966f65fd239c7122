//! Super-polynomials `O(n|m)`, super vector fields `W(n|m)` and the pair
//! `(W(n|m), O(n|m))` realized by first-order differential operators.
//!
//! The brackets come from the envelope model in the algebra of differential
//! operators, with `M_f` the multiplication by `f`:
//!
//! * `[X, Y]_f = X∘M_f∘Y - A_{XfY}·Y∘M_f∘X = X(f)Y - A_{XfY}·Y(f)X + (-1)^{p(X)p(f)} f[X, Y]`
//! * `[f, g]_X = M_f∘X∘M_g - A_{fXg}·M_g∘X∘M_f = f·X(g) - A_{fXg}·g·X(f)`
//!
//! The second-order parts cancel. [`fields_match_composition`] and
//! [`functions_match_composition`] compare the closed forms with the
//! compositions as operators.

mod field;
mod parse;
mod poly;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exactlin::Scalar;
use crate::pairs::{eval_on_elements, AxiomReport, ElementAlgebra, Failure, Kind, PairStructure, Residual, Side, DEFAULT_MAX_FAILURES};
use crate::rng::Lcg;
use crate::supercore::{catalog_entry, sign_a, Parity, SuperSpace};

pub use field::{vf_apply, SuperVectorField};
pub use parse::{parse_field, parse_poly};
pub use poly::{poly_mul, Monomial, SuperPolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable sets differ: {}|{} vs {}|{}", left.0, left.1, right.0, right.1)]
    Mismatch { left: (usize, usize), right: (usize, usize) },
    #[error("inhomogeneous input: signs are undefined")]
    Inhomogeneous,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Shape(String),
}

fn parity_of_poly(f: &SuperPolynomial) -> Result<Parity, PolyError> {
    f.parity().ok_or(PolyError::Inhomogeneous)
}

fn parity_of_field(x: &SuperVectorField) -> Result<Parity, PolyError> {
    x.parity().ok_or(PolyError::Inhomogeneous)
}

fn fields_bracket(x: &SuperVectorField, y: &SuperVectorField, f: &SuperPolynomial) -> Result<SuperVectorField, PolyError> {
    let (px, py, pf) = (parity_of_field(x)?, parity_of_field(y)?, parity_of_poly(f)?);
    let a = sign_a(px, pf, py);
    let lie = x.lie_bracket(y)?;
    let out = y
        .left_mul(&x.apply(f))
        .add_scaled(&-&a, &x.left_mul(&y.apply(f)))
        .add_scaled(&Scalar::sign(px.mul(pf)), &lie.left_mul(f));
    Ok(out)
}

/// `[X, Y]_f = X(f)Y - A_{XfY}·Y(f)X + (-1)^{p(X)p(f)} f[X, Y]`.
pub fn iso_bracket_fields(x: &SuperVectorField, y: &SuperVectorField, f: &SuperPolynomial) -> Result<SuperVectorField, PolyError> {
    x.check_poly(f)?;
    y.check_poly(f)?;
    fields_bracket(x, y, f)
}

fn functions_bracket(f: &SuperPolynomial, g: &SuperPolynomial, x: &SuperVectorField) -> Result<SuperPolynomial, PolyError> {
    let (pf, pg, px) = (parity_of_poly(f)?, parity_of_poly(g)?, parity_of_field(x)?);
    let a = sign_a(pf, px, pg);
    Ok(f.mul(&x.apply(g)).add_scaled(&-&a, &g.mul(&x.apply(f))))
}

/// `[f, g]_X = f·X(g) - A_{fXg}·g·X(f)`.
pub fn iso_bracket_functions(f: &SuperPolynomial, g: &SuperPolynomial, x: &SuperVectorField) -> Result<SuperPolynomial, PolyError> {
    x.check_poly(f)?;
    x.check_poly(g)?;
    functions_bracket(f, g, x)
}

/// Every monomial of total degree at most `deg`.
pub fn test_monomials(n: usize, m: usize, deg: u32) -> Vec<SuperPolynomial> {
    let mut out = Vec::new();
    for odd in 0u32..(1 << m) {
        let s = odd.count_ones();
        if s > deg {
            continue;
        }
        let mut exps = vec![0u32; n];
        loop {
            if exps.iter().sum::<u32>() + s <= deg {
                out.push(SuperPolynomial::monomial(n, m, Monomial { exps: exps.clone(), odd }, Scalar::one()));
            }
            // Odometer over exponents bounded by `deg`.
            let mut i = 0;
            while i < n && exps[i] == deg {
                exps[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            exps[i] += 1;
        }
    }
    out
}

/// Compares `X∘M_f∘Y - A·Y∘M_f∘X` with the closed form on every monomial of
/// degree ≤ 2. Both sides have order at most two, and such an operator is
/// fixed by its values there.
pub fn fields_match_composition(x: &SuperVectorField, y: &SuperVectorField, f: &SuperPolynomial) -> Result<bool, PolyError> {
    let closed = iso_bracket_fields(x, y, f)?;
    let a = sign_a(parity_of_field(x)?, parity_of_poly(f)?, parity_of_field(y)?);
    Ok(test_monomials(f.n(), f.m(), 2).iter().all(|g| {
        let comp = x.apply(&f.mul(&y.apply(g))).add_scaled(&-&a, &y.apply(&f.mul(&x.apply(g))));
        comp == closed.apply(g)
    }))
}

/// Compares `M_f∘X∘M_g - A·M_g∘X∘M_f` with multiplication by the closed form
/// on every monomial of degree ≤ 1.
pub fn functions_match_composition(f: &SuperPolynomial, g: &SuperPolynomial, x: &SuperVectorField) -> Result<bool, PolyError> {
    let closed = iso_bracket_functions(f, g, x)?;
    let a = sign_a(parity_of_poly(f)?, parity_of_field(x)?, parity_of_poly(g)?);
    Ok(test_monomials(f.n(), f.m(), 1).iter().all(|h| {
        let comp = f.mul(&x.apply(&g.mul(h))).add_scaled(&-&a, &g.mul(&x.apply(&f.mul(h))));
        comp == closed.mul(h)
    }))
}

/// An element of either space of the pair: side 0 is `W`, side 1 is `O`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WoElem {
    Field(SuperVectorField),
    Poly(SuperPolynomial),
}

impl WoElem {
    fn field(&self) -> &SuperVectorField {
        match self {
            WoElem::Field(x) => x,
            WoElem::Poly(_) => panic!("expected a vector field"),
        }
    }

    fn poly(&self) -> &SuperPolynomial {
        match self {
            WoElem::Poly(f) => f,
            WoElem::Field(_) => panic!("expected a polynomial"),
        }
    }

    fn degree(&self) -> u32 {
        match self {
            WoElem::Field(x) => x.degree(),
            WoElem::Poly(f) => f.degree(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            WoElem::Field(x) => x.is_zero(),
            WoElem::Poly(f) => f.is_zero(),
        }
    }
}

impl std::fmt::Display for WoElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WoElem::Field(x) => x.fmt(f),
            WoElem::Poly(p) => p.fmt(f),
        }
    }
}

/// The pair `(W(n|m), O(n|m))` as an [`ElementAlgebra`]. Products of
/// homogeneous elements stay homogeneous, so the closed forms never see
/// inhomogeneous input during template evaluation.
#[derive(Debug, Clone, Copy)]
pub struct WoAlgebra {
    pub n: usize,
    pub m: usize,
}

impl ElementAlgebra for WoAlgebra {
    type Elem = WoElem;

    fn product(&self, side: u8, sub: &WoElem, left: &WoElem, right: &WoElem) -> WoElem {
        if side == 0 {
            WoElem::Field(fields_bracket(left.field(), right.field(), sub.poly()).expect("homogeneous operands"))
        } else {
            WoElem::Poly(functions_bracket(left.poly(), right.poly(), sub.field()).expect("homogeneous operands"))
        }
    }

    fn zero(&self, side: u8) -> WoElem {
        if side == 0 {
            WoElem::Field(SuperVectorField::zero(self.n, self.m))
        } else {
            WoElem::Poly(SuperPolynomial::zero(self.n, self.m))
        }
    }

    fn add_scaled(&self, acc: &mut WoElem, c: &Scalar, e: &WoElem) {
        *acc = match (&*acc, e) {
            (WoElem::Field(a), WoElem::Field(b)) => WoElem::Field(a.add_scaled(c, b)),
            (WoElem::Poly(a), WoElem::Poly(b)) => WoElem::Poly(a.add_scaled(c, b)),
            _ => panic!("mixed sides in a sum"),
        };
    }
}

/// A random homogeneous polynomial of parity `p` and degree ≤ `deg`, with
/// one to three terms. Zero when no monomial of that parity fits.
pub fn random_poly(n: usize, m: usize, deg: u32, p: Parity, rng: &mut Lcg) -> SuperPolynomial {
    let sizes: Vec<u32> = (0..=(m as u32).min(deg)).filter(|s| s % 2 == u32::from(p.bit())).collect();
    let mut out = SuperPolynomial::zero(n, m);
    if sizes.is_empty() {
        return out;
    }
    for _ in 0..1 + rng.below(3) {
        let s = sizes[rng.below(sizes.len())];
        let mut pool: Vec<u32> = (0..m as u32).collect();
        let mut odd = 0u32;
        for _ in 0..s {
            let j = pool.swap_remove(rng.below(pool.len()));
            odd |= 1 << j;
        }
        let mut exps = vec![0u32; n];
        if n > 0 {
            for _ in 0..rng.below((deg - s) as usize + 1) {
                exps[rng.below(n)] += 1;
            }
        }
        out.add_term(Monomial { exps, odd }, rng.nonzero_coef());
    }
    out
}

/// A random homogeneous vector field of parity `p`, coefficients of
/// degree ≤ `deg`.
pub fn random_field(n: usize, m: usize, deg: u32, p: Parity, rng: &mut Lcg) -> SuperVectorField {
    let coeffs = (0..n + m)
        .map(|k| {
            let slot = Parity::new(u8::from(k >= n));
            if rng.chance(1, 2) {
                random_poly(n, m, deg, p + slot, rng)
            } else {
                SuperPolynomial::zero(n, m)
            }
        })
        .collect();
    SuperVectorField::from_coeffs(n, m, coeffs).expect("shapes match")
}

fn random_elem(n: usize, m: usize, deg: u32, side: u8, p: Parity, rng: &mut Lcg) -> WoElem {
    if side == 0 {
        WoElem::Field(random_field(n, m, deg, p, rng))
    } else {
        WoElem::Poly(random_poly(n, m, deg, p, rng))
    }
}

const IDENTITIES: [&str; 3] = ["antisymmetry", "jacobi-analog", "compatibility"];

struct TrialOutcome {
    parts: Vec<(usize, Option<Failure>)>,
}

fn failure(trial: usize, orientation: u8, binding: &[Option<WoElem>; 5], text: String) -> Failure {
    let labels = binding
        .iter()
        .zip(['X', 'Y', 'Z', 'U', 'V'])
        .filter_map(|(b, c)| b.as_ref().map(|e| format!("{c}={e}")))
        .collect();
    Failure { orientation, tuple: vec![trial], labels, residual: Residual::note(text) }
}

fn run_trial(n: usize, m: usize, deg: u32, trial: usize, rng: &mut Lcg) -> TrialOutcome {
    let alg = WoAlgebra { n, m };
    let mut parts = Vec::new();
    for orientation in 0..2u8 {
        let pm = rng.below(32) as u8;
        let binding: [Option<WoElem>; 5] = std::array::from_fn(|i| {
            let side = u8::from(i >= 3) ^ orientation;
            Some(random_elem(n, m, deg, side, Parity::new(pm >> i & 1), rng))
        });
        for (k, id) in IDENTITIES.iter().enumerate() {
            let form = catalog_entry(id).adopted.zero_form();
            let r = eval_on_elements(&alg, &form, orientation, pm, &binding).expect("catalog forms are element identities");
            let f = (!r.is_zero()).then(|| failure(trial, orientation, &binding, format!("residual {r}")));
            parts.push((k, f));
        }
        let b = |i: usize| binding[i].as_ref().expect("bound");
        let (fields, polys) = if orientation == 0 { ((b(0), b(1)), (b(3), b(4))) } else { ((b(3), b(4)), (b(0), b(1))) };
        let (x, y) = (fields.0.field(), fields.1.field());
        let (f, g) = (polys.0.poly(), polys.1.poly());
        let ok = fields_match_composition(x, y, f).expect("homogeneous")
            && functions_match_composition(f, g, x).expect("homogeneous");
        parts.push((3, (!ok).then(|| failure(trial, orientation, &binding, "closed form differs from the operator composition".into()))));
        let z = fields_bracket(x, y, f).expect("homogeneous");
        let pz = z.parity().expect("homogeneous");
        let pg = Parity::new(rng.below(2) as u8);
        let (g1, g2) = (random_poly(n, m, deg, pg, rng), random_poly(n, m, deg, Parity::new(rng.below(2) as u8), rng));
        let lhs = z.apply(&g1.mul(&g2));
        let rhs = z.apply(&g1).mul(&g2).add_scaled(&Scalar::sign(pz.mul(pg)), &g1.mul(&z.apply(&g2)));
        parts.push((4, (lhs != rhs).then(|| failure(trial, orientation, &binding, "graded Leibniz rule fails".into()))));
        let bound = x.degree() + y.degree() + f.degree();
        let zd = WoElem::Field(z).degree();
        parts.push((5, (zd > bound).then(|| failure(trial, orientation, &binding, format!("degree {zd} exceeds {bound}")))));
    }
    TrialOutcome { parts }
}

/// Samples random homogeneous tuples of degree ≤ `maxdeg` and checks the
/// pair identities in both orientations, together with the operator oracle,
/// the Leibniz rule for `[X, Y]_f` and the degree bound. Trials draw from
/// forks of one seeded generator, so the report depends only on the seed.
pub fn sample_check_w_o_pair(n: usize, m: usize, maxdeg: u32, trials: usize, seed: u64) -> AxiomReport {
    let names = ["antisymmetry", "jacobi-analog", "compatibility", "composition-oracle", "leibniz", "degree-bound"];
    let mut parts: Vec<AxiomReport> = names
        .iter()
        .enumerate()
        .map(|(k, name)| AxiomReport::new(*name, (k < 3).then(|| catalog_entry(name).form_id())))
        .collect();
    if n + m == 0 {
        parts[0].record(Some(Failure { orientation: 0, tuple: vec![], labels: vec![], residual: Residual::note("n + m must be at least 1") }), DEFAULT_MAX_FAILURES);
        return AxiomReport::aggregate("w-o-pair", parts);
    }
    let mut base = Lcg::new(seed);
    let rngs: Vec<Lcg> = (0..trials).map(|t| base.fork(t as u64)).collect();
    let outcomes: Vec<TrialOutcome> =
        rngs.into_par_iter().enumerate().map(|(t, mut rng)| run_trial(n, m, maxdeg, t, &mut rng)).collect();
    for o in outcomes {
        for (k, f) in o.parts {
            parts[k].record(f, DEFAULT_MAX_FAILURES);
        }
    }
    AxiomReport::aggregate("w-o-pair", parts)
}

/// The finite subpair of constant fields `span{∂_i}` and polynomials of
/// degree ≤ 1. Both brackets lower the total degree by one, so the
/// subspaces are closed.
pub fn wo_truncated_pair(n: usize, m: usize) -> PairStructure {
    let par = |k: usize| Parity::new(u8::from(k >= n));
    let name = |k: usize, p: &str| if k < n { format!("{p}x{}", k + 1) } else { format!("{p}t{}", k - n + 1) };
    let v1 = SuperSpace::new((0..n + m).map(|k| name(k, "d")).collect(), (0..n + m).map(par).collect()).expect("distinct labels");
    let mut l2 = vec!["1".to_string()];
    l2.extend((0..n + m).map(|k| name(k, "")));
    let mut p2 = vec![Parity::EVEN];
    p2.extend((0..n + m).map(par));
    let v2 = SuperSpace::new(l2, p2).expect("distinct labels");
    let field = |k: usize| SuperVectorField::single(k, SuperPolynomial::one(n, m));
    let func = |k: usize| match k {
        0 => SuperPolynomial::one(n, m),
        k if k <= n => SuperPolynomial::x(n, m, k - 1),
        k => SuperPolynomial::theta(n, m, k - n - 1),
    };
    let affine_coords = |f: &SuperPolynomial| {
        let mut out = Vec::new();
        for (mono, c) in f.terms() {
            let k = match (mono.exps.iter().position(|&e| e > 0), mono.odd) {
                (None, 0) => 0,
                (Some(i), 0) => 1 + i,
                (None, o) => 1 + n + o.trailing_zeros() as usize,
                _ => unreachable!("degree ≤ 1"),
            };
            out.push((k, c.clone()));
        }
        out.sort_by_key(|e| e.0);
        out
    };
    PairStructure::from_fn(v1, v2, Kind::Isotopic, |side, s, a, b| match side {
        Side::First => {
            let z = fields_bracket(&field(a), &field(b), &func(s)).expect("homogeneous basis");
            z.coeffs()
                .iter()
                .enumerate()
                .filter_map(|(k, c)| {
                    debug_assert!(c.degree() == 0);
                    c.terms().next().map(|(_, v)| (k, v.clone()))
                })
                .collect()
        }
        Side::Second => affine_coords(&functions_bracket(&func(a), &func(b), &field(s)).expect("homogeneous basis")),
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    n: usize,
    m: usize,
    text: String,
}

impl Serialize for SuperPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire { n: self.n(), m: self.m(), text: self.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SuperPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        parse_poly(&w.text, w.n, w.m).map_err(serde::de::Error::custom)
    }
}

impl Serialize for SuperVectorField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire { n: self.n(), m: self.m(), text: self.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SuperVectorField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        parse_field(&w.text, w.n, w.m).map_err(serde::de::Error::custom)
    }
}
