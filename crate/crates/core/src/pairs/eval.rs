//! Evaluation of identity templates on pairs.
//!
//! The exhaustive checker binds each letter to a basis vector and walks the
//! template directly against the structure constants. Brackets whose operands
//! are all letters borrow their output from the tensor, so the common
//! identities run without allocation per tuple.

use rayon::prelude::*;

use super::checks::CheckOptions;
use super::report::{AxiomReport, Failure, Residual};
use super::{PairStructure, Side};
use crate::exactlin::sparse::{self, Accumulator};
use crate::exactlin::{SVec, Scalar};
use crate::supercore::{Expr, Identity, IdentityTemplate, Letter, TemplateError, TermType};

/// Anything that can evaluate pair brackets on its own elements. Sides are
/// 0 and 1; `product(side, sub, left, right)` is `[left, right]_sub` with
/// `left, right` in `side`.
pub trait ElementAlgebra {
    type Elem: Clone;
    fn product(&self, side: u8, sub: &Self::Elem, left: &Self::Elem, right: &Self::Elem) -> Self::Elem;
    fn zero(&self, side: u8) -> Self::Elem;
    fn add_scaled(&self, acc: &mut Self::Elem, c: &Scalar, e: &Self::Elem);
}

impl ElementAlgebra for PairStructure {
    type Elem = SVec;

    fn product(&self, side: u8, sub: &SVec, left: &SVec, right: &SVec) -> SVec {
        self.bracket_sparse(Side::from_index(side), sub, left, right)
    }

    fn zero(&self, _side: u8) -> SVec {
        Vec::new()
    }

    fn add_scaled(&self, acc: &mut SVec, c: &Scalar, e: &SVec) {
        *acc = sparse::add_scaled(acc, c, e);
    }
}

fn eval_expr<A: ElementAlgebra>(alg: &A, e: &Expr, o: u8, binding: &[Option<A::Elem>; 5]) -> Result<A::Elem, TemplateError> {
    match e {
        Expr::Letter(l) => binding[l.index()]
            .clone()
            .ok_or_else(|| TemplateError::IllTyped(format!("letter {} is unbound", l.as_char()))),
        Expr::Bracket { left, right, sub, .. } => {
            let side = match left.typecheck()? {
                TermType::Element(s) => s ^ o,
                TermType::Operator => return Err(TemplateError::IllTyped(e.to_string())),
            };
            let (l, r, s) = (eval_expr(alg, left, o, binding)?, eval_expr(alg, right, o, binding)?, eval_expr(alg, sub, o, binding)?);
            Ok(alg.product(side, &s, &l, &r))
        }
        Expr::Word(_) => Err(TemplateError::IllTyped(e.to_string())),
    }
}

/// Evaluates an element-valued template on homogeneous elements. `pm` holds
/// the letter parities as a bitmask (bit `i` for letter `i` of `X Y Z U V`);
/// `orientation` 1 places `X, Y, Z` in the second space.
pub fn eval_on_elements<A: ElementAlgebra>(
    alg: &A,
    t: &IdentityTemplate,
    orientation: u8,
    pm: u8,
    binding: &[Option<A::Elem>; 5],
) -> Result<A::Elem, TemplateError> {
    let side = match t.typecheck()? {
        Some(TermType::Element(s)) => s ^ orientation,
        Some(TermType::Operator) => return Err(TemplateError::IllTyped(t.to_string())),
        None => 0,
    };
    let mut acc = alg.zero(side);
    for term in &t.terms {
        let v = eval_expr(alg, &term.expr, orientation, binding)?;
        alg.add_scaled(&mut acc, &term.signed_coef(pm), &v);
    }
    Ok(acc)
}

struct CTerm<'t> {
    coef: Scalar,
    monos: Vec<u8>,
    expr: &'t Expr,
}

struct Ctx<'p> {
    pair: &'p PairStructure,
    o: u8,
    idx: [usize; 5],
    units: [SVec; 5],
}

enum Val<'a> {
    Ref(&'a [(usize, Scalar)]),
    Own(SVec),
}

impl Val<'_> {
    fn as_slice(&self) -> &[(usize, Scalar)] {
        match self {
            Val::Ref(s) => s,
            Val::Own(v) => v,
        }
    }
}

fn side_of(e: &Expr, o: u8) -> Side {
    match e {
        Expr::Letter(l) => Side::from_index(l.home_side() ^ o),
        Expr::Bracket { left, .. } => side_of(left, o),
        Expr::Word(_) => unreachable!("operator words are rejected before evaluation"),
    }
}

fn value<'a>(ctx: &'a Ctx<'_>, e: &Expr) -> Val<'a> {
    match e {
        Expr::Letter(l) => Val::Ref(&ctx.units[l.index()]),
        Expr::Bracket { left, right, sub, .. } => {
            let side = side_of(left, ctx.o);
            if let (Expr::Letter(a), Expr::Letter(b), Expr::Letter(s)) = (&**left, &**right, &**sub) {
                return Val::Ref(ctx.pair.m(side, ctx.idx[s.index()], ctx.idx[a.index()], ctx.idx[b.index()]));
            }
            let mut acc = Accumulator::new(ctx.pair.space(side).dim());
            accumulate(ctx, e, &Scalar::one(), &mut acc);
            Val::Own(acc.take())
        }
        Expr::Word(_) => unreachable!("operator words are rejected before evaluation"),
    }
}

fn accumulate(ctx: &Ctx<'_>, e: &Expr, scale: &Scalar, acc: &mut Accumulator) {
    match e {
        Expr::Letter(l) => acc.add(ctx.idx[l.index()], scale),
        Expr::Bracket { left, right, sub, .. } => {
            let side = side_of(left, ctx.o);
            let (vl, vr, vs) = (value(ctx, left), value(ctx, right), value(ctx, sub));
            for (s, cs) in vs.as_slice() {
                let c1 = scale * cs;
                for (a, ca) in vl.as_slice() {
                    let c2 = &c1 * ca;
                    for (b, cb) in vr.as_slice() {
                        let c3 = &c2 * cb;
                        for (k, ck) in ctx.pair.m(side, *s, *a, *b) {
                            acc.add_mul(*k, &c3, ck);
                        }
                    }
                }
            }
        }
        Expr::Word(_) => unreachable!("operator words are rejected before evaluation"),
    }
}

/// Checks `identity` on every homogeneous basis tuple, in both orientations,
/// enumerating tuples lexicographically in `X Y Z U V` order.
pub fn check_identity(
    pair: &PairStructure,
    name: &str,
    identity: &Identity,
    form: Option<String>,
    opts: &CheckOptions,
) -> Result<AxiomReport, TemplateError> {
    let zero = identity.zero_form();
    let target_home = match zero.typecheck()? {
        Some(TermType::Element(s)) => s,
        Some(TermType::Operator) => return Err(TemplateError::IllTyped(identity.to_string())),
        None => 0,
    };
    let terms: Vec<CTerm> = zero
        .terms
        .iter()
        .map(|t| CTerm { coef: t.coef.clone(), monos: t.compiled_monomials(), expr: &t.expr })
        .collect();
    let letters: Vec<Letter> = Letter::ALL.into_iter().filter(|l| identity.letter_mask() & l.mask() != 0).collect();

    let mut report = AxiomReport::new(name, form);
    for o in 0..2u8 {
        let sides: Vec<Side> = letters.iter().map(|l| Side::from_index(l.home_side() ^ o)).collect();
        let dims: Vec<usize> = sides.iter().map(|s| pair.space(*s).dim()).collect();
        if dims.contains(&0) {
            continue;
        }
        let target = Side::from_index(target_home ^ o);
        let first = if letters.is_empty() { 1 } else { dims[0] };
        let chunks: Vec<AxiomReport> = (0..first)
            .into_par_iter()
            .map(|i0| {
                let mut local = AxiomReport::new(name, None);
                let mut ctx = Ctx {
                    pair,
                    o,
                    idx: [0; 5],
                    units: std::array::from_fn(|_| vec![(0, Scalar::one())]),
                };
                let mut acc = Accumulator::new(pair.space(target).dim());
                let mut cur = vec![0usize; letters.len()];
                if let Some(c) = cur.first_mut() {
                    *c = i0;
                }
                loop {
                    let mut pm = 0u8;
                    for (k, l) in letters.iter().enumerate() {
                        ctx.idx[l.index()] = cur[k];
                        ctx.units[l.index()][0].0 = cur[k];
                        pm |= pair.parity(sides[k], cur[k]).bit() << l.index();
                    }
                    for t in &terms {
                        let odd = t.monos.iter().filter(|&&m| pm & m == m).count() % 2 == 1;
                        let c = if odd { -&t.coef } else { t.coef.clone() };
                        accumulate(&ctx, t.expr, &c, &mut acc);
                    }
                    let residual = acc.take();
                    let failure = (!residual.is_empty()).then(|| Failure {
                        orientation: o,
                        tuple: cur.clone(),
                        labels: letters
                            .iter()
                            .zip(&cur)
                            .zip(&sides)
                            .map(|((l, &i), s)| format!("{}={}", l.as_char(), pair.space(*s).label(i)))
                            .collect(),
                        residual: Residual::vector(target.index(), &residual),
                    });
                    local.record(failure, opts.max_failures);
                    // Advance every position but the first.
                    let mut k = cur.len();
                    loop {
                        if k <= 1 {
                            return local;
                        }
                        k -= 1;
                        cur[k] += 1;
                        if cur[k] < dims[k] {
                            break;
                        }
                        cur[k] = 0;
                    }
                }
            })
            .collect();
        for c in chunks {
            report.absorb(c, opts.max_failures);
        }
    }
    Ok(report)
}
