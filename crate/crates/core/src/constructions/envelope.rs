//! Pairs realized inside a matrix superalgebra `Mat(n|m)`.

use crate::exactlin::{span_basis, Matrix, SVec, Scalar, SpanCoords};
use crate::pairs::{Kind, PairStructure, Side};
use crate::rng::Lcg;
use crate::supercore::{sign_a_bit, Parity, SuperSpace};

use super::ConstructionError;

/// `(n+m)×(n+m)` matrices in block form `(A B; C D)`; entry `(i, j)` has
/// parity `p(i) + p(j)` where the first `n` indices are even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuperMatrixSpace {
    pub n: usize,
    pub m: usize,
}

impl SuperMatrixSpace {
    pub fn new(n: usize, m: usize) -> Self {
        SuperMatrixSpace { n, m }
    }

    pub fn size(&self) -> usize {
        self.n + self.m
    }

    pub fn index_parity(&self, i: usize) -> Parity {
        Parity::new(u8::from(i >= self.n))
    }

    pub fn entry_parity(&self, i: usize, j: usize) -> Parity {
        self.index_parity(i) + self.index_parity(j)
    }

    /// Parity of a matrix, `None` if it mixes parities. The zero matrix is even.
    pub fn parity_of(&self, a: &Matrix) -> Option<Parity> {
        let mut seen: Option<Parity> = None;
        for (i, j, _) in a.nonzeros() {
            let p = self.entry_parity(i, j);
            match seen {
                Some(q) if q != p => return None,
                _ => seen = Some(p),
            }
        }
        Some(seen.unwrap_or(Parity::EVEN))
    }

    /// Splits a matrix into its even and odd parts.
    pub fn split(&self, a: &Matrix) -> (Matrix, Matrix) {
        let s = self.size();
        let (mut e, mut o) = (Matrix::zeros(s, s), Matrix::zeros(s, s));
        for (i, j, c) in a.nonzeros() {
            if self.entry_parity(i, j).is_odd() {
                o[(i, j)] = c;
            } else {
                e[(i, j)] = c;
            }
        }
        (e, o)
    }

    pub fn unit_label(&self, i: usize, j: usize) -> String {
        if self.size() < 10 {
            format!("E{}{}", i + 1, j + 1)
        } else {
            format!("E{}_{}", i + 1, j + 1)
        }
    }

    /// Label built from the nonzero entries, e.g. `E11+E33` or `E12-2E21`.
    pub fn label_of(&self, a: &Matrix) -> String {
        let mut s = String::new();
        for (k, (i, j, c)) in a.nonzeros().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k > 0 || neg {
                s.push(if neg { '-' } else { '+' });
            }
            if !abs.is_one() {
                s.push_str(&abs.to_string());
            }
            s.push_str(&self.unit_label(i, j));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Every unit matrix `E_ij`, row-major.
    pub fn full_basis(&self) -> Vec<Matrix> {
        let s = self.size();
        (0..s).flat_map(|i| (0..s).map(move |j| Matrix::unit(s, i, j))).collect()
    }

    fn flat(&self, a: &Matrix) -> Vec<Scalar> {
        a.as_slice().to_vec()
    }

    fn unflat(&self, v: Vec<Scalar>) -> Matrix {
        let s = self.size();
        Matrix::from_vec(s, s, v).expect("flat length matches")
    }

    /// Canonical homogeneous basis of the span of `gens`: even part first,
    /// then odd, each in reduced echelon form.
    pub fn homogeneous_span(&self, gens: &[Matrix]) -> Vec<Matrix> {
        let (mut ev, mut od) = (Vec::new(), Vec::new());
        for g in gens {
            let (e, o) = self.split(g);
            ev.push(self.flat(&e));
            od.push(self.flat(&o));
        }
        let amb = self.size() * self.size();
        let mut out: Vec<Matrix> =
            span_basis(&ev, amb).expect("lengths match").into_iter().map(|v| self.unflat(v)).collect();
        out.extend(span_basis(&od, amb).expect("lengths match").into_iter().map(|v| self.unflat(v)));
        out
    }
}

/// An ordered homogeneous basis of a subspace of `Mat(n|m)`, with labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSpan {
    pub basis: Vec<Matrix>,
    pub labels: Vec<String>,
}

impl MatrixSpan {
    /// Labels are derived from the matrices' entries.
    pub fn new(space: &SuperMatrixSpace, basis: Vec<Matrix>) -> Self {
        let labels = basis.iter().map(|b| space.label_of(b)).collect();
        MatrixSpan { basis, labels }
    }

    pub fn with_labels(basis: Vec<Matrix>, labels: Vec<String>) -> Self {
        MatrixSpan { basis, labels }
    }

    pub fn full(space: &SuperMatrixSpace) -> Self {
        let s = space.size();
        let labels = (0..s).flat_map(|i| (0..s).map(move |j| (i, j))).map(|(i, j)| space.unit_label(i, j)).collect();
        MatrixSpan { basis: space.full_basis(), labels }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// A pair together with the matrices realizing its bases.
#[derive(Debug, Clone)]
pub struct EnvelopePair {
    pub space: SuperMatrixSpace,
    pub spans: [MatrixSpan; 2],
    pub pair: PairStructure,
    /// Transpose convention used to cut the spans, for the series builders.
    pub transpose: Option<super::Transpose>,
    coords: [SpanCoords; 2],
}

impl EnvelopePair {
    pub fn span(&self, side: Side) -> &MatrixSpan {
        &self.spans[side.index() as usize]
    }

    /// The matrix of an element given by coordinates.
    pub fn element(&self, side: Side, coords: &[Scalar]) -> Matrix {
        let s = self.space.size();
        let mut m = Matrix::zeros(s, s);
        for (c, b) in coords.iter().zip(&self.span(side).basis) {
            if !c.is_zero() {
                m.add_scaled(c, b);
            }
        }
        m
    }

    /// Coordinates of a matrix in the span, or `None` if it lies outside.
    pub fn coords_of(&self, side: Side, a: &Matrix) -> Option<Vec<Scalar>> {
        self.coords[side.index() as usize].coords(a.as_slice()).expect("square of the right size")
    }
}

fn model(space: &SuperMatrixSpace, kind: Kind, x: &Matrix, u: &Matrix, y: &Matrix) -> Matrix {
    let p = |a: &Matrix| space.parity_of(a).unwrap_or(Parity::EVEN);
    let bit = sign_a_bit(p(x), p(u), p(y));
    // XUY - A·YUX for isocommutators, XUY + A·YUX for Jordan products.
    let neg = (bit == 1) != (kind == Kind::Isotopic);
    let sign = Scalar::sign(u8::from(neg));
    let mut out = x.mul(u).mul(y);
    out.add_scaled(&sign, &y.mul(u).mul(x));
    out
}

/// Structure constants of the envelope model on the given spans, failing
/// with `NotClosed` as soon as a bracket leaves its span.
pub fn envelope_pair(
    space: &SuperMatrixSpace,
    s1: MatrixSpan,
    s2: MatrixSpan,
    kind: Kind,
) -> Result<EnvelopePair, ConstructionError> {
    let amb = space.size() * space.size();
    let mut parities: [Vec<Parity>; 2] = [Vec::new(), Vec::new()];
    for (k, span) in [&s1, &s2].into_iter().enumerate() {
        for (i, b) in span.basis.iter().enumerate() {
            if b.rows() != space.size() || !b.is_square() {
                return Err(ConstructionError::BadInput(format!("basis matrix {i} of V{} has the wrong shape", k + 1)));
            }
            parities[k].push(space.parity_of(b).ok_or(ConstructionError::NotHomogeneous { side: k as u8 + 1, index: i })?);
        }
    }
    let flat = |s: &MatrixSpan| s.basis.iter().map(|b| b.as_slice().to_vec()).collect::<Vec<_>>();
    let coords = [SpanCoords::new(&flat(&s1), amb)?, SpanCoords::new(&flat(&s2), amb)?];
    let [p1, p2] = parities;
    let v1 = SuperSpace::new(s1.labels.clone(), p1).map_err(|e| ConstructionError::BadInput(e.to_string()))?;
    let v2 = SuperSpace::new(s2.labels.clone(), p2).map_err(|e| ConstructionError::BadInput(e.to_string()))?;
    let dims = [v1.dims_string(), v2.dims_string()];
    let spans = [s1, s2];
    let mut pair = PairStructure::zero(v1, v2, kind);
    for side in [Side::First, Side::Second] {
        let (own, other) = (&spans[side.index() as usize], &spans[side.other().index() as usize]);
        for (si, sub) in other.basis.iter().enumerate() {
            for (a, x) in own.basis.iter().enumerate() {
                for (b, y) in own.basis.iter().enumerate() {
                    let val = model(space, kind, x, sub, y);
                    if val.is_zero() {
                        continue;
                    }
                    let c = coords[side.index() as usize].coords(val.as_slice())?.ok_or_else(|| {
                        ConstructionError::NotClosed {
                            side: side.index() + 1,
                            triple: Box::new([own.labels[a].clone(), own.labels[b].clone(), other.labels[si].clone()]),
                            offending: space.label_of(&val),
                            dims: Box::new(dims.clone()),
                        }
                    })?;
                    let v: SVec = c.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                    pair.set(side, si, a, b, v).expect("indices in range");
                }
            }
        }
    }
    Ok(EnvelopePair { space: *space, spans, pair, transpose: None, coords })
}

fn random_homogeneous(space: &SuperMatrixSpace, rng: &mut Lcg) -> Matrix {
    let s = space.size();
    let parity = Parity::new(rng.below(2) as u8);
    let parity = if space.n == 0 || space.m == 0 { Parity::EVEN } else { parity };
    loop {
        let mut a = Matrix::zeros(s, s);
        for i in 0..s {
            for j in 0..s {
                if space.entry_parity(i, j) == parity && rng.chance(1, 2) {
                    a[(i, j)] = rng.coef();
                }
            }
        }
        if !a.is_zero() {
            return a;
        }
    }
}

/// A random pair of subspaces of `Mat(n|m)` closed under the envelope
/// brackets: one or two random homogeneous generators per side, then bracket
/// images adjoined alternately until nothing new appears.
pub fn random_closed_subpair(space: &SuperMatrixSpace, kind: Kind, rng: &mut Lcg) -> EnvelopePair {
    let mut gens: [Vec<Matrix>; 2] = [Vec::new(), Vec::new()];
    for g in gens.iter_mut() {
        let k = 1 + rng.below(2);
        g.extend((0..k).map(|_| random_homogeneous(space, rng)));
    }
    let mut bases = [space.homogeneous_span(&gens[0]), space.homogeneous_span(&gens[1])];
    loop {
        let before = (bases[0].len(), bases[1].len());
        for side in 0..2 {
            let mut all = bases[side].clone();
            for u in &bases[1 - side] {
                for x in &bases[side] {
                    for y in &bases[side] {
                        all.push(model(space, kind, x, u, y));
                    }
                }
            }
            bases[side] = space.homogeneous_span(&all);
        }
        if (bases[0].len(), bases[1].len()) == before {
            break;
        }
    }
    let [b1, b2] = bases;
    let label = |prefix: &str, n: usize| (1..=n).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>();
    let (l1, l2) = (label("x", b1.len()), label("u", b2.len()));
    envelope_pair(space, MatrixSpan::with_labels(b1, l1), MatrixSpan::with_labels(b2, l2), kind)
        .expect("bracket-closed spans give a closed pair")
}

/// Adds random even changes to one to three structure constants, each
/// mirrored onto its graded-(anti)symmetry partner so that only the deeper
/// identities can detect it. Returns `None` when no output of the required
/// parity exists anywhere.
pub fn perturb(p: &PairStructure, rng: &mut Lcg) -> Option<PairStructure> {
    let mut slots = Vec::new();
    for side in [Side::First, Side::Second] {
        let (sp, other) = (p.space(side), p.space(side.other()));
        for s in 0..other.dim() {
            for a in 0..sp.dim() {
                for b in a..sp.dim() {
                    let want = other.parity(s) + sp.parity(a) + sp.parity(b);
                    let outs: Vec<usize> = (0..sp.dim()).filter(|&k| sp.parity(k) == want).collect();
                    if outs.is_empty() {
                        continue;
                    }
                    // Partner sign: m(s,b,a) = ∓A·m(s,a,b).
                    let bit = sign_a_bit(sp.parity(a), other.parity(s), sp.parity(b));
                    let partner_neg = (bit == 1) != (p.kind() == Kind::Isotopic);
                    if a == b && partner_neg {
                        continue;
                    }
                    slots.push((side, s, a, b, outs, partner_neg));
                }
            }
        }
    }
    if slots.is_empty() {
        return None;
    }
    let mut q = p.clone();
    // Distinct (slot, output) picks, so no change can cancel another.
    let combos: usize = slots.iter().map(|t| t.4.len()).sum();
    let count = (1 + rng.below(3)).min(combos);
    let mut picked = Vec::new();
    while picked.len() < count {
        let i = rng.below(slots.len());
        let k = slots[i].4[rng.below(slots[i].4.len())];
        if picked.contains(&(i, k)) {
            continue;
        }
        picked.push((i, k));
        let (side, s, a, b, _, partner_neg) = slots[i].clone();
        let c = rng.nonzero_coef();
        let mut add = |a: usize, b: usize, c: Scalar| {
            let mut v = q.m(side, s, a, b).clone();
            v.push((k, c));
            q.set(side, s, a, b, v).expect("valid slot");
        };
        add(a, b, c.clone());
        if a != b {
            add(b, a, if partner_neg { -&c } else { c });
        }
    }
    Some(q)
}
