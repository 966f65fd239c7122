use crate::exactlin::{kernel, Matrix, Scalar};
use crate::pairs::Side;

use super::envelope::{envelope_pair, EnvelopePair, MatrixSpan};
use super::ConstructionError;

fn kernel_of_map(ep: &EnvelopePair, side: Side, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Matrix>, ConstructionError> {
    let p = &ep.pair;
    let d = p.space(side).dim();
    // Column j holds [a, e_j]_b.
    let mut m = Matrix::zeros(d, d);
    for j in 0..d {
        let mut e = vec![Scalar::zero(); d];
        e[j] = Scalar::one();
        let v = p.bracket(side, b, a, &e).map_err(|e| ConstructionError::BadInput(e.to_string()))?;
        for (i, c) in v.into_iter().enumerate() {
            m[(i, j)] = c;
        }
    }
    let gens: Vec<Matrix> = kernel(&m).iter().map(|v| ep.element(side, v)).collect();
    Ok(ep.space.homogeneous_span(&gens))
}

/// `V1† = {X : [a, X]_b = 0}` and `V2† = {Y : [b, Y]_a = 0}` for homogeneous
/// `a ∈ V1`, `b ∈ V2`, with closure of the result checked.
pub fn centralizer_subpair(ep: &EnvelopePair, a: &[Scalar], b: &[Scalar]) -> Result<EnvelopePair, ConstructionError> {
    let p = &ep.pair;
    if p.v1().vector_parity(a).is_none() || p.v2().vector_parity(b).is_none() {
        return Err(ConstructionError::BadInput("a and b must be homogeneous elements of V1 and V2".into()));
    }
    let k1 = kernel_of_map(ep, Side::First, a, b)?;
    let k2 = kernel_of_map(ep, Side::Second, b, a)?;
    envelope_pair(&ep.space, MatrixSpan::new(&ep.space, k1), MatrixSpan::new(&ep.space, k2), p.kind())
}
