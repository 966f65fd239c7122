//! Concrete pair builders: matrix envelopes, the classical series,
//! centralizer subpairs, magnetic pairs and `(g, S²(g))`.

mod centralizer;
mod envelope;
mod lie;
mod series;
mod sym2;

use thiserror::Error;

use crate::exactlin::LinError;

pub use centralizer::centralizer_subpair;
pub use envelope::{envelope_pair, perturb, random_closed_subpair, EnvelopePair, MatrixSpan, SuperMatrixSpace};
pub use lie::{check_equivariance, gk_pair, killing_form, magnetic_pair, LieData};
pub use series::{
    isoquaternionic_pair, osq_literal_dims, series_gl, series_osp, series_osq, series_osq_literal, series_q, Transpose,
};
pub use sym2::{sym2_action, sym2_invariants, sym2_pair, QuotientPair, Sym2Reading, Sym2Result};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    /// A bracket of basis elements leaves its span. `triple` is
    /// `(left, right, sub)`; `dims` are the two spans' `"e|o"` dimensions.
    #[error("V{side} is not closed: [{}, {}]_{} = {offending} leaves the span (dims {} and {})", triple[0], triple[1], triple[2], dims[0], dims[1])]
    NotClosed { side: u8, triple: Box<[String; 3]>, offending: String, dims: Box<[String; 2]> },
    #[error("basis element {index} of V{side} is not homogeneous")]
    NotHomogeneous { side: u8, index: usize },
    #[error("invalid Lie algebra data: {0}")]
    BadLieData(String),
    #[error("invalid bilinear form: {0}")]
    BadForm(String),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Lin(#[from] LinError),
}
