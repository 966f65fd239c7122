//! The polarized superalgebra of an isotopic pair and the polarized Lie
//! supertriple system of a super-Jordan pair.
//!
//! Sign conventions: `V1` and `V2` sit in the superalgebra with their
//! parities shifted by one (written `|·|`). The generators of `g0` are
//! `D(x, u) = [x, u]`, acting by `y ↦ [x, y]_u` on `V1` and by
//! `v ↦ -(-1)^{|x||u|}[u, v]_x` on `V2`. Equivalently `[u, x]` acts on
//! `V2` as `[u, ·]_x`.

mod algebra;
mod lts;

use thiserror::Error;

use crate::pairs::Kind;

pub use algebra::{
    check_g0_equivariance, check_superalgebra, d_operator, superalgebra_from_pair, superalgebra_from_pair_unchecked,
    superalgebra_with_companion,
    G0Origin, Part, PolarizedSuperalgebra,
};
pub use lts::{check_lts_axioms, lts_from_pair, PolarizedLTS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TkkError {
    #[error("expected a {expected:?} pair, found {found:?}")]
    WrongKind { expected: Kind, found: Kind },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}
