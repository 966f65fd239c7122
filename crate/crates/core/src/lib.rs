//! Exact computer algebra for graded isotopic pairs and super-Jordan pairs.
//!
//! Pairs are stored as structure-constant tensors over rational numbers and
//! every defining identity is checked exhaustively on homogeneous basis
//! tuples. The crate also builds the associated polarized Lie superalgebras
//! and triple systems, and representations via word-module quotients.

pub mod constructions;
pub mod exactlin;
pub mod pairs;
pub mod polyfields;
pub mod reps;
pub mod rng;
pub mod suite;
pub mod supercore;
pub mod tkk;

pub use exactlin::{LinError, Matrix, SVec, Scalar};
