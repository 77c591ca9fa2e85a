//! Exact linear algebra: matrices over integers, rationals and prime fields,
//! block structure, powers, rank and Jordan type.

pub mod blocks;
pub mod jordan;
pub mod matrix;
pub mod rank;
pub mod scalar;

pub use blocks::{block, window, BlockStructure};
pub use jordan::{jordan_type, power_ranks};
pub use matrix::{exact_rank, Matrix};
pub use scalar::{Domain, ExactScalar, Field, FiniteField, Fp, Scalar};
