//! Combinatorics and exact-arithmetic verification of the irreducible
//! components of `Z = n \ O(d)`, the complement of the Richardson orbit in the
//! nilradical `n` of the parabolic `P(d) ⊂ GL_n`.
//!
//! The components are indexed by `Λ(d)`; each `Z_ij` is cut out by one rank
//! condition on a principal window of the matrix and corresponds to a tableau
//! `T(i,j)` obtained from `T(d)` by a minimal movement.

pub mod composition;
pub mod diagram;
pub mod error;
pub mod io;
pub mod linalg;
pub mod partition;
pub mod sample;
pub mod strata;
pub mod tableau;
pub mod verify;
pub mod witness;

pub use composition::{d_geq, d_less, gamma_set, kappa, lambda_of, lambda_set, DimensionVector, Pair, PairSet};
pub use diagram::{
    chain_stats, chains_with_at_least, complete_diagram, diagram_class, phi, r_rank, richardson_element, subdiagram,
    ChainStats, LineDiagram,
};
pub use error::{Error, Result};
pub use io::{EntryScalar, MatrixDoc};
pub use linalg::{exact_rank, jordan_type, BlockStructure, Domain, ExactScalar, FiniteField, Fp, Matrix, Scalar};
pub use partition::{dominance_leq, Partition};
pub use strata::{
    decompose, defect_profile, in_nilradical, in_z, in_zk, is_richardson, Decomposition, RankTable, Strata, StratumSpec,
};
pub use tableau::{
    boxes_between, chains_of, codim, enumerate_tableaux, minimal_movement, s_row, t_of_d, Movement, PartitionChain,
    YoungTableau,
};
pub use verify::{ExperimentConfig, Mode, VerificationReport};
pub use witness::{witness, witness_with, Witness, WitnessConfig, WitnessMethod};

pub type Int = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
/// Default large prime for genericity sampling.
pub type F32003 = Fp<32003>;

pub type IntMatrix = Matrix<Int>;
pub type RationalMatrix = Matrix<Rational>;
pub type F2Matrix = Matrix<F2>;
pub type F32003Matrix = Matrix<F32003>;

/// Default prime for sampling over `F_p`.
pub const DEFAULT_PRIME: u64 = 32003;
