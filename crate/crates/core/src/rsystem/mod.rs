//! R-systems `(P, Q, ψ)` over finite-dimensional rings: balanced tensor
//! powers, rank-one operators, condition (FS), `Δ`, compatible ideals and
//! covariant representations into graded algebras.

mod operators;
mod rep;
mod ring;
mod system;

pub use operators::{
    canonical_max_ideal, check_adjoint, check_fs, check_fs_full, compatible_ideal_check,
    delta_as_finite_rank, delta_gamma, delta_gamma_adjoint, delta_preimage_finite_rank,
    finite_rank_space, grid_combination, ker_delta, lift, rank_one, render, theta_grid,
    CanonicalIdeal, FiniteRankOp, FsWitness, OperatorMatrix,
};
pub use rep::{
    check_covariant_rep, check_cp_invariant, check_pi_null_sums, pi_map, toeplitz_graded_span,
    CovariantRep,
};
pub use ring::{Bimodule, FiniteRing, TensorProduct};
pub use system::{
    check_system, rep_tensor_power, tensor_power_system, tensor_tower, tower_reps, RSystem,
    TensorLevel, DEFAULT_TENSOR_CAP,
};

use thiserror::Error;

use crate::exactlin::LinalgError;
use crate::graded::GradedError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RSystemError {
    #[error("free tensor product needs {needed} basis vectors, cap is {cap}")]
    Capacity { needed: usize, cap: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
