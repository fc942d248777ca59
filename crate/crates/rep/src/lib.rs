//! Representations of SU(3)_q and their braiding.
//!
//! Builds the fundamental module `E` and its dual `F` from explicit
//! matrices, tensor products via the comultiplication, the R-matrices for
//! all colour pairs over `{E, F}` (cup/cap bent composites), the full twist
//! on `E (x) E (x) F`, and from its eigenspaces the 15-dimensional module
//! `M` together with the induced 225x225 braiding `R_MM`.
//!
//! Everything is generic over the scalar, so the whole construction also
//! runs at a random rational point as a fast wiring check before the
//! symbolic computation.

mod braid;
mod module;
mod submodule;
mod weights;

pub use braid::{r_matrix_ee, r_matrix_ee_inv, solve_cups_caps, Color, ColorWord, CrossingSet, CupCapSet};
pub use module::{fundamental_e, Generator, RelationReport, RepModule, GENERATORS};
pub use submodule::{
    cleared_crossings, cleared_p_columns, cleared_proj_rows, induced_braiding,
    induced_braiding_cleared, load_mat_with_hash, save_mat_with_hash,
    split_by_full_twist, window_schedule, RmmPair, SubmoduleData, BLOCK_SWAP_WORD,
};
pub use weights::{
    blocked_eigenspace, blocked_eigenspace_cleared, classical_dim,
    highest_weight_vectors, highest_weight_vectors_cleared, preserves_weights, qdim,
    weight_blocks, WeightType,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("module has no weight data")]
    MissingWeights,
    #[error("negative weight label ({0}, {1})")]
    NegativeWeight(i64, i64),
    #[error("cup space has dimension {0}, expected 1 (broken representation upstream)")]
    BadCupSpace(usize),
    #[error("full-twist eigenspace dimensions {0:?}, expected [15, 6, 6]")]
    BadTwistSplit(Vec<usize>),
    #[error("linear algebra failure: {0}")]
    Linalg(#[from] su3q_linalg::LinalgError),
}
