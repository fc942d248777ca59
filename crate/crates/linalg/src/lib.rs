//! Dense and sparse exact linear algebra over the rational-function field.
//!
//! The dense side ([`Mat`]) is generic over [`su3q_arith::Scalar`], so the
//! same code runs both symbolically (over [`su3q_arith::ScalarField`]) and
//! numerically (over exact rationals at a fixed `a = a0`), which is how long
//! symbolic computations get a fast probabilistic wiring check.
//!
//! The sparse side works with denominator-cleared Laurent-polynomial
//! vectors shaped into tensor legs; that is the hot path for the big
//! R-matrix constructions and tangle evaluations.

mod elim;
mod io;
mod mat;
mod sparse;

pub use elim::{
    eigenspace, invert, nullspace, nullspace_cleared, partitioned_projection,
    rref, solve_in_span, Rref,
};
pub use io::{dump_poly_mat, dump_scalar_mat, fnv1a64, parse_poly_mat, parse_scalar_mat};
pub use mat::{kron, partial_trace_last, Mat};
pub use sparse::{
    clear_scalar_vec, insert_leg, leg_index, num_apply_pair, slice_leg,
    sparse_apply_pair, sparse_apply_single, PolyVec, SparsePolyMat,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("vector is not in the span of the given basis")]
    NotInSpan,
    #[error("matrix side {side} is not divisible by factor dimension {f}")]
    BadPartialTrace { side: usize, f: usize },
    #[error("bad matrix text at line {line}: {msg}")]
    BadFormat { line: usize, msg: String },
}
