//! Combinatorics of admissible trivalent graphs in punctured surfaces.
//!
//! Admissible graphs are oriented so every vertex is a sink or a source,
//! with hexagonal faces away from the punctures.  This crate provides the
//! Euler face-defect enumeration that pins down which face profiles can
//! occur, the construction of admissible graphs in the 3-punctured sphere
//! as quotients of the honeycomb by a triangular lattice and an order-3
//! rotation, and exact symmetry checks on the resulting rotation systems.

mod faces;
mod io;
mod lattice;
mod map;
mod sym;

pub use faces::{enumerate_face_profiles, face_defect, FaceProfile};
pub use io::{dump_graph, parse_graph};
pub use lattice::{lattice_quotient_graph, torus_honeycomb, LatticeSpec};
pub use map::{Polarity, TrivalentGraph};
pub use sym::{check_cyclic_symmetry, check_turnover_symmetry};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("face size must be even and positive, got {0}")]
    BadFaceSize(i64),
    #[error("degenerate lattice spec: {0}")]
    DegenerateSpec(String),
    #[error("not a valid rotation system: {0}")]
    BadMap(String),
    #[error("bad graph text at line {line}: {msg}")]
    BadFormat { line: usize, msg: String },
}
