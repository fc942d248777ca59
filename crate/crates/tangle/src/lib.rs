//! 2-tangle evaluation over a chosen colour module, and the mutant
//! difference pipeline.
//!
//! A 2-tangle is a 3-strand braid with one string closed off.  Closing a
//! string is quantum-trace closure: act by the enhancement `T` on the
//! closed leg, then take the partial trace.  Evaluation is lazy: tangles
//! act on designated vectors (the highest-weight basis of the tensor
//! square), which is all the mutant difference needs.

mod dsl;
mod engine;
mod mutant;

pub use dsl::{parse_tangle, ParseError, TanglePairing, TangleProgram};
pub use engine::{build_color_m_engine, ColorEngine, SparseScalarMat};
pub use mutant::{
    big_factor_46, conway_tangle_f, conway_tangle_g, golden_difference_total,
    golden_difference_total_factored_form, golden_t12, golden_t12_factored_form,
    golden_t31, golden_t31_factored_form, multiplicity_free_difference, mutate,
    total_difference, type_contribution, vanishing_factor_product, vassiliev_check,
    DifferenceReport, VassilievVerdict, TANGLE_F_TEXT, TANGLE_G_TEXT,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TangleError {
    #[error("{0}")]
    Parse(ParseError),
    #[error("evaluation input has length {got}, expected {want}")]
    BadInputLength { got: usize, want: usize },
    #[error("tangle image left the highest-weight span (broken intertwiner)")]
    NotInSpan,
    #[error("linear algebra failure: {0}")]
    Linalg(#[from] su3q_linalg::LinalgError),
}
