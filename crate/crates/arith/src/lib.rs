//! Exact scalar arithmetic for the SU(3)_q invariant pipeline.
//!
//! Everything is expressed in the variable `a`, with `s = a^2` and `q = a^4`
//! as derived aliases.  The crate provides:
//!
//! - [`LaurentPoly`]: Laurent polynomials in `a` with arbitrary-precision
//!   integer coefficients, the value type of the invariants;
//! - [`ScalarField`]: reduced ratios of Laurent polynomials, the field over
//!   which all linear algebra runs;
//! - [`HSeries`]: truncated power series in `h` (with `a = e^{h/4}`) over
//!   exact rationals, used for the Vassiliev-degree analysis;
//! - quantum integers `[n] = (s^n - s^-n)/(s - s^-1)`;
//! - comparison of polynomials up to a unit monomial `±a^k`.

mod field;
mod hseries;
mod laurent;
mod scalar;

pub use field::ScalarField;
pub use hseries::HSeries;
pub use laurent::{quantum_integer, LaurentPoly};
pub use scalar::{NumCtx, Rat, Scalar, ScalarCtx, SymCtx};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quantum integer index must be positive, got {0}")]
    NonPositiveQuantumInteger(i64),
    #[error("bad polynomial text at line {line}: {msg}")]
    BadPolyText { line: usize, msg: String },
}
