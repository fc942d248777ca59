//! The scalar abstraction the linear algebra is generic over.
//!
//! Two instances are used: [`ScalarField`] for the exact symbolic run, and
//! [`Rat`] (rationals, with `a` specialised to a random rational point) for
//! the fast probabilistic wiring checks that precede long symbolic
//! computations.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{LaurentPoly, ScalarField};

pub type Rat = BigRational;

/// Field operations plus the hooks elimination needs.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }

    /// Cost estimate used to pick small pivots during elimination.
    fn pivot_weight(&self) -> u64 {
        1
    }
}

impl Scalar for ScalarField {
    fn zero() -> Self {
        ScalarField::zero()
    }
    fn one() -> Self {
        ScalarField::one()
    }
    fn is_zero(&self) -> bool {
        ScalarField::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.invert().ok()
    }
    fn pivot_weight(&self) -> u64 {
        self.size()
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if <Rat as Zero>::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Injection of Laurent-polynomial constants into a scalar type.
///
/// The symbolic context keeps the polynomial; the numeric context evaluates
/// it at a fixed rational point `a0`.
pub trait ScalarCtx<S: Scalar> {
    fn lp(&self, p: &LaurentPoly) -> S;

    fn int(&self, n: i64) -> S {
        self.lp(&LaurentPoly::int(n))
    }

    /// `a^k`.
    fn a_pow(&self, k: i64) -> S {
        self.lp(&LaurentPoly::a_pow(k))
    }

    /// `s^k`.
    fn s_pow(&self, k: i64) -> S {
        self.lp(&LaurentPoly::s_pow(k))
    }
}

/// Symbolic context: scalars are rational functions of `a`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymCtx;

impl ScalarCtx<ScalarField> for SymCtx {
    fn lp(&self, p: &LaurentPoly) -> ScalarField {
        ScalarField::from_poly(p.clone())
    }
}

/// Numeric context: scalars are exact rationals, `a` fixed at `a0`.
#[derive(Clone, Debug)]
pub struct NumCtx {
    pub a0: Rat,
}

impl NumCtx {
    pub fn new(a0: Rat) -> Self {
        NumCtx { a0 }
    }
}

impl ScalarCtx<Rat> for NumCtx {
    fn lp(&self, p: &LaurentPoly) -> Rat {
        p.eval(&self.a0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn contexts_commute_with_arithmetic() {
        let ctx = NumCtx::new(Rat::new(BigInt::from(5), BigInt::from(3)));
        let p = LaurentPoly::from_pairs([(2, 3), (-1, 1)]);
        let q = LaurentPoly::from_pairs([(4, -2), (0, 7)]);
        let lhs = ctx.lp(&(&p * &q));
        let rhs = Scalar::mul(&ctx.lp(&p), &ctx.lp(&q));
        assert_eq!(lhs, rhs);
    }
}
