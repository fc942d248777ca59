//! The rational-function field built on [`LaurentPoly`].
//!
//! Elements are stored reduced: numerator and denominator have polynomial
//! gcd 1, no common integer content, the denominator has lowest exponent 0
//! and positive leading coefficient.  Structural equality is then equality
//! in the field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{ArithError, LaurentPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarField {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl ScalarField {
    pub fn zero() -> Self {
        ScalarField { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        ScalarField { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        ScalarField { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::int(n))
    }

    /// `num / den`, reduced.  Panics on a zero denominator; use
    /// [`ScalarField::invert`] for the checked route.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::reduced(num, den)
    }

    fn reduced(num: LaurentPoly, mut den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // Push all unit monomials into the numerator.
        let mut num = num.shift(-den.min_exp());
        den = den.shift(-den.min_exp());
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
        // Remove shared integer content; fix the denominator sign.
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num
                .exact_div(&LaurentPoly::monomial(0, c.clone()))
                .expect("content divides");
            den = den
                .exact_div(&LaurentPoly::monomial(0, c))
                .expect("content divides");
        }
        if den.leading_coeff().is_negative() {
            num = -&num;
            den = -&den;
        }
        ScalarField { num, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the element is a Laurent polynomial (denominator 1).
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// True when the element is `±a^k`.
    pub fn as_unit_monomial(&self) -> Option<(i8, i64)> {
        self.as_poly().and_then(|p| p.as_unit_monomial())
    }

    pub fn invert(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Total term span of numerator and denominator; used as a pivot
    /// weight during elimination.
    pub fn size(&self) -> u64 {
        (self.num.span() + self.den.span()) as u64 + self.num.terms().count() as u64
    }
}

impl Add for &ScalarField {
    type Output = ScalarField;
    fn add(self, rhs: &ScalarField) -> ScalarField {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        ScalarField::reduced(num, den)
    }
}

impl Sub for &ScalarField {
    type Output = ScalarField;
    fn sub(self, rhs: &ScalarField) -> ScalarField {
        self + &(-rhs)
    }
}

impl Neg for &ScalarField {
    type Output = ScalarField;
    fn neg(self) -> ScalarField {
        ScalarField { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &ScalarField {
    type Output = ScalarField;
    fn mul(self, rhs: &ScalarField) -> ScalarField {
        if self.is_zero() || rhs.is_zero() {
            return ScalarField::zero();
        }
        // Cross-reduce first to keep the gcd inputs small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        ScalarField::reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl From<LaurentPoly> for ScalarField {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.pretty())
        } else {
            write!(f, "({}) / ({})", self.num.pretty(), self.den.pretty())
        }
    }
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Clear denominators of a list of field elements: returns polynomial
/// numerators against a single common denominator.
#[allow(dead_code)]
pub(crate) fn common_denominator(xs: &[ScalarField]) -> (Vec<LaurentPoly>, LaurentPoly) {
    let mut den = LaurentPoly::one();
    for x in xs {
        let g = den.gcd(x.den());
        den = &den * &x.den().exact_div(&g).expect("gcd divides");
    }
    let nums = xs
        .iter()
        .map(|x| {
            let cof = den.exact_div(x.den()).expect("lcm divides");
            &cof * x.num()
        })
        .collect();
    (nums, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    fn a(k: i64) -> LaurentPoly {
        LaurentPoly::a_pow(k)
    }

    #[test]
    fn reciprocal_product() {
        let p = LaurentPoly::from_pairs([(3, 2), (0, -1)]);
        let q = LaurentPoly::from_pairs([(1, 1), (-2, 5)]);
        let x = ScalarField::new(p.clone(), q.clone());
        let y = ScalarField::new(q, p);
        assert!((&x * &y).is_one());
    }

    #[test]
    fn reduce_clears_units() {
        // (a^2 - 1)/(a - 1) reduces to the polynomial a + 1.
        let x = ScalarField::new(
            &a(2) - &LaurentPoly::one(),
            &a(1) - &LaurentPoly::one(),
        );
        assert_eq!(x.as_poly().unwrap(), &(&a(1) + &LaurentPoly::one()));
        // Unit monomials always move to the numerator.
        let y = ScalarField::new(LaurentPoly::one(), a(-3));
        assert_eq!(y.as_poly().unwrap(), &a(3));
    }

    #[test]
    fn invert_zero_fails() {
        assert_eq!(
            ScalarField::zero().invert(),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn eval_consistency_with_reduction() {
        // Evaluating num/den at a = 2 agrees with evaluating the reduced form.
        let n = &(&a(2) - &LaurentPoly::one()) * &LaurentPoly::from_pairs([(5, 3), (-1, 1)]);
        let d = &(&a(1) - &LaurentPoly::one()) * &LaurentPoly::from_pairs([(2, 7), (0, 1)]);
        let x = ScalarField::new(n.clone(), d.clone());
        let two = BigRational::from(BigInt::from(2));
        let direct = n.eval(&two) / d.eval(&two);
        assert_eq!(x.eval(&two).unwrap(), direct);
    }

    #[test]
    fn common_denominator_clears() {
        let x = ScalarField::new(LaurentPoly::one(), &a(1) - &LaurentPoly::one());
        let y = ScalarField::new(LaurentPoly::one(), &a(1) + &LaurentPoly::one());
        let (nums, den) = common_denominator(&[x.clone(), y.clone()]);
        assert_eq!(den, &(&a(1) - &LaurentPoly::one()) * &(&a(1) + &LaurentPoly::one()));
        for (n, orig) in nums.iter().zip([x, y]) {
            assert_eq!(ScalarField::new(n.clone(), den.clone()), orig);
        }
    }

    #[test]
    fn canonical_form_is_unique() {
        let p = LaurentPoly::from_pairs([(4, 6), (0, -2)]);
        let q = LaurentPoly::from_pairs([(2, 4), (1, 2)]);
        let x = ScalarField::new(p.clone(), q.clone());
        let y = ScalarField::new(p.mul_monomial(-3, &BigInt::from(-5)), q.mul_monomial(-3, &BigInt::from(-5)));
        assert_eq!(x, y);
        assert!(x.den().leading_coeff().is_positive());
        assert_eq!(x.den().min_exp(), 0);
        assert!(x.num().content().gcd(&x.den().content()).is_one());
    }
}
