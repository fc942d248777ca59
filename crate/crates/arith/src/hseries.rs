//! Truncated power series in `h` with exact rational coefficients.
//!
//! The substitution is `a = e^{h/4}`, so a Laurent polynomial in `a` becomes
//! a series via `a^k -> sum_j (k/4)^j h^j / j!`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::LaurentPoly;

/// A power series in `h` truncated above `h^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct HSeries {
    coeffs: Vec<BigRational>, // length order + 1
}

impl HSeries {
    pub fn zero(order: usize) -> Self {
        HSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &BigRational {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Expand a Laurent polynomial in `a` as a series in `h` up to `h^order`.
    pub fn from_laurent(p: &LaurentPoly, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (k, c) in p.terms() {
            // e^{k h / 4}: term j is (k/4)^j / j!.
            let base = BigRational::new(BigInt::from(k), BigInt::from(4));
            let mut term = BigRational::from(c.clone());
            for j in 0..=order {
                out.coeffs[j] += &term;
                if j < order {
                    term = term * &base / BigRational::from(BigInt::from(j as i64 + 1));
                }
            }
        }
        out
    }
}

impl Add for &HSeries {
    type Output = HSeries;
    fn add(self, rhs: &HSeries) -> HSeries {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        HSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }
}

impl Mul for &HSeries {
    type Output = HSeries;
    fn mul(self, rhs: &HSeries) -> HSeries {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        let n = self.order();
        let mut out = HSeries::zero(n);
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                if !y.is_zero() {
                    out.coeffs[i + j] += x * y;
                }
            }
        }
        out
    }
}

impl fmt::Debug for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "h^{}", j)?;
            } else {
                write!(f, "({})h^{}", c, j)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(h^{})", self.order() + 1)
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
