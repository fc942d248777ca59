//! Laurent polynomials in `a` over arbitrary-precision integers.
//!
//! Stored as a dense coefficient block starting at the lowest exponent.
//! The canonical form has no leading or trailing zero coefficients, so
//! structural equality is mathematical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ArithError;

/// A Laurent polynomial `sum_k c_k a^k` with `c_k` in `Z`.
///
/// `s = a^2` and `q = a^4`; helpers are provided for both aliases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    /// Exponent of the first stored coefficient.
    lo: i64,
    /// Coefficients for `a^lo, a^{lo+1}, ...`; empty iff the polynomial is 0.
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { lo: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(n: i64) -> Self {
        Self::monomial(0, BigInt::from(n))
    }

    /// `c * a^k`.
    pub fn monomial(k: i64, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { lo: k, coeffs: vec![c] }
        }
    }

    /// `a^k`.
    pub fn a_pow(k: i64) -> Self {
        Self::monomial(k, BigInt::one())
    }

    /// `s^k = a^{2k}`.
    pub fn s_pow(k: i64) -> Self {
        Self::a_pow(2 * k)
    }

    /// `s^n - s^{-n}`.
    pub fn s_diff(n: i64) -> Self {
        &Self::s_pow(n) - &Self::s_pow(-n)
    }

    /// Build from `(exponent of a, coefficient)` pairs; repeats accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut acc = Self::zero();
        for (k, c) in pairs {
            acc = &acc + &Self::monomial(k, BigInt::from(c));
        }
        acc
    }

    /// Build from `(exponent of s, coefficient)` pairs.
    pub fn from_s_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        Self::from_pairs(pairs.into_iter().map(|(k, c)| (2 * k, c)))
    }

    fn normalized(mut lo: i64, mut coeffs: Vec<BigInt>) -> Self {
        let head = coeffs.iter().take_while(|c| c.is_zero()).count();
        if head == coeffs.len() {
            return Self::zero();
        }
        if head > 0 {
            coeffs.drain(..head);
            lo += head as i64;
        }
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        LaurentPoly { lo, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient. Zero polynomial: 0.
    pub fn min_exp(&self) -> i64 {
        self.lo
    }

    /// Highest exponent with a nonzero coefficient. Zero polynomial: 0.
    pub fn max_exp(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.lo + self.coeffs.len() as i64 - 1
        }
    }

    /// Number of exponent steps between lowest and highest term.
    pub fn span(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.max_exp() - self.min_exp()
        }
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        if self.is_zero() || k < self.lo || k > self.max_exp() {
            BigInt::zero()
        } else {
            self.coeffs[(k - self.lo) as usize].clone()
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiply by `c * a^k` in place-ish (cheap, no convolution).
    pub fn mul_monomial(&self, k: i64, c: &BigInt) -> Self {
        if self.is_zero() || c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            lo: self.lo + k,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { lo: self.lo + k, coeffs: self.coeffs.clone() }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_monomial(0, c)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
        }
        g
    }

    /// Divide out the content and the lowest power of `a`, and normalize the
    /// leading coefficient to be positive.  Zero maps to zero.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        LaurentPoly {
            lo: 0,
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division; `None` when the quotient is not a Laurent polynomial.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dn = &d.coeffs;
        let lead = dn.last().unwrap();
        let qlen = rem.len() - dn.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + dn.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in dn.iter().enumerate() {
                let t = dj * &c;
                rem[i + j] -= t;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::normalized(self.lo - d.lo, quot))
    }

    /// Gcd as Laurent polynomials: primitive, positive leading coefficient,
    /// lowest exponent 0.  `gcd(0, g) = primitive(g)`.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let mut f = self.primitive_part();
        let mut g = other.primitive_part();
        if f.coeffs.len() < g.coeffs.len() {
            std::mem::swap(&mut f, &mut g);
        }
        // Primitive polynomial remainder sequence on ordinary polynomials.
        while !g.is_zero() {
            let r = f.pseudo_rem(&g).primitive_part();
            f = g;
            g = r;
        }
        f.primitive_part()
    }

    /// Pseudo-remainder of `self` by `d` (both taken with lo = 0):
    /// at each step the remainder is scaled by `lead(d)` so the top term
    /// cancels over the integers.
    fn pseudo_rem(&self, d: &LaurentPoly) -> LaurentPoly {
        let mut rem = self.coeffs.clone();
        let dn = &d.coeffs;
        if rem.len() < dn.len() {
            return Self::normalized(0, rem);
        }
        let lead = dn.last().unwrap().clone();
        for i in (0..rem.len() - dn.len() + 1).rev() {
            let top = rem[i + dn.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            for c in rem.iter_mut() {
                *c = &*c * &lead;
            }
            for (j, dj) in dn.iter().enumerate() {
                rem[i + j] -= dj * &top;
            }
        }
        Self::normalized(0, rem)
    }

    /// True iff `self == ±a^k * other` for some integer `k`.
    pub fn unit_equivalent(&self, other: &LaurentPoly) -> bool {
        self.unit_ratio(other).is_some()
    }

    /// When `self == sign * a^k * other`, returns `(sign, k)`.
    pub fn unit_ratio(&self, other: &LaurentPoly) -> Option<(i8, i64)> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Some((1, 0)),
            (true, false) | (false, true) => return None,
            _ => {}
        }
        if self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let k = self.lo - other.lo;
        if self.coeffs == other.coeffs {
            return Some((1, k));
        }
        if self.coeffs.iter().zip(&other.coeffs).all(|(x, y)| x == &(-y)) {
            return Some((-1, k));
        }
        None
    }

    /// When `self = ±a^k`, returns `(sign, k)`.
    pub fn as_unit_monomial(&self) -> Option<(i8, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        if self.coeffs[0].is_one() {
            Some((1, self.lo))
        } else if (-&self.coeffs[0]).is_one() {
            Some((-1, self.lo))
        } else {
            None
        }
    }

    /// Exact evaluation at a rational point `a = x`.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        // Horner from the top, then multiply by x^lo.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc * pow_rat(x, self.lo)
    }

    /// Canonical text form: one `exponent coefficient` line per term,
    /// ascending in the exponent of `a`.
    pub fn to_canonical_text(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.terms() {
            out.push_str(&format!("{} {}\n", k, c));
        }
        out
    }

    pub fn from_canonical_text(text: &str) -> Result<Self, ArithError> {
        let mut acc = Self::zero();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let (Some(e), Some(c), None) = (it.next(), it.next(), it.next()) else {
                return Err(ArithError::BadPolyText {
                    line: i + 1,
                    msg: "expected `exponent coefficient`".into(),
                });
            };
            let e: i64 = e.parse().map_err(|_| ArithError::BadPolyText {
                line: i + 1,
                msg: format!("bad exponent `{e}`"),
            })?;
            let c: BigInt = c.parse().map_err(|_| ArithError::BadPolyText {
                line: i + 1,
                msg: format!("bad coefficient `{c}`"),
            })?;
            acc = &acc + &Self::monomial(e, c);
        }
        Ok(acc)
    }

    /// Pretty form in powers of `s` when all exponents of `a` are even,
    /// otherwise in powers of `a`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let even = self.terms().all(|(k, _)| k % 2 == 0);
        let var = if even { "s" } else { "a" };
        let mut out = String::new();
        let terms: Vec<(i64, BigInt)> =
            self.terms().map(|(k, c)| (k, c.clone())).collect();
        for (i, (k, c)) in terms.iter().enumerate().rev() {
            let k = if even { k / 2 } else { *k };
            let neg = c.is_negative();
            let abs = c.abs();
            if i + 1 == terms.len() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                out.push_str(&abs.to_string());
            }
            if k != 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if k != 1 {
                    out.push_str(&format!("^{}", k));
                }
            }
        }
        out
    }
}

pub(crate) fn pow_rat(x: &BigRational, k: i64) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    let mut base = if k > 0 { x.clone() } else { x.recip() };
    let mut e = k.unsigned_abs();
    let mut acc = BigRational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// The quantum integer `[n] = s^{n-1} + s^{n-3} + ... + s^{1-n}`.
pub fn quantum_integer(n: i64) -> Result<LaurentPoly, ArithError> {
    if n <= 0 {
        return Err(ArithError::NonPositiveQuantumInteger(n));
    }
    let mut acc = LaurentPoly::zero();
    let mut k = n - 1;
    while k >= 1 - n {
        acc = &acc + &LaurentPoly::s_pow(k);
        k -= 2;
    }
    Ok(acc)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.max_exp().max(rhs.max_exp());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.terms() {
            coeffs[(k - lo) as usize] += c;
        }
        for (k, c) in rhs.terms() {
            coeffs[(k - lo) as usize] += c;
        }
        LaurentPoly::normalized(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs =
            vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in rhs.coeffs.iter().enumerate() {
                if !cj.is_zero() {
                    coeffs[i + j] += ci * cj;
                }
            }
        }
        LaurentPoly::normalized(self.lo + rhs.lo, coeffs)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(k: i64) -> LaurentPoly {
        LaurentPoly::a_pow(k)
    }

    #[test]
    fn difference_of_squares() {
        let p = &a(2) + &LaurentPoly::one();
        let q = &a(2) - &LaurentPoly::one();
        assert_eq!(&p * &q, &a(4) - &LaurentPoly::one());
    }

    #[test]
    fn additive_identity() {
        let p = LaurentPoly::from_pairs([(-3, 2), (0, -1), (5, 7)]);
        assert_eq!(&p + &LaurentPoly::zero(), p);
    }

    #[test]
    fn s_difference_product() {
        // (s - s^-1)(s + s^-1) = s^2 - s^-2, i.e. a^4 - a^-4.
        let d = LaurentPoly::s_diff(1);
        let sum = &LaurentPoly::s_pow(1) + &LaurentPoly::s_pow(-1);
        assert_eq!(&d * &sum, &a(4) - &a(-4));
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_integer(1).unwrap(), LaurentPoly::one());
        // [3] derived by dividing s^3 - s^-3 by s - s^-1.
        let q3 = LaurentPoly::s_diff(3).exact_div(&LaurentPoly::s_diff(1)).unwrap();
        assert_eq!(quantum_integer(3).unwrap(), q3);
        assert_eq!(q3, LaurentPoly::from_s_pairs([(2, 1), (0, 1), (-2, 1)]));
        assert!(quantum_integer(0).is_err());
        assert!(quantum_integer(-2).is_err());
    }

    #[test]
    fn quantum_integer_vs_ratio_form() {
        // [6][4] (s - s^-1)^2 = (s^6 - s^-6)(s^4 - s^-4), the paper's form
        // of the quantum dimension for type (3,1).
        let lhs = &(&quantum_integer(6).unwrap() * &quantum_integer(4).unwrap())
            * &LaurentPoly::s_diff(1).pow(2);
        let rhs = &LaurentPoly::s_diff(6) * &LaurentPoly::s_diff(4);
        assert_eq!(lhs, rhs);
        for n in 1..=20 {
            let qn = quantum_integer(n).unwrap();
            assert_eq!(&qn * &LaurentPoly::s_diff(1), LaurentPoly::s_diff(n));
        }
    }

    #[test]
    fn unit_equivalence() {
        let p = LaurentPoly::from_pairs([(2, 1), (0, 1)]); // a^2 + 1
        let q = p.mul_monomial(3, &BigInt::from(1)); // a^3 (a^2+1)
        assert!(q.unit_equivalent(&p));
        assert_eq!(q.unit_ratio(&p), Some((1, 3)));
        assert!((-&p).unit_equivalent(&p));
        assert_eq!((-&p).unit_ratio(&p), Some((-1, 0)));
        let r = LaurentPoly::from_pairs([(2, 1), (1, 1)]); // a^2 + a
        assert!(!p.unit_equivalent(&r));
        assert!(p.unit_equivalent(&p));
        // scaling by 2 is not a unit
        assert!(!p.scale(&BigInt::from(2)).unit_equivalent(&p));
    }

    #[test]
    fn exact_division() {
        // (a^2 - 1)/(a - 1) = a + 1
        let n = &a(2) - &LaurentPoly::one();
        let d = &a(1) - &LaurentPoly::one();
        assert_eq!(n.exact_div(&d).unwrap(), &a(1) + &LaurentPoly::one());
        // indivisible case
        assert!((&a(2) + &LaurentPoly::one()).exact_div(&d).is_none());
        // Laurent shifts divide out
        let shifted = n.shift(-5);
        assert_eq!(shifted.exact_div(&d).unwrap(), (&a(1) + &LaurentPoly::one()).shift(-5));
    }

    #[test]
    fn gcd_basic() {
        let f = &(&a(2) - &LaurentPoly::one()) * &(&a(1) + &LaurentPoly::int(2));
        let g = &(&a(1) - &LaurentPoly::one()) * &(&a(1) + &LaurentPoly::int(2));
        let d = f.gcd(&g);
        let expect = &(&a(1) - &LaurentPoly::one()) * &(&a(1) + &LaurentPoly::int(2));
        assert_eq!(d, expect.primitive_part());
        assert!(f.exact_div(&d).is_some());
        assert!(g.exact_div(&d).is_some());
    }

    #[test]
    fn canonical_text_round_trip() {
        let p = LaurentPoly::from_pairs([(-4, -3), (0, 1), (7, 42)]);
        let text = p.to_canonical_text();
        assert_eq!(text, "-4 -3\n0 1\n7 42\n");
        assert_eq!(LaurentPoly::from_canonical_text(&text).unwrap(), p);
    }

    #[test]
    fn pretty_powers_of_s() {
        let p = LaurentPoly::from_s_pairs([(2, 1), (0, 1), (-2, 1)]);
        assert_eq!(p.pretty(), "s^2 + 1 + s^-2");
        let q = LaurentPoly::from_pairs([(1, 1), (0, -2)]);
        assert_eq!(q.pretty(), "a - 2");
    }

    #[test]
    fn eval_rational() {
        let p = LaurentPoly::from_pairs([(-1, 1), (2, 3)]);
        let x = BigRational::new(3.into(), 2.into());
        // 1/x + 3x^2 = 2/3 + 27/4 = 89/12
        assert_eq!(p.eval(&x), BigRational::new(89.into(), 12.into()));
    }
}
