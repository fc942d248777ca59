//! The mutant difference: conjugation by the braiding on the
//! multiplicity-two weight spaces, the per-type contributions, the total
//! difference polynomial and its h-series.
//!
//! Reference values are kept in two printed forms each and cross-checked
//! against one another; all comparisons are modulo a unit monomial
//! `+-a^k`, matching how the results are stated.

use su3q_arith::{quantum_integer, HSeries, LaurentPoly, Scalar, ScalarField};
use su3q_linalg::{invert, Mat};
use su3q_rep::WeightType;

use crate::dsl::{parse_tangle, TangleProgram};
use crate::engine::ColorEngine;
use crate::TangleError;

/// Braid words for the two Conway / Kinoshita-Teresaka tangles, read off
/// the standard diagrams of the knots (each is a 3-braid with one string
/// closed off).  Validity of the transcription is established by the
/// reference checks in the acceptance suite.
pub const TANGLE_F_TEXT: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/tangle_F.txt"));
pub const TANGLE_G_TEXT: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/tangle_G.txt"));

pub fn conway_tangle_f() -> TangleProgram {
    parse_tangle(TANGLE_F_TEXT).expect("bundled tangle F parses")
}

pub fn conway_tangle_g() -> TangleProgram {
    parse_tangle(TANGLE_G_TEXT).expect("bundled tangle G parses")
}

/// `R^-1 alpha R` on a weight space.
pub fn mutate<S: Scalar>(alpha: &Mat<S>, r: &Mat<S>) -> Mat<S> {
    let rinv = invert(r).expect("braiding restriction is invertible");
    rinv.matmul(alpha).matmul(r)
}

/// `tr((alpha - R^-1 alpha R) beta)`, the contribution of one weight type.
pub fn type_contribution<S: Scalar>(alpha: &Mat<S>, beta: &Mat<S>, r: &Mat<S>) -> S {
    alpha.sub(&mutate(alpha, r)).matmul(beta).trace()
}

#[derive(Clone, Debug)]
pub struct VassilievVerdict {
    /// Coefficients of `h^0 .. h^12` that are exactly zero.
    pub orders_vanishing: Vec<bool>,
    /// Whether `|coefficient of h^13|` equals `7 * 8^2*7*6*5*4^2*3^2*2`.
    pub coeff13_matches: bool,
    pub all_passed: bool,
}

/// Check the Vassiliev degree of a difference polynomial: zero through
/// `h^12`, and `|h^13|` coefficient `27 095 040`.
pub fn vassiliev_check(total: &LaurentPoly, order: usize) -> VassilievVerdict {
    assert!(order >= 14, "h-series order must be at least 14");
    let series = HSeries::from_laurent(total, order);
    let orders_vanishing: Vec<bool> =
        (0..=12).map(|j| series.coeff(j).is_zero()).collect();
    let c = 64i64 * 7 * 6 * 5 * 16 * 9 * 2; // 8^2 . 7 . 6 . 5 . 4^2 . 3^2 . 2
    let expect = num_rational::BigRational::from(num_bigint::BigInt::from(7 * c));
    let c13 = series.coeff(13).clone();
    let coeff13_matches = c13 == expect || c13 == -expect;
    let all_passed = orders_vanishing.iter().all(|b| *b) && coeff13_matches;
    VassilievVerdict { orders_vanishing, coeff13_matches, all_passed }
}

#[derive(Clone, Debug)]
pub struct DifferenceReport {
    /// Contribution of the (3,1) weight space, denominator-cleared, with
    /// the clearing denominator recorded (a unit monomial in practice).
    pub t31: LaurentPoly,
    pub t31_clearing: LaurentPoly,
    pub t12: LaurentPoly,
    pub t12_clearing: LaurentPoly,
    /// `[6][4] t31 + [5][3] t12`, denominator-cleared.
    pub total: LaurentPoly,
    pub total_clearing: LaurentPoly,
    pub h_series: HSeries,
    pub t31_golden: bool,
    pub t12_golden: bool,
    pub total_golden: bool,
    /// `[6][4] golden_t31 + [5][3] golden_t12` matches the computed total.
    pub combination_golden: bool,
    pub divisible_by_vanishing_factors: bool,
    pub vassiliev: VassilievVerdict,
    /// Swapping which tangle gets conjugated changes the total only by a
    /// unit monomial.
    pub role_swap_consistent: bool,
}

impl DifferenceReport {
    pub fn all_passed(&self) -> bool {
        self.t31_golden
            && self.t12_golden
            && self.total_golden
            && self.combination_golden
            && self.divisible_by_vanishing_factors
            && self.vassiliev.all_passed
            && self.role_swap_consistent
    }
}

/// The full difference pipeline for the colour `M`.
///
/// The difference is computed from the conjugation difference matrix on
/// each multiplicity-two weight space directly (never as a subtraction of
/// two full invariants).
pub fn total_difference(
    engine: &ColorEngine<ScalarField>,
    f: &TangleProgram,
    g: &TangleProgram,
    h_order: usize,
) -> Result<DifferenceReport, TangleError> {
    let types = engine.multiplicity_two_types();
    let mut contributions: Vec<(WeightType, ScalarField)> = Vec::new();
    let mut swapped_total = ScalarField::zero();
    let mut total_field = ScalarField::zero();
    for nu in &types {
        let alpha = engine.type_matrix(f, *nu)?;
        let beta = engine.type_matrix(g, *nu)?;
        let r = engine.r_type_matrix(*nu)?;
        let t = type_contribution(&alpha, &beta, &r);
        let t_swapped = type_contribution(&beta, &alpha, &r);
        let q = ScalarField::from_poly(su3q_rep::qdim(*nu).expect("valid type"));
        total_field = Scalar::add(&total_field, &q.mul(&t));
        swapped_total = Scalar::add(&swapped_total, &q.mul(&t_swapped));
        contributions.push((*nu, t));
    }

    let pick = |nu: WeightType| -> ScalarField {
        contributions
            .iter()
            .find(|(t, _)| *t == nu)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(ScalarField::zero)
    };
    let t31_field = pick(WeightType::new(3, 1));
    let t12_field = pick(WeightType::new(1, 2));

    let split = |x: &ScalarField| (x.num().clone(), x.den().clone());
    let (t31, t31_clearing) = split(&t31_field);
    let (t12, t12_clearing) = split(&t12_field);
    let (total, total_clearing) = split(&total_field);

    let golden31 = golden_t31();
    let golden12 = golden_t12();
    let golden_total = golden_difference_total();
    let q64 = &quantum_integer(6).unwrap() * &quantum_integer(4).unwrap();
    let q53 = &quantum_integer(5).unwrap() * &quantum_integer(3).unwrap();
    let combination = &(&q64 * &golden31) + &(&q53 * &golden12);

    let h_series = HSeries::from_laurent(&total, h_order);
    let report = DifferenceReport {
        t31_golden: t31.unit_equivalent(&golden31),
        t12_golden: t12.unit_equivalent(&golden12),
        total_golden: total.unit_equivalent(&golden_total),
        combination_golden: total.unit_equivalent(&combination),
        divisible_by_vanishing_factors: total.is_zero()
            || total.exact_div(&vanishing_factor_product()).is_some(),
        vassiliev: vassiliev_check(&total, h_order),
        role_swap_consistent: swapped_total
            .num()
            .unit_equivalent(&total),
        t31,
        t31_clearing,
        t12,
        t12_clearing,
        total,
        total_clearing,
        h_series,
    };
    Ok(report)
}

/// The difference for a multiplicity-free colour (every weight space
/// one-dimensional): identically zero.  Returns the exact total.
pub fn multiplicity_free_difference(
    engine: &ColorEngine<ScalarField>,
    f: &TangleProgram,
    g: &TangleProgram,
) -> Result<ScalarField, TangleError> {
    let mut total = ScalarField::zero();
    for (nu, vecs) in engine.hw.clone() {
        if vecs.len() < 2 {
            continue;
        }
        let alpha = engine.type_matrix(f, nu)?;
        let beta = engine.type_matrix(g, nu)?;
        let r = engine.r_type_matrix(nu)?;
        let t = type_contribution(&alpha, &beta, &r);
        let q = ScalarField::from_poly(su3q_rep::qdim(nu).expect("valid type"));
        total = Scalar::add(&total, &q.mul(&t));
    }
    Ok(total)
}

// ---- reference polynomials ----

fn s_poly(pairs: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_s_pairs(pairs.iter().copied())
}

fn product(factors: &[(LaurentPoly, u32)]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for (p, e) in factors {
        acc = &acc * &p.pow(*e);
    }
    acc
}

/// `(s^8 - s^-8)^2 (s^7 - s^-7)(s^6 - s^-6)(s^5 - s^-5)(s^4 - s^-4)^2
///  (s^3 - s^-3)^2 (s^2 - s^-2)(s - s^-1)^3`: the thirteen root-of-unity
/// factors of the difference.
pub fn vanishing_factor_product() -> LaurentPoly {
    product(&[
        (LaurentPoly::s_diff(8), 2),
        (LaurentPoly::s_diff(7), 1),
        (LaurentPoly::s_diff(6), 1),
        (LaurentPoly::s_diff(5), 1),
        (LaurentPoly::s_diff(4), 2),
        (LaurentPoly::s_diff(3), 2),
        (LaurentPoly::s_diff(2), 1),
        (LaurentPoly::s_diff(1), 3),
    ])
}

/// Degree-46 irreducible-looking factor of the total difference.
pub fn big_factor_46() -> LaurentPoly {
    s_poly(&[
        (46, 1),
        (44, -1),
        (40, 2),
        (38, -4),
        (36, 2),
        (34, 3),
        (32, -4),
        (30, 6),
        (28, -1),
        (26, -3),
        (24, 6),
        (22, -4),
        (20, 4),
        (18, 2),
        (16, -5),
        (14, 5),
        (12, -2),
        (10, -2),
        (8, 4),
        (6, -2),
        (2, 1),
        (0, -1),
    ])
}

/// The total difference of the invariants on the two knots, up to a power
/// of `s`.
pub fn golden_difference_total() -> LaurentPoly {
    &big_factor_46() * &vanishing_factor_product()
}

/// The same value in its fully factored printed form (with the `s^-80`
/// prefix), used to cross-check the transcription.
pub fn golden_difference_total_factored_form() -> LaurentPoly {
    let f = product(&[
        (s_poly(&[(8, 1), (0, 1)]), 2),
        (s_poly(&[(4, 1), (0, 1)]), 4),
        (half_poly(&[(1, 1), (0, 1)]), 13),
        (half_poly(&[(1, 1), (0, -1)]), 13),
        (half_poly(&[(2, 1), (1, -1), (0, 1)]), 3),
        (half_poly(&[(2, 1), (1, 1), (0, 1)]), 3),
        (half_poly(&[(6, 1), (5, -1), (4, 1), (3, -1), (2, 1), (1, -1), (0, 1)]), 1),
        (half_poly(&[(6, 1), (5, 1), (4, 1), (3, 1), (2, 1), (1, 1), (0, 1)]), 1),
        (half_poly(&[(4, 1), (3, -1), (2, 1), (1, -1), (0, 1)]), 1),
        (half_poly(&[(4, 1), (3, 1), (2, 1), (1, 1), (0, 1)]), 1),
        (s_poly(&[(4, 1), (2, -1), (0, 1)]), 1),
        (s_poly(&[(2, 1), (0, 1)]), 6),
        (big_factor_46(), 1),
    ]);
    f.shift(-160) // s^-80
}

// Factors like (s + 1) involve odd powers of s, i.e. even powers of a
// with half the exponent doubled: encode them over `a` directly.
fn half_poly(pairs: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_pairs(pairs.iter().map(|(k, c)| (2 * k, *c)))
}

/// The contribution from the weight space of type (3,1), in the printed
/// root-of-unity form.
pub fn golden_t31() -> LaurentPoly {
    let head = &s_poly(&[(20, 2), (18, 1), (14, 1), (12, -1), (8, 2), (6, -1), (0, -1)])
        * &s_poly(&[
            (22, 1),
            (20, -1),
            (16, 1),
            (14, -2),
            (12, 3),
            (10, 2),
            (8, -1),
            (6, 2),
            (0, 2),
        ]);
    let tail = product(&[
        (LaurentPoly::s_diff(8), 2),
        (LaurentPoly::s_diff(7), 1),
        (LaurentPoly::s_diff(5), 1),
        (LaurentPoly::s_diff(4), 1),
        (LaurentPoly::s_diff(3), 1),
        (LaurentPoly::s_diff(2), 1),
        (LaurentPoly::s_diff(1), 6),
    ]);
    (&head * &tail).shift(98) // s^49
}

/// The (3,1) contribution in its fully factored printed form.
pub fn golden_t31_factored_form() -> LaurentPoly {
    product(&[
        (s_poly(&[(8, 1), (0, 1)]), 2),
        (s_poly(&[(2, 1), (0, 1)]), 4),
        (s_poly(&[(4, 1), (0, 1)]), 3),
        (half_poly(&[(1, 1), (0, 1)]), 13),
        (half_poly(&[(1, 1), (0, -1)]), 13),
        (s_poly(&[(6, 1)]), 1),
        (half_poly(&[(2, 1), (1, -1), (0, 1)]), 1),
        (half_poly(&[(2, 1), (1, 1), (0, 1)]), 1),
        (half_poly(&[(4, 1), (3, -1), (2, 1), (1, -1), (0, 1)]), 1),
        (half_poly(&[(4, 1), (3, 1), (2, 1), (1, 1), (0, 1)]), 1),
        (half_poly(&[(6, 1), (5, -1), (4, 1), (3, -1), (2, 1), (1, -1), (0, 1)]), 1),
        (half_poly(&[(6, 1), (5, 1), (4, 1), (3, 1), (2, 1), (1, 1), (0, 1)]), 1),
        (s_poly(&[(20, 2), (18, 1), (14, 1), (12, -1), (8, 2), (6, -1), (0, -1)]), 1),
        (
            s_poly(&[
                (22, 1),
                (20, -1),
                (16, 1),
                (14, -2),
                (12, 3),
                (10, 2),
                (8, -1),
                (6, 2),
                (0, 2),
            ]),
            1,
        ),
    ])
}

/// The contribution from the weight space of type (1,2), in the printed
/// root-of-unity form.
pub fn golden_t12() -> LaurentPoly {
    let head = &s_poly(&[
        (18, 1),
        (16, -1),
        (14, -1),
        (12, 2),
        (10, -2),
        (6, 2),
        (4, -2),
        (2, -1),
        (0, 1),
    ]) * &s_poly(&[(10, 1), (8, -1), (4, 1), (2, -1), (0, 1)]);
    let tail = product(&[
        (LaurentPoly::s_diff(8), 2),
        (LaurentPoly::s_diff(7), 2),
        (LaurentPoly::s_diff(6), 1),
        (LaurentPoly::s_diff(4), 3),
        (LaurentPoly::s_diff(2), 2),
        (LaurentPoly::s_diff(1), 4),
    ]);
    (&head * &tail).shift(112) // s^56
}

/// The (1,2) contribution in its fully factored printed form.
pub fn golden_t12_factored_form() -> LaurentPoly {
    product(&[
        (half_poly(&[(6, 1), (5, -1), (4, 1), (3, -1), (2, 1), (1, -1), (0, 1)]), 2),
        (half_poly(&[(6, 1), (5, 1), (4, 1), (3, 1), (2, 1), (1, 1), (0, 1)]), 2),
        (s_poly(&[(4, 1), (2, -1), (0, 1)]), 1),
        (s_poly(&[(8, 1), (0, 1)]), 2),
        (s_poly(&[(4, 1), (0, 1)]), 5),
        (s_poly(&[(2, 1), (0, 1)]), 8),
        (half_poly(&[(2, 1), (1, 1), (0, 1)]), 1),
        (half_poly(&[(2, 1), (1, -1), (0, 1)]), 1),
        (half_poly(&[(1, 1), (0, -1)]), 14),
        (half_poly(&[(1, 1), (0, 1)]), 14),
        (s_poly(&[(10, 1), (8, -1), (4, 1), (2, -1), (0, 1)]), 1),
        (
            s_poly(&[
                (18, 1),
                (16, -1),
                (14, -1),
                (12, 2),
                (10, -2),
                (6, 2),
                (4, -2),
                (2, -1),
                (0, 1),
            ]),
            1,
        ),
    ])
}
