//! Property tests for the exact linear algebra.

use proptest::prelude::*;
use su3q_arith::{Scalar, ScalarField};
use su3q_linalg::{kron, partial_trace_last, solve_in_span, LinalgError, Mat};

fn int_mat(n: usize, m: usize) -> impl Strategy<Value = Mat<ScalarField>> {
    prop::collection::vec(-5i64..=5, n * m).prop_map(move |v| {
        Mat::from_fn(n, m, |i, j| ScalarField::from_int(v[i * m + j]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn kron_mixed_product(a in int_mat(2, 2), b in int_mat(2, 2),
                          c in int_mat(2, 2), d in int_mat(2, 2)) {
        prop_assert_eq!(
            kron(&a, &b).matmul(&kron(&c, &d)),
            kron(&a.matmul(&c), &b.matmul(&d))
        );
    }

    #[test]
    fn kron_is_associative(a in int_mat(2, 2), b in int_mat(2, 2), c in int_mat(3, 3)) {
        prop_assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
    }

    #[test]
    fn partial_trace_of_kron(b in int_mat(3, 3), c in int_mat(2, 2)) {
        let traced = partial_trace_last(&kron(&b, &c), 2).unwrap();
        prop_assert_eq!(traced, b.scale(&c.trace()));
    }

    #[test]
    fn solve_in_span_recovers_coefficients(
        b1 in prop::collection::vec(-5i64..=5, 4),
        b2 in prop::collection::vec(-5i64..=5, 4),
        c1 in -5i64..=5, c2 in -5i64..=5
    ) {
        let b1: Vec<ScalarField> = b1.into_iter().map(ScalarField::from_int).collect();
        let b2: Vec<ScalarField> = b2.into_iter().map(ScalarField::from_int).collect();
        let s1 = ScalarField::from_int(c1);
        let s2 = ScalarField::from_int(c2);
        let v: Vec<ScalarField> = (0..4)
            .map(|i| s1.mul(&b1[i]).add(&s2.mul(&b2[i])))
            .collect();
        match solve_in_span(&v, &[b1.clone(), b2.clone()]) {
            Ok(coeffs) => {
                for i in 0..4 {
                    let rec = coeffs[0].mul(&b1[i]).add(&coeffs[1].mul(&b2[i]));
                    prop_assert_eq!(rec, v[i].clone());
                }
            }
            Err(LinalgError::NotInSpan) => prop_assert!(false, "constructed vector must lie in span"),
            Err(e) => prop_assert!(false, "unexpected error {e:?}"),
        }
    }
}
