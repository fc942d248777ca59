//! The selfcheck property suites, one pass/fail line each.

use su3q_arith::{quantum_integer, LaurentPoly, NumCtx, Rat, Scalar, ScalarCtx, ScalarField, SymCtx};
use su3q_linalg::{eigenspace, num_apply_pair, Mat};
use su3q_rep::{
    fundamental_e, highest_weight_vectors, induced_braiding, r_matrix_ee, r_matrix_ee_inv,
    split_by_full_twist, Color, CrossingSet, RmmPair, WeightType, GENERATORS,
};
use su3q_skein::{
    check_cyclic_symmetry, check_turnover_symmetry, enumerate_face_profiles,
    lattice_quotient_graph, LatticeSpec,
};
use su3q_tangle::{
    golden_difference_total, golden_t12, golden_t31, parse_tangle, vanishing_factor_product,
    vassiliev_check, ColorEngine,
};

fn check(all: &mut bool, label: &str, pass: bool) {
    println!("[{}] {label}", if pass { "ok" } else { "FAIL" });
    if !pass {
        *all = false;
    }
}

pub fn run_all(all: &mut bool) {
    let ctx = SymCtx;

    // scalar arithmetic spot identities
    let q3 = quantum_integer(3).unwrap();
    check(
        all,
        "quantum integer [3] = s^2 + 1 + s^-2 and [n](s - s^-1) = s^n - s^-n",
        q3 == LaurentPoly::from_s_pairs([(2, 1), (0, 1), (-2, 1)])
            && (1..=12).all(|n| {
                &quantum_integer(n).unwrap() * &LaurentPoly::s_diff(1)
                    == LaurentPoly::s_diff(n)
            }),
    );

    // modules
    let e: su3q_rep::RepModule<ScalarField> = fundamental_e(&ctx);
    let f = e.dual(&ctx);
    check(all, "fundamental module E satisfies all relations", e.check_relations(&ctx).passed());
    check(all, "dual module F satisfies all relations", f.check_relations(&ctx).passed());
    let eef = e.tensor(&e).tensor(&f);
    check(all, "E(x)E(x)F satisfies all relations", eef.check_relations(&ctx).passed());

    // R_EE
    let r: Mat<ScalarField> = r_matrix_ee(&ctx);
    let rinv = r_matrix_ee_inv(&ctx);
    let s = ctx.s_pow(1);
    let msinv = Scalar::neg(&ctx.s_pow(-1));
    check(
        all,
        "R_EE eigenvalues s (multiplicity 6) and -s^-1 (multiplicity 3)",
        eigenspace(&r, &s).len() == 6 && eigenspace(&r, &msinv).len() == 3,
    );
    check(
        all,
        "R_EE - R_EE^-1 = (s - s^-1) Id",
        r.sub(&rinv) == Mat::identity(9).scale(&ctx.lp(&LaurentPoly::s_diff(1))),
    );
    let ee = e.tensor(&e);
    check(
        all,
        "all Y_EE commute with R_EE",
        GENERATORS.iter().all(|g| ee.action(*g).commutes_with(&r)),
    );

    // crossing set: build runs the intertwiner + Yang-Baxter gates
    let set = match CrossingSet::<ScalarField>::build(&ctx) {
        Ok(s) => {
            check(all, "crossing set built (cups/caps, R_XY, Yang-Baxter on 8 triples)", true);
            s
        }
        Err(e) => {
            check(all, &format!("crossing set built ({e})"), false);
            return;
        }
    };
    check(
        all,
        "Yang-Baxter holds on all eight colour triples",
        [Color::E, Color::F].iter().all(|&x| {
            [Color::E, Color::F].iter().all(|&y| {
                [Color::E, Color::F].iter().all(|&z| set.ybe_holds(x, y, z))
            })
        }),
    );

    // full twist and the 15-dimensional module
    let sub = match split_by_full_twist(&ctx, &set) {
        Ok(s) => {
            check(all, "full-twist eigenspaces have dimensions (15, 6, 6)", true);
            s
        }
        Err(e) => {
            check(all, &format!("full-twist split ({e})"), false);
            return;
        }
    };
    check(
        all,
        "pi P = I and M passes the quantum group relations",
        sub.proj.matmul(&sub.p).is_identity() && sub.m.check_relations(&ctx).passed(),
    );
    let q35 = ScalarField::from_poly(
        &quantum_integer(3).unwrap() * &quantum_integer(5).unwrap(),
    );
    check(all, "qdim(M) = [3][5] via the enhancement trace", sub.m.enhancement().trace() == q35);
    let hw_m = highest_weight_vectors(&sub.m).unwrap();
    check(
        all,
        "M has a single highest-weight vector of type (2,1)",
        hw_m.len() == 1 && hw_m[0].0 == WeightType::new(2, 1) && hw_m[0].1.len() == 1,
    );

    // R_MM
    let rmm = RmmPair::build_cleared(&set, &sub);
    check(all, "R_MM . R_MM^-1 = 1 (symbolic)", rmm.pos.matmul(&rmm.neg).is_identity());
    let mm = sub.m.tensor(&sub.m);
    check(
        all,
        "R_MM commutes with all Y_MM (symbolic)",
        GENERATORS.iter().all(|g| mm.action(*g).commutes_with(&rmm.pos)),
    );
    let eng = ColorEngine::color_m(&ctx, &sub, rmm.pos.clone(), rmm.neg.clone()).unwrap();
    let hw_total: usize = eng.hw.iter().map(|(_, v)| v.len()).sum();
    let m2: Vec<WeightType> = eng.multiplicity_two_types();
    check(
        all,
        "highest-weight space of M(x)M has dimension 10 with (3,1) and (1,2) twice",
        hw_total == 10
            && m2.len() == 2
            && m2.contains(&WeightType::new(3, 1))
            && m2.contains(&WeightType::new(1, 2)),
    );
    check(
        all,
        "R_MM restrictions: unit-monomial scalars on 1-dim types, unit-monomial dets on 2-dim",
        eng.hw.iter().all(|(nu, vecs)| {
            let m = eng.r_type_matrix(*nu).unwrap();
            if vecs.len() == 1 {
                m[(0, 0)].as_unit_monomial().is_some()
            } else {
                let det = m[(0, 0)]
                    .mul(&m[(1, 1)])
                    .sub(&m[(0, 1)].mul(&m[(1, 0)]));
                det.as_unit_monomial().is_some()
            }
        }),
    );
    // curl: closing one leg of a crossing gives a unit monomial multiple of 1
    let curl = parse_tangle("braid: s2\nclose: 3\n").unwrap();
    let id_cols: Vec<Vec<ScalarField>> = (0..3)
        .map(|i| {
            let mut v = vec![ScalarField::zero(); 225];
            v[i * 16] = ScalarField::one();
            v
        })
        .collect();
    let curl_out = eng.evaluate(&curl, &id_cols).unwrap();
    let c0 = curl_out[0][0].clone();
    check(
        all,
        "Markov curl: partial closure of R_MM is a unit monomial times the identity",
        c0.as_unit_monomial().is_some()
            && curl_out
                .iter()
                .enumerate()
                .all(|(i, v)| v.iter().enumerate().all(|(j, x)| {
                    if j == i * 16 { *x == c0 } else { x.is_zero() }
                })),
    );

    // Yang-Baxter for R_MM at a rational point
    let nctx = NumCtx::new(Rat::new(7.into(), 5.into()));
    let nset = CrossingSet::<Rat>::build(&nctx).unwrap();
    let nsub = split_by_full_twist(&nctx, &nset).unwrap();
    let npos = induced_braiding(&nset, &nsub, 1);
    let dims = [15usize, 15, 15];
    let mut ybe_ok = true;
    for trial in 0..3usize {
        let mut v = vec![<Rat as Scalar>::zero(); 3375];
        v[(trial * 1237) % 3375] = <Rat as Scalar>::one();
        let lhs = {
            let w = num_apply_pair(&npos, &dims, 0, &v);
            let w = num_apply_pair(&npos, &dims, 1, &w);
            num_apply_pair(&npos, &dims, 0, &w)
        };
        let rhs = {
            let w = num_apply_pair(&npos, &dims, 1, &v);
            let w = num_apply_pair(&npos, &dims, 0, &w);
            num_apply_pair(&npos, &dims, 1, &w)
        };
        ybe_ok &= lhs == rhs;
    }
    check(all, "R_MM satisfies Yang-Baxter on M(x)M(x)M (random rational point)", ybe_ok);

    // golden reference structure
    check(
        all,
        "reference: [6][4] t31 + [5][3] t12 equals the total difference (up to unit)",
        {
            let q64 = &quantum_integer(6).unwrap() * &quantum_integer(4).unwrap();
            let q53 = &quantum_integer(5).unwrap() * &quantum_integer(3).unwrap();
            let combo = &(&q64 * &golden_t31()) + &(&q53 * &golden_t12());
            combo.unit_equivalent(&golden_difference_total())
        },
    );
    check(
        all,
        "reference difference: h^0..h^12 vanish, |h^13| = 27095040, 13 factors divide",
        vassiliev_check(&golden_difference_total(), 14).all_passed
            && golden_difference_total()
                .exact_div(&vanishing_factor_product())
                .is_some(),
    );

    // skein suite
    check(
        all,
        "skein: chi=2 with three boundary faces forces three 2-gons",
        enumerate_face_profiles(2, 3, None).len() == 1,
    );
    check(
        all,
        "skein: punctured torus has exactly the four printed profiles",
        enumerate_face_profiles(0, 1, None).len() == 4,
    );
    let theta = lattice_quotient_graph(&LatticeSpec::new(1, -1).unwrap()).unwrap();
    check(
        all,
        "skein: minimal lattice quotient is the theta graph with full symmetry",
        theta.is_admissible_sphere_graph()
            && check_cyclic_symmetry(&theta)
            && check_turnover_symmetry(&theta),
    );
    let chiral = lattice_quotient_graph(&LatticeSpec::new(1, -4).unwrap()).unwrap();
    check(
        all,
        "skein: chiral quotient is 3-fold symmetric but fails the turnover",
        chiral.is_admissible_sphere_graph()
            && check_cyclic_symmetry(&chiral)
            && !check_turnover_symmetry(&chiral),
    );
}
