//! The 15-dimensional module `M` inside `E (x) E (x) F`, and the induced
//! braiding on `M (x) M`.
//!
//! The full twist acts by a scalar on each irreducible summand; its three
//! eigenspaces have dimensions 15, 6 and 6.  The 15-dimensional one is `M`.
//! Eigenvectors are extracted weight block by weight block, so the columns
//! of the inclusion `P` are weight-pure and `K1, K2` act diagonally on `M`.
//!
//! `R_MM` is the nine-crossing positive braid taking the first three
//! strands of `(E,E,F,E,E,F)` over the last three, compressed by the
//! projection: `R_MM = (pi (x) pi) B (P (x) P)`, computed column by column
//! and never materialised as a dense 729x729 product.

use std::collections::HashMap;

use su3q_arith::{LaurentPoly, Scalar, ScalarCtx, ScalarField};
use su3q_linalg::{
    clear_scalar_vec, dump_scalar_mat, fnv1a64, num_apply_pair, parse_scalar_mat,
    partitioned_projection, sparse_apply_pair, Mat, PolyVec, SparsePolyMat,
};

use crate::braid::{Color, CrossingSet};
use crate::module::RepModule;
#[cfg(test)]
use crate::module::GENERATORS;
use crate::weights::{blocked_eigenspace, highest_weight_vectors, preserves_weights, WeightType};
use crate::RepError;

/// The word realising "three strands over three": each crossing exchanges
/// one of the first three strands with one of the last three.
pub const BLOCK_SWAP_WORD: [usize; 9] = [3, 2, 1, 4, 3, 2, 5, 4, 3];

#[derive(Clone, Debug)]
pub struct SubmoduleData<S> {
    /// The ambient module `E (x) E (x) F`.
    pub eef: RepModule<S>,
    /// 27x15 inclusion of `M`; columns are weight-pure.
    pub p: Mat<S>,
    /// 15x27 projection with `proj . p = I`.
    pub proj: Mat<S>,
    /// The 15-dimensional module in the `p`-column basis.
    pub m: RepModule<S>,
    /// Full-twist eigenvalue per highest-weight type of the ambient module.
    pub twist_eigenvalues: Vec<(WeightType, S)>,
}

/// Split `E (x) E (x) F` by full-twist eigenspaces and assemble `M`.
///
/// Eigenvalues are read off highest-weight vectors (never from
/// characteristic polynomials); dimensions other than (15, 6, 6) abort.
pub fn split_by_full_twist<S: Scalar, C: ScalarCtx<S>>(
    ctx: &C,
    set: &CrossingSet<S>,
) -> Result<SubmoduleData<S>, RepError> {
    let eef = set.e.tensor(&set.e).tensor(&set.f);
    let ft = set.full_twist_3(&[Color::E, Color::E, Color::F]);
    assert!(
        preserves_weights(&ft, &eef.weights),
        "full twist must preserve weights"
    );

    // One eigenvalue per highest-weight type, read off a highest-weight vector.
    let hw = highest_weight_vectors(&eef)?;
    let mut twist_eigenvalues: Vec<(WeightType, S)> = Vec::new();
    for (nu, vecs) in &hw {
        let v = &vecs[0];
        let w = ft.apply(v);
        let pivot = v.iter().position(|x| !x.is_zero()).expect("nonzero hw vector");
        let lambda = w[pivot].div(&v[pivot]).expect("nonzero pivot");
        for vv in vecs {
            let wv = ft.apply(vv);
            for (x, y) in wv.iter().zip(vv) {
                assert_eq!(*x, lambda.mul(y), "full twist is not scalar on type {nu}");
            }
        }
        twist_eigenvalues.push((*nu, lambda));
    }

    let lam_m = twist_eigenvalues
        .iter()
        .find(|(nu, _)| *nu == WeightType::new(2, 1))
        .map(|(_, l)| l.clone())
        .expect("type (2,1) present in E (x) E (x) F");
    let others: Vec<S> = {
        let mut seen: Vec<S> = Vec::new();
        for (nu, l) in &twist_eigenvalues {
            if *nu != WeightType::new(2, 1) && !seen.contains(l) {
                seen.push(l.clone());
            }
        }
        seen
    };
    assert!(
        !others.contains(&lam_m) && others.len() == 2,
        "full twist eigenvalues must split M from its complement"
    );

    let m_space = blocked_eigenspace(&ft, &eef.weights, &lam_m);
    let mut q_vectors: Vec<Vec<S>> = Vec::new();
    let mut q_dims = Vec::new();
    for l in &others {
        let es = blocked_eigenspace(&ft, &eef.weights, l);
        q_dims.push(es.len());
        q_vectors.extend(es.into_iter().map(|(v, _)| v));
    }
    if m_space.len() != 15 || q_dims != vec![6, 6] {
        let mut dims = vec![m_space.len()];
        dims.extend(q_dims);
        return Err(RepError::BadTwistSplit(dims));
    }

    let m_weights: Vec<(i64, i64)> = m_space.iter().map(|(_, w)| *w).collect();
    let p = Mat::from_cols(m_space.into_iter().map(|(v, _)| v).collect());
    let q = Mat::from_cols(q_vectors);
    let proj = partitioned_projection(&p, &q)?;

    let act = |mat: &Mat<S>| proj.matmul(mat).matmul(&p);
    let m = RepModule {
        dim: 15,
        x1p: act(&eef.x1p),
        x1m: act(&eef.x1m),
        x2p: act(&eef.x2p),
        x2m: act(&eef.x2m),
        k1: act(&eef.k1),
        k1i: act(&eef.k1i),
        k2: act(&eef.k2),
        k2i: act(&eef.k2i),
        weights: m_weights,
    };
    assert!(
        m.check_relations(ctx).passed(),
        "constructed M fails the quantum group relations"
    );
    Ok(SubmoduleData { eef, p, proj, m, twist_eigenvalues })
}

/// The crossing operations of the block-swap braid as `(leg, colours)`
/// triples, tracked through the word.  `sign = -1` yields the inverse braid.
pub fn window_schedule(sign: i8) -> Vec<(usize, Color, Color)> {
    let mut word = [Color::E, Color::E, Color::F, Color::E, Color::E, Color::F];
    let positions: Vec<usize> = if sign > 0 {
        BLOCK_SWAP_WORD.to_vec()
    } else {
        BLOCK_SWAP_WORD.iter().rev().copied().collect()
    };
    let mut out = Vec::with_capacity(9);
    for pos in positions {
        let a = word[pos - 1];
        let b = word[pos];
        out.push((pos - 1, a, b));
        word.swap(pos - 1, pos);
    }
    out
}

/// Dense generic route for `R_MM^{+-1}`: used by the numeric lanes and as
/// a small-scale oracle for the cleared symbolic route.
pub fn induced_braiding<S: Scalar>(set: &CrossingSet<S>, sub: &SubmoduleData<S>, sign: i8) -> Mat<S> {
    let dims = [3usize; 6];
    let schedule = window_schedule(sign);
    let mut out = Mat::zeros(225, 225);
    let projt = sub.proj.transpose();
    for j1 in 0..15 {
        let c1 = sub.p.col(j1);
        for j2 in 0..15 {
            let c2 = sub.p.col(j2);
            // w = c1 (x) c2 in the 729-dimensional ambient square
            let mut w = vec![S::zero(); 729];
            for (i1, x) in c1.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (i2, y) in c2.iter().enumerate() {
                    if !y.is_zero() {
                        w[i1 * 27 + i2] = x.mul(y);
                    }
                }
            }
            for (leg, a, b) in &schedule {
                let r = set.r(*a, *b, sign);
                w = num_apply_pair(r, &dims, *leg, &w);
            }
            // column = (proj (x) proj) w, via proj W proj^T
            let wmat = Mat::from_fn(27, 27, |r, c| w[r * 27 + c].clone());
            let col = sub.proj.matmul(&wmat).matmul(&projt);
            for i1 in 0..15 {
                for i2 in 0..15 {
                    out[(i1 * 15 + i2, j1 * 15 + j2)] = col[(i1, i2)].clone();
                }
            }
        }
    }
    out
}

/// Cleared crossing matrices for the symbolic hot paths: entries of every
/// `R_XY^{+-1}` are Laurent polynomials.
pub fn cleared_crossings(
    set: &CrossingSet<ScalarField>,
) -> HashMap<(Color, Color, i8), SparsePolyMat> {
    let mut out = HashMap::new();
    for x in [Color::E, Color::F] {
        for y in [Color::E, Color::F] {
            for sign in [1i8, -1] {
                let (m, den) = SparsePolyMat::from_dense_cleared(set.r(x, y, sign));
                assert!(
                    den.is_one(),
                    "crossing R_{x:?}{y:?}^{sign} has non-polynomial entries"
                );
                out.insert((x, y, sign), m);
            }
        }
    }
    out
}

/// Cleared columns of the inclusion `P` (primitive Laurent vectors).
pub fn cleared_p_columns(sub: &SubmoduleData<ScalarField>) -> Vec<PolyVec> {
    (0..15)
        .map(|j| {
            let col = sub.p.col(j);
            let (nums, _den) = clear_scalar_vec(&col);
            let mut g = LaurentPoly::zero();
            for p in &nums {
                if !p.is_zero() {
                    g = g.gcd(p);
                }
            }
            nums.into_iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(i, p)| {
                    let q = if g.is_one() || g.is_zero() {
                        p
                    } else {
                        p.exact_div(&g).expect("content divides")
                    };
                    (i, q)
                })
                .collect()
        })
        .collect()
}

/// Cleared rows of the projection: `(sparse row, denominator)` pairs with
/// `pi[k, j] = row_k[j] / den_k`.
pub fn cleared_proj_rows(
    sub: &SubmoduleData<ScalarField>,
) -> Vec<(Vec<(usize, LaurentPoly)>, LaurentPoly)> {
    (0..15)
        .map(|k| {
            let row: Vec<ScalarField> = sub.proj.row(k).to_vec();
            let (nums, den) = clear_scalar_vec(&row);
            let sparse: Vec<(usize, LaurentPoly)> = nums
                .into_iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .collect();
            (sparse, den)
        })
        .collect()
}

/// Fraction-free symbolic route for `R_MM^{+-1}`: pushes the 225 cleared
/// basis columns through the nine sparse crossings and contracts with the
/// cleared projection rows, restricted to the matching weight block.
pub fn induced_braiding_cleared(
    set: &CrossingSet<ScalarField>,
    sub: &SubmoduleData<ScalarField>,
    sign: i8,
) -> Mat<ScalarField> {
    let dims = [3usize; 6];
    let crossings = cleared_crossings(set);
    let pcols = cleared_p_columns(sub);
    let prows = cleared_proj_rows(sub);
    let schedule = window_schedule(sign);
    let mw = &sub.m.weights;

    let mut out: Mat<ScalarField> = Mat::zeros(225, 225);
    for j1 in 0..15 {
        for j2 in 0..15 {
            let mut w: PolyVec = Vec::new();
            for (i1, x) in &pcols[j1] {
                for (i2, y) in &pcols[j2] {
                    w.push((i1 * 27 + i2, x * y));
                }
            }
            w.sort_by_key(|(i, _)| *i);
            for (leg, a, b) in &schedule {
                let r = &crossings[&(*a, *b, sign)];
                w = sparse_apply_pair(r, &dims, *leg, &w);
            }
            let wmap: HashMap<usize, &LaurentPoly> =
                w.iter().map(|(i, p)| (*i, p)).collect();
            let col_weight = (mw[j1].0 + mw[j2].0, mw[j1].1 + mw[j2].1);
            for i1 in 0..15 {
                for i2 in 0..15 {
                    if (mw[i1].0 + mw[i2].0, mw[i1].1 + mw[i2].1) != col_weight {
                        continue;
                    }
                    let mut acc = LaurentPoly::zero();
                    for (k1, c1) in &prows[i1].0 {
                        for (k2, c2) in &prows[i2].0 {
                            if let Some(p) = wmap.get(&(k1 * 27 + k2)) {
                                acc = &acc + &(&(c1 * c2) * *p);
                            }
                        }
                    }
                    if !acc.is_zero() {
                        out[(i1 * 15 + i2, j1 * 15 + j2)] =
                            ScalarField::new(acc, &prows[i1].1 * &prows[i2].1);
                    }
                }
            }
        }
    }
    out
}

/// A braiding together with its inverse.
#[derive(Clone, Debug)]
pub struct RmmPair<S> {
    pub pos: Mat<S>,
    pub neg: Mat<S>,
}

impl RmmPair<ScalarField> {
    pub fn build_cleared(
        set: &CrossingSet<ScalarField>,
        sub: &SubmoduleData<ScalarField>,
    ) -> Self {
        RmmPair {
            pos: induced_braiding_cleared(set, sub, 1),
            neg: induced_braiding_cleared(set, sub, -1),
        }
    }
}

/// Serialise a matrix with a content-hash header.
pub fn save_mat_with_hash(m: &Mat<ScalarField>) -> String {
    let body = dump_scalar_mat(m);
    format!("# hash {:016x}\n{}", fnv1a64(body.as_bytes()), body)
}

/// Parse a matrix saved by [`save_mat_with_hash`], verifying the hash.
pub fn load_mat_with_hash(text: &str) -> Result<(Mat<ScalarField>, u64), String> {
    let Some((first, rest)) = text.split_once('\n') else {
        return Err("empty file".into());
    };
    let Some(hash_hex) = first.strip_prefix("# hash ") else {
        return Err("missing hash header".into());
    };
    let expect = u64::from_str_radix(hash_hex.trim(), 16).map_err(|e| e.to_string())?;
    let got = fnv1a64(rest.as_bytes());
    if got != expect {
        return Err(format!("hash mismatch: header {expect:016x}, content {got:016x}"));
    }
    let m = parse_scalar_mat(rest).map_err(|e| e.to_string())?;
    Ok((m, got))
}

#[cfg(test)]
mod tests {
    use super::*;
    use su3q_arith::{quantum_integer, NumCtx, Rat, SymCtx};

    fn num_ctx() -> NumCtx {
        NumCtx::new(Rat::new(7.into(), 5.into()))
    }

    #[test]
    fn split_numeric_dimensions_and_relations() {
        let ctx = num_ctx();
        let set: CrossingSet<Rat> = CrossingSet::build(&ctx).unwrap();
        let sub = split_by_full_twist(&ctx, &set).unwrap();
        assert_eq!(sub.m.dim, 15);
        assert!(sub.proj.matmul(&sub.p).is_identity());
        // highest weight of M is (2,1), and it is the only type
        let hw = highest_weight_vectors(&sub.m).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].0, WeightType::new(2, 1));
        assert_eq!(hw[0].1.len(), 1);
    }

    #[test]
    fn split_symbolic_m_and_qdim() {
        let ctx = SymCtx;
        let set: CrossingSet<ScalarField> = CrossingSet::build(&ctx).unwrap();
        let sub = split_by_full_twist(&ctx, &set).unwrap();
        // full-twist eigenvalues are unit monomials
        for (nu, l) in &sub.twist_eigenvalues {
            assert!(
                l.as_unit_monomial().is_some(),
                "twist eigenvalue for {nu} is not a unit monomial: {l:?}"
            );
        }
        // qdim via the enhancement trace: [3][5]
        let t = sub.m.enhancement();
        let q35 = &quantum_integer(3).unwrap() * &quantum_integer(5).unwrap();
        assert_eq!(t.trace(), ScalarField::from_poly(q35));
        // K matrices diagonal with the recorded weights
        for (i, (m1, m2)) in sub.m.weights.iter().enumerate() {
            assert_eq!(sub.m.k1[(i, i)], ScalarField::from_poly(LaurentPoly::a_pow(*m1)));
            assert_eq!(sub.m.k2[(i, i)], ScalarField::from_poly(LaurentPoly::a_pow(*m2)));
        }
    }

    #[test]
    fn rmm_numeric_inverse_and_intertwiner() {
        let ctx = num_ctx();
        let set: CrossingSet<Rat> = CrossingSet::build(&ctx).unwrap();
        let sub = split_by_full_twist(&ctx, &set).unwrap();
        let pos = induced_braiding(&set, &sub, 1);
        let neg = induced_braiding(&set, &sub, -1);
        assert!(pos.matmul(&neg).is_identity());
        let mm = sub.m.tensor(&sub.m);
        for g in GENERATORS {
            assert!(mm.action(g).commutes_with(&pos), "R_MM vs {:?}", g);
        }
    }

    #[test]
    fn hash_round_trip() {
        let ctx = SymCtx;
        let mut m: Mat<ScalarField> = Mat::zeros(2, 2);
        m[(0, 1)] = ctx.s_pow(3);
        let text = save_mat_with_hash(&m);
        let (back, _h) = load_mat_with_hash(&text).unwrap();
        assert_eq!(back[(0, 1)], m[(0, 1)]);
        // corruption detected
        let bad = text.replace("6:1", "6:2");
        assert_ne!(bad, text);
        assert!(load_mat_with_hash(&bad).is_err());
    }
}
