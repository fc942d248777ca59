//! Colour-generic tangle evaluation.
//!
//! An engine carries everything one colour needs: the braiding on the
//! tensor square (with inverse), the diagonal enhancement, and the
//! highest-weight basis of the tensor square.  The same code runs the
//! 15-dimensional module `M` and the fundamental `E`, symbolically or at
//! a rational point.

use su3q_arith::{Scalar, ScalarCtx};
use su3q_linalg::{solve_in_span, Mat};
use su3q_rep::{
    highest_weight_vectors, induced_braiding, qdim, r_matrix_ee, r_matrix_ee_inv,
    CrossingSet, RepModule, SubmoduleData, WeightType,
};

use crate::dsl::TangleProgram;
use crate::TangleError;

/// Column-major sparse matrix over any scalar; the braidings stay very
/// sparse because they preserve weights.
#[derive(Clone, Debug)]
pub struct SparseScalarMat<S> {
    n: usize,
    by_col: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> SparseScalarMat<S> {
    pub fn from_dense(m: &Mat<S>) -> Self {
        assert_eq!(m.rows(), m.cols());
        let n = m.rows();
        let mut by_col = vec![Vec::new(); n];
        for j in 0..n {
            for i in 0..n {
                if !m[(i, j)].is_zero() {
                    by_col[j].push((i, m[(i, j)].clone()));
                }
            }
        }
        SparseScalarMat { n, by_col }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.by_col.iter().map(|c| c.len()).sum()
    }

    /// Apply to legs `(leg, leg+1)` of a dense vector shaped `[d; 3]`.
    fn apply_pair(&self, d: usize, leg: usize, v: &[S]) -> Vec<S> {
        let block = d * d;
        assert_eq!(self.n, block);
        let post = if leg == 0 { d } else { 1 };
        let mut out = vec![S::zero(); v.len()];
        for (idx, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let post_part = idx % post;
            let rest = idx / post;
            let ab = rest % block;
            let pre = rest / block;
            for (cd, e) in &self.by_col[ab] {
                let out_idx = (pre * block + cd) * post + post_part;
                out[out_idx] = out[out_idx].add(&e.mul(x));
            }
        }
        out
    }
}

/// Everything needed to evaluate tangles coloured by one module.
#[derive(Clone)]
pub struct ColorEngine<S> {
    pub label: &'static str,
    /// Dimension of the colour module.
    pub dim: usize,
    pub r_pos: SparseScalarMat<S>,
    pub r_neg: SparseScalarMat<S>,
    /// Diagonal of the enhancement `T` on the colour module.
    pub t_diag: Vec<S>,
    /// Highest-weight types of the tensor square with their basis vectors
    /// (dense, length `dim * dim`), fixed once per engine.
    pub hw: Vec<(WeightType, Vec<Vec<S>>)>,
    /// Quantum dimensions aligned with `hw`.
    pub qdims: Vec<S>,
    /// Worker threads for the independent leg extensions of an evaluation.
    /// Results are summed in index order, so the output is deterministic.
    pub threads: usize,
}

impl<S: Scalar> ColorEngine<S> {
    /// Engine for the 15-dimensional module `M`.
    pub fn color_m<C: ScalarCtx<S>>(
        ctx: &C,
        sub: &SubmoduleData<S>,
        rmm_pos: Mat<S>,
        rmm_neg: Mat<S>,
    ) -> Result<Self, TangleError> {
        assert!(rmm_pos.matmul(&rmm_neg).is_identity(), "R_MM inverse pair mismatch");
        Self::from_parts(ctx, "M", &sub.m, rmm_pos, rmm_neg)
    }

    /// Engine for the fundamental module `E`.
    pub fn color_e<C: ScalarCtx<S>>(
        ctx: &C,
        set: &CrossingSet<S>,
    ) -> Result<Self, TangleError> {
        Self::from_parts(ctx, "E", &set.e, r_matrix_ee(ctx), r_matrix_ee_inv(ctx))
    }

    fn from_parts<C: ScalarCtx<S>>(
        ctx: &C,
        label: &'static str,
        module: &RepModule<S>,
        r_pos: Mat<S>,
        r_neg: Mat<S>,
    ) -> Result<Self, TangleError> {
        let t = module.enhancement();
        let mut t_diag = Vec::with_capacity(module.dim);
        for i in 0..module.dim {
            for j in 0..module.dim {
                if i != j {
                    assert!(t[(i, j)].is_zero(), "enhancement must be diagonal");
                }
            }
            t_diag.push(t[(i, i)].clone());
        }
        let square = module.tensor(module);
        let hw_raw = highest_weight_vectors(&square).expect("weight data present");
        let mut hw = Vec::new();
        let mut qdims = Vec::new();
        for (nu, vecs) in hw_raw {
            qdims.push(ctx.lp(&qdim(nu).expect("valid highest-weight type")));
            hw.push((nu, vecs));
        }
        Ok(ColorEngine {
            label,
            dim: module.dim,
            r_pos: SparseScalarMat::from_dense(&r_pos),
            r_neg: SparseScalarMat::from_dense(&r_neg),
            t_diag,
            hw,
            qdims,
            threads: 1,
        })
    }

    /// Multiplicity-two highest-weight types (the ones mutation can see).
    pub fn multiplicity_two_types(&self) -> Vec<WeightType> {
        self.hw
            .iter()
            .filter(|(_, vecs)| vecs.len() == 2)
            .map(|(nu, _)| *nu)
            .collect()
    }

    /// Evaluate the 2-tangle on vectors in the tensor square: tensor with
    /// the colour module at the closed position, push through the braid
    /// word, act by the enhancement on the closed leg and take the
    /// partial trace.
    ///
    /// Closing the rightmost strand routes the arc around the right and
    /// uses `T`; the leftmost strand closes around the left with `T^-1`.
    /// The middle strand is pulled to the right over strand 3, which adds
    /// a cancelling crossing pair around the word.
    pub fn evaluate(
        &self,
        t: &TangleProgram,
        inputs: &[Vec<S>],
    ) -> Result<Vec<Vec<S>>, TangleError> {
        let d = self.dim;
        let (word, closed, use_t_inv): (Vec<(u8, i8)>, usize, bool) = match t.closed {
            3 => (t.word.clone(), 2, false),
            1 => (t.word.clone(), 0, true),
            2 => {
                let mut w = Vec::with_capacity(t.word.len() + 2);
                w.push((2u8, -1i8));
                w.extend_from_slice(&t.word);
                w.push((2, 1));
                (w, 2, false)
            }
            _ => unreachable!("strand index validated at parse time"),
        };
        let t_vec: Vec<S> = if use_t_inv {
            self.t_diag
                .iter()
                .map(|x| x.inv().expect("enhancement is invertible"))
                .collect()
        } else {
            self.t_diag.clone()
        };
        let mut out = Vec::with_capacity(inputs.len());
        for v in inputs {
            if v.len() != d * d {
                return Err(TangleError::BadInputLength { got: v.len(), want: d * d });
            }
            let push_one = |k: usize| -> Vec<S> {
                // v with e_k inserted at the closed leg
                let mut u = vec![S::zero(); d * d * d];
                for (idx, x) in v.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let (i, j) = (idx / d, idx % d);
                    let legs = insert_at(closed, k, i, j);
                    u[(legs[0] * d + legs[1]) * d + legs[2]] = x.clone();
                }
                for (g, sign) in &word {
                    let r = if *sign > 0 { &self.r_pos } else { &self.r_neg };
                    u = r.apply_pair(d, (*g - 1) as usize, &u);
                }
                // enhancement on the closed leg, then the k-slice of that leg
                let mut acc = vec![S::zero(); d * d];
                for (idx, x) in u.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let legs = split3(idx, d);
                    if legs[closed] != k {
                        continue;
                    }
                    let mut rest = [0usize; 2];
                    let mut w = 0;
                    for (pos, leg) in legs.iter().enumerate() {
                        if pos != closed {
                            rest[w] = *leg;
                            w += 1;
                        }
                    }
                    let t_factor = &t_vec[k];
                    let target = rest[0] * d + rest[1];
                    acc[target] = acc[target].add(&x.mul(t_factor));
                }
                acc
            };
            let partials: Vec<Vec<S>> = if self.threads > 1 {
                let chunk = d.div_ceil(self.threads);
                std::thread::scope(|scope| {
                    let handles: Vec<_> = (0..d)
                        .collect::<Vec<_>>()
                        .chunks(chunk)
                        .map(|ks| {
                            let ks = ks.to_vec();
                            let push_one = &push_one;
                            scope.spawn(move || {
                                ks.into_iter().map(push_one).collect::<Vec<_>>()
                            })
                        })
                        .collect();
                    handles
                        .into_iter()
                        .flat_map(|h| h.join().expect("worker panicked"))
                        .collect()
                })
            } else {
                (0..d).map(push_one).collect()
            };
            let mut acc = vec![S::zero(); d * d];
            for part in partials {
                for (slot, x) in acc.iter_mut().zip(part) {
                    if !x.is_zero() {
                        *slot = slot.add(&x);
                    }
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// The matrix of the tangle on the type-`nu` highest-weight space:
    /// columns are the exact coordinates of the images of the basis.
    pub fn restrict_to_type(
        &self,
        images: &[Vec<S>],
        nu: WeightType,
    ) -> Result<Mat<S>, TangleError> {
        let basis = self.hw_basis(nu);
        let k = basis.len();
        assert_eq!(images.len(), k);
        let mut cols = Vec::with_capacity(k);
        for img in images {
            let coeffs =
                solve_in_span(img, basis).map_err(|_| TangleError::NotInSpan)?;
            cols.push(coeffs);
        }
        Ok(Mat::from_cols(cols))
    }

    pub fn hw_basis(&self, nu: WeightType) -> &[Vec<S>] {
        &self
            .hw
            .iter()
            .find(|(t, _)| *t == nu)
            .expect("requested highest-weight type exists")
            .1
    }

    /// Evaluate the tangle restricted to one highest-weight type.
    pub fn type_matrix(
        &self,
        t: &TangleProgram,
        nu: WeightType,
    ) -> Result<Mat<S>, TangleError> {
        let basis = self.hw_basis(nu).to_vec();
        let images = self.evaluate(t, &basis)?;
        self.restrict_to_type(&images, nu)
    }

    /// The braiding of the tensor square restricted to one type (the
    /// conjugator used by mutation).
    pub fn r_type_matrix(&self, nu: WeightType) -> Result<Mat<S>, TangleError> {
        let basis = self.hw_basis(nu).to_vec();
        let d = self.dim;
        let images: Vec<Vec<S>> = basis
            .iter()
            .map(|v| {
                // apply the braiding directly on the two legs
                let mut out = vec![S::zero(); d * d];
                for (idx, x) in v.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (cd, e) in &self.r_pos.by_col[idx] {
                        out[*cd] = out[*cd].add(&e.mul(x));
                    }
                }
                out
            })
            .collect();
        self.restrict_to_type(&images, nu)
    }

    /// Closure invariant via the isotypic decomposition:
    /// `sum_nu tr(gamma_nu) qdim(nu)` over all highest-weight types.
    pub fn closure_invariant_hw(
        &self,
        t: &TangleProgram,
    ) -> Result<S, TangleError> {
        let mut acc = S::zero();
        for ((nu, _), q) in self.hw.iter().zip(&self.qdims) {
            let m = self.type_matrix(t, *nu)?;
            acc = acc.add(&m.trace().mul(q));
        }
        Ok(acc)
    }

    /// Oracle route: the full quantum trace `tr(T (x) T . gamma)` of an
    /// explicit endomorphism of the tensor square.
    pub fn closure_invariant_trace(&self, gamma: &Mat<S>) -> S {
        let d = self.dim;
        assert_eq!(gamma.rows(), d * d);
        let mut acc = S::zero();
        for i in 0..d {
            for j in 0..d {
                let idx = i * d + j;
                let g = &gamma[(idx, idx)];
                if !g.is_zero() {
                    acc = acc.add(&self.t_diag[i].mul(&self.t_diag[j]).mul(g));
                }
            }
        }
        acc
    }

    /// Materialise the tangle as a full endomorphism of the tensor square
    /// (test oracle; the pipeline itself stays lazy).
    pub fn full_endomorphism(&self, t: &TangleProgram) -> Result<Mat<S>, TangleError> {
        let d2 = self.dim * self.dim;
        let basis: Vec<Vec<S>> = (0..d2)
            .map(|i| {
                let mut v = vec![S::zero(); d2];
                v[i] = S::one();
                v
            })
            .collect();
        let images = self.evaluate(t, &basis)?;
        Ok(Mat::from_cols(images))
    }
}

/// Numeric engine for the colour `M`, built from scratch at a rational
/// point; the fast wiring check for the whole pipeline.
pub fn build_color_m_engine<S: Scalar, C: ScalarCtx<S>>(
    ctx: &C,
    set: &CrossingSet<S>,
    sub: &SubmoduleData<S>,
) -> Result<ColorEngine<S>, TangleError> {
    let pos = induced_braiding(set, sub, 1);
    let neg = induced_braiding(set, sub, -1);
    ColorEngine::color_m(ctx, sub, pos, neg)
}

fn insert_at(closed: usize, k: usize, i: usize, j: usize) -> [usize; 3] {
    match closed {
        0 => [k, i, j],
        1 => [i, k, j],
        2 => [i, j, k],
        _ => unreachable!(),
    }
}

fn split3(idx: usize, d: usize) -> [usize; 3] {
    [idx / (d * d), (idx / d) % d, idx % d]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_tangle;
    use su3q_arith::{quantum_integer, LaurentPoly, NumCtx, Rat, ScalarCtx, ScalarField, SymCtx};
    use su3q_rep::split_by_full_twist;

    fn engine_e_sym() -> ColorEngine<ScalarField> {
        let ctx = SymCtx;
        let set = CrossingSet::<ScalarField>::build(&ctx).unwrap();
        ColorEngine::color_e(&ctx, &set).unwrap()
    }

    #[test]
    fn e_square_has_two_singleton_types() {
        let eng = engine_e_sym();
        assert_eq!(eng.hw.len(), 2);
        let types: Vec<WeightType> = eng.hw.iter().map(|(nu, _)| *nu).collect();
        assert!(types.contains(&WeightType::new(2, 0)));
        assert!(types.contains(&WeightType::new(0, 1)));
        for (_, vecs) in &eng.hw {
            assert_eq!(vecs.len(), 1);
        }
        assert!(eng.multiplicity_two_types().is_empty());
    }

    #[test]
    fn empty_braid_closure_scales_by_qdim() {
        let ctx = SymCtx;
        let eng = engine_e_sym();
        let t = parse_tangle("braid:\nclose: 3\n").unwrap();
        let mut v = vec![ScalarField::zero(); 9];
        v[1] = ctx.s_pow(2);
        v[5] = ScalarField::one();
        let out = eng.evaluate(&t, &[v.clone()]).unwrap();
        let three = ctx.lp(&quantum_integer(3).unwrap());
        for (x, y) in out[0].iter().zip(&v) {
            assert_eq!(*x, three.mul(y));
        }
    }

    #[test]
    fn single_crossing_curl_is_unit_monomial() {
        let ctx = SymCtx;
        let eng = engine_e_sym();
        for text in [
            "braid: s2\nclose: 3\n",
            "braid: s2^-1\nclose: 3\n",
            "braid: s1\nclose: 1\n",
            "braid: s1^-1\nclose: 1\n",
            "braid: s1\nclose: 2\n",
            "braid: s2\nclose: 2\n",
        ] {
            let t = parse_tangle(text).unwrap();
            let basis: Vec<Vec<ScalarField>> = (0..9)
                .map(|i| {
                    let mut v = vec![ScalarField::zero(); 9];
                    v[i] = ScalarField::one();
                    v
                })
                .collect();
            let out = eng.evaluate(&t, &basis).unwrap();
            // the map is c * identity with c a unit monomial
            let c = out[0][0].clone();
            assert!(c.as_unit_monomial().is_some(), "curl scalar {c:?}");
            for (i, img) in out.iter().enumerate() {
                for (j, x) in img.iter().enumerate() {
                    if i == j {
                        assert_eq!(*x, c);
                    } else {
                        assert!(x.is_zero());
                    }
                }
            }
            let _ = ctx;
        }
    }

    #[test]
    fn closure_routes_agree_on_identity_and_crossing() {
        let eng = engine_e_sym();
        for text in ["braid:\nclose: 3\n", "braid: s1\nclose: 3\n", "braid: s1 s1\nclose: 2\n"] {
            let t = parse_tangle(text).unwrap();
            let via_hw = eng.closure_invariant_hw(&t).unwrap();
            let gamma = eng.full_endomorphism(&t).unwrap();
            let via_trace = eng.closure_invariant_trace(&gamma);
            assert_eq!(via_hw, via_trace, "routes disagree on {text:?}");
        }
    }

    #[test]
    fn identity_closures_give_qdim_powers() {
        let eng = engine_e_sym();
        let three = quantum_integer(3).unwrap();
        // gamma = identity endomorphism: full quantum trace is qdim^2
        let expect_sq = ScalarField::from_poly(&three * &three);
        assert_eq!(eng.closure_invariant_trace(&Mat::identity(9)), expect_sq);
        // the empty-braid tangle carries an extra closed circle, so its
        // endomorphism is [3] . id and the closure is qdim^3
        let t = parse_tangle("braid:\nclose: 1\n").unwrap();
        let inv = eng.closure_invariant_hw(&t).unwrap();
        let expect_cube = ScalarField::from_poly(&(&three * &three) * &three);
        assert_eq!(inv, expect_cube);
    }

    #[test]
    fn numeric_m_engine_curl_and_identity() {
        let ctx = NumCtx::new(Rat::new(7.into(), 5.into()));
        let set = CrossingSet::<Rat>::build(&ctx).unwrap();
        let sub = split_by_full_twist(&ctx, &set).unwrap();
        let eng = build_color_m_engine(&ctx, &set, &sub).unwrap();
        // hw dimension layout of M (x) M: 10 vectors, types (3,1) and (1,2) twice
        let total: usize = eng.hw.iter().map(|(_, v)| v.len()).sum();
        assert_eq!(total, 10);
        assert_eq!(eng.multiplicity_two_types().len(), 2);
        // empty braid scales by [3][5] at a0
        let t = parse_tangle("braid:\nclose: 3\n").unwrap();
        let q35 = ctx.lp(
            &(&quantum_integer(3).unwrap() * &quantum_integer(5).unwrap()),
        );
        let mut v = vec![Rat::zero(); 225];
        v[7] = Rat::one();
        let out = eng.evaluate(&t, &[v]).unwrap();
        assert_eq!(out[0][7], q35);
        // curl on M: single crossing closure is a unit monomial times id
        let curl = parse_tangle("braid: s2\nclose: 3\n").unwrap();
        let mut w = vec![Rat::zero(); 225];
        w[31] = Rat::one();
        let out = eng.evaluate(&curl, &[w]).unwrap();
        let c = out[0][31].clone();
        assert!(!c.is_zero());
        for (j, x) in out[0].iter().enumerate() {
            if j != 31 {
                assert!(x.is_zero(), "curl output not diagonal at {j}");
            }
        }
        let _ = LaurentPoly::zero();
    }
}
