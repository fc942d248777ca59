//! Weight bookkeeping: highest-weight vectors, types and quantum dimensions.
//!
//! All nullspace work here is done weight block by weight block.  `X1+`
//! shifts a weight by `(2, -1)` and `X2+` by `(-1, 2)`, so the kernel of
//! both restricted to one weight space is a small independent system; no
//! general eigensolving is ever needed.

use std::collections::BTreeMap;

use su3q_arith::{quantum_integer, LaurentPoly, Scalar, ScalarField};
use su3q_linalg::{nullspace, nullspace_cleared, Mat};

use crate::module::RepModule;
use crate::RepError;

/// The type `(m1, m2)` of a highest weight vector: the exponents of `a` in
/// the `K1`- and `K2`-eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightType {
    pub m1: i64,
    pub m2: i64,
}

impl WeightType {
    pub fn new(m1: i64, m2: i64) -> Self {
        WeightType { m1, m2 }
    }
}

impl std::fmt::Display for WeightType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.m1, self.m2)
    }
}

/// Quantum dimension `[m1+1][m2+1][m1+m2+2]/[2]` (the division is exact).
pub fn qdim(nu: WeightType) -> Result<LaurentPoly, RepError> {
    if nu.m1 < 0 || nu.m2 < 0 {
        return Err(RepError::NegativeWeight(nu.m1, nu.m2));
    }
    let p = &(&quantum_integer(nu.m1 + 1).unwrap() * &quantum_integer(nu.m2 + 1).unwrap())
        * &quantum_integer(nu.m1 + nu.m2 + 2).unwrap();
    let two = quantum_integer(2).unwrap();
    Ok(p.exact_div(&two).expect("quantum dimension division is exact"))
}

/// Classical dimension `(m1+1)(m2+1)(m1+m2+2)/2`.
pub fn classical_dim(nu: WeightType) -> i64 {
    (nu.m1 + 1) * (nu.m2 + 1) * (nu.m1 + nu.m2 + 2) / 2
}

/// Indices of the module basis grouped by weight.
pub fn weight_blocks<S>(module: &RepModule<S>) -> BTreeMap<(i64, i64), Vec<usize>> {
    let mut blocks: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    for (i, w) in module.weights.iter().enumerate() {
        blocks.entry(*w).or_default().push(i);
    }
    blocks
}

/// The raising operators restricted to one weight block, stacked: rows are
/// the target blocks of `X1+` (weight + (2,-1)) and `X2+` (weight + (-1,2)),
/// columns the source block.
fn stacked_raising<S: Scalar>(
    module: &RepModule<S>,
    blocks: &BTreeMap<(i64, i64), Vec<usize>>,
    mu: (i64, i64),
) -> Mat<S> {
    let src = &blocks[&mu];
    let empty = Vec::new();
    let tgt1 = blocks.get(&(mu.0 + 2, mu.1 - 1)).unwrap_or(&empty);
    let tgt2 = blocks.get(&(mu.0 - 1, mu.1 + 2)).unwrap_or(&empty);
    Mat::from_fn(tgt1.len() + tgt2.len(), src.len(), |i, j| {
        if i < tgt1.len() {
            module.x1p[(tgt1[i], src[j])].clone()
        } else {
            module.x2p[(tgt2[i - tgt1.len()], src[j])].clone()
        }
    })
}

/// Highest-weight vectors of a module: a basis of `ker X1+ \cap ker X2+`,
/// grouped into simultaneous K-eigenvectors by weight and tagged with the
/// weight type.  Results are sorted by type, descending.
pub fn highest_weight_vectors<S: Scalar>(
    module: &RepModule<S>,
) -> Result<Vec<(WeightType, Vec<Vec<S>>)>, RepError> {
    let blocks = weight_blocks(module);
    let mut out = Vec::new();
    for (&mu, idxs) in &blocks {
        let stacked = stacked_raising(module, &blocks, mu);
        let kernel = nullspace(&stacked);
        if kernel.is_empty() {
            continue;
        }
        if mu.0 < 0 || mu.1 < 0 {
            return Err(RepError::NegativeWeight(mu.0, mu.1));
        }
        let vecs = kernel
            .into_iter()
            .map(|small| scatter(module.dim, idxs, small))
            .collect();
        out.push((WeightType::new(mu.0, mu.1), vecs));
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

/// Symbolic variant: kernel vectors come back denominator-cleared as
/// primitive Laurent-polynomial vectors.
pub fn highest_weight_vectors_cleared(
    module: &RepModule<ScalarField>,
) -> Result<Vec<(WeightType, Vec<Vec<LaurentPoly>>)>, RepError> {
    let blocks = weight_blocks(module);
    let mut out = Vec::new();
    for (&mu, idxs) in &blocks {
        let stacked = stacked_raising(module, &blocks, mu);
        let kernel = nullspace_cleared(&stacked);
        if kernel.is_empty() {
            continue;
        }
        if mu.0 < 0 || mu.1 < 0 {
            return Err(RepError::NegativeWeight(mu.0, mu.1));
        }
        let vecs = kernel
            .into_iter()
            .map(|small| scatter_poly(module.dim, idxs, small))
            .collect();
        out.push((WeightType::new(mu.0, mu.1), vecs));
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

fn scatter<S: Scalar>(dim: usize, idxs: &[usize], small: Vec<S>) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    for (slot, x) in idxs.iter().zip(small) {
        v[*slot] = x;
    }
    v
}

fn scatter_poly(dim: usize, idxs: &[usize], small: Vec<LaurentPoly>) -> Vec<LaurentPoly> {
    let mut v = vec![LaurentPoly::zero(); dim];
    for (slot, x) in idxs.iter().zip(small) {
        v[*slot] = x;
    }
    v
}

/// Eigenspace of a weight-preserving operator for a known eigenvalue,
/// computed block by block.  Returned vectors are weight-pure.
pub fn blocked_eigenspace<S: Scalar>(
    op: &Mat<S>,
    weights: &[(i64, i64)],
    lambda: &S,
) -> Vec<(Vec<S>, (i64, i64))> {
    let mut blocks: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        blocks.entry(*w).or_default().push(i);
    }
    let mut out = Vec::new();
    for (mu, idxs) in &blocks {
        let sub = Mat::from_fn(idxs.len(), idxs.len(), |i, j| op[(idxs[i], idxs[j])].clone());
        let shifted = sub.sub(&Mat::identity(idxs.len()).scale(lambda));
        for small in nullspace(&shifted) {
            out.push((scatter(weights.len(), idxs, small), *mu));
        }
    }
    out
}

/// Symbolic blocked eigenspace with denominator-cleared vectors.
pub fn blocked_eigenspace_cleared(
    op: &Mat<ScalarField>,
    weights: &[(i64, i64)],
    lambda: &ScalarField,
) -> Vec<(Vec<LaurentPoly>, (i64, i64))> {
    let mut blocks: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        blocks.entry(*w).or_default().push(i);
    }
    let mut out = Vec::new();
    for (mu, idxs) in &blocks {
        let sub = Mat::from_fn(idxs.len(), idxs.len(), |i, j| op[(idxs[i], idxs[j])].clone());
        let shifted = sub.sub(&Mat::identity(idxs.len()).scale(lambda));
        for small in nullspace_cleared(&shifted) {
            out.push((scatter_poly(weights.len(), idxs, small), *mu));
        }
    }
    out
}

/// Check that an operator never moves weight: entries between different
/// weight blocks are zero.
pub fn preserves_weights<S: Scalar>(op: &Mat<S>, weights: &[(i64, i64)]) -> bool {
    for i in 0..op.rows() {
        for j in 0..op.cols() {
            if weights[i] != weights[j] && !op[(i, j)].is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::fundamental_e;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::One;
    use su3q_arith::SymCtx;

    #[test]
    fn qdim_values() {
        // (3,1) -> [6][4], (1,2) -> [5][3]
        let q64 = &quantum_integer(6).unwrap() * &quantum_integer(4).unwrap();
        assert_eq!(qdim(WeightType::new(3, 1)).unwrap(), q64);
        let q53 = &quantum_integer(5).unwrap() * &quantum_integer(3).unwrap();
        assert_eq!(qdim(WeightType::new(1, 2)).unwrap(), q53);
        assert_eq!(qdim(WeightType::new(2, 1)).unwrap(), q53);
        assert!(qdim(WeightType::new(-1, 0)).is_err());
    }

    #[test]
    fn qdim_at_a_equals_one_is_classical_dim() {
        let one = BigRational::from(BigInt::one());
        for (m1, m2) in [(0i64, 0i64), (1, 0), (0, 1), (2, 1), (3, 1), (1, 2), (4, 2)] {
            let nu = WeightType::new(m1, m2);
            let q = qdim(nu).unwrap();
            assert_eq!(
                q.eval(&one),
                BigRational::from(BigInt::from(classical_dim(nu)))
            );
        }
    }

    #[test]
    fn hw_of_fundamental() {
        let ctx = SymCtx;
        let e: RepModule<ScalarField> = fundamental_e(&ctx);
        let hw = highest_weight_vectors(&e).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].0, WeightType::new(1, 0));
        assert_eq!(hw[0].1.len(), 1);
        // spanned by e1
        let v = &hw[0].1[0];
        assert!(!v[0].is_zero());
        assert!(v[1].is_zero() && v[2].is_zero());
    }

    #[test]
    fn hw_types_sum_to_dimension() {
        let ctx = SymCtx;
        let e: RepModule<ScalarField> = fundamental_e(&ctx);
        let f = e.dual(&ctx);
        for m in [e.tensor(&e), e.tensor(&f), e.tensor(&e).tensor(&f)] {
            let hw = highest_weight_vectors(&m).unwrap();
            let total: i64 = hw
                .iter()
                .map(|(nu, vecs)| vecs.len() as i64 * classical_dim(*nu))
                .sum();
            assert_eq!(total, m.dim as i64);
        }
    }

    #[test]
    fn trace_of_enhancement_is_sum_of_qdims() {
        let ctx = SymCtx;
        let e: RepModule<ScalarField> = fundamental_e(&ctx);
        let f = e.dual(&ctx);
        for m in [e.clone(), f.clone(), e.tensor(&e), e.tensor(&e).tensor(&f)] {
            let hw = highest_weight_vectors(&m).unwrap();
            let mut total = LaurentPoly::zero();
            for (nu, vecs) in &hw {
                for _ in vecs {
                    total = &total + &qdim(*nu).unwrap();
                }
            }
            assert_eq!(
                m.enhancement().trace(),
                ScalarField::from_poly(total)
            );
        }
    }

    #[test]
    fn tensor_weight_multiset_is_product_sum() {
        let ctx = SymCtx;
        let e: RepModule<ScalarField> = fundamental_e(&ctx);
        let f = e.dual(&ctx);
        let ef = e.tensor(&f);
        let mut expect: Vec<(i64, i64)> = Vec::new();
        for w1 in &e.weights {
            for w2 in &f.weights {
                expect.push((w1.0 + w2.0, w1.1 + w2.1));
            }
        }
        let mut got = ef.weights.clone();
        expect.sort_unstable();
        got.sort_unstable();
        assert_eq!(got, expect);
    }
}
