//! Sparse vectors and matrices over Laurent polynomials, shaped into
//! tensor legs.
//!
//! The big objects in the pipeline (the 729-dimensional ambient module and
//! the 3375-dimensional triple tensor power) are weight-graded, so vectors
//! touched by crossings stay very sparse.  Everything here is
//! denominator-free; callers track an overall denominator separately when
//! one is needed.

use std::collections::BTreeMap;

use su3q_arith::{LaurentPoly, Scalar, ScalarField};

/// A sparse vector: sorted `(index, coefficient)` pairs, coefficients nonzero.
pub type PolyVec = Vec<(usize, LaurentPoly)>;

/// A sparse matrix stored by column: `col -> [(row, entry)]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePolyMat {
    rows: usize,
    cols: usize,
    by_col: Vec<Vec<(usize, LaurentPoly)>>,
}

impl SparsePolyMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparsePolyMat { rows, cols, by_col: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.push(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn push(&mut self, row: usize, col: usize, v: LaurentPoly) {
        if !v.is_zero() {
            self.by_col[col].push((row, v));
        }
    }

    pub fn col(&self, c: usize) -> &[(usize, LaurentPoly)] {
        &self.by_col[c]
    }

    pub fn nnz(&self) -> usize {
        self.by_col.iter().map(|c| c.len()).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        self.by_col
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, p)| (*r, c, p)))
    }

    pub fn from_dense_cleared(m: &crate::Mat<ScalarField>) -> (Self, LaurentPoly) {
        // Clear the whole matrix over one common denominator.
        let all: Vec<ScalarField> =
            (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect();
        let (nums, den) = clear_scalar_vec(&all);
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let p = nums[i * m.cols() + j].clone();
                out.push(i, j, p);
            }
        }
        for c in out.by_col.iter_mut() {
            c.sort_by_key(|(r, _)| *r);
        }
        (out, den)
    }

    pub fn to_dense(&self, den: &LaurentPoly) -> crate::Mat<ScalarField> {
        let mut m = crate::Mat::zeros(self.rows, self.cols);
        for (r, c, p) in self.entries() {
            m[(r, c)] = ScalarField::new(p.clone(), den.clone());
        }
        m
    }

    /// `self * v` as sparse vectors.
    pub fn apply(&self, v: &PolyVec) -> PolyVec {
        let mut acc: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        for (c, vc) in v {
            for (r, m) in &self.by_col[*c] {
                let t = m * vc;
                acc.entry(*r)
                    .and_modify(|x| *x = &*x + &t)
                    .or_insert(t);
            }
        }
        acc.into_iter().filter(|(_, p)| !p.is_zero()).collect()
    }
}

/// Row-major composite index for a list of legs.
pub fn leg_index(dims: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), idx.len());
    let mut out = 0;
    for (d, i) in dims.iter().zip(idx) {
        debug_assert!(i < d);
        out = out * d + i;
    }
    out
}

fn pair_strides(dims: &[usize], leg: usize) -> (usize, usize, usize) {
    let block: usize = dims[leg] * dims[leg + 1];
    let post: usize = dims[leg + 2..].iter().product();
    let pre: usize = dims[..leg].iter().product();
    (pre, block, post)
}

/// Apply a `d1*d2 x d1*d2` sparse matrix to legs `(leg, leg+1)` of a sparse
/// vector shaped by `dims`.
pub fn sparse_apply_pair(
    m: &SparsePolyMat,
    dims: &[usize],
    leg: usize,
    v: &PolyVec,
) -> PolyVec {
    let (_pre, block, post) = pair_strides(dims, leg);
    assert_eq!(m.rows(), block);
    assert_eq!(m.cols(), block);
    let mut acc: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
    for (idx, vc) in v {
        let post_part = idx % post;
        let rest = idx / post;
        let ab = rest % block;
        let pre_part = rest / block;
        for (cd, entry) in m.col(ab) {
            let out_idx = (pre_part * block + cd) * post + post_part;
            let t = entry * vc;
            acc.entry(out_idx)
                .and_modify(|x| *x = &*x + &t)
                .or_insert(t);
        }
    }
    acc.into_iter().filter(|(_, p)| !p.is_zero()).collect()
}

/// Apply a `d x d` sparse matrix to a single leg of a sparse vector.
pub fn sparse_apply_single(
    m: &SparsePolyMat,
    dims: &[usize],
    leg: usize,
    v: &PolyVec,
) -> PolyVec {
    let d = dims[leg];
    assert_eq!(m.rows(), d);
    assert_eq!(m.cols(), d);
    let post: usize = dims[leg + 1..].iter().product();
    let mut acc: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
    for (idx, vc) in v {
        let post_part = idx % post;
        let rest = idx / post;
        let k = rest % d;
        let pre_part = rest / d;
        for (k2, entry) in m.col(k) {
            let out_idx = (pre_part * d + k2) * post + post_part;
            let t = entry * vc;
            acc.entry(out_idx)
                .and_modify(|x| *x = &*x + &t)
                .or_insert(t);
        }
    }
    acc.into_iter().filter(|(_, p)| !p.is_zero()).collect()
}

/// Tensor a basis-like sparse vector into a new leg at position `leg`.
pub fn insert_leg(
    dims_without: &[usize],
    leg: usize,
    new_dim: usize,
    v: &PolyVec,
    inserted: &PolyVec,
) -> (Vec<usize>, PolyVec) {
    let mut dims = dims_without.to_vec();
    dims.insert(leg, new_dim);
    let post: usize = dims_without[leg..].iter().product();
    let mut out = Vec::with_capacity(v.len() * inserted.len());
    for (idx, vc) in v {
        let post_part = idx % post;
        let pre_part = idx / post;
        for (k, ic) in inserted {
            let out_idx = ((pre_part * new_dim) + k) * post + post_part;
            out.push((out_idx, vc * ic));
        }
    }
    out.sort_by_key(|(i, _)| *i);
    (dims, out)
}

/// The slice of `v` with leg `leg` fixed at index `k` (leg removed).
pub fn slice_leg(dims: &[usize], leg: usize, k: usize, v: &PolyVec) -> PolyVec {
    let d = dims[leg];
    let post: usize = dims[leg + 1..].iter().product();
    let mut out = Vec::new();
    for (idx, vc) in v {
        let post_part = idx % post;
        let rest = idx / post;
        if rest % d != k {
            continue;
        }
        let pre_part = rest / d;
        out.push((pre_part * post + post_part, vc.clone()));
    }
    out.sort_by_key(|(i, _)| *i);
    out
}

/// Dense-rational analogue of [`sparse_apply_pair`] for the numeric lane.
pub fn num_apply_pair<S: Scalar>(
    m: &crate::Mat<S>,
    dims: &[usize],
    leg: usize,
    v: &[S],
) -> Vec<S> {
    let (_pre, block, post) = pair_strides(dims, leg);
    assert_eq!(m.rows(), block);
    let total: usize = dims.iter().product();
    assert_eq!(v.len(), total);
    let mut out = vec![S::zero(); total];
    for (idx, vc) in v.iter().enumerate() {
        if vc.is_zero() {
            continue;
        }
        let post_part = idx % post;
        let rest = idx / post;
        let ab = rest % block;
        let pre_part = rest / block;
        for cd in 0..block {
            let e = &m[(cd, ab)];
            if e.is_zero() {
                continue;
            }
            let out_idx = (pre_part * block + cd) * post + post_part;
            out[out_idx] = out[out_idx].add(&e.mul(vc));
        }
    }
    out
}

/// Clear a slice of field elements over one common denominator.
/// Returns the polynomial numerators and the denominator.
pub fn clear_scalar_vec(xs: &[ScalarField]) -> (Vec<LaurentPoly>, LaurentPoly) {
    let mut den = LaurentPoly::one();
    for x in xs {
        let g = den.gcd(x.den());
        den = &den * &x.den().exact_div(&g).expect("gcd divides");
    }
    let nums = xs
        .iter()
        .map(|x| {
            if x.is_zero() {
                LaurentPoly::zero()
            } else {
                let cof = den.exact_div(x.den()).expect("lcm divides");
                &cof * x.num()
            }
        })
        .collect();
    (nums, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(k: i64) -> LaurentPoly {
        LaurentPoly::a_pow(k)
    }

    #[test]
    fn sparse_apply_matches_dense_reasoning() {
        // m swaps a 2x2 pair block with a weight
        let mut m = SparsePolyMat::zeros(4, 4);
        m.push(0, 0, lp(1));
        m.push(2, 1, LaurentPoly::one());
        m.push(1, 2, LaurentPoly::one());
        m.push(3, 3, lp(-1));
        // dims (2, 2, 3), act on legs 0,1
        let dims = [2usize, 2, 3];
        let v: PolyVec = vec![(leg_index(&dims, &[0, 1, 2]), LaurentPoly::one())];
        let out = sparse_apply_pair(&m, &dims, 0, &v);
        // (0,1) is pair index 1 -> maps to pair index 2 = (1,0)
        assert_eq!(out, vec![(leg_index(&dims, &[1, 0, 2]), LaurentPoly::one())]);
    }

    #[test]
    fn insert_and_slice_round_trip() {
        let dims = [3usize, 2];
        let v: PolyVec = vec![
            (leg_index(&dims, &[1, 0]), lp(2)),
            (leg_index(&dims, &[2, 1]), LaurentPoly::int(3)),
        ];
        let inserted: PolyVec = vec![(1, LaurentPoly::one())];
        let (dims3, big) = insert_leg(&dims, 1, 4, &v, &inserted);
        assert_eq!(dims3, vec![3, 4, 2]);
        let back = slice_leg(&dims3, 1, 1, &big);
        assert_eq!(back, v);
        let empty = slice_leg(&dims3, 1, 0, &big);
        assert!(empty.is_empty());
    }

    #[test]
    fn apply_single_identity() {
        let dims = [2usize, 3];
        let m = SparsePolyMat::identity(3);
        let v: PolyVec = vec![(4, lp(5))];
        assert_eq!(sparse_apply_single(&m, &dims, 1, &v), v);
    }
}
