//! Elimination kernels: reduced row echelon form, nullspaces, eigenspaces,
//! partitioned inversion and solving inside a span.
//!
//! Two routes are provided.  The generic [`rref`] works over any scalar
//! field.  [`nullspace_cleared`] is the symbolic workhorse: it clears each
//! row to Laurent-polynomial form and eliminates fraction-free
//! (cross-multiplication with a polynomial-gcd strip per row), choosing
//! pivots of minimal term span to limit entry blowup.

use su3q_arith::{LaurentPoly, Scalar, ScalarField};

use crate::{LinalgError, Mat};

/// Result of a reduced-row-echelon computation.
pub struct Rref<S> {
    pub mat: Mat<S>,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form over the scalar field, with pivots chosen by
/// minimal [`Scalar::pivot_weight`] within each column.
pub fn rref<S: Scalar>(a: &Mat<S>) -> Rref<S> {
    let mut m = a.clone();
    let (r, c) = (m.rows(), m.cols());
    let mut rank = 0;
    let mut pivots = Vec::new();
    for col in 0..c {
        let Some(p) = (rank..r)
            .filter(|&i| !m[(i, col)].is_zero())
            .min_by_key(|&i| m[(i, col)].pivot_weight())
        else {
            continue;
        };
        m.swap_rows(rank, p);
        let inv = m[(rank, col)].inv().expect("nonzero pivot");
        for j in col..c {
            m[(rank, j)] = m[(rank, j)].mul(&inv);
        }
        for i in 0..r {
            if i == rank || m[(i, col)].is_zero() {
                continue;
            }
            let f = m[(i, col)].clone();
            for j in col..c {
                let t = m[(rank, j)].mul(&f);
                m[(i, j)] = m[(i, j)].sub(&t);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == r {
            break;
        }
    }
    Rref { mat: m, rank, pivots }
}

/// Basis of the kernel of `a` over the scalar field.
///
/// Every returned vector `w` is checked to satisfy `a w = 0` exactly.
pub fn nullspace<S: Scalar>(a: &Mat<S>) -> Vec<Vec<S>> {
    let Rref { mat, rank, pivots } = rref(a);
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; a.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for f in 0..a.cols() {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![S::zero(); a.cols()];
        v[f] = S::one();
        for (row, &p) in pivots.iter().enumerate().take(rank) {
            v[p] = mat[(row, f)].neg();
        }
        debug_assert!(a.apply(&v).iter().all(|x| x.is_zero()));
        assert!(
            a.apply(&v).iter().all(|x| x.is_zero()),
            "kernel vector failed the exact A w = 0 check"
        );
        basis.push(v);
    }
    basis
}

/// Kernel basis for a symbolic matrix, computed fraction-free and returned
/// denominator-cleared: entries are primitive Laurent-polynomial vectors.
pub fn nullspace_cleared(a: &Mat<ScalarField>) -> Vec<Vec<LaurentPoly>> {
    // Clear each row to polynomial form and strip its polynomial content.
    let mut rows: Vec<Vec<LaurentPoly>> = (0..a.rows())
        .map(|i| {
            let (nums, _den) = crate::sparse::clear_scalar_vec(a.row(i));
            strip_row(nums)
        })
        .filter(|r| r.iter().any(|p| !p.is_zero()))
        .collect();
    let cols = a.cols();

    // Fraction-free elimination to a reduced echelon form.
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next_row = 0;
    for col in 0..cols {
        let Some(p) = (next_row..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| {
                (rows[i][col].span(), row_span(&rows[i]))
            })
        else {
            continue;
        };
        rows.swap(next_row, p);
        for i in 0..rows.len() {
            if i == next_row || rows[i][col].is_zero() {
                continue;
            }
            rows[i] = eliminate(&rows[i], &rows[next_row], col);
        }
        pivots.push((next_row, col));
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }

    // Read the kernel basis off the reduced form, then clear denominators.
    let mut is_pivot = vec![false; cols];
    for &(_, c) in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in 0..cols {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![ScalarField::zero(); cols];
        v[f] = ScalarField::one();
        for &(r, c) in &pivots {
            // pivot * x_c + entry_f * x_f = 0
            let ratio = ScalarField::new(rows[r][f].clone(), rows[r][c].clone());
            v[c] = Scalar::neg(&ratio);
        }
        let (nums, _den) = crate::sparse::clear_scalar_vec(&v);
        let w = strip_row(nums);
        assert!(
            (0..a.rows()).all(|i| {
                let mut acc = ScalarField::zero();
                for (x, p) in a.row(i).iter().zip(&w) {
                    if !x.is_zero() && !p.is_zero() {
                        acc = Scalar::add(&acc, &x.mul(&ScalarField::from_poly(p.clone())));
                    }
                }
                acc.is_zero()
            }),
            "kernel vector failed the exact A w = 0 check"
        );
        basis.push(w);
    }
    basis
}

/// `row := pivot_entry * row - row_entry * pivot_row`, then strip content.
fn eliminate(row: &[LaurentPoly], pivot_row: &[LaurentPoly], col: usize) -> Vec<LaurentPoly> {
    let piv = &pivot_row[col];
    let f = &row[col];
    let out: Vec<LaurentPoly> = row
        .iter()
        .zip(pivot_row)
        .map(|(r, p)| &(piv * r) - &(f * p))
        .collect();
    strip_row(out)
}

fn row_span(row: &[LaurentPoly]) -> i64 {
    row.iter().map(|p| p.span()).sum()
}

/// Divide a polynomial row by the gcd of its entries (and a unit monomial).
fn strip_row(row: Vec<LaurentPoly>) -> Vec<LaurentPoly> {
    let mut g = LaurentPoly::zero();
    for p in &row {
        if !p.is_zero() {
            g = g.gcd(p);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return row;
    }
    row.iter()
        .map(|p| {
            if p.is_zero() {
                LaurentPoly::zero()
            } else {
                p.exact_div(&g).expect("row gcd divides")
            }
        })
        .collect()
}

/// Eigenspace of `a` for a known eigenvalue: `ker(a - lambda I)`.
pub fn eigenspace<S: Scalar>(a: &Mat<S>, lambda: &S) -> Vec<Vec<S>> {
    assert_eq!(a.rows(), a.cols());
    let shifted = a.sub(&Mat::identity(a.rows()).scale(lambda));
    nullspace(&shifted)
}

/// Inverse via Gauss-Jordan on the augmented matrix.
pub fn invert<S: Scalar>(a: &Mat<S>) -> Result<Mat<S>, LinalgError> {
    if a.rows() != a.cols() {
        return Err(LinalgError::DimMismatch(format!(
            "cannot invert a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let aug = a.hstack(&Mat::identity(n));
    let Rref { mat, rank, pivots } = rref(&aug);
    if rank < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
        return Err(LinalgError::Singular);
    }
    Ok(Mat::from_fn(n, n, |i, j| mat[(i, n + j)].clone()))
}

/// Top block of `(P | Q)^{-1}`: the projection `pi` with `pi P = I` and
/// `pi Q = 0`.  Both identities are verified exactly before returning.
pub fn partitioned_projection<S: Scalar>(
    p: &Mat<S>,
    q: &Mat<S>,
) -> Result<Mat<S>, LinalgError> {
    if p.rows() != q.rows() || p.cols() + q.cols() != p.rows() {
        return Err(LinalgError::DimMismatch(format!(
            "(P|Q) must be square: P is {}x{}, Q is {}x{}",
            p.rows(),
            p.cols(),
            q.rows(),
            q.cols()
        )));
    }
    let inv = invert(&p.hstack(q))?;
    let proj = inv.submatrix_rows(0..p.cols());
    assert!(proj.matmul(p).is_identity(), "pi P != I");
    assert!(proj.matmul(q).is_zero(), "pi Q != 0");
    Ok(proj)
}

/// Express `v` as an exact linear combination of `basis`; errors when the
/// residual is nonzero.
pub fn solve_in_span<S: Scalar>(v: &[S], basis: &[Vec<S>]) -> Result<Vec<S>, LinalgError> {
    if basis.is_empty() {
        return if v.iter().all(|x| x.is_zero()) {
            Ok(Vec::new())
        } else {
            Err(LinalgError::NotInSpan)
        };
    }
    let n = basis[0].len();
    if v.len() != n || basis.iter().any(|b| b.len() != n) {
        return Err(LinalgError::DimMismatch(
            "solve_in_span: vector lengths differ".into(),
        ));
    }
    let k = basis.len();
    let aug = Mat::from_fn(n, k + 1, |i, j| {
        if j < k {
            basis[j][i].clone()
        } else {
            v[i].clone()
        }
    });
    let Rref { mat, rank, pivots } = rref(&aug);
    if pivots.contains(&k) {
        return Err(LinalgError::NotInSpan);
    }
    let mut coeffs = vec![S::zero(); k];
    for (row, &pcol) in pivots.iter().enumerate().take(rank) {
        coeffs[pcol] = mat[(row, k)].clone();
    }
    // Exact residual check.
    for i in 0..n {
        let mut acc = v[i].neg();
        for (c, b) in coeffs.iter().zip(basis) {
            if !c.is_zero() && !b[i].is_zero() {
                acc = acc.add(&c.mul(&b[i]));
            }
        }
        if !acc.is_zero() {
            return Err(LinalgError::NotInSpan);
        }
    }
    Ok(coeffs)
}
