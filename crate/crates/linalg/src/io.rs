//! Text dump format for matrices, with exact round-trip.
//!
//! One line per nonzero entry: `row col k1:c1,k2:c2,...` where `k:c` is a
//! term `c a^k`.  Field entries append `|...` with the denominator's term
//! list.  Lines starting with `#` are comments.

use num_bigint::BigInt;
use su3q_arith::{LaurentPoly, ScalarField};

use crate::{LinalgError, Mat, SparsePolyMat};

fn poly_to_terms(p: &LaurentPoly) -> String {
    p.terms()
        .map(|(k, c)| format!("{}:{}", k, c))
        .collect::<Vec<_>>()
        .join(",")
}

fn poly_from_terms(s: &str, line: usize) -> Result<LaurentPoly, LinalgError> {
    let mut acc = LaurentPoly::zero();
    for term in s.split(',') {
        let Some((k, c)) = term.split_once(':') else {
            return Err(LinalgError::BadFormat {
                line,
                msg: format!("bad term `{term}`"),
            });
        };
        let k: i64 = k.parse().map_err(|_| LinalgError::BadFormat {
            line,
            msg: format!("bad exponent `{k}`"),
        })?;
        let c: BigInt = c.parse().map_err(|_| LinalgError::BadFormat {
            line,
            msg: format!("bad coefficient `{c}`"),
        })?;
        acc = &acc + &LaurentPoly::monomial(k, c);
    }
    Ok(acc)
}

pub fn dump_poly_mat(m: &SparsePolyMat) -> String {
    let mut out = format!("# sparse {} {}\n", m.rows(), m.cols());
    let mut entries: Vec<(usize, usize, &LaurentPoly)> = m.entries().collect();
    entries.sort_by_key(|(r, c, _)| (*r, *c));
    for (r, c, p) in entries {
        out.push_str(&format!("{} {} {}\n", r, c, poly_to_terms(p)));
    }
    out
}

pub fn parse_poly_mat(text: &str) -> Result<SparsePolyMat, LinalgError> {
    let mut dims = None;
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("# sparse ") {
            let mut it = rest.split_whitespace();
            let (Some(r), Some(c)) = (it.next(), it.next()) else {
                return Err(LinalgError::BadFormat { line: i + 1, msg: "bad header".into() });
            };
            dims = Some((
                r.parse().map_err(|_| LinalgError::BadFormat {
                    line: i + 1,
                    msg: "bad rows".into(),
                })?,
                c.parse().map_err(|_| LinalgError::BadFormat {
                    line: i + 1,
                    msg: "bad cols".into(),
                })?,
            ));
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let mut it = line.splitn(3, ' ');
        let (Some(r), Some(c), Some(terms)) = (it.next(), it.next(), it.next()) else {
            return Err(LinalgError::BadFormat {
                line: i + 1,
                msg: "expected `row col terms`".into(),
            });
        };
        let r: usize = r.parse().map_err(|_| LinalgError::BadFormat {
            line: i + 1,
            msg: format!("bad row `{r}`"),
        })?;
        let c: usize = c.parse().map_err(|_| LinalgError::BadFormat {
            line: i + 1,
            msg: format!("bad col `{c}`"),
        })?;
        entries.push((r, c, poly_from_terms(terms, i + 1)?));
    }
    let Some((rows, cols)) = dims else {
        return Err(LinalgError::BadFormat { line: 1, msg: "missing `# sparse` header".into() });
    };
    let mut m = SparsePolyMat::zeros(rows, cols);
    for (r, c, p) in entries {
        if r >= rows || c >= cols {
            return Err(LinalgError::BadFormat {
                line: 0,
                msg: format!("entry ({r},{c}) outside {rows}x{cols}"),
            });
        }
        m.push(r, c, p);
    }
    Ok(m)
}

pub fn dump_scalar_mat(m: &Mat<ScalarField>) -> String {
    let mut out = format!("# dense {} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let x = &m[(i, j)];
            if x.is_zero() {
                continue;
            }
            if let Some(p) = x.as_poly() {
                out.push_str(&format!("{} {} {}\n", i, j, poly_to_terms(p)));
            } else {
                out.push_str(&format!(
                    "{} {} {}|{}\n",
                    i,
                    j,
                    poly_to_terms(x.num()),
                    poly_to_terms(x.den())
                ));
            }
        }
    }
    out
}

pub fn parse_scalar_mat(text: &str) -> Result<Mat<ScalarField>, LinalgError> {
    let mut mat: Option<Mat<ScalarField>> = None;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("# dense ") {
            let mut it = rest.split_whitespace();
            let (Some(r), Some(c)) = (it.next(), it.next()) else {
                return Err(LinalgError::BadFormat { line: i + 1, msg: "bad header".into() });
            };
            let r: usize = r.parse().map_err(|_| LinalgError::BadFormat {
                line: i + 1,
                msg: "bad rows".into(),
            })?;
            let c: usize = c.parse().map_err(|_| LinalgError::BadFormat {
                line: i + 1,
                msg: "bad cols".into(),
            })?;
            mat = Some(Mat::zeros(r, c));
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let Some(m) = mat.as_mut() else {
            return Err(LinalgError::BadFormat { line: i + 1, msg: "missing header".into() });
        };
        let mut it = line.splitn(3, ' ');
        let (Some(r), Some(c), Some(entry)) = (it.next(), it.next(), it.next()) else {
            return Err(LinalgError::BadFormat {
                line: i + 1,
                msg: "expected `row col entry`".into(),
            });
        };
        let r: usize = r.parse().map_err(|_| LinalgError::BadFormat {
            line: i + 1,
            msg: format!("bad row `{r}`"),
        })?;
        let c: usize = c.parse().map_err(|_| LinalgError::BadFormat {
            line: i + 1,
            msg: format!("bad col `{c}`"),
        })?;
        let value = match entry.split_once('|') {
            None => ScalarField::from_poly(poly_from_terms(entry, i + 1)?),
            Some((n, d)) => ScalarField::new(
                poly_from_terms(n, i + 1)?,
                poly_from_terms(d, i + 1)?,
            ),
        };
        m[(r, c)] = value;
    }
    mat.ok_or(LinalgError::BadFormat { line: 1, msg: "missing `# dense` header".into() })
}

/// 64-bit FNV-1a, used as the content hash on cached matrices.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in bytes {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use su3q_arith::{ScalarCtx, SymCtx};

    #[test]
    fn poly_mat_round_trip() {
        let mut m = SparsePolyMat::zeros(3, 4);
        m.push(0, 1, LaurentPoly::from_pairs([(2, 1), (0, -3)]));
        m.push(2, 3, LaurentPoly::a_pow(-5));
        let text = dump_poly_mat(&m);
        let back = parse_poly_mat(&text).unwrap();
        assert_eq!(dump_poly_mat(&back), text);
        assert_eq!(back, m);
    }

    #[test]
    fn scalar_mat_round_trip() {
        let ctx = SymCtx;
        let mut m: Mat<ScalarField> = Mat::zeros(2, 2);
        m[(0, 0)] = ctx.s_pow(3);
        m[(1, 0)] = ScalarField::new(
            LaurentPoly::one(),
            LaurentPoly::from_pairs([(1, 1), (0, -1)]),
        );
        let text = dump_scalar_mat(&m);
        let back = parse_scalar_mat(&text).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(back[(i, j)], m[(i, j)]);
            }
        }
    }

    #[test]
    fn fnv_is_stable() {
        assert_eq!(fnv1a64(b""), 0xcbf29ce484222325);
        assert_ne!(fnv1a64(b"rmm"), fnv1a64(b"rmn"));
    }
}
