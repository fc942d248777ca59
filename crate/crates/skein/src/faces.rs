//! Euler face-defect enumeration.
//!
//! In a dissection of the sphere by a trivalent graph, each `n`-gon
//! contributes `1 - n/6` to the Euler characteristic, so only 2-gons and
//! 4-gons contribute positively.  Working in sixths keeps everything in
//! integers: an `n`-gon contributes `6 - n`.

use num_rational::Rational64;

use crate::SkeinError;

/// `1 - n/6` for an even face size `n`.
pub fn face_defect(n: i64) -> Result<Rational64, SkeinError> {
    if n < 2 || n % 2 != 0 {
        return Err(SkeinError::BadFaceSize(n));
    }
    Ok(Rational64::new(6 - n, 6))
}

/// A face profile: the sizes of the distinguished boundary faces and of
/// any internal non-hexagon faces.  Internal hexagons are implicit
/// ("6-gons elsewhere").
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FaceProfile {
    pub boundary: Vec<i64>,
    pub internal: Vec<i64>,
}

impl std::fmt::Display for FaceProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "boundary {:?}, internal {:?}, 6-gons elsewhere",
            self.boundary, self.internal
        )
    }
}

/// All face profiles with `boundary_faces` distinguished faces (even sizes
/// at least 2, at most `boundary_max` when given) and internal faces of
/// even size at least 8, whose total defect is `chi`.
///
/// Only 2-gons and 4-gons contribute positively, and only boundary faces
/// may be smaller than a hexagon, so the enumeration is finite: face sizes
/// are capped by the largest size consistent with `chi`.
pub fn enumerate_face_profiles(
    chi: i64,
    boundary_faces: usize,
    boundary_max: Option<i64>,
) -> Vec<FaceProfile> {
    let target = 6 * chi; // total defect in sixths
    let b = boundary_faces as i64;
    // Largest deficit any single face can carry, given that the positive
    // contributions are at most 4 per boundary face (a 2-gon).
    let cap = (6 - target + 4 * b).max(6);
    let bcap = boundary_max.unwrap_or(cap).min(cap);
    let mut out = Vec::new();
    let mut boundary = Vec::new();
    enumerate_boundary(target, boundary_faces, 2, bcap, cap, &mut boundary, &mut out);
    out.sort();
    out.dedup();
    out
}

fn enumerate_boundary(
    remaining: i64,
    faces_left: usize,
    min_size: i64,
    bcap: i64,
    cap: i64,
    boundary: &mut Vec<i64>,
    out: &mut Vec<FaceProfile>,
) {
    if faces_left == 0 {
        let mut internal = Vec::new();
        enumerate_internal(remaining, 8, cap, boundary, &mut internal, out);
        return;
    }
    let mut n = min_size;
    while n <= bcap {
        // best case for the rest: every remaining boundary face a 2-gon,
        // internal faces only subtract
        let rem = remaining - (6 - n);
        if rem <= 4 * (faces_left as i64 - 1) {
            boundary.push(n);
            enumerate_boundary(rem, faces_left - 1, n, bcap, cap, boundary, out);
            boundary.pop();
        }
        n += 2;
    }
}

fn enumerate_internal(
    remaining: i64,
    min_size: i64,
    cap: i64,
    boundary: &[i64],
    internal: &mut Vec<i64>,
    out: &mut Vec<FaceProfile>,
) {
    if remaining == 0 {
        out.push(FaceProfile {
            boundary: boundary.to_vec(),
            internal: internal.clone(),
        });
        return;
    }
    if remaining > 0 {
        // internal faces only contribute non-positive defect
        return;
    }
    let mut n = min_size;
    while n <= cap {
        if 6 - n >= remaining {
            internal.push(n);
            enumerate_internal(remaining - (6 - n), n, cap, boundary, internal, out);
            internal.pop();
        }
        n += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defect_values() {
        assert_eq!(face_defect(6).unwrap(), Rational64::new(0, 1));
        assert_eq!(face_defect(2).unwrap(), Rational64::new(2, 3));
        assert_eq!(face_defect(4).unwrap(), Rational64::new(1, 3));
        assert_eq!(face_defect(10).unwrap(), Rational64::new(-2, 3));
        assert!(face_defect(5).is_err());
        assert!(face_defect(0).is_err());
        assert!(face_defect(-2).is_err());
    }

    #[test]
    fn sphere_with_three_boundary_faces_is_unique() {
        let profiles = enumerate_face_profiles(2, 3, None);
        assert_eq!(
            profiles,
            vec![FaceProfile { boundary: vec![2, 2, 2], internal: vec![] }]
        );
    }

    #[test]
    fn punctured_torus_has_exactly_four_profiles() {
        let profiles = enumerate_face_profiles(0, 1, None);
        let expect = vec![
            FaceProfile { boundary: vec![2], internal: vec![8, 8] },
            FaceProfile { boundary: vec![2], internal: vec![10] },
            FaceProfile { boundary: vec![4], internal: vec![8] },
            FaceProfile { boundary: vec![6], internal: vec![] },
        ];
        assert_eq!(profiles.len(), 4);
        for e in &expect {
            assert!(profiles.contains(e), "missing {e}");
        }
    }

    #[test]
    fn closed_sphere_graph_is_impossible() {
        assert!(enumerate_face_profiles(2, 0, None).is_empty());
    }

    #[test]
    fn closed_torus_is_all_hexagons() {
        let profiles = enumerate_face_profiles(0, 0, None);
        assert_eq!(
            profiles,
            vec![FaceProfile { boundary: vec![], internal: vec![] }]
        );
    }

    #[test]
    fn boundary_cap_restricts() {
        let profiles = enumerate_face_profiles(0, 1, Some(4));
        assert_eq!(profiles.len(), 3);
        assert!(profiles.iter().all(|p| p.boundary[0] <= 4));
    }

    #[test]
    fn order_independence() {
        // profiles come back sorted and deduplicated regardless of target
        let a = enumerate_face_profiles(0, 2, None);
        for w in a.windows(2) {
            assert!(w[0] < w[1]);
        }
    }
}
