//! Exact symmetry checks on rotation systems.
//!
//! A map automorphism commutes with the edge involution and conjugates the
//! rotation to itself (orientation-preserving) or to its inverse
//! (orientation-reversing).  On a connected map it is determined by the
//! image of a single dart, so the search is a finite propagation per
//! candidate image.

use crate::map::TrivalentGraph;

fn sigma_inverse(g: &TrivalentGraph) -> Vec<usize> {
    let mut inv = vec![0usize; g.dart_count()];
    for d in 0..g.dart_count() {
        inv[g.sigma[d]] = d;
    }
    inv
}

/// Propagate a dart map from `0 -> image0`; `None` when inconsistent.
fn propagate(
    g: &TrivalentGraph,
    image0: usize,
    reverse_orientation: bool,
) -> Option<Vec<usize>> {
    let n = g.dart_count();
    let sigma_inv = sigma_inverse(g);
    let mut phi = vec![usize::MAX; n];
    phi[0] = image0;
    let mut stack = vec![0usize];
    while let Some(d) = stack.pop() {
        let img = phi[d];
        let steps = [
            (g.sigma[d], if reverse_orientation { sigma_inv[img] } else { g.sigma[img] }),
            (g.alpha[d], g.alpha[img]),
        ];
        for (src, tgt) in steps {
            if phi[src] == usize::MAX {
                phi[src] = tgt;
                stack.push(src);
            } else if phi[src] != tgt {
                return None;
            }
        }
    }
    if phi.iter().any(|&x| x == usize::MAX) {
        return None; // disconnected map
    }
    let mut seen = vec![false; n];
    for &x in &phi {
        if seen[x] {
            return None;
        }
        seen[x] = true;
    }
    Some(phi)
}

fn polarity_ok(g: &TrivalentGraph, phi: &[usize], flip: bool) -> bool {
    (0..g.dart_count()).all(|d| {
        let p = g.polarity[g.vertex_of[d]];
        let q = g.polarity[g.vertex_of[phi[d]]];
        if flip {
            q == p.flipped()
        } else {
            q == p
        }
    })
}

/// Faces induced by a dart map.  An orientation-preserving automorphism
/// maps `sigma alpha`-orbits to themselves; an orientation-reversing one
/// conjugates `sigma alpha` to `sigma^-1 alpha`, whose orbits are the
/// `alpha`-images of faces, so the induced face of `F` contains
/// `alpha(phi(d))` for `d` in `F`.
fn marked_face_images(g: &TrivalentGraph, phi: &[usize], reverse: bool) -> Vec<usize> {
    g.marked
        .iter()
        .map(|&d| {
            let img = phi[d];
            g.face_rep(if reverse { g.alpha[img] } else { img })
        })
        .collect()
}

/// Is there an orientation-preserving, polarity-preserving automorphism
/// cycling the three marked faces?
pub fn check_cyclic_symmetry(g: &TrivalentGraph) -> bool {
    if g.marked.len() != 3 {
        return false;
    }
    let reps: Vec<usize> = g.marked.iter().map(|&d| g.face_rep(d)).collect();
    let cycles = [
        vec![reps[1], reps[2], reps[0]],
        vec![reps[2], reps[0], reps[1]],
    ];
    for image0 in 0..g.dart_count() {
        let Some(phi) = propagate(g, image0, false) else {
            continue;
        };
        if !polarity_ok(g, &phi, false) {
            continue;
        }
        let imgs = marked_face_images(g, &phi, false);
        if cycles.contains(&imgs) {
            return true;
        }
    }
    false
}

/// Is there an automorphism realising the turnover: reverse all rotations
/// (turning the surface over), reverse all edge orientations (flip
/// sink/source), fixing each marked face?
pub fn check_turnover_symmetry(g: &TrivalentGraph) -> bool {
    let reps: Vec<usize> = g.marked.iter().map(|&d| g.face_rep(d)).collect();
    for image0 in 0..g.dart_count() {
        let Some(phi) = propagate(g, image0, true) else {
            continue;
        };
        if !polarity_ok(g, &phi, true) {
            continue;
        }
        if marked_face_images(g, &phi, true) == reps {
            return true;
        }
    }
    false
}
