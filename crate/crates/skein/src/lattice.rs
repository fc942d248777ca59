//! Admissible graphs in the 3-punctured sphere from lattice quotients.
//!
//! Hexagon centres of the honeycomb form the Eisenstein lattice `Z[w]`,
//! `w = e^{2 pi i / 3}`.  A rotation-invariant sublattice is an ideal
//! `delta Z[w]`; quotienting the honeycomb by its translations gives a
//! torus, and the branch hexagons of the residual order-3 rotation become
//! the three 2-gons of the quotient graph in the sphere.
//!
//! Honeycomb model: per lattice class `t` there is an up-triangle vertex
//! `U(t)` (source) and a down-triangle vertex `D(t)` (sink), with edges
//! `U(t) - D(t)`, `U(t) - D(t+1)` and `U(t) - D(t-w)`.  The order-3
//! rotation acts by `U(t) -> U(wt - 1)`, `D(t) -> D(wt - 1 - w)` and is
//! fixed-point free on darts whenever the branch points sit at hexagon
//! centres, which needs `(1 - w) | delta`, i.e. `p + q = 0 (mod 3)`.

use std::collections::HashMap;

use crate::map::{Polarity, TrivalentGraph};
use crate::SkeinError;

/// A nonzero vector `delta = p + q w` of the triangular lattice of hexagon
/// centres, spanning the sublattice `delta Z[w]` of branch hexagons.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    pub p: i64,
    pub q: i64,
}

impl LatticeSpec {
    pub fn new(p: i64, q: i64) -> Result<Self, SkeinError> {
        if p == 0 && q == 0 {
            return Err(SkeinError::DegenerateSpec("(0, 0) spans nothing".into()));
        }
        if (p + q).rem_euclid(3) != 0 {
            return Err(SkeinError::DegenerateSpec(format!(
                "(1 - w) does not divide {p} + {q} w: branch points would \
                 sit on honeycomb vertices, not hexagon centres"
            )));
        }
        Ok(LatticeSpec { p, q })
    }

    /// Index of the sublattice: the Eisenstein norm `p^2 - pq + q^2`.
    pub fn index(&self) -> i64 {
        self.p * self.p - self.p * self.q + self.q * self.q
    }
}

/// Multiplication by `w` in coordinates `t = x + y w`:
/// `w t = -y + (x - y) w`.
fn rot(t: (i64, i64)) -> (i64, i64) {
    (-t.1, t.0 - t.1)
}

/// Coset key of `t` modulo the sublattice spanned by `delta` and `w delta`.
fn coset_key(spec: &LatticeSpec, t: (i64, i64)) -> (i64, i64) {
    // inverse of [[p, -q], [q, p - q]] is 1/N [[p - q, q], [-q, p]]
    let n = spec.index();
    (
        ((spec.p - spec.q) * t.0 + spec.q * t.1).rem_euclid(n),
        (-spec.q * t.0 + spec.p * t.1).rem_euclid(n),
    )
}

struct TorusData {
    graph: TrivalentGraph,
    /// Coordinates of a representative of each class (indexed like vertices).
    reps: Vec<(i64, i64)>,
    class_of: HashMap<(i64, i64), usize>,
}

/// The honeycomb on the torus `Z[w] / delta Z[w]`: one hexagon per class.
/// Public for inspection; the quotient construction builds on it.
pub fn torus_honeycomb(spec: &LatticeSpec) -> Result<TrivalentGraph, SkeinError> {
    Ok(build_torus(spec)?.graph)
}

fn build_torus(spec: &LatticeSpec) -> Result<TorusData, SkeinError> {
    let n = spec.index() as usize;
    // enumerate classes by BFS over unit translations
    let mut class_of: HashMap<(i64, i64), usize> = HashMap::new();
    let mut reps: Vec<(i64, i64)> = Vec::new();
    let mut queue = vec![(0i64, 0i64)];
    class_of.insert(coset_key(spec, (0, 0)), 0);
    reps.push((0, 0));
    while let Some(t) = queue.pop() {
        for step in [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)] {
            let u = (t.0 + step.0, t.1 + step.1);
            let key = coset_key(spec, u);
            if !class_of.contains_key(&key) {
                class_of.insert(key, reps.len());
                reps.push(u);
                queue.push(u);
            }
        }
    }
    if reps.len() != n {
        return Err(SkeinError::DegenerateSpec(format!(
            "expected {n} classes, found {}",
            reps.len()
        )));
    }

    let class = |t: (i64, i64)| class_of[&coset_key(spec, t)];

    // vertices: U(t) = 2 * class, D(t) = 2 * class + 1
    // darts: 6 per class: U-side darts 6c, 6c+1, 6c+2 for edges e0, e1, e2;
    // D-side darts 6c+3+j = the D(t)-end of the edge e_j(t).
    let dart_u = |c: usize, j: usize| 6 * c + j;
    let dart_d = |c: usize, j: usize| 6 * c + 3 + j;
    let mut alpha = vec![0usize; 6 * n];
    let mut sigma = vec![0usize; 6 * n];
    let mut vertex_of = vec![0usize; 6 * n];
    for c in 0..n {
        let t = reps[c];
        // edge targets: e0 -> D(t), e1 -> D(t + 1), e2 -> D(t - w)
        let targets = [t, (t.0 + 1, t.1), (t.0, t.1 - 1)];
        for (j, tt) in targets.iter().enumerate() {
            let cj = class(*tt);
            alpha[dart_u(c, j)] = dart_d(cj, j);
            alpha[dart_d(cj, j)] = dart_u(c, j);
        }
        for j in 0..3 {
            vertex_of[dart_u(c, j)] = 2 * c;
            vertex_of[dart_d(c, j)] = 2 * c + 1;
        }
        // CCW at U(t): e1, e0, e2
        sigma[dart_u(c, 1)] = dart_u(c, 0);
        sigma[dart_u(c, 0)] = dart_u(c, 2);
        sigma[dart_u(c, 2)] = dart_u(c, 1);
        // CCW at D(t): e2-end from U(t + w), e1-end from U(t - 1), e0-end from U(t)
        sigma[dart_d(c, 2)] = dart_d(c, 1);
        sigma[dart_d(c, 1)] = dart_d(c, 0);
        sigma[dart_d(c, 0)] = dart_d(c, 2);
    }
    let polarity: Vec<Polarity> = (0..2 * n)
        .map(|v| if v % 2 == 0 { Polarity::Source } else { Polarity::Sink })
        .collect();
    let graph = TrivalentGraph { alpha, sigma, vertex_of, polarity, marked: vec![] };
    graph.validate()?;
    Ok(TorusData { graph, reps, class_of })
}

/// Quotient of the torus honeycomb by the order-3 rotation: an admissible
/// graph in the 3-punctured sphere with the branch faces marked as 2-gons.
pub fn lattice_quotient_graph(spec: &LatticeSpec) -> Result<TrivalentGraph, SkeinError> {
    let TorusData { graph: torus, reps, class_of } = build_torus(spec)?;
    let n = reps.len();
    let class = |t: (i64, i64)| class_of[&coset_key(spec, t)];

    // rotation on classes and on darts
    // U(t) -> U(wt - 1); its darts permute as e0 -> e2, e1 -> e0, e2 -> e1.
    // D(t) -> D(wt - 1 - w); the D-side darts follow through alpha.
    let u_image_class = |c: usize| {
        let t = rot(reps[c]);
        class((t.0 - 1, t.1))
    };
    let mut dart_image = vec![usize::MAX; 6 * n];
    let u_slot_image = [2usize, 0, 1]; // e0 -> e2, e1 -> e0, e2 -> e1
    for c in 0..n {
        let ci = u_image_class(c);
        for j in 0..3 {
            dart_image[6 * c + j] = 6 * ci + u_slot_image[j];
        }
    }
    // D darts via alpha-equivariance: rho(alpha(d)) = alpha(rho(d))
    for c in 0..n {
        for j in 0..3 {
            let d = 6 * c + j;
            dart_image[torus.alpha[d]] = torus.alpha[dart_image[d]];
        }
    }

    // orbits of the rotation (must all have size 3)
    let mut orbit_of = vec![usize::MAX; 6 * n];
    let mut orbit_rep = Vec::new();
    for d in 0..6 * n {
        if orbit_of[d] != usize::MAX {
            continue;
        }
        let o = orbit_rep.len();
        let mut cur = d;
        for _ in 0..3 {
            if orbit_of[cur] != usize::MAX {
                return Err(SkeinError::DegenerateSpec(
                    "rotation orbits are not free on darts".into(),
                ));
            }
            orbit_of[cur] = o;
            cur = dart_image[cur];
        }
        if cur != d {
            return Err(SkeinError::DegenerateSpec(
                "dart rotation does not have order 3".into(),
            ));
        }
        orbit_rep.push(d);
    }

    let m = orbit_rep.len();
    let mut alpha = vec![0usize; m];
    let mut sigma = vec![0usize; m];
    let mut vertex_key = vec![usize::MAX; m];
    for (o, &d) in orbit_rep.iter().enumerate() {
        alpha[o] = orbit_of[torus.alpha[d]];
        sigma[o] = orbit_of[torus.sigma[d]];
        vertex_key[o] = torus.vertex_of[d];
    }
    // vertices of the quotient: orbits of torus vertices; identify via the
    // vertex orbit of each dart's vertex
    let mut vclass: HashMap<usize, usize> = HashMap::new();
    let mut vertex_of_q = vec![0usize; m];
    let mut polarity = Vec::new();
    for o in 0..m {
        // canonical torus vertex of this orbit: min over the 3 dart images
        let mut d = orbit_rep[o];
        let mut vmin = torus.vertex_of[d];
        for _ in 0..2 {
            d = dart_image[d];
            vmin = vmin.min(torus.vertex_of[d]);
        }
        let next = vclass.len();
        let id = *vclass.entry(vmin).or_insert(next);
        if id == polarity.len() {
            polarity.push(torus.polarity[vmin]);
        }
        vertex_of_q[o] = id;
        let _ = vertex_key;
    }

    let mut graph = TrivalentGraph {
        alpha,
        sigma,
        vertex_of: vertex_of_q,
        polarity,
        marked: vec![],
    };
    graph.validate()?;

    // mark the three 2-gon faces (the branch hexagons)
    let mut two_gons: Vec<usize> = graph
        .faces()
        .into_iter()
        .filter(|f| f.len() == 2)
        .map(|f| f[0])
        .collect();
    two_gons.sort_unstable();
    if two_gons.len() != 3 {
        return Err(SkeinError::DegenerateSpec(format!(
            "quotient has {} 2-gons, expected 3",
            two_gons.len()
        )));
    }
    graph.marked = two_gons;
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(LatticeSpec::new(0, 0).is_err());
        assert!(LatticeSpec::new(1, 0).is_err());
        assert!(LatticeSpec::new(1, 1).is_err());
        assert!(LatticeSpec::new(1, -1).is_ok());
        assert!(LatticeSpec::new(1, 2).is_ok());
        assert!(LatticeSpec::new(3, 0).is_ok());
        assert!(LatticeSpec::new(1, -4).is_ok());
        assert_eq!(LatticeSpec::new(1, -4).unwrap().index(), 21);
    }

    #[test]
    fn torus_is_all_hexagons() {
        for (p, q) in [(1, -1), (3, 0), (1, 2), (1, -4)] {
            let spec = LatticeSpec::new(p, q).unwrap();
            let torus = torus_honeycomb(&spec).unwrap();
            let n = spec.index() as usize;
            assert_eq!(torus.vertex_count(), 2 * n);
            assert_eq!(torus.edge_count(), 3 * n);
            assert_eq!(torus.euler_characteristic(), 0);
            assert!(torus.face_profile().iter().all(|&s| s == 6));
        }
    }

    #[test]
    fn minimal_lattice_gives_theta() {
        let spec = LatticeSpec::new(1, -1).unwrap();
        let g = lattice_quotient_graph(&spec).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.face_profile(), vec![2, 2, 2]);
        assert_eq!(g.euler_characteristic(), 2);
        assert!(g.is_admissible_sphere_graph());
    }

    #[test]
    fn quotient_counts_follow_the_index() {
        for (p, q) in [(1, -1), (3, 0), (1, 2), (1, -4), (4, -1)] {
            let spec = LatticeSpec::new(p, q).unwrap();
            let n = spec.index();
            let g = lattice_quotient_graph(&spec).unwrap();
            assert!(g.is_admissible_sphere_graph(), "({p},{q})");
            assert_eq!(g.vertex_count() as i64, 2 * n / 3, "({p},{q})");
            assert_eq!(g.edge_count() as i64, n, "({p},{q})");
            // hexagon count = index/3 - 1
            let hexes = g.face_profile().iter().filter(|&&s| s == 6).count() as i64;
            assert_eq!(hexes, n / 3 - 1, "({p},{q})");
        }
    }
}
