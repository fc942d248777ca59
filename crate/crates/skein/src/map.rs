//! Rotation systems (combinatorial maps) for embedded trivalent graphs.
//!
//! Darts are half-edges.  `alpha` swaps the two darts of an edge, `sigma`
//! is the counterclockwise rotation at each vertex, and faces are the
//! orbits of `sigma . alpha`.  Embedded isotopy on the sphere is modelled
//! as combinatorial-map isomorphism.

use crate::SkeinError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    Source,
    Sink,
}

impl Polarity {
    pub fn flipped(self) -> Self {
        match self {
            Polarity::Source => Polarity::Sink,
            Polarity::Sink => Polarity::Source,
        }
    }
}

/// An oriented embedded trivalent graph with sink/source vertices and
/// marked (puncture) faces.
#[derive(Clone, Debug)]
pub struct TrivalentGraph {
    /// Edge involution on darts.
    pub alpha: Vec<usize>,
    /// CCW rotation on darts.
    pub sigma: Vec<usize>,
    /// Vertex of each dart.
    pub vertex_of: Vec<usize>,
    /// Polarity per vertex; edges must join a source to a sink.
    pub polarity: Vec<Polarity>,
    /// Canonical representatives (minimal dart) of the marked faces.
    pub marked: Vec<usize>,
}

impl TrivalentGraph {
    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.polarity.len()
    }

    pub fn edge_count(&self) -> usize {
        self.dart_count() / 2
    }

    /// Next dart along a face traversal.
    pub fn next_in_face(&self, d: usize) -> usize {
        self.sigma[self.alpha[d]]
    }

    pub fn validate(&self) -> Result<(), SkeinError> {
        let n = self.dart_count();
        if self.sigma.len() != n || self.vertex_of.len() != n {
            return Err(SkeinError::BadMap("array lengths differ".into()));
        }
        for d in 0..n {
            if self.alpha[d] >= n || self.sigma[d] >= n {
                return Err(SkeinError::BadMap(format!("dart {d} out of range")));
            }
            if self.alpha[self.alpha[d]] != d || self.alpha[d] == d {
                return Err(SkeinError::BadMap(format!(
                    "alpha is not a fixed-point-free involution at {d}"
                )));
            }
            if self.vertex_of[self.sigma[d]] != self.vertex_of[d] {
                return Err(SkeinError::BadMap(format!("sigma leaves vertex at {d}")));
            }
        }
        // trivalence: sigma is a 3-cycle at each vertex
        for v in 0..self.vertex_count() {
            let darts: Vec<usize> =
                (0..n).filter(|&d| self.vertex_of[d] == v).collect();
            if darts.len() != 3 {
                return Err(SkeinError::BadMap(format!(
                    "vertex {v} has degree {}",
                    darts.len()
                )));
            }
            let d0 = darts[0];
            let (d1, d2) = (self.sigma[d0], self.sigma[self.sigma[d0]]);
            if d1 == d0 || d2 == d0 || d1 == d2 || self.sigma[d2] != d0 {
                return Err(SkeinError::BadMap(format!(
                    "rotation at vertex {v} is not a 3-cycle"
                )));
            }
        }
        // sink/source orientation: every edge joins opposite polarities
        for d in 0..n {
            let v = self.vertex_of[d];
            let w = self.vertex_of[self.alpha[d]];
            if self.polarity[v] == self.polarity[w] {
                return Err(SkeinError::BadMap(format!(
                    "edge {d} joins two vertices of equal polarity"
                )));
            }
        }
        for &m in &self.marked {
            if m >= n {
                return Err(SkeinError::BadMap("marked face dart out of range".into()));
            }
        }
        Ok(())
    }

    /// Face orbits, each starting at its minimal dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                seen[d] = true;
                orbit.push(d);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            out.push(orbit);
        }
        out
    }

    /// Canonical representative (minimal dart) of the face containing `d`.
    pub fn face_rep(&self, d: usize) -> usize {
        let mut rep = d;
        let mut cur = self.next_in_face(d);
        while cur != d {
            rep = rep.min(cur);
            cur = self.next_in_face(cur);
        }
        rep
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces().len() as i64
    }

    /// Sorted face sizes.
    pub fn face_profile(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.faces().iter().map(|f| f.len()).collect();
        sizes.sort_unstable();
        sizes
    }

    /// All vertices trivalent sink/source, sphere Euler characteristic,
    /// three marked 2-gons and hexagons elsewhere.
    pub fn is_admissible_sphere_graph(&self) -> bool {
        if self.validate().is_err() || self.euler_characteristic() != 2 {
            return false;
        }
        let faces = self.faces();
        if self.marked.len() != 3 {
            return false;
        }
        let marked_reps: Vec<usize> = self.marked.iter().map(|&d| self.face_rep(d)).collect();
        for f in &faces {
            let rep = *f.iter().min().unwrap();
            let is_marked = marked_reps.contains(&rep);
            if is_marked && f.len() != 2 {
                return false;
            }
            if !is_marked && f.len() != 6 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The theta graph: two vertices joined by three parallel edges.
    pub fn theta() -> TrivalentGraph {
        // darts 0,1,2 at the source; 3,4,5 at the sink; edge i <-> i+3.
        // CCW rotations chosen so the three faces are 2-gons.
        TrivalentGraph {
            alpha: vec![3, 4, 5, 0, 1, 2],
            sigma: vec![1, 2, 0, 5, 3, 4],
            vertex_of: vec![0, 0, 0, 1, 1, 1],
            polarity: vec![Polarity::Source, Polarity::Sink],
            marked: vec![0, 1, 2],
        }
    }

    #[test]
    fn theta_is_admissible() {
        let g = theta();
        g.validate().unwrap();
        assert_eq!(g.euler_characteristic(), 2);
        assert_eq!(g.face_profile(), vec![2, 2, 2]);
        // marked faces must be distinct faces
        let reps: std::collections::BTreeSet<usize> =
            g.marked.iter().map(|&d| g.face_rep(d)).collect();
        assert_eq!(reps.len(), 3);
        assert!(g.is_admissible_sphere_graph());
    }

    #[test]
    fn validation_catches_same_polarity_edge() {
        let mut g = theta();
        g.polarity[1] = Polarity::Source;
        assert!(g.validate().is_err());
    }
}
