//! Graph exchange format: adjacency with rotation.
//!
//! ```text
//! # trivalent graph
//! vertex 0 source 0 1 2     # darts in CCW order
//! vertex 1 sink 3 4 5
//! edge 0 3
//! edge 1 4
//! edge 2 5
//! marks 0 1 2
//! ```

use crate::map::{Polarity, TrivalentGraph};
use crate::SkeinError;

pub fn dump_graph(g: &TrivalentGraph) -> String {
    let mut out = String::from("# trivalent graph\n");
    for v in 0..g.vertex_count() {
        let mut darts: Vec<usize> =
            (0..g.dart_count()).filter(|&d| g.vertex_of[d] == v).collect();
        // order the three darts CCW starting from the smallest
        let d0 = *darts.iter().min().unwrap();
        darts = vec![d0, g.sigma[d0], g.sigma[g.sigma[d0]]];
        let pol = match g.polarity[v] {
            Polarity::Source => "source",
            Polarity::Sink => "sink",
        };
        out.push_str(&format!(
            "vertex {} {} {} {} {}\n",
            v, pol, darts[0], darts[1], darts[2]
        ));
    }
    let mut seen = vec![false; g.dart_count()];
    for d in 0..g.dart_count() {
        if !seen[d] {
            seen[d] = true;
            seen[g.alpha[d]] = true;
            out.push_str(&format!("edge {} {}\n", d, g.alpha[d]));
        }
    }
    if !g.marked.is_empty() {
        out.push_str("marks");
        for &m in &g.marked {
            out.push_str(&format!(" {m}"));
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<TrivalentGraph, SkeinError> {
    let mut vertices: Vec<(Polarity, [usize; 3])> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut marked: Vec<usize> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let bad = |msg: &str| SkeinError::BadFormat { line: i + 1, msg: msg.to_string() };
        match toks[0] {
            "vertex" => {
                if toks.len() != 6 {
                    return Err(bad("expected `vertex <id> <source|sink> <d0> <d1> <d2>`"));
                }
                let id: usize = toks[1].parse().map_err(|_| bad("bad vertex id"))?;
                if id != vertices.len() {
                    return Err(bad("vertex ids must be consecutive from 0"));
                }
                let pol = match toks[2] {
                    "source" => Polarity::Source,
                    "sink" => Polarity::Sink,
                    _ => return Err(bad("polarity must be `source` or `sink`")),
                };
                let mut darts = [0usize; 3];
                for (k, t) in toks[3..6].iter().enumerate() {
                    darts[k] = t.parse().map_err(|_| bad("bad dart id"))?;
                }
                vertices.push((pol, darts));
            }
            "edge" => {
                if toks.len() != 3 {
                    return Err(bad("expected `edge <dartA> <dartB>`"));
                }
                let a: usize = toks[1].parse().map_err(|_| bad("bad dart id"))?;
                let b: usize = toks[2].parse().map_err(|_| bad("bad dart id"))?;
                edges.push((a, b));
            }
            "marks" => {
                for t in &toks[1..] {
                    marked.push(t.parse().map_err(|_| bad("bad dart id"))?);
                }
            }
            other => return Err(bad(&format!("unknown record `{other}`"))),
        }
    }
    let n = 3 * vertices.len();
    let mut sigma = vec![usize::MAX; n];
    let mut vertex_of = vec![usize::MAX; n];
    let mut polarity = Vec::with_capacity(vertices.len());
    for (v, (pol, darts)) in vertices.iter().enumerate() {
        polarity.push(*pol);
        for k in 0..3 {
            let d = darts[k];
            if d >= n || vertex_of[d] != usize::MAX {
                return Err(SkeinError::BadFormat {
                    line: 0,
                    msg: format!("dart {d} repeated or out of range"),
                });
            }
            vertex_of[d] = v;
            sigma[d] = darts[(k + 1) % 3];
        }
    }
    let mut alpha = vec![usize::MAX; n];
    for (a, b) in edges {
        if a >= n || b >= n {
            return Err(SkeinError::BadFormat { line: 0, msg: "edge dart out of range".into() });
        }
        alpha[a] = b;
        alpha[b] = a;
    }
    if alpha.iter().any(|&x| x == usize::MAX) {
        return Err(SkeinError::BadFormat { line: 0, msg: "missing edges".into() });
    }
    let g = TrivalentGraph { alpha, sigma, vertex_of, polarity, marked };
    g.validate()?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{lattice_quotient_graph, LatticeSpec};

    #[test]
    fn round_trip_preserves_structure() {
        for (p, q) in [(1i64, -1i64), (3, 0), (1, -4)] {
            let g = lattice_quotient_graph(&LatticeSpec::new(p, q).unwrap()).unwrap();
            let text = dump_graph(&g);
            let back = parse_graph(&text).unwrap();
            assert_eq!(back.face_profile(), g.face_profile());
            assert_eq!(back.euler_characteristic(), 2);
            assert_eq!(dump_graph(&back), text);
            assert!(back.is_admissible_sphere_graph());
        }
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = parse_graph("vertex 0 source 0 1\n").unwrap_err();
        match err {
            SkeinError::BadFormat { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
