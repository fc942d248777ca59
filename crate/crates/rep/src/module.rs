//! Finite-dimensional SU(3)_q modules as explicit generator matrices.
//!
//! The presentation follows the generators `X1+-, X2+-, H1, H2` with
//! `K_i = exp(h H_i / 4)`; only the `K_i` are stored.  Comultiplication is
//! `D(X) = X (x) K + K^-1 (x) X`, `D(K) = K (x) K`, and the antipode is
//! `S(X_i+-) = -s^{+-1} X_i+-`, `S(K_i) = K_i^-1`.

use su3q_arith::{LaurentPoly, Scalar, ScalarCtx};
use su3q_linalg::{kron, Mat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    X1Plus,
    X1Minus,
    X2Plus,
    X2Minus,
    K1,
    K1Inv,
    K2,
    K2Inv,
}

pub const GENERATORS: [Generator; 8] = [
    Generator::X1Plus,
    Generator::X1Minus,
    Generator::X2Plus,
    Generator::X2Minus,
    Generator::K1,
    Generator::K1Inv,
    Generator::K2,
    Generator::K2Inv,
];

/// A module given by its eight generator action matrices.
///
/// `weights[i]` records the basis vector's `(m1, m2)` with `K_j v = a^{m_j} v`;
/// it is carried through duals and tensor products as bookkeeping so that
/// weight-space computations never need a general eigensolver.
#[derive(Clone, Debug)]
pub struct RepModule<S> {
    pub dim: usize,
    pub x1p: Mat<S>,
    pub x1m: Mat<S>,
    pub x2p: Mat<S>,
    pub x2m: Mat<S>,
    pub k1: Mat<S>,
    pub k1i: Mat<S>,
    pub k2: Mat<S>,
    pub k2i: Mat<S>,
    pub weights: Vec<(i64, i64)>,
}

impl<S: Scalar> RepModule<S> {
    pub fn action(&self, g: Generator) -> &Mat<S> {
        match g {
            Generator::X1Plus => &self.x1p,
            Generator::X1Minus => &self.x1m,
            Generator::X2Plus => &self.x2p,
            Generator::X2Minus => &self.x2m,
            Generator::K1 => &self.k1,
            Generator::K1Inv => &self.k1i,
            Generator::K2 => &self.k2,
            Generator::K2Inv => &self.k2i,
        }
    }

    /// The dual module on the dual basis: `Y` acts by `(S(Y))^T`.
    pub fn dual<C: ScalarCtx<S>>(&self, ctx: &C) -> RepModule<S> {
        let ms = ctx.s_pow(1).neg();
        let msi = ctx.s_pow(-1).neg();
        RepModule {
            dim: self.dim,
            x1p: self.x1p.transpose().scale(&ms),
            x1m: self.x1m.transpose().scale(&msi),
            x2p: self.x2p.transpose().scale(&ms),
            x2m: self.x2m.transpose().scale(&msi),
            k1: self.k1i.transpose(),
            k1i: self.k1.transpose(),
            k2: self.k2i.transpose(),
            k2i: self.k2.transpose(),
            weights: self.weights.iter().map(|(m1, m2)| (-m1, -m2)).collect(),
        }
    }

    /// Tensor product via the comultiplication:
    /// `X` acts as `X (x) K + K^-1 (x) X`, `K` as `K (x) K`.
    pub fn tensor(&self, other: &RepModule<S>) -> RepModule<S> {
        let tens_x = |xa: &Mat<S>, kb: &Mat<S>, kai: &Mat<S>, xb: &Mat<S>| {
            kron(xa, kb).add(&kron(kai, xb))
        };
        let mut weights = Vec::with_capacity(self.dim * other.dim);
        for (m1, m2) in &self.weights {
            for (n1, n2) in &other.weights {
                weights.push((m1 + n1, m2 + n2));
            }
        }
        RepModule {
            dim: self.dim * other.dim,
            x1p: tens_x(&self.x1p, &other.k1, &self.k1i, &other.x1p),
            x1m: tens_x(&self.x1m, &other.k1, &self.k1i, &other.x1m),
            x2p: tens_x(&self.x2p, &other.k2, &self.k2i, &other.x2p),
            x2m: tens_x(&self.x2m, &other.k2, &self.k2i, &other.x2m),
            k1: kron(&self.k1, &other.k1),
            k1i: kron(&self.k1i, &other.k1i),
            k2: kron(&self.k2, &other.k2),
            k2i: kron(&self.k2i, &other.k2i),
            weights,
        }
    }

    /// The enhancement `T = exp(h rho)` with `rho = H1 + H2`: as matrices,
    /// `T = K1^4 K2^4`.
    pub fn enhancement(&self) -> Mat<S> {
        let k1_2 = self.k1.matmul(&self.k1);
        let k2_2 = self.k2.matmul(&self.k2);
        let k1_4 = k1_2.matmul(&k1_2);
        let k2_4 = k2_2.matmul(&k2_2);
        k1_4.matmul(&k2_4)
    }

    /// Check every defining relation exactly; the report lists each
    /// identity with a pass/fail flag.
    pub fn check_relations<C: ScalarCtx<S>>(&self, ctx: &C) -> RelationReport {
        let mut report = RelationReport::default();
        let id = Mat::identity(self.dim);
        report.push("K1 K1^-1 = 1", self.k1.matmul(&self.k1i) == id);
        report.push("K2 K2^-1 = 1", self.k2.matmul(&self.k2i) == id);
        report.push("K1 K2 = K2 K1", self.k1.commutes_with(&self.k2));

        // K_i X_j^{+-} K_i^{-1} = a^{+- cartan_ij} X_j^{+-}
        let cartan = [[2i64, -1], [-1, 2]];
        let ks = [(&self.k1, &self.k1i), (&self.k2, &self.k2i)];
        let xs = [
            (&self.x1p, 0usize, 1i64, "X1+"),
            (&self.x1m, 0, -1, "X1-"),
            (&self.x2p, 1, 1, "X2+"),
            (&self.x2m, 1, -1, "X2-"),
        ];
        for (i, (k, ki)) in ks.iter().enumerate() {
            for (x, j, sign, name) in &xs {
                let lhs = k.matmul(x).matmul(ki);
                let rhs = x.scale(&ctx.a_pow(sign * cartan[i][*j]));
                report.push(
                    &format!("K{} {} K{}^-1 = a^{} {}", i + 1, name, i + 1, sign * cartan[i][*j], name),
                    lhs == rhs,
                );
            }
        }

        // [X_i^+, X_i^-] = (K_i^2 - K_i^-2)/(s - s^-1)
        let sdiff_inv = ctx
            .lp(&LaurentPoly::s_diff(1))
            .inv()
            .expect("s - s^-1 is nonzero");
        for (i, (xp, xm, k, ki)) in [
            (1, (&self.x1p, &self.x1m, &self.k1, &self.k1i)),
            (2, (&self.x2p, &self.x2m, &self.k2, &self.k2i)),
        ] {
            let comm = xp.matmul(xm).sub(&xm.matmul(xp));
            let rhs = k.matmul(k).sub(&ki.matmul(ki)).scale(&sdiff_inv);
            report.push(&format!("[X{i}+, X{i}-] = (K{i}^2 - K{i}^-2)/(s - s^-1)"), comm == rhs);
        }

        // Mixed commutators vanish.
        report.push(
            "[X1+, X2-] = 0",
            self.x1p.matmul(&self.x2m) == self.x2m.matmul(&self.x1p),
        );
        report.push(
            "[X2+, X1-] = 0",
            self.x2p.matmul(&self.x1m) == self.x1m.matmul(&self.x2p),
        );

        // Degree-3 quantum Serre relations with coefficient [2] = s + s^-1.
        let two_q = ctx.lp(&LaurentPoly::from_s_pairs([(1, 1), (-1, 1)]));
        let serre = |a: &Mat<S>, b: &Mat<S>| {
            let aab = a.matmul(a).matmul(b);
            let aba = a.matmul(b).matmul(a);
            let baa = b.matmul(a).matmul(a);
            aab.sub(&aba.scale(&two_q)).add(&baa)
        };
        for (name, a, b) in [
            ("(X1+)^2 X2+ - [2] X1+ X2+ X1+ + X2+ (X1+)^2 = 0", &self.x1p, &self.x2p),
            ("(X2+)^2 X1+ - [2] X2+ X1+ X2+ + X1+ (X2+)^2 = 0", &self.x2p, &self.x1p),
            ("(X1-)^2 X2- - [2] X1- X2- X1- + X2- (X1-)^2 = 0", &self.x1m, &self.x2m),
            ("(X2-)^2 X1- - [2] X2- X1- X2- + X1- (X2-)^2 = 0", &self.x2m, &self.x1m),
        ] {
            report.push(name, serre(a, b).is_zero());
        }
        report
    }

    /// Same dimension, same weight multiset, and both pass the relations:
    /// the module-equality notion used by the pipeline.
    pub fn same_module_type<C: ScalarCtx<S>>(&self, other: &RepModule<S>, ctx: &C) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let mut w1 = self.weights.clone();
        let mut w2 = other.weights.clone();
        w1.sort_unstable();
        w2.sort_unstable();
        w1 == w2 && self.check_relations(ctx).passed() && other.check_relations(ctx).passed()
    }
}

impl RepModule<su3q_arith::ScalarField> {
    /// Dump in the sparse matrix text format, one section per generator,
    /// plus the weight tags.  Exact round-trip.
    pub fn dump(&self) -> String {
        let mut out = format!("# module dim {}\n", self.dim);
        out.push_str("# weights");
        for (m1, m2) in &self.weights {
            out.push_str(&format!(" {m1},{m2}"));
        }
        out.push('\n');
        for g in GENERATORS {
            out.push_str(&format!("# generator {g:?}\n"));
            out.push_str(&su3q_linalg::dump_scalar_mat(self.action(g)));
        }
        out
    }

    pub fn load(text: &str) -> Result<Self, String> {
        let mut dim = None;
        let mut weights = Vec::new();
        let mut sections: Vec<(String, String)> = Vec::new();
        for line in text.lines() {
            if let Some(rest) = line.strip_prefix("# module dim ") {
                dim = Some(rest.trim().parse::<usize>().map_err(|e| e.to_string())?);
            } else if let Some(rest) = line.strip_prefix("# weights") {
                for pair in rest.split_whitespace() {
                    let (a, b) = pair.split_once(',').ok_or("bad weight pair")?;
                    weights.push((
                        a.parse::<i64>().map_err(|e| e.to_string())?,
                        b.parse::<i64>().map_err(|e| e.to_string())?,
                    ));
                }
            } else if let Some(rest) = line.strip_prefix("# generator ") {
                sections.push((rest.trim().to_string(), String::new()));
            } else if let Some((_, body)) = sections.last_mut() {
                body.push_str(line);
                body.push('\n');
            }
        }
        let dim = dim.ok_or("missing `# module dim` header")?;
        let mut find = |name: &str| -> Result<su3q_linalg::Mat<su3q_arith::ScalarField>, String> {
            let body = &sections
                .iter()
                .find(|(n, _)| n == name)
                .ok_or_else(|| format!("missing generator section {name}"))?
                .1;
            su3q_linalg::parse_scalar_mat(body).map_err(|e| e.to_string())
        };
        Ok(RepModule {
            dim,
            x1p: find("X1Plus")?,
            x1m: find("X1Minus")?,
            x2p: find("X2Plus")?,
            x2m: find("X2Minus")?,
            k1: find("K1")?,
            k1i: find("K1Inv")?,
            k2: find("K2")?,
            k2i: find("K2Inv")?,
            weights,
        })
    }
}

#[derive(Default, Debug, Clone)]
pub struct RelationReport {
    pub entries: Vec<(String, bool)>,
}

impl RelationReport {
    fn push(&mut self, name: &str, ok: bool) {
        self.entries.push((name.to_string(), ok));
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
            .collect()
    }
}

/// The fundamental 3-dimensional module `E`.
pub fn fundamental_e<S: Scalar, C: ScalarCtx<S>>(ctx: &C) -> RepModule<S> {
    let unit = |entries: &[(usize, usize)]| {
        let mut m = Mat::zeros(3, 3);
        for &(i, j) in entries {
            m[(i, j)] = S::one();
        }
        m
    };
    let diag = |es: [i64; 3]| {
        let mut m = Mat::zeros(3, 3);
        for (i, e) in es.into_iter().enumerate() {
            m[(i, i)] = ctx.a_pow(e);
        }
        m
    };
    RepModule {
        dim: 3,
        x1p: unit(&[(0, 1)]),
        x1m: unit(&[(1, 0)]),
        x2p: unit(&[(1, 2)]),
        x2m: unit(&[(2, 1)]),
        k1: diag([1, -1, 0]),
        k1i: diag([-1, 1, 0]),
        k2: diag([0, 1, -1]),
        k2i: diag([0, -1, 1]),
        weights: vec![(1, 0), (-1, 1), (0, -1)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use su3q_arith::{quantum_integer, ScalarField, SymCtx};

    #[test]
    fn e_matches_printed_matrices() {
        let ctx = SymCtx;
        let e: RepModule<ScalarField> = fundamental_e(&ctx);
        // X1+ has its single 1 in row 1, column 2 (1-based).
        assert_eq!(e.x1p[(0, 1)], ScalarField::one());
        assert_eq!(
            (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&(i, j)| !e.x1p[(i, j)].is_zero()).count(),
            1
        );
        // K1 = diag(a, a^-1, 1)
        assert_eq!(e.k1[(0, 0)], ctx.a_pow(1));
        assert_eq!(e.k1[(1, 1)], ctx.a_pow(-1));
        assert_eq!(e.k1[(2, 2)], ScalarField::one());
        assert!(e.check_relations(&ctx).passed());
    }

    #[test]
    fn dual_reproduces_f_matrices() {
        let ctx = SymCtx;
        let e: RepModule<ScalarField> = fundamental_e(&ctx);
        let f = e.dual(&ctx);
        // X1+ on F has its single entry -s at row 2, column 1 (1-based).
        assert_eq!(f.x1p[(1, 0)], ctx.s_pow(1).neg());
        // X1- on F: entry -s^-1 at (1, 2) in 1-based terms.
        assert_eq!(f.x1m[(0, 1)], ctx.s_pow(-1).neg());
        // K1 on F = diag(a^-1, a, 1)
        assert_eq!(f.k1[(0, 0)], ctx.a_pow(-1));
        assert_eq!(f.k1[(1, 1)], ctx.a_pow(1));
        assert_eq!(f.k1[(2, 2)], ScalarField::one());
        assert!(f.check_relations(&ctx).passed());
    }

    #[test]
    fn double_dual_is_isomorphic_to_e() {
        let ctx = SymCtx;
        let e: RepModule<ScalarField> = fundamental_e(&ctx);
        let ee = e.dual(&ctx).dual(&ctx);
        assert!(e.same_module_type(&ee, &ctx));
    }

    #[test]
    fn tensor_dimensions_and_k_action() {
        let ctx = SymCtx;
        let e: RepModule<ScalarField> = fundamental_e(&ctx);
        let ee = e.tensor(&e);
        assert_eq!(ee.dim, 9);
        let expect = [2i64, 0, 1, 0, -2, -1, 1, -1, 0];
        for (i, k) in expect.iter().enumerate() {
            assert_eq!(ee.k1[(i, i)], ctx.a_pow(*k));
        }
        assert!(ee.check_relations(&ctx).passed());
    }

    #[test]
    fn eef_passes_relations() {
        let ctx = SymCtx;
        let e: RepModule<ScalarField> = fundamental_e(&ctx);
        let f = e.dual(&ctx);
        let eef = e.tensor(&e).tensor(&f);
        assert_eq!(eef.dim, 27);
        assert!(eef.check_relations(&ctx).passed());
    }

    #[test]
    fn corrupted_module_fails_commutator() {
        let ctx = SymCtx;
        let mut e: RepModule<ScalarField> = fundamental_e(&ctx);
        e.x1m[(1, 0)] = e.x1m[(1, 0)].neg();
        let report = e.check_relations(&ctx);
        assert!(!report.passed());
        assert!(report
            .failures()
            .iter()
            .any(|n| n.contains("[X1+, X1-]")));
    }

    #[test]
    fn module_dump_round_trip() {
        let ctx = SymCtx;
        let e: RepModule<ScalarField> = fundamental_e(&ctx);
        let f = e.dual(&ctx);
        let text = f.dump();
        let back = RepModule::load(&text).unwrap();
        assert_eq!(back.dump(), text);
        assert!(back.same_module_type(&f, &ctx));
        assert_eq!(back.x1p[(1, 0)], f.x1p[(1, 0)]);
    }

    #[test]
    fn enhancement_of_e() {
        let ctx = SymCtx;
        let e: RepModule<ScalarField> = fundamental_e(&ctx);
        let t = e.enhancement();
        // T_E = diag(s^2, 1, s^-2), trace [3].
        assert_eq!(t[(0, 0)], ctx.s_pow(2));
        assert_eq!(t[(1, 1)], ScalarField::one());
        assert_eq!(t[(2, 2)], ctx.s_pow(-2));
        assert_eq!(
            t.trace(),
            ScalarField::from_poly(quantum_integer(3).unwrap())
        );
        // T commutes with the K's.
        assert!(t.commutes_with(&e.k1));
        assert!(t.commutes_with(&e.k2));
    }
}
