//! Temporary transcription search: find 3-braid words whose closure pair
//! reproduces the reference difference polynomial at a rational point.

use std::time::Instant;
use num_traits::One;
use su3q_arith::{NumCtx, Rat, Scalar, ScalarCtx};
use su3q_linalg::Mat;
use su3q_rep::*;
use su3q_tangle::*;

fn pow_rat(x: &Rat, k: i64) -> Rat {
    let mut acc = Rat::one();
    let base = if k >= 0 { x.clone() } else { x.recip() };
    for _ in 0..k.unsigned_abs() {
        acc = &acc * &base;
    }
    acc
}

struct Candidate {
    prog: TangleProgram,
    pure: bool,
    mats: Vec<Mat<Rat>>, // per mult-2 type
}

fn words(total: usize) -> Vec<Vec<(u8, i8)>> {
    // all syllable decompositions with alternating generators
    let mut out = Vec::new();
    // compositions of `total`
    fn compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut res = Vec::new();
        for first in 1..=n {
            for mut rest in compositions(n - first) {
                rest.insert(0, first);
                res.push(rest);
            }
        }
        res
    }
    for comp in compositions(total) {
        let k = comp.len();
        for start in [1u8, 2u8] {
            // alternating generator assignment
            for signs in 0..(1u32 << k) {
                let mut w = Vec::new();
                for (i, len) in comp.iter().enumerate() {
                    let g = if i % 2 == 0 { start } else { 3 - start };
                    let s: i8 = if signs >> i & 1 == 1 { -1 } else { 1 };
                    for _ in 0..*len {
                        w.push((g, s));
                    }
                }
                out.push(w);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[test]
#[ignore]
fn search_for_figure2_words() {
    let a0 = Rat::new(7.into(), 5.into());
    let ctx = NumCtx::new(a0.clone());
    let t0 = Instant::now();
    let set = CrossingSet::<Rat>::build(&ctx).unwrap();
    let sub = split_by_full_twist(&ctx, &set).unwrap();
    let pos = induced_braiding(&set, &sub, 1);
    let neg = induced_braiding(&set, &sub, -1);
    let eng = ColorEngine::color_m(&ctx, &sub, pos, neg).unwrap();
    eprintln!("numeric engine: {:?}", t0.elapsed());

    let types = eng.multiplicity_two_types();
    let r_nu: Vec<Mat<Rat>> = types.iter().map(|nu| eng.r_type_matrix(*nu).unwrap()).collect();
    let qd: Vec<Rat> = types.iter().map(|nu| ctx.lp(&qdim(*nu).unwrap())).collect();
    let golden = ctx.lp(&golden_difference_total());

    // candidate library
    let mut progs = Vec::new();
    for n in [5usize, 6] {
        for w in words(n) {
            for close in [1u8, 2, 3] {
                let prog = TangleProgram { name: String::new(), word: w.clone(), closed: close };
                match prog.pairing() {
                    TanglePairing::WithCircle => continue,
                    _ => progs.push(prog),
                }
            }
        }
    }
    eprintln!("candidates: {}", progs.len());

    // evaluate type matrices per candidate (parallel)
    let t1 = Instant::now();
    let n_threads = 2;
    let chunk = progs.len().div_ceil(n_threads);
    let mut cands: Vec<Candidate> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for part in progs.chunks(chunk) {
            let eng = &eng;
            let types = &types;
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                for prog in part {
                    let mats: Vec<Mat<Rat>> = types
                        .iter()
                        .map(|nu| eng.type_matrix(prog, *nu).unwrap())
                        .collect();
                    let pure = prog.pairing() == TanglePairing::Pure;
                    out.push(Candidate { prog: prog.clone(), pure, mats });
                }
                out
            }));
        }
        for h in handles {
            cands.extend(h.join().unwrap());
        }
    });
    eprintln!("type matrices for {} candidates: {:?}", cands.len(), t1.elapsed());

    // dump candidate matrices for offline reuse
    {
        use std::io::Write;
        let mut fd = std::fs::File::create("/tmp/cands.txt").unwrap();
        for c in &cands {
            let mut row = format!("{}\t{}\t{}", c.prog.content_key(), c.pure, c.prog.crossing_count());
            for m in &c.mats {
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        row.push_str(&format!("\t{:?}", m[(i, j)]));
                    }
                }
            }
            writeln!(fd, "{row}").unwrap();
        }
    }

    // unit-monomial lookup table: a0^k and -a0^k for |k| <= 600
    use std::collections::HashMap;
    let mut unit_table: HashMap<Rat, i64> = HashMap::new();
    {
        let mut p = Rat::one();
        for k in 0..=600i64 {
            unit_table.entry(p.clone()).or_insert(k);
            p = &p * &a0;
        }
        let mut p = Rat::one();
        for k in 0..=600i64 {
            unit_table.entry(p.clone()).or_insert(-k);
            p = &p / &a0;
        }
    }

    // pair search: 6-crossing F with 5-crossing G, exactly one pure
    let mut hits = Vec::new();
    let t2 = Instant::now();
    for f in &cands {
        for g in &cands {
            if f.prog.crossing_count() + g.prog.crossing_count() != 11 {
                continue;
            }
            if f.pure == g.pure {
                continue;
            }
            let mut d = Rat::zero();
            for i in 0..types.len() {
                let t = type_contribution(&f.mats[i], &g.mats[i], &r_nu[i]);
                d = Scalar::add(&d, &qd[i].mul(&t));
            }
            if Scalar::is_zero(&d) {
                continue;
            }
            let ratio = d.clone() / golden.clone();
            if let Some(k) = unit_table.get(&ratio) {
                hits.push((f.prog.clone(), g.prog.clone(), *k, true));
            } else if let Some(k) = unit_table.get(&(-ratio.clone())) {
                hits.push((f.prog.clone(), g.prog.clone(), *k, false));
            }
        }
    }
    eprintln!("pair scan: {:?}, hits: {}", t2.elapsed(), hits.len());
    for (f, g, k, sign) in hits.iter().take(40) {
        eprintln!(
            "HIT f=[{}] g=[{}] unit=a^{}{}",
            f.content_key(),
            g.content_key(),
            k,
            if *sign { "" } else { " (negated)" }
        );
    }
    assert!(!hits.is_empty(), "no candidate pair matched the reference value");
}
