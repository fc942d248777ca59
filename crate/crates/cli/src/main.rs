//! Command-line front end for the SU(3)_q mutant-invariant pipeline.
//!
//! Subcommands: `selfcheck`, `build-rmm`, `eval`, `mutant-diff`, `skein`.
//! Long computations report staged progress on standard error; reports go
//! to standard output.  The exit status is 0 exactly when every verdict
//! in the report passes.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use su3q_arith::{NumCtx, Rat, Scalar, ScalarField, SymCtx};
use su3q_linalg::fnv1a64;
use su3q_rep::{
    induced_braiding, load_mat_with_hash, save_mat_with_hash, split_by_full_twist,
    CrossingSet, RmmPair, SubmoduleData, GENERATORS,
};
use su3q_skein::{
    check_cyclic_symmetry, check_turnover_symmetry, dump_graph, enumerate_face_profiles,
    lattice_quotient_graph, parse_graph, LatticeSpec,
};
use su3q_tangle::{parse_tangle, total_difference, ColorEngine, TangleProgram};

mod checks;

#[derive(Parser)]
#[command(name = "su3q", about = "Exact SU(3)_q invariants of mutant knots", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Cache directory (or set SU3Q_CACHE_DIR).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Run the whole pipeline at a random rational point first and abort
    /// on any mismatch before symbolic work.
    #[arg(long)]
    precheck: bool,
    /// Worker threads for column and leg-extension parallelism.
    #[arg(long, default_value_t = 2)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Run the algebra, R-matrix and skein property suites.
    Selfcheck {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Construct the 225x225 braiding of M (x) M and cache it.
    BuildRmm {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Evaluate a 2-tangle on the highest-weight spaces of a colour.
    Eval {
        /// Tangle program file.
        #[arg(long)]
        tangle: PathBuf,
        /// Colour module: E or M.
        #[arg(long, default_value = "M")]
        color: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Compute the mutant difference for a pair of tangles.
    MutantDiff {
        /// Tangle F file.
        #[arg(long)]
        f: PathBuf,
        /// Tangle G file.
        #[arg(long)]
        g: PathBuf,
        /// Truncation order of the h-series (at least 14).
        #[arg(long, default_value_t = 16)]
        h_order: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Skein-combinatorics utilities.
    Skein {
        #[command(subcommand)]
        sub: SkeinCommand,
    },
}

#[derive(Subcommand)]
enum SkeinCommand {
    /// Enumerate face profiles by total Euler defect.
    Faces {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        boundary: usize,
        #[arg(long)]
        boundary_max: Option<i64>,
    },
    /// Build the admissible graph of a lattice quotient.
    Lattice {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        /// Write the graph in the exchange format.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Check the symmetries of a graph in the exchange format.
    Symcheck {
        #[arg(long)]
        graph: PathBuf,
    },
}

fn cache_dir(common: &CommonOpts) -> PathBuf {
    common
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("SU3Q_CACHE_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("cache"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ok = match cli.command {
        Command::Selfcheck { common } => cmd_selfcheck(&common),
        Command::BuildRmm { common } => cmd_build_rmm(&common),
        Command::Eval { tangle, color, common } => cmd_eval(&tangle, &color, &common),
        Command::MutantDiff { f, g, h_order, common } => {
            cmd_mutant_diff(&f, &g, h_order, &common)
        }
        Command::Skein { sub } => cmd_skein(sub),
    };
    match ok {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

struct SymbolicContext {
    set: CrossingSet<ScalarField>,
    sub: SubmoduleData<ScalarField>,
}

fn build_symbolic() -> Result<SymbolicContext, String> {
    let ctx = SymCtx;
    eprintln!("[stage] building crossings (gates: intertwiners, Yang-Baxter)");
    let set = CrossingSet::build(&ctx).map_err(|e| e.to_string())?;
    eprintln!("[stage] splitting E(x)E(x)F by the full twist");
    let sub = split_by_full_twist(&ctx, &set).map_err(|e| e.to_string())?;
    Ok(SymbolicContext { set, sub })
}

/// Run the construction at a random rational point; errors on any failed
/// gate.  Fast enough to always precede the symbolic run when requested.
fn run_precheck() -> Result<(), String> {
    use rand::Rng;
    let mut rng = rand::rng();
    let (num, den) = loop {
        let num = rng.random_range(3i64..=9);
        let den = rng.random_range(2i64..num.max(3));
        if num != den {
            break (num, den);
        }
    };
    eprintln!("[precheck] a0 = {num}/{den}");
    let t0 = Instant::now();
    let r = std::panic::catch_unwind(|| -> Result<(), String> {
        let ctx = NumCtx::new(Rat::new(num.into(), den.into()));
        let set = CrossingSet::<Rat>::build(&ctx).map_err(|e| e.to_string())?;
        let sub = split_by_full_twist(&ctx, &set).map_err(|e| e.to_string())?;
        let pos = induced_braiding(&set, &sub, 1);
        let neg = induced_braiding(&set, &sub, -1);
        if !pos.matmul(&neg).is_identity() {
            return Err("R_MM inverse pair failed at a0".into());
        }
        let mm = sub.m.tensor(&sub.m);
        for g in GENERATORS {
            if !mm.action(g).commutes_with(&pos) {
                return Err(format!("R_MM intertwiner failed at a0 on {g:?}"));
            }
        }
        let eng = ColorEngine::color_m(&ctx, &sub, pos, neg).map_err(|e| e.to_string())?;
        let curl = parse_tangle("braid: s2\nclose: 3\n").unwrap();
        let mut v = vec![<Rat as Scalar>::zero(); 225];
        v[0] = <Rat as Scalar>::one();
        let out = eng.evaluate(&curl, &[v]).map_err(|e| e.to_string())?;
        if out[0][0].is_zero() {
            return Err("curl scalar vanished at a0".into());
        }
        Ok(())
    });
    match r {
        Ok(inner) => inner?,
        Err(_) => return Err("precheck panicked (degenerate a0?)".into()),
    }
    eprintln!("[precheck] passed in {:?}", t0.elapsed());
    Ok(())
}

fn rmm_paths(dir: &Path) -> (PathBuf, PathBuf) {
    (dir.join("rmm_pos.txt"), dir.join("rmm_neg.txt"))
}

fn cmd_build_rmm(common: &CommonOpts) -> Result<bool, String> {
    if common.precheck {
        run_precheck()?;
    }
    let ctx = build_symbolic()?;
    let dir = cache_dir(common);
    let (_, hash) = build_and_cache_rmm(&ctx, &dir)?;
    println!("R_MM cached under {} (content hash {hash:016x})", dir.display());
    Ok(true)
}

fn load_rmm(dir: &Path) -> Result<(RmmPair<ScalarField>, u64), String> {
    let (ppath, npath) = rmm_paths(dir);
    let pos_text = std::fs::read_to_string(&ppath).map_err(|_| {
        format!(
            "missing cached R_MM at {}; run `su3q build-rmm` first",
            ppath.display()
        )
    })?;
    let neg_text = std::fs::read_to_string(&npath).map_err(|_| {
        format!(
            "missing cached R_MM inverse at {}; run `su3q build-rmm` first",
            npath.display()
        )
    })?;
    let (pos, _) = load_mat_with_hash(&pos_text)?;
    let (neg, _) = load_mat_with_hash(&neg_text)?;
    let hash = fnv1a64(pos_text.as_bytes());
    Ok((RmmPair { pos, neg }, hash))
}

/// Build R_MM fresh, cache it, and return it with its content hash.
fn build_and_cache_rmm(
    ctx: &SymbolicContext,
    dir: &Path,
) -> Result<(RmmPair<ScalarField>, u64), String> {
    eprintln!("[stage] computing R_MM columns (225 of them, weight-blocked)");
    let t0 = Instant::now();
    let rmm = RmmPair::build_cleared(&ctx.set, &ctx.sub);
    eprintln!("[stage] R_MM built in {:?}", t0.elapsed());
    if !rmm.pos.matmul(&rmm.neg).is_identity() {
        return Err("R_MM . R_MM^-1 != 1".into());
    }
    std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    let (ppath, npath) = rmm_paths(dir);
    let pos_text = save_mat_with_hash(&rmm.pos);
    let neg_text = save_mat_with_hash(&rmm.neg);
    let hash = fnv1a64(pos_text.as_bytes());
    std::fs::write(&ppath, &pos_text).map_err(|e| e.to_string())?;
    std::fs::write(&npath, &neg_text).map_err(|e| e.to_string())?;
    eprintln!("[stage] R_MM cached at {} (hash {hash:016x})", ppath.display());
    Ok((rmm, hash))
}

fn engine_for_color(
    color: &str,
    common: &CommonOpts,
    build_rmm_if_missing: bool,
) -> Result<(ColorEngine<ScalarField>, u64), String> {
    let ctx = build_symbolic()?;
    match color {
        "E" | "e" => {
            let mut eng =
                ColorEngine::color_e(&SymCtx, &ctx.set).map_err(|e| e.to_string())?;
            eng.threads = common.threads.max(1);
            Ok((eng, 0))
        }
        "M" | "m" => {
            let dir = cache_dir(common);
            let (rmm, hash) = match load_rmm(&dir) {
                Ok(v) => v,
                Err(e) if build_rmm_if_missing => {
                    eprintln!("[stage] {e}; building now");
                    build_and_cache_rmm(&ctx, &dir)?
                }
                Err(e) => return Err(e),
            };
            let mut eng = ColorEngine::color_m(&SymCtx, &ctx.sub, rmm.pos, rmm.neg)
                .map_err(|e| e.to_string())?;
            eng.threads = common.threads.max(1);
            Ok((eng, hash))
        }
        other => Err(format!("unknown colour `{other}` (expected E or M)")),
    }
}

fn read_tangle(path: &Path) -> Result<TangleProgram, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    parse_tangle(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_eval(tangle: &Path, color: &str, common: &CommonOpts) -> Result<bool, String> {
    let prog = read_tangle(tangle)?;
    let dir = cache_dir(common);
    let (eng, rmm_hash) = engine_for_color(color, common, false)?;
    // evaluation cache keyed by (tangle, colour, R_MM hash)
    let key = format!("{}|{}|{rmm_hash:016x}", prog.content_key(), eng.label);
    let cache_file = dir.join(format!("eval_{:016x}.txt", fnv1a64(key.as_bytes())));
    if let Ok(cached) = std::fs::read_to_string(&cache_file) {
        print!("{cached}");
        eprintln!("[cache] reused {}", cache_file.display());
        return Ok(true);
    }
    let mut out = String::new();
    out.push_str(&format!(
        "tangle {} ({} crossings, close {}, {:?})\n",
        if prog.name.is_empty() { "<unnamed>" } else { &prog.name },
        prog.crossing_count(),
        prog.closed,
        prog.pairing()
    ));
    for (nu, vecs) in eng.hw.clone() {
        eprintln!("[stage] weight space {nu} (dimension {})", vecs.len());
        let m = eng.type_matrix(&prog, nu).map_err(|e| e.to_string())?;
        out.push_str(&format!("type {nu}:\n"));
        for i in 0..m.rows() {
            let row: Vec<String> =
                (0..m.cols()).map(|j| format!("{}", m[(i, j)])).collect();
            out.push_str(&format!("  [ {} ]\n", row.join(" , ")));
        }
    }
    let inv = eng.closure_invariant_hw(&prog).map_err(|e| e.to_string())?;
    out.push_str(&format!("closure invariant: {inv}\n"));
    print!("{out}");
    if std::fs::create_dir_all(&dir).is_ok() {
        let _ = std::fs::write(&cache_file, &out);
    }
    Ok(true)
}

fn verdict_line(out: &mut String, label: &str, pass: bool) {
    out.push_str(&format!(
        "  {label}: {}\n",
        if pass { "PASS" } else { "FAIL" }
    ));
}

fn cmd_mutant_diff(
    fpath: &Path,
    gpath: &Path,
    h_order: usize,
    common: &CommonOpts,
) -> Result<bool, String> {
    if h_order < 14 {
        return Err("h-series order must be at least 14 for the Vassiliev check".into());
    }
    if common.precheck {
        run_precheck()?;
    }
    let f = read_tangle(fpath)?;
    let g = read_tangle(gpath)?;
    let (eng, _) = engine_for_color("M", common, true)?;
    eprintln!("[stage] evaluating tangles on the multiplicity-two weight spaces");
    let t0 = Instant::now();
    let rep = total_difference(&eng, &f, &g, h_order).map_err(|e| e.to_string())?;
    eprintln!("[stage] difference computed in {:?}", t0.elapsed());

    let mut out = String::new();
    out.push_str(&format!("t31 = {}\n", rep.t31.pretty()));
    if !rep.t31_clearing.is_one() {
        out.push_str(&format!("  clearing denominator: {}\n", rep.t31_clearing));
    }
    out.push_str(&format!("t12 = {}\n", rep.t12.pretty()));
    if !rep.t12_clearing.is_one() {
        out.push_str(&format!("  clearing denominator: {}\n", rep.t12_clearing));
    }
    out.push_str(&format!("total = {}\n", rep.total.pretty()));
    out.push_str("total (canonical exponent/coefficient lines):\n");
    for line in rep.total.to_canonical_text().lines() {
        out.push_str(&format!("  {line}\n"));
    }
    out.push_str(&format!("h-series: {}\n", rep.h_series));
    out.push_str("verdicts:\n");
    verdict_line(&mut out, "t31 matches reference (up to unit)", rep.t31_golden);
    verdict_line(&mut out, "t12 matches reference (up to unit)", rep.t12_golden);
    verdict_line(
        &mut out,
        "[6][4] t31 + [5][3] t12 combination matches",
        rep.combination_golden,
    );
    verdict_line(
        &mut out,
        "divisible by the thirteen root-of-unity factors",
        rep.divisible_by_vanishing_factors,
    );
    verdict_line(
        &mut out,
        "h^0..h^12 vanish and |h^13| = 27095040",
        rep.vassiliev.all_passed,
    );
    verdict_line(&mut out, "role swap consistent (up to unit)", rep.role_swap_consistent);
    if rep.total_golden {
        out.push_str("GOLDEN MATCH (up to unit)\n");
    } else {
        out.push_str("GOLDEN MISMATCH\n");
    }
    print!("{out}");
    Ok(rep.all_passed())
}

fn cmd_skein(sub: SkeinCommand) -> Result<bool, String> {
    match sub {
        SkeinCommand::Faces { chi, boundary, boundary_max } => {
            let profiles = enumerate_face_profiles(chi, boundary, boundary_max);
            println!(
                "{} face profile(s) for chi = {chi}, {boundary} boundary face(s):",
                profiles.len()
            );
            for p in &profiles {
                println!("  {p}");
            }
            Ok(true)
        }
        SkeinCommand::Lattice { p, q, dump } => {
            let spec = LatticeSpec::new(p, q).map_err(|e| e.to_string())?;
            let g = lattice_quotient_graph(&spec).map_err(|e| e.to_string())?;
            let admissible = g.is_admissible_sphere_graph();
            let cyclic = check_cyclic_symmetry(&g);
            let turnover = check_turnover_symmetry(&g);
            println!(
                "lattice ({p}, {q}): index {}, vertices {}, edges {}, faces {:?}",
                spec.index(),
                g.vertex_count(),
                g.edge_count(),
                g.face_profile()
            );
            println!("  admissible: {admissible}");
            println!("  cyclic (order 3) symmetry: {cyclic}");
            println!("  turnover symmetry: {turnover}");
            if let Some(path) = dump {
                std::fs::write(&path, dump_graph(&g)).map_err(|e| e.to_string())?;
                println!("  written to {}", path.display());
            }
            Ok(admissible && cyclic)
        }
        SkeinCommand::Symcheck { graph } => {
            let text = std::fs::read_to_string(&graph)
                .map_err(|e| format!("{}: {e}", graph.display()))?;
            let g = parse_graph(&text).map_err(|e| e.to_string())?;
            println!("faces: {:?}", g.face_profile());
            println!("admissible: {}", g.is_admissible_sphere_graph());
            println!("cyclic (order 3) symmetry: {}", check_cyclic_symmetry(&g));
            println!("turnover symmetry: {}", check_turnover_symmetry(&g));
            Ok(true)
        }
    }
}

fn cmd_selfcheck(common: &CommonOpts) -> Result<bool, String> {
    if common.precheck {
        run_precheck()?;
    }
    let mut all = true;
    checks::run_all(&mut all);
    println!("{}", if all { "selfcheck: all passed" } else { "selfcheck: FAILURES" });
    Ok(all)
}
