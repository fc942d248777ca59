//! End-to-end checks of the binary: exit codes and report shapes.

use std::process::Command;

fn su3q() -> Command {
    Command::new(env!("CARGO_BIN_EXE_su3q"))
}

#[test]
fn skein_faces_lists_the_four_torus_profiles() {
    let out = su3q()
        .args(["skein", "faces", "--chi", "0", "--boundary", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("4 face profile(s)"), "{text}");
    assert!(text.contains("boundary [6], internal []"), "{text}");
}

#[test]
fn skein_lattice_reports_symmetries() {
    let dir = std::env::temp_dir().join("su3q-cli-test-lattice");
    let _ = std::fs::create_dir_all(&dir);
    let dump = dir.join("graph.txt");
    let out = su3q()
        .args([
            "skein",
            "lattice",
            "--p",
            "1",
            "--q",
            "-4",
            "--dump",
            dump.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("cyclic (order 3) symmetry: true"), "{text}");
    assert!(text.contains("turnover symmetry: false"), "{text}");
    // and the dumped graph round-trips through symcheck
    let out2 = su3q()
        .args(["skein", "symcheck", "--graph", dump.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out2.status.success());
    let text2 = String::from_utf8_lossy(&out2.stdout);
    assert!(text2.contains("admissible: true"), "{text2}");
}

#[test]
fn eval_without_cache_errors_with_guidance() {
    let dir = std::env::temp_dir().join("su3q-cli-test-empty-cache");
    let _ = std::fs::remove_dir_all(&dir);
    let out = su3q()
        .args([
            "eval",
            "--tangle",
            concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/tangle_F.txt"),
            "--color",
            "M",
            "--cache-dir",
            dir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("build-rmm"), "{err}");
}

#[test]
fn malformed_tangle_file_reports_position() {
    let dir = std::env::temp_dir().join("su3q-cli-test-badfile");
    let _ = std::fs::create_dir_all(&dir);
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "braid: s3\nclose: 3\n").unwrap();
    let out = su3q()
        .args(["eval", "--tangle", bad.to_str().unwrap(), "--color", "E"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parse error"), "{err}");
    assert!(err.contains("s3"), "{err}");
}
