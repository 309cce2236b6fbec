use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use netvuln::io::read_edge_list;

fn lesmis() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/lesmis.gml")
}

/// Runs the CLI in-process and returns (exit code, stdout, stderr).
fn netvuln(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = netvuln::cli::run(
        std::iter::once("netvuln").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_ring_lattice_without_rewiring_is_a_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ring.txt");
    let (code, _, err) = netvuln(&[
        "generate",
        "--model",
        "ws",
        "--n",
        "10",
        "--k",
        "2",
        "--beta",
        "0",
        "--seed",
        "1",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(code, 0, "{err}");
    let g = read_edge_list(fs::File::open(&out).unwrap()).unwrap().graph;
    assert_eq!((g.node_count(), g.edge_count()), (10, 10));
    assert!(g.nodes().all(|v| g.degree(v) == 2));
    assert!(g.is_connected());
}

#[test]
fn generate_to_stdout_is_deterministic() {
    let args = ["generate", "--model", "ba", "--n", "50", "--m", "2", "--seed", "9"];
    let (code, first, _) = netvuln(&args);
    assert_eq!(code, 0);
    assert_eq!(netvuln(&args).1, first);
    let g = read_edge_list(first.as_bytes()).unwrap().graph;
    assert_eq!(g.edge_count(), 1 + 2 * 48);
}

#[test]
fn stats_reports_json() {
    let (code, out, err) = netvuln(&["stats", "--in", path_str(&lesmis()), "--giant"]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["node_count"], 77);
    assert_eq!(v["edge_count"], 254);
    assert_eq!(v["ncc"], 1);
    assert_eq!(v["diameter"], 5);
    assert_eq!(v["radius"], 3);
    assert_eq!(v["connected_pair_count"], 5852);
    let cpl = v["characteristic_path_length"].as_f64().unwrap();
    assert!((cpl - 2.641).abs() < 1e-3);
}

#[test]
fn attack_writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let svg = dir.path().join("t.svg");
    let (code, out, err) = netvuln(&[
        "attack",
        "--in",
        path_str(&lesmis()),
        "--strategy",
        "RM,IC",
        "--csv",
        path_str(&csv),
        "--svg",
        path_str(&svg),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("RM") && out.contains("IC"), "{out}");
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "strategy,model_or_dataset,seed,iteration,removed_step,removed_cum,f,lcc_size,lcc_prime"
    );
    let first_rm = lines.next().unwrap();
    assert_eq!(first_rm, "RM,lesmis,-,0,0,0,0.000000,77,1.000000");
    let chart = fs::read_to_string(&svg).unwrap();
    assert_eq!(chart.matches("<polyline").count(), 2);
}

#[test]
fn disconnected_input_needs_giant_flag() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("two.txt");
    fs::write(&input, "a b\nb c\nc d\nd a\nx y\n").unwrap();
    let csv = dir.path().join("out.csv");
    let base = [
        "attack",
        "--in",
        path_str(&input),
        "--strategy",
        "RD",
        "--csv",
        path_str(&csv),
    ];
    let (code, _, err) = netvuln(&base);
    assert_eq!(code, 1);
    assert!(err.contains("giant"), "{err}");
    let mut with_giant = base.to_vec();
    with_giant.push("--giant");
    assert_eq!(netvuln(&with_giant).0, 0);
}

#[test]
fn validation_failures_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let missing = dir.path().join("missing.gml");
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "a b\nc d e\n").unwrap();
    let lm = lesmis();
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "attack",
            "--in",
            path_str(&missing),
            "--strategy",
            "RD",
            "--csv",
            path_str(&csv),
        ],
        vec![
            "attack",
            "--in",
            path_str(&lm),
            "--strategy",
            "XX",
            "--csv",
            path_str(&csv),
        ],
        vec!["stats", "--in", path_str(&lm), "--format", "graphml"],
        vec!["generate", "--model", "ws", "--n", "10", "--k", "3"],
        vec!["generate", "--model", "er", "--n", "10", "--p", "1.5"],
        vec![
            "sweep",
            "--model",
            "ba",
            "--n",
            "30",
            "--runs",
            "0",
            "--csv",
            path_str(&csv),
        ],
        vec!["frobnicate"],
    ];
    for args in cases {
        let (code, _, err) = netvuln(&args);
        assert_eq!(code, 1, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
    let (code, _, err) = netvuln(&["stats", "--in", path_str(&bad)]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn unwritable_output_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let nowhere = dir.path().join("no/such/dir/out.csv");
    let (code, _, err) = netvuln(&[
        "attack",
        "--in",
        path_str(&lesmis()),
        "--strategy",
        "RD",
        "--csv",
        path_str(&nowhere),
    ]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = netvuln(&["generate", "--model", "er", "--n", "20", "--out", path_str(&nowhere)]);
    assert_eq!(code, 2);
}

#[test]
fn sweep_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let svg = dir.path().join("mean.svg");
    for (csv, chart) in [(&a, Some(&svg)), (&b, None)] {
        let mut args = vec![
            "sweep",
            "--model",
            "ba",
            "--n",
            "80",
            "--runs",
            "3",
            "--seed",
            "4",
            "--strategy",
            "RD,IM",
            "--csv",
            path_str(csv),
        ];
        if let Some(p) = chart {
            args.extend(["--svg", path_str(p)]);
        }
        let (code, _, err) = netvuln(&args);
        assert_eq!(code, 0, "{err}");
    }
    let first = fs::read(&a).unwrap();
    assert_eq!(first, fs::read(&b).unwrap());
    let text = String::from_utf8(first).unwrap();
    for seed in ["4", "5", "6"] {
        assert!(
            text.lines()
                .any(|l| l.starts_with(&format!("RD,\"ba(n=80, m=3)\",{seed},0,"))),
            "{text}"
        );
    }
    assert_eq!(fs::read_to_string(&svg).unwrap().matches("<polyline").count(), 2);
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_netvuln");
    let ok = Command::new(bin)
        .args(["stats", "--in", path_str(&lesmis())])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let missing = Command::new(bin)
        .args(["stats", "--in", "/definitely/not/here.gml"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(1));
    let seeded = Command::new(bin)
        .args(["generate", "--model", "er", "--n", "30"])
        .env("NETVULN_SEED", "5")
        .output()
        .unwrap();
    let explicit = Command::new(bin)
        .args(["generate", "--model", "er", "--n", "30", "--seed", "5"])
        .output()
        .unwrap();
    assert_eq!(seeded.stdout, explicit.stdout);
}
