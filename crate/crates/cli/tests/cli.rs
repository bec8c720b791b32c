use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const C4: &str = "# square\n4 4\n0 1\n1 2\n2 3\n0 3\n";

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_blockerlab"));
    c.env_remove("BLOCKERLAB_BUDGET");
    c
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn verify_code(dir: &TempDir, report: &Value, graph: Option<&Path>) -> (i32, Value) {
    let r = write(dir, "report.json", &report.to_string());
    let mut args = vec!["verify", s(&r)];
    if let Some(g) = graph {
        args.push(s(g));
    }
    let out = run(&args);
    (code(&out), json(&out))
}

#[test]
fn blocker_yes_prints_witness_and_verifies() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p4.graph", P4);
    let out = run(&[
        "blocker",
        "--op",
        "contract",
        "--param",
        "alpha",
        "--class",
        "bipartite",
        "-k",
        "2",
        "-d",
        "1",
        s(&g),
    ]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["answer"], true);
    assert_eq!(r["witness_edges"], serde_json::json!([[0, 1], [1, 2]]));
    assert_eq!(r["alpha_before"], 2);
    assert_eq!(r["alpha_after"], 1);
    assert_eq!(verify_code(&dir, &r, Some(&g)).0, 0);

    let mut tampered = r.clone();
    tampered["witness_edges"] = serde_json::json!([[0, 1]]);
    let (c, v) = verify_code(&dir, &tampered, Some(&g));
    assert_eq!(c, 1);
    assert!(!v["problems"].as_array().unwrap().is_empty());
}

#[test]
fn blocker_no_exits_one() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p4.graph", P4);
    let out = run(&[
        "blocker",
        "--op",
        "contract",
        "--param",
        "alpha",
        "-k",
        "1",
        "-d",
        "1",
        s(&g),
    ]);
    assert_eq!(code(&out), 1);
    let r = json(&out);
    assert_eq!(r["answer"], false);
    assert!(r.get("witness_edges").is_none());
    assert_eq!(verify_code(&dir, &r, Some(&g)).0, 0);
}

#[test]
fn bipartite_class_rejects_triangle() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k3.graph", "3 3\n0 1\n1 2\n0 2\n");
    let out = run(&[
        "blocker",
        "--op",
        "contract",
        "--param",
        "alpha",
        "--class",
        "bipartite",
        "-k",
        "1",
        "-d",
        "1",
        s(&g),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn oracle_covers_other_operations() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k4.graph", K4);
    let out = run(&[
        "oracle",
        "--op",
        "delete-edges",
        "--param",
        "chi",
        "-k",
        "1",
        "-d",
        "1",
        s(&g),
    ]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(
        (r["chi_before"].as_u64(), r["chi_after"].as_u64()),
        (Some(4), Some(3))
    );
    assert_eq!(r["minimal"], true);
    assert_eq!(verify_code(&dir, &r, Some(&g)).0, 0);

    let out = run(&[
        "oracle",
        "--op",
        "delete-vertices",
        "--param",
        "omega",
        "-k",
        "2",
        "-d",
        "2",
        s(&g),
    ]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["witness_vertices"], serde_json::json!([0, 1]));
    assert_eq!(verify_code(&dir, &r, Some(&g)).0, 0);
}

#[test]
fn threads_do_not_change_the_witness() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.graph", C4);
    let args = [
        "oracle",
        "--op",
        "contract",
        "--param",
        "alpha",
        "-k",
        "2",
        "-d",
        "1",
        s(&g),
    ];
    let one = json(&run(&args));
    let many = json(&bin().arg("--threads").arg("4").args(args).output().unwrap());
    assert_eq!(one["witness_edges"], many["witness_edges"]);
}

#[test]
fn mono_fixed_h_on_k4() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k4.graph", K4);
    let out = run(&["mono", "--mode", "fixed-h", "-h", "2", s(&g)]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["min_mono_edges"], 2);
    assert_eq!(r["deleted_edges"].as_array().unwrap().len(), 2);
    assert_eq!(verify_code(&dir, &r, Some(&g)).0, 0);
}

#[test]
fn mono_deficiency_report_checks_palette() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k4.graph", K4);
    let out = run(&["mono", "--mode", "deficiency", "-d", "1", s(&g)]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(
        (r["min_mono_edges"].as_u64(), r["h"].as_u64()),
        (Some(1), Some(3))
    );
    assert_eq!(verify_code(&dir, &r, Some(&g)).0, 0);
    let mut wide = r.clone();
    wide["h"] = 4.into();
    assert_eq!(verify_code(&dir, &wide, Some(&g)).0, 1);
}

#[test]
fn mono_rejects_non_cograph() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p4.graph", P4);
    assert_eq!(
        code(&run(&["mono", "--mode", "fixed-h", "-h", "2", s(&g)])),
        2
    );
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.graph", "3 2\n0 1\n");
    for args in [
        vec!["param", "--kind", "alpha", s(&bad)],
        vec!["cotree", s(&bad)],
        vec![
            "blocker",
            "--op",
            "contract",
            "--param",
            "alpha",
            "-k",
            "1",
            "-d",
            "1",
            s(&bad),
        ],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(
        code(&run(&["param", "--kind", "alpha", "/nonexistent/x.graph"])),
        2
    );
    let g = write(&dir, "p4.graph", P4);
    assert_eq!(
        code(&run(&[
            "oracle",
            "--op",
            "contract",
            "--param",
            "alpha",
            "-k",
            "1",
            "-d",
            "0",
            s(&g)
        ])),
        2
    );
}

#[test]
fn budget_from_environment() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k4.graph", K4);
    let args = [
        "oracle",
        "--op",
        "delete-edges",
        "--param",
        "chi",
        "-k",
        "3",
        "-d",
        "2",
        s(&g),
    ];
    let out = bin()
        .env("BLOCKERLAB_BUDGET", "3")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    let out = bin()
        .env("BLOCKERLAB_BUDGET", "1e7")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let out = bin()
        .env("BLOCKERLAB_BUDGET", "lots")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn param_kinds() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.graph", C4);
    for (kind, value) in [
        ("alpha", 2),
        ("omega", 2),
        ("chi", 2),
        ("mu", 2),
        ("tau", 2),
    ] {
        let out = run(&["param", "--kind", kind, s(&g)]);
        assert_eq!(code(&out), 0, "{kind}");
        let r = json(&out);
        assert_eq!(r["value"], value, "{kind}");
        assert_eq!(verify_code(&dir, &r, Some(&g)).0, 0, "{kind}");
    }
    let k4 = write(&dir, "k4.graph", K4);
    assert_eq!(code(&run(&["param", "--kind", "mu", s(&k4)])), 2);
    assert_eq!(
        code(&run(&[
            "param",
            "--kind",
            "alpha",
            "--class",
            "bipartite",
            s(&k4)
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "param",
            "--kind",
            "alpha",
            "--class",
            "cograph",
            s(&k4)
        ])),
        0
    );
}

#[test]
fn cotree_prints_sexp() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.graph", C4);
    let out = run(&["cotree", s(&g)]);
    let r = json(&out);
    assert_eq!(r["cotree"], "(1 (0 0 2) (0 1 3))");
    assert_eq!(verify_code(&dir, &r, Some(&g)).0, 0);
}

#[test]
fn reductions_round_trip_through_verify() {
    let dir = TempDir::new().unwrap();
    let sat = write(&dir, "f.sat", "p wp2sat 4 3 1\n0 1\n1 2\n1 3\n");
    let gadget = dir.path().join("gadget.graph");
    let out = run(&["reduce", "sat2chordal", s(&sat), "--out", s(&gadget)]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["gadget"]["gadget"], "chordal");
    let header = std::fs::read_to_string(&gadget).unwrap();
    assert!(header.starts_with("19 "), "{header}");
    assert_eq!(verify_code(&dir, &r, Some(&gadget)).0, 0);
    let p4 = write(&dir, "p4.graph", P4);
    assert_eq!(verify_code(&dir, &r, Some(&p4)).0, 1);

    let mss = write(&dir, "m.mss", "3 2 21\n1 2 3\n");
    let r = json(&run(&["reduce", "mss2mono", s(&mss)]));
    assert_eq!(r["target"], "3.5");
    assert_eq!(r["gadget"]["budget"], 3);

    let g = write(&dir, "p4.graph", P4);
    let r = json(&run(&["reduce", "vc2cb", "-k", "2", s(&g)]));
    assert_eq!(r["k"], 2);
    assert_eq!(r["gadget"]["w"], 4);

    let tri = write(&dir, "k3.graph", "3 3\n0 1\n1 2\n0 2\n");
    assert_eq!(code(&run(&["reduce", "vc2cb", s(&tri)])), 2);
}

#[test]
fn catalogue_writes_graph_files() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("cat");
    let out = run(&[
        "catalogue",
        "--class",
        "bipartite",
        "--n",
        "5",
        "--out",
        s(&out_dir),
    ]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    // connected bipartite graphs on 1..=5 vertices: 1 + 1 + 1 + 3 + 5
    assert_eq!(r["count"], 11);
    assert_eq!(r["seed"], 0);
    assert_eq!(std::fs::read_dir(&out_dir).unwrap().count(), 11);
    assert_eq!(verify_code(&dir, &r, None).0, 0);
    assert_eq!(
        code(&run(&["catalogue", "--class", "planar", "--n", "3"])),
        2
    );
}

#[test]
fn outputs_carry_schema_required_fields() {
    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json"))
        .expect("schema is valid JSON");
    let required = |v: &Value| -> Vec<String> {
        v["required"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_str().unwrap().to_string())
            .collect()
    };
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.graph", K4);
    let sat = write(&dir, "f.sat", "p wp2sat 2 1 1\n0 1\n");
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("parameter", vec!["param", "--kind", "omega", s(&k4)]),
        ("cotree", vec!["cotree", s(&k4)]),
        (
            "blocker",
            vec![
                "oracle",
                "--op",
                "contract",
                "--param",
                "omega",
                "-k",
                "1",
                "-d",
                "1",
                s(&k4),
            ],
        ),
        ("mono", vec!["mono", "--mode", "fixed-h", "-h", "3", s(&k4)]),
        ("reduction", vec!["reduce", "sat2chordal", s(&sat)]),
        (
            "catalogue",
            vec!["catalogue", "--class", "cograph", "--n", "3"],
        ),
    ];
    for (kind, args) in cases {
        let r = json(&run(&args));
        assert_eq!(r["report"], kind);
        for key in required(&schema)
            .into_iter()
            .chain(required(&schema["$defs"][kind]))
        {
            assert!(r.get(&key).is_some(), "{kind} report lacks {key}");
        }
    }
}
