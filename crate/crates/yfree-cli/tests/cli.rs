use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_yfree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn yfree");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("wait for yfree")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

const Y_EDGES: &str = "7 6\n0 1\n0 2\n0 3\n1 4\n2 5\n3 6\n";
const C7_EDGES: &str = "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n";

#[test]
fn check_reports_y_with_witness_and_exit_one() {
    let out = run(&["check", "-", "--format", "edges"], Y_EDGES);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["verdict"], "contains-Y");
    assert_eq!(v["witness"]["center"], 0);
    assert_eq!(v["witness"]["mids"], serde_json::json!([1, 2, 3]));
}

#[test]
fn check_certifies_a_cycle_as_a_necklace() {
    let out = run(&["check", "-", "--format", "edges"], C7_EDGES);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["verdict"], "Y-free");
    assert_eq!(v["certificate"]["type"], "necklace");
    assert_eq!(v["certificate"]["n"], 7);
}

#[test]
fn check_emits_one_line_per_component() {
    // P3 plus an isolated edge plus Y, all in one graph.
    let g = "12 9\n0 1\n1 2\n3 4\n5 6\n5 7\n5 8\n6 9\n7 10\n8 11\n";
    let out = run(&["check", "-", "--format", "edges"], g);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 3);
    let verdicts: Vec<String> = lines
        .iter()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["verdict"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(verdicts, ["Y-free", "Y-free", "contains-Y"]);
    let last: serde_json::Value = serde_json::from_str(lines[2]).unwrap();
    // Witness indices point into the component vertex list.
    assert_eq!(last["vertices"], serde_json::json!([5, 6, 7, 8, 9, 10, 11]));
    assert_eq!(last["witness"]["center"], 0);
}

#[test]
fn check_accepts_a_graph6_stream() {
    // One graph per line; exit 1 because the second line is Y ("FsO__"
    // is the subdivided claw with center 0, mids 1..3, ends 4..6).
    let first = run(&["gen", "--thick-caterpillar", "3", "0b101"], "");
    let stream = format!("{}\nFsO__\n", stdout(&first).trim());
    let out = run(&["check", "-"], &stream);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 2);
    let v0: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(v0["verdict"], "Y-free");
    let v1: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(v1["verdict"], "contains-Y");
    assert_eq!(v1["witness"]["ends"], serde_json::json!([4, 5, 6]));
}

#[test]
fn check_output_is_byte_stable() {
    let a = run(&["check", "-", "--format", "edges"], C7_EDGES);
    let b = run(&["check", "-", "--format", "edges"], C7_EDGES);
    assert_eq!(out_bytes(&a), out_bytes(&b));
}

fn out_bytes(out: &Output) -> &[u8] {
    &out.stdout
}

#[test]
fn check_rejects_garbage_with_exit_two() {
    let out = run(&["check", "-"], "not graph6 at all!!\n");
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());

    let out = run(&["check", "/definitely/not/a/file"], "");
    assert_eq!(code(&out), 2);

    let out = run(&["check", "-"], "");
    assert_eq!(code(&out), 2);
}

#[test]
fn gen_is_deterministic_and_roundtrips_through_cert_verify() {
    let dir = std::env::temp_dir().join(format!("yfree-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cert_path = dir.join("cert.json");
    let cert_arg = cert_path.to_str().unwrap();

    let a = run(&["gen", "--seed", "11", "--n", "17", "--cert-out", cert_arg], "");
    assert_eq!(code(&a), 0);
    let b = run(&["gen", "--seed", "11", "--n", "17"], "");
    assert_eq!(stdout(&a), stdout(&b));

    let verify = run(&["cert-verify", cert_arg, "-"], &stdout(&a));
    assert_eq!(code(&verify), 0, "stderr: {}", String::from_utf8_lossy(&verify.stderr));

    // The certificate does not describe a different graph.
    let other = run(&["gen", "--seed", "12", "--n", "17"], "");
    if stdout(&other) != stdout(&a) {
        let bad = run(&["cert-verify", cert_arg, "-"], &stdout(&other));
        assert_eq!(code(&bad), 1);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn gen_honors_family_flags() {
    for (flag, kind) in [("--strand", "strand"), ("--necklace", "necklace"), ("--kernel", "kernel-clones")] {
        let dir = std::env::temp_dir().join(format!("yfree-cli-fam-{}-{}", kind, std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let cert_path = dir.join("cert.json");
        let cert_arg = cert_path.to_str().unwrap();
        let out = run(&["gen", "--seed", "3", "--n", "14", flag, "--cert-out", cert_arg], "");
        assert_eq!(code(&out), 0);
        let cert: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&cert_path).unwrap()).unwrap();
        assert_eq!(cert["type"], kind);
        let checked = run(&["check", "-"], &stdout(&out));
        assert_eq!(code(&checked), 0);
        std::fs::remove_dir_all(&dir).ok();
    }
}

#[test]
fn gen_thick_caterpillar_masks() {
    // Spine 4, alternating triangles: 4 + 1 spine vertices + 2 apexes.
    let out = run(&["gen", "--thick-caterpillar", "4", "0b1010", "--format", "edges"], "");
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("7 8\n"), "got {text}");

    let bad = run(&["gen", "--thick-caterpillar", "4", "16"], "");
    assert_eq!(code(&bad), 2);
    let bad = run(&["gen", "--thick-caterpillar", "0", "0"], "");
    assert_eq!(code(&bad), 2);
}

#[test]
fn enum_csv_matches_the_frozen_census() {
    let out = run(&["enum", "--max-n", "7", "--csv"], "");
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines[0], "n,classes,labeled,growth");
    assert!(lines[6].starts_with("6,112,26704,"));
    assert!(lines[7].starts_with("7,191,316669,"));
}

#[test]
fn enum_oracle_census_agrees_with_construction() {
    let out = run(&["enum", "--max-n", "5", "--oracle-census", "--json", "--jobs", "2"], "");
    assert_eq!(code(&out), 0);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.len(), 5);
    for row in &rows {
        assert_eq!(row["labeled"], row["census_labeled"]);
    }
    assert_eq!(rows[4]["classes"], 21);
    assert_eq!(rows[4]["census_connected"], "728");
}

#[test]
fn delta_prints_ten_decimals() {
    let out = run(&["delta"], "");
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.trim(), "2.2515918420");

    let js = run(&["delta", "--json"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&js)).unwrap();
    assert!((v["delta"].as_f64().unwrap() - 2.25159).abs() < 1e-4);
    assert!(v["residual"].as_f64().unwrap().abs() <= 1e-10);
}

#[test]
fn pathdecomp_produces_verified_bags() {
    // P7 has pathwidth 1 (and is large enough to take the strand route
    // rather than being its own 6-vertex kernel).
    let p7 = "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n";
    let out = run(&["pathdecomp", "-", "--format", "edges"], p7);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["width"], 1);

    let y = run(&["pathdecomp", "-", "--format", "edges"], Y_EDGES);
    assert_eq!(code(&y), 1);
}

#[test]
fn pathdecomp_accepts_an_external_certificate() {
    let dir = std::env::temp_dir().join(format!("yfree-cli-pd-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cert_path = dir.join("cert.json");
    let cert_arg = cert_path.to_str().unwrap();
    let gen = run(&["gen", "--seed", "5", "--n", "12", "--strand", "--cert-out", cert_arg], "");
    let out = run(&["pathdecomp", "-", "--cert", cert_arg], &stdout(&gen));
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["width"].as_u64().unwrap() <= 3);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn prooflab_reports_all_checks() {
    let c8 = "8 8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n";
    let out = run(&["prooflab", "-", "--format", "edges", "--json"], c8);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ell"], 7);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 9);
    assert!(checks.iter().all(|c| c["pass"].as_bool().unwrap()));

    // Precondition failures are input errors.
    let y = run(&["prooflab", "-", "--format", "edges"], Y_EDGES);
    assert_eq!(code(&y), 2);
    let disconnected = run(&["prooflab", "-", "--format", "edges"], "4 2\n0 1\n2 3\n");
    assert_eq!(code(&disconnected), 2);
}
