use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqschubert")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const H_TABLE: &str = "e: t1^2*t2\ns1: t1^2*t2\ns2: -t1^3-t1^2*t2\ns1s2: -t1^2*t2-t1*t2^2\ns2s1: -t1^3-t1^2*t2\ns1s2s1: -t1^2*t2-t1*t2^2\n";

#[test]
fn root_counts() {
    for (ty, count) in [("A2", 3), ("C2", 4), ("G2", 6)] {
        let text = stdout(&["roots", "-t", ty]);
        assert!(text.contains(&format!("positive roots ({count}):")), "{text}");
    }
}

#[test]
fn a2_convert_golden() {
    let gkm = stdout(&[
        "convert",
        "-t",
        "A2",
        "--coords",
        "zA",
        "--from",
        "borel",
        "--to",
        "gkm",
        "--class",
        "t1*x1*x2",
        "--no-cache",
    ]);
    assert_eq!(gkm, H_TABLE);
    let back = stdout(&[
        "convert",
        "-t",
        "A2",
        "--coords",
        "zA",
        "--from",
        "gkm",
        "--to",
        "schubert",
        "--class",
        H_TABLE,
        "--no-cache",
    ]);
    assert_eq!(back, "e: t1^2*t2\ns2: t1^2\ns1s2: t1\n");
    let echo = stdout(&["convert", "-t", "A2", "--from", "schubert", "--to", "schubert", "--class", "s1: t1;e: 1"]);
    assert_eq!(echo, "e: 1\ns1: t1\n");
}

#[test]
fn convert_from_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_eqschubert"))
        .args([
            "convert",
            "-t",
            "A2",
            "--coords",
            "zA",
            "--from",
            "borel",
            "--to",
            "schubert",
            "--input",
            "-",
            "--no-cache",
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"t1*x1*x2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "e: t1^2*t2\ns2: t1^2\ns1s2: t1\n");
}

#[test]
fn localize_examples() {
    // t3 - t1 with t3 eliminated
    assert_eq!(stdout(&["localize", "-t", "A2", "--coords", "zA", "2", "212"]), "-2*t1-t2\n");
    assert_eq!(stdout(&["localize", "-t", "B3", "e", "123"]), "1\n");
}

#[test]
fn multiply_identity_and_agreement() {
    assert_eq!(stdout(&["multiply", "-t", "A2", "e", "12", "--no-cache"]), "s1s2: 1\n");
    let both = stdout(&["multiply", "-t", "A2", "1", "1", "--method", "both", "--no-cache"]);
    assert_eq!(both, stdout(&["multiply", "-t", "A2", "1", "1", "--method", "gkm", "--no-cache"]));
}

#[test]
fn gkm_graph_shapes() {
    let a2 = stdout(&["gkm-graph", "-t", "A2"]);
    assert_eq!(a2.matches(" -- ").count(), 9);
    assert_eq!(a2.matches("[label=\"s").count() + a2.matches("[label=\"e").count(), 6);
    let c2 = stdout(&["gkm-graph", "-t", "C2"]);
    assert_eq!(c2.matches(" -- ").count(), 16);
    // long roots 2e1 and 2e2 in fundamental-weight coordinates
    assert!(c2.contains("label=\"2*t1\"") && c2.contains("label=\"-2*t1+2*t2\""), "{c2}");
    let single = stdout(&["gkm-graph", "-t", "A2", "--cutoff", "0"]);
    assert_eq!(single, "graph gkm_A2 {\n  v0 [label=\"e (123)\"];\n}\n");
}

#[test]
fn deterministic_output() {
    for args in [
        &["multiply", "-t", "G2", "12", "2", "--no-cache"][..],
        &["sigma", "-t", "B3", "--max-length", "3", "--no-cache"],
        &["gkm-graph", "-t", "B2"],
        &["double-schubert", "-t", "C3", "123", "--no-cache"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn cache_transparency() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    for args in [
        &["multiply", "-t", "A2", "12", "21"][..],
        &["double-schubert", "-t", "A2", "121"],
        &["sigma", "-t", "A2", "--max-length", "3"],
        &["localize", "-t", "A2", "12", "121"],
    ] {
        let uncached: Vec<&str> = args.iter().copied().chain(["--no-cache"]).collect();
        let cached: Vec<&str> = args.iter().copied().chain(["--cache-dir", d]).collect();
        let want = stdout(&uncached);
        assert_eq!(stdout(&cached), want, "cold {args:?}");
        assert_eq!(stdout(&cached), want, "warm {args:?}");
    }
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn corrupt_cache_entry_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["double-schubert", "-t", "A2", "121", "--cache-dir", d];
    let want = stdout(&args);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        std::fs::write(&path, format!("{text}garbage")).unwrap();
    }
    assert_eq!(stdout(&args), want);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "-t", "Q7"]).status.code(), Some(2));
    assert_eq!(run(&["localize", "-t", "A2", "3", "1"]).status.code(), Some(2));
    assert_eq!(run(&["factor", "-t", "A2", "11", "1"]).status.code(), Some(2));
    let small = run(&["convert", "-t", "B3", "--from", "gkm", "--to", "schubert", "--class", "e: t1^2"]);
    assert_eq!(small.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&small.stderr).contains("cutoff"));
}

#[test]
fn json_and_output_file() {
    let json = stdout(&["roots", "-t", "G2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 6);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let printed = stdout(&["factor", "-t", "A2", "121", "2", "-o", path.to_str().unwrap()]);
    assert!(printed.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["factor", "-t", "A2", "121", "2"]));
}
