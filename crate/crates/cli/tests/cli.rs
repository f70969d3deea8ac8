use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn webbasis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_webbasis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn matrix_csv_at_two() {
    let out = webbasis(&["--n", "2", "matrix", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        ",\"(1,2)(3,4)\",\"(1,4)(2,3)\"\n\"(1,2)(3,4)\",1,1\n\"(1,4)(2,3)\",0,1\n"
    );
}

#[test]
fn web_graph_dot_at_three() {
    let out = webbasis(&["--n", "3", "graph", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph "));
    assert_eq!(
        dot.lines()
            .filter(|l| l.contains("[label=") && !l.contains("->"))
            .count(),
        5
    );
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 5);
    for label in ["s2", "s3", "s4"] {
        assert!(dot.contains(&format!("[label=\"{label}\"]")));
    }
}

#[test]
fn tableau_graph_has_the_same_shape() {
    let out = webbasis(&[
        "--n", "3", "graph", "--graph", "tableau", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);
    assert_eq!(v["vertices"][0], "1 2 3 | 4 5 6");
}

#[test]
fn enum_pairs_tableaux_with_webs() {
    let out = webbasis(&["--n", "2", "enum", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["pairs"][0]["tableau"], "1 3 | 2 4");
    assert_eq!(v["pairs"][0]["web"], "(1,2)(3,4)");
    assert_eq!(v["pairs"][1]["tableau"], "1 2 | 3 4");
    assert_eq!(v["pairs"][1]["web"], "(1,4)(2,3)");
}

#[test]
fn bijection_round_trips_both_kinds() {
    let out = webbasis(&["bijection", "1 2 4 | 3 5 6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("web     (1,6)(2,3)(4,5)"));
    let out = webbasis(&["bijection", "(1,6)(2,3)(4,5)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tableau"], "1 2 4 | 3 5 6");
    assert_eq!(v["round_trip"], true);
}

#[test]
fn check_passes_at_five() {
    let out = webbasis(&["--n", "5", "check"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    for suite in v["suites"].as_array().unwrap() {
        assert_eq!(suite["pass"], true);
        assert!(suite["stats"].get("skipped").is_none(), "{suite}");
    }
}

#[test]
fn check_runs_only_selected_suites() {
    let out = webbasis(&["--n", "3", "check", "--checks", "catalan,triangularity"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["catalan", "triangularity"]);
}

#[test]
fn conjecture_reports_without_failing() {
    let out = webbasis(&["--n", "4", "conjecture"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["nonnegativity_holds"], true);
    assert_eq!(v["support_equals_order"], true);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["--n", "3", "enum", "--format", "csv"],
        &["--n", "3", "matrix", "--format", "dot"],
        &["--n", "3", "check", "--format", "csv"],
        &["--n", "3", "graph", "--checks", "catalan"],
        &["--n", "3", "check", "--checks", "no_such_check"],
        &["--n", "3", "enum", "--cache-dir", "x"],
        &["--n", "0", "enum"],
        &["--n", "9", "matrix"],
        &["--n", "11", "enum"],
        &["enum"],
        &["--n", "3", "bijection", "1 3 | 2 4"],
        &["bijection", "(1,3)(2,4)"],
        &["bijection", "2 1 | 3 4"],
        &["--n", "3", "frobnicate"],
    ];
    for args in cases {
        assert_eq!(webbasis(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn override_lifts_the_enumeration_cap() {
    let out = webbasis(&[
        "--n",
        "11",
        "--max-n-override",
        "bijection",
        "1 3 5 7 9 11 13 15 17 19 21 | 2 4 6 8 10 12 14 16 18 20 22",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = webbasis(&[
        "--n",
        "9",
        "--max-n-override",
        "check",
        "--checks",
        "catalan",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

fn cached_matrix(dir: &Path) -> String {
    let out = webbasis(&["--n", "3", "matrix", "--cache-dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    stdout(&out)
}

#[test]
fn cache_is_reused_only_while_digests_match() {
    let dir = tempfile::tempdir().unwrap();
    let fresh = cached_matrix(dir.path());
    let csv = dir.path().join("transition-n3.csv");
    let digest = dir.path().join("transition-n3.digest.json");
    assert_eq!(fs::read_to_string(&csv).unwrap(), fresh);
    assert!(fs::read_to_string(&digest).unwrap().contains("\"n\": 3"));

    // A consistent edit, with the content hash updated, is served as is.
    let edited = fresh.replacen(",1,1,", ",1,7,", 1);
    assert_ne!(edited, fresh);
    fs::write(&csv, &edited).unwrap();
    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&digest).unwrap()).unwrap();
    let mut sidecar = sidecar.as_object().unwrap().clone();
    use sha2::Digest;
    sidecar.insert(
        "content_sha256".into(),
        hex::encode(sha2::Sha256::digest(edited.as_bytes())).into(),
    );
    fs::write(&digest, serde_json::to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(cached_matrix(dir.path()), edited);

    // A stale order digest forces recomputation.
    sidecar.insert("order_sha256".into(), "0".repeat(64).into());
    fs::write(&digest, serde_json::to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(cached_matrix(dir.path()), fresh);

    // So does a content edit the sidecar does not vouch for.
    fs::write(&csv, &edited).unwrap();
    assert_eq!(cached_matrix(dir.path()), fresh);

    // Deleting the cache recomputes the same entries.
    fs::remove_file(&csv).unwrap();
    fs::remove_file(&digest).unwrap();
    assert_eq!(cached_matrix(dir.path()), fresh);
}

#[test]
fn check_uses_the_cached_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = webbasis(&[
        "--n",
        "3",
        "check",
        "--checks",
        "triangularity",
        "--cache-dir",
        d,
    ]);
    assert_eq!(first.status.code(), Some(0));
    // Corrupt an entry below the diagonal and vouch for it in the sidecar.
    let csv = dir.path().join("transition-n3.csv");
    let digest = dir.path().join("transition-n3.digest.json");
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    let last = lines.last_mut().unwrap();
    *last = last.replacen(",0,", ",5,", 1);
    let edited = lines.join("\n") + "\n";
    fs::write(&csv, &edited).unwrap();
    let mut sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&digest).unwrap()).unwrap();
    use sha2::Digest;
    sidecar["content_sha256"] = hex::encode(sha2::Sha256::digest(edited.as_bytes())).into();
    fs::write(&digest, sidecar.to_string()).unwrap();
    let second = webbasis(&[
        "--n",
        "3",
        "check",
        "--checks",
        "triangularity",
        "--cache-dir",
        d,
    ]);
    assert_eq!(second.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&second.stdout).unwrap();
    assert_eq!(v["pass"], false);
    assert!(!v["suites"][0]["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn text_formats_render() {
    let out = webbasis(&["--n", "2", "matrix", "--format", "text"]);
    assert_eq!(stdout(&out), "1 1  (1,2)(3,4)\n0 1  (1,4)(2,3)\n");
    let out = webbasis(&[
        "--n", "3", "check", "--format", "text", "--checks", "catalan",
    ]);
    assert!(stdout(&out).starts_with("PASS catalan"));
}
