use tiltc_cli::{run, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION};

fn tiltc(args: &[&str]) -> tiltc_cli::Outcome {
    let mut argv = vec!["tiltc"];
    argv.extend_from_slice(args);
    run(argv)
}

#[test]
fn kl_example() {
    let o = tiltc(&[
        "kl",
        "--type",
        "A3",
        "--x",
        "2",
        "--y",
        "2 1 3 2",
        "--no-cache",
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "v + v^3\n");
}

#[test]
fn tilt_json_example() {
    let o = tiltc(&[
        "tilt",
        "O",
        "--type",
        "A1",
        "--x",
        "1",
        "--simple",
        "--format",
        "json",
        "--no-cache",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["setting"], "O");
    assert_eq!(v["entries"][0]["y"], "");
    assert_eq!(
        v["entries"][0]["poly"],
        serde_json::json!({"-1": 1, "1": 1})
    );
    assert_eq!(v["entries"][1]["y"], "1");
    assert_eq!(v["entries"][1]["poly"], serde_json::json!({"0": 1}));
    assert_eq!(v["dims"], serde_json::json!({"nabla": 1, "delta": 1}));
}

#[test]
fn oracle_example() {
    let o = tiltc(&["oracle", "verify", "--block", "sl2"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.ends_with("all 9 invariant suites pass\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(tiltc(&["kl", "--type", "A3"]).code, EXIT_USAGE);
    assert_eq!(tiltc(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(
        tiltc(&["kl", "--type", "Q9", "--x", "", "--y", ""]).code,
        EXIT_USAGE
    );
    assert_eq!(
        tiltc(&["tilt", "km", "--type", "affA1", "--x", "0"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        tiltc(&["tilt", "O", "--type", "affA1", "--x", "0"]).code,
        EXIT_USAGE
    );
    let o = tiltc(&[
        "tilt",
        "O",
        "--type",
        "A2",
        "--x",
        "1",
        "--I",
        "1",
        "--no-cache",
    ]);
    assert_eq!(o.code, EXIT_VALIDATION);
    assert!(o.stderr.starts_with("error[validation]: "));
    assert_eq!(o.stderr.lines().count(), 1);
    let o = tiltc(&[
        "kl",
        "--type",
        "A2",
        "--x",
        "1",
        "--y",
        "",
        "--parabolic",
        "1",
        "--flavor",
        "spherical",
        "--no-cache",
    ]);
    assert_eq!(o.code, EXIT_VALIDATION);
    let o = tiltc(&[
        "tilt", "quantum", "--type", "A2", "--ell", "4", "--lambda", "3,-1",
    ]);
    assert_eq!(o.code, EXIT_VALIDATION);
    assert_eq!(
        tiltc(&["oracle", "verify", "--block", "nope"]).code,
        EXIT_VALIDATION
    );
    assert_eq!(tiltc(&["--help"]).code, EXIT_OK);
}

#[test]
fn broken_block_is_an_internal_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.block");
    // a wrong weyl dictionary makes the KL comparison fail
    let text = tiltc_core::mincpx::block::SL2.replace("e = \"\"\ns = \"1\"", "e = \"1\"\ns = \"\"");
    std::fs::write(&path, text).unwrap();
    let o = tiltc(&["oracle", "verify", "--block", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_INTERNAL);
    assert!(o.stdout.contains("kl-equivalence: FAIL"));
}

#[test]
fn lambda_echo() {
    let o = tiltc(&[
        "tilt",
        "quantum",
        "--type",
        "A1",
        "--ell",
        "5",
        "--lambda",
        "7",
        "--simple",
        "--no-cache",
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o
        .stdout
        .starts_with("normalized: x=\"0\" lambda0=(1) I=[]\n"));
    assert!(o.stdout.contains("y=\"\" [1]: v^-1 + v"));
}

#[test]
fn truncation_marker() {
    let o = tiltc(&[
        "tilt",
        "km",
        "--type",
        "affA1",
        "--x",
        "0",
        "--level",
        "pos",
        "--standard",
        "--max-length",
        "4",
        "--no-cache",
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("truncated at 4"));
}

#[test]
fn batch_mode() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.txt");
    std::fs::write(&path, "# x ; y\n2 ; 2 1 3 2\n ; 1 2 1\n1 ; 1\n").unwrap();
    let o = tiltc(&[
        "kl",
        "--type",
        "A3",
        "--batch",
        path.to_str().unwrap(),
        "--jobs",
        "2",
        "--no-cache",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(o.stdout, "2\t2 1 3 2\tv + v^3\n\t1 2 1\tv^3\n1\t1\t1\n");
}

#[test]
fn cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = [
        "kl",
        "--type",
        "B3",
        "--x",
        "",
        "--y",
        "1 2 3 2 1",
        "--cache-dir",
        d,
    ];
    let cold = tiltc(&args);
    let warm = tiltc(&args);
    assert_eq!(cold, warm);
    let info = tiltc(&["cache", "info", "--path", d]);
    assert!(info.stdout.contains("B3.tbl\tsystem=B3"));
    assert!(info.stdout.contains("\tok"));
    let file = dir.path().join("B3.tbl");
    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::write(&file, text.replacen("\"0\"", "\"2\"", 1)).unwrap();
    assert!(tiltc(&["cache", "info", "--path", d])
        .stdout
        .contains("corrupt"));
    let again = tiltc(&args);
    assert_eq!(again.stdout, cold.stdout);
    assert!(again.stderr.starts_with("warning[cache]"));
    let cleared = tiltc(&["cache", "clear", "--path", d]);
    assert!(cleared.stdout.contains("removed 1 file(s)"));
    assert!(tiltc(&["cache", "info", "--path", d])
        .stdout
        .contains("empty"));
}

#[test]
fn env_var_selects_cache() {
    let dir = tempfile::tempdir().unwrap();
    std::env::set_var("TILTC_CACHE", dir.path());
    let o = tiltc(&["kl", "--type", "G2", "--x", "", "--y", "1 2 1 2"]);
    std::env::remove_var("TILTC_CACHE");
    assert_eq!(o.code, EXIT_OK);
    assert!(dir.path().join("G2.tbl").exists());
}
