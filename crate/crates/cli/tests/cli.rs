use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_truncdim"))
}

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(bytes) = stdin {
            pipe.write_all(bytes).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> Vec<u8> {
    let mut full = vec!["gen"];
    full.extend(args);
    let o = run(&full, None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    o.stdout
}

#[test]
fn cycle_pipe_fractional() {
    let el = gen(&["cycle", "8"]);
    let o = run(&["dim", "--k", "1", "--mode", "fractional"], Some(&el));
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "dim_kf=2/1");
}

#[test]
fn p4_both_modes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p4.el");
    let o = run(&["gen", "path", "4", "--out", file.to_str().unwrap()], None);
    assert!(o.status.success());
    let o = run(&["dim", "--input", file.to_str().unwrap(), "--k", "1", "--mode", "both"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "dim_k=2\ndim_kf=4/3\n");
}

#[test]
fn dim_json_shape() {
    let el = gen(&["path", "4"]);
    let o = run(&["dim", "--k", "1", "--json"], Some(&el));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["k"], 1);
    assert_eq!(v["dim_k"], 2);
    assert_eq!(v["dim_kf"]["num"], 4);
    assert_eq!(v["dim_kf"]["den"], 3);
    assert_eq!(v["verified"], true);
    assert_eq!(v["witness"]["set"].as_array().unwrap().len(), 2);

    let o = run(&["dim", "--mode", "fractional", "--json"], Some(&el));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["dim_k"].is_null());
}

#[test]
fn pipe_equals_file() {
    let dir = tempfile::tempdir().unwrap();
    for fam in [&["petersen"][..], &["grid", "4", "3"], &["random", "9", "0.4"], &["spider", "1", "2", "3"]] {
        let file = dir.path().join("g.el");
        let mut args = vec!["gen"];
        args.extend(fam);
        args.extend(["--seed", "11", "--out", file.to_str().unwrap()]);
        assert!(run(&args, None).status.success());
        let mut piped = fam.to_vec();
        piped.extend(["--seed", "11"]);
        let el = gen(&piped);
        assert_eq!(el, std::fs::read(&file).unwrap());
        for k in ["1", "2"] {
            let a = run(&["dim", "--k", k, "--json"], Some(&el));
            let b = run(&["dim", "--k", k, "--json", "--input", file.to_str().unwrap()], None);
            assert!(a.status.success());
            assert_eq!(a.stdout, b.stdout);
        }
    }
}

#[test]
fn verify_petersen_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("report.json");
    let o = run(&["--threads", "1", "verify", "--suite", "petersen", "--json", file.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["suite"], "petersen");
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(run(&["verify", "--suite", "nope"], None).status.code(), Some(1));
    assert_eq!(run(&["dim"], Some(b"3 1\n0 1\n")).status.code(), Some(2));
    assert_eq!(run(&["dim"], Some(b"3 x\n")).status.code(), Some(2));
    assert_eq!(run(&["gen", "cycle", "2"], None).status.code(), Some(2));
    let big = gen(&["cycle", "70"]);
    let o = run(&["dim", "--mode", "integer"], Some(&big));
    assert_eq!(o.status.code(), Some(3));
    // The fractional solver has no order limit.
    assert!(run(&["dim", "--mode", "fractional"], Some(&big)).status.success());
}

#[test]
fn formula_output() {
    let o = run(&["formula", "path", "8", "--k", "1"], None);
    let out = stdout(&o);
    assert!(out.contains("dim_kf=2/1..5/2"), "{out}");
    assert!(out.contains("dim_k=3"), "{out}");
    let o = run(&["formula", "cycle", "9", "--k", "1"], None);
    assert!(stdout(&o).starts_with("dim_kf=9/4"));
    let o = run(&["formula", "petersen", "--k", "2"], None);
    assert!(stdout(&o).starts_with("dim_kf=5/3"));
    assert_eq!(run(&["formula", "complete", "5"], None).status.code(), Some(2));
}

#[test]
fn characterize_tree() {
    let el = gen(&["caterpillar", "2", "3"]);
    let o = run(&["characterize", "--k", "1"], Some(&el));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_tree"], true);
    assert_eq!(v["tree"]["dim1f_eq_dimf"], true);
    assert!(v["tree"]["single_major_kf_eq_f"].is_null());
    let el = gen(&["cycle", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&run(&["characterize"], Some(&el)).stdout).unwrap();
    assert_eq!(v["is_tree"], false);
    assert!(v.get("tree").is_none());
}

#[test]
fn profile_dumps_constraints() {
    let el = gen(&["path", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&run(&["profile", "--k", "1"], Some(&el)).stdout).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["untruncated"], true);
    assert!(!v["constraints"].as_array().unwrap().is_empty());
}
