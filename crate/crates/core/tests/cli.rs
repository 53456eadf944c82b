use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

const IDEALS: &str = "\
ring QQ [x0, x1, x2, x3]
# lc: yes
ideal C = x0*x2 - x1^2,
          x0*x3 - x1*x2,
          x1*x3 - x2^2;
ideal L = x0 + x1, x0 - x1;
ideal Z = ;
ideal P = x0^2 + x1^2;
ideal N = x0^2 + x1;
ideal CI = x0^2 + x1^2 + x2^2 + x3^2, x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2;
ideal PTS = x0, x1, x2^2;
";

fn setup(text: &str) -> (TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ex.ideal");
    std::fs::write(&path, text).unwrap();
    (dir, path)
}

fn liaison(args: &[&str], file: Option<&Path>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_liaison"));
    cmd.arg(args[0]);
    if let Some(f) = file {
        cmd.arg(f);
    }
    cmd.args(&args[1..]);
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn gb_prints_reduced_basis() {
    let (_d, f) = setup(IDEALS);
    let (code, out, _) = liaison(&["gb", "L", "--order", "grevlex"], Some(&f));
    assert_eq!(code, 0);
    assert_eq!(out, "x0\nx1\n");
    let (code, out, _) = liaison(&["gb", "Z"], Some(&f));
    assert_eq!(code, 0);
    assert_eq!(out, "");
    let (code, out, _) = liaison(&["gb", "C", "--order", "lex"], Some(&f));
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn parse_errors_exit_2() {
    let (_d, f) = setup("ring QQ [x]\nideal I = x +;\n");
    let (code, _, err) = liaison(&["gb", "I"], Some(&f));
    assert_eq!(code, 2);
    assert!(err.contains("line 2, column 14"), "{err}");
    let (_d, f) = setup(IDEALS);
    let (code, _, err) = liaison(&["gb", "missing"], Some(&f));
    assert_eq!(code, 2);
    assert!(err.contains("missing"));
    let (code, _, _) = liaison(&["gb", "I"], Some(Path::new("/nonexistent/file.ideal")));
    assert_eq!(code, 2);
}

#[test]
fn betti_table_and_regularity() {
    let (_d, f) = setup(IDEALS);
    let (code, out, _) = liaison(&["betti", "C"], Some(&f));
    assert_eq!(code, 0);
    assert_eq!(out, "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\nreg R/I = 1\n");
    let (_, out, _) = liaison(&["betti", "P"], Some(&f));
    assert!(out.ends_with("reg R/I = 1\n"));
    let (code, out, _) = liaison(&["betti", "C", "--json"], Some(&f));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["regularity"], 1);
    assert_eq!(v["betti"]["1,2"], 3);
    let (code, _, err) = liaison(&["betti", "N"], Some(&f));
    assert_eq!(code, 3);
    assert!(err.contains("not homogeneous"));
}

#[test]
fn link_reports() {
    let (_d, f) = setup(IDEALS);
    let (code, out, _) = liaison(&["link", "C", "--seed", "42", "--mode", "random"], Some(&f));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["genericity"]["codim_j"], 2);
    assert!(v["max_generator_degree_j"].as_u64().unwrap() <= 2);
    assert_eq!(v["seed"], 42);
    let (_, again, _) = liaison(&["link", "C", "--seed", "42"], Some(&f));
    assert_eq!(out, again);
    let (code, out, _) = liaison(&["link", "CI"], Some(&f));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degenerate"], true);
    let (code, _, err) = liaison(&["link", "C", "--mode", "symbolic", "--s", "3"], Some(&f));
    assert_eq!(code, 4);
    assert!(err.contains("exceeds the cap"));
    let (code, out, _) = liaison(&["link", "L", "--mode", "symbolic"], Some(&f));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["mode"], "symbolic");
    assert_eq!(v["J"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_file_and_suite() {
    let (_d, f) = setup(IDEALS);
    let (code, out, _) = liaison(&["verify", "C", "--claims", "NIU11"], Some(&f));
    assert_eq!(code, 0);
    assert!(out.contains("NIU11 pass reg=1 bound=6"), "{out}");
    let (code, out, _) = liaison(&["verify", "PTS", "--claims", "NIU,NIU11"], Some(&f));
    assert_eq!(code, 0);
    assert!(out.contains("NIU skip dim X = 0 < 1"), "{out}");
    let (code, _, _) = liaison(&["verify", "C", "--claims", "BOGUS"], Some(&f));
    assert_eq!(code, 3);

    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("suite.json");
    let (code, out, _) = liaison(
        &["verify", "--suite", "--seed", "7", "--families", "a,b", "--json", json.to_str().unwrap()],
        None,
    );
    assert_eq!(code, 0, "{out}");
    assert!(out.contains(", 0 violations, 0 errors"));
    let first = std::fs::read_to_string(&json).unwrap();
    let (_, out2, _) = liaison(
        &["verify", "--suite", "--seed", "7", "--families", "a,b", "--json", json.to_str().unwrap()],
        None,
    );
    assert_eq!(out, out2);
    assert_eq!(first, std::fs::read_to_string(&json).unwrap());
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["reports"].as_array().unwrap().len(), 8);
}
