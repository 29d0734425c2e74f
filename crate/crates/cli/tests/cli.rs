use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfbench"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const H1: &str = r#"
field = { p = 2, k = 1 }
order = ["x", "h", "g"]
relations = ["g^4 - 1", "h^2 - 1", "hg - g^3h", "gx - xg - g + g^3", "hx - xh - h + hg^2", "x^2"]

[[generators]]
name = "g"
tag = "grouplike"

[[generators]]
name = "h"
tag = "grouplike"

[[generators]]
name = "x"
tag = "skewprim over g^2"
"#;

fn h1_file(tag: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("hopfbench-cli-{}-{tag}.toml", std::process::id()));
    std::fs::write(&path, H1).unwrap();
    path
}

#[test]
fn catalog_counts() {
    let o = run(&["catalog", "list"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("T4.2 families: 197"), "{s}");
    assert!(s.contains("T3.7 families: 35"));
    assert!(s.contains("lemma families: 5"));
    let s = stdout(&run(&["catalog", "list", "t3.7"]));
    assert!(!s.contains("T4.2 families"));
}

#[test]
fn catalog_show_and_unknown_id() {
    let o = run(&["catalog", "show", "T4.2-5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("id = \"T4.2-5\""));
    assert_eq!(run(&["catalog", "show", "T9-1"]).status.code(), Some(2));
}

#[test]
fn presentation_commands() {
    let path = h1_file("pres");
    let file = path.to_str().unwrap();
    let s = stdout(&run(&["dim", file]));
    assert!(s.contains("dim 16"), "{s}");
    let o = run(&["hopf-check", file]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 6);
    let s = stdout(&run(&["skewprim", file, "1", "g^2"]));
    assert!(s.starts_with("dim P_{1,g^2} = 2"), "{s}");
    let s = stdout(&run(&["grouplikes", file]));
    assert!(s.starts_with("8 group-like elements"));
    let s = stdout(&run(&["nf", file, "x^2g + hx^2"]));
    assert_eq!(s.lines().next(), Some("0"));
    let s = stdout(&run(&["iso", file, file]));
    assert!(!s.contains("not isomorphic"));
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_exit_codes() {
    assert!(run(&["verify", "T4.2-5", "--field", "2,2"]).status.success());
    let o = run(&["verify", "T4.2-48", "--field", "2,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL T4.2-48"));
    assert_eq!(run(&["verify", "T4.2-5", "--field", "3,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "T4.2-5", "--field", "7,1"]).status.code(), Some(2));
}

#[test]
fn suites() {
    let s = stdout(&run(&["nichols", "trivial:2", "--nmax", "6"]));
    assert!(s.contains("total 4"), "{s}");
    let o = run(&["nichols-suite", "--field", "3,1"]);
    assert!(o.status.success());
    let o = run(&["identities", "lemma210", "--field", "2,1", "--trials", "20"]);
    assert!(o.status.success());
    let o = run(&["iso-criteria", "T4.2-5", "--field", "2,2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("agreement=true"));
    let s = stdout(&run(&["field-info", "2", "2"]));
    assert!(s.contains("order 4"));
}
