use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_gamma-depth"));
    c.env_remove("GAMMA_DEPTH_PRIME");
    c
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

const RM_ORD: &str = "ring 2 32003\nideal I = x1^2, x1x2, x2^3\n";

#[test]
fn betti_of_the_cube_of_the_maximal_ideal() {
    let dir = TempDir::new().unwrap();
    let out = bin().args(["family", "power-of-m", "--n", "3", "--r", "2"]).output().unwrap();
    assert!(out.status.success());
    let file = write(&dir, "m3.txt", &stdout(&out));
    let json = dir.path().join("betti.json");
    let out = bin()
        .args(["--json", json.to_str().unwrap(), "exec", &file, "betti", "I"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("p(t) = 1 + 10t + 15t^2 + 6t^3"));
    let v = read_json(&json);
    assert_eq!(v["results"][0]["report"]["poincare"], serde_json::json!([1, 10, 15, 6]));
}

#[test]
fn verify_main_on_the_order_example_agrees() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "rm.txt", &format!("{}cmd verify-main I\ncmd gamma-seq I z=x2,x1\n", RM_ORD));
    let json = dir.path().join("main.json");
    let out = bin().args(["run", &file, "--json", json.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v = read_json(&json);
    let main = &v["results"][0]["report"];
    for key in ["instance", "cwl", "gamma_depth", "witness", "alphas", "agree", "seed"] {
        assert!(main.get(key).is_some(), "missing {}", key);
    }
    assert_eq!(main["agree"], true);
    assert_eq!(main["gamma_depth"], 2);
    assert_eq!(v["results"][1]["status"], "AGREE");
    assert_eq!(v["results"][1]["report"]["accepted"], true);
}

#[test]
fn all_commands_run_on_one_file() {
    let dir = TempDir::new().unwrap();
    let cmds = [
        "betti I",
        "resolve I",
        "socle I",
        "hilbert I upto=5",
        "gamma-test I z=x2",
        "gamma-seq I z=x1,x2",
        "gamma-depth I",
        "hat-gamma-test I z=x1+x2",
        "cwl I",
        "verify-main I",
        "splitting-audit I z=x2",
        "delta I",
        "cd I",
        "twovar-check I",
        "twovar-decompose I",
        "twovar-build parts=2:x1,3:1",
        "corpus-verify count=3 seed=5",
    ];
    let mut text = RM_ORD.to_string();
    for c in cmds {
        text.push_str(&format!("cmd {}\n", c));
    }
    let file = write(&dir, "all.txt", &text);
    let json = dir.path().join("all.json");
    let out = bin().args(["run", &file, "--json", json.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v = read_json(&json);
    assert_eq!(v["results"].as_array().unwrap().len(), cmds.len());
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["status"] != "DISAGREE"));
    let s = stdout(&out);
    assert!(s.contains("dim soc = 2"));
    assert!(s.contains("H(u) = (1 - 2u^2 + u^4) / (1-u)^2"));
    assert!(s.contains("parts (d=2, e=1, f=x) (d=3, e=0, f=1)"));
    assert!(s.contains("I = (x^2, xy, y^3)"));
}

#[test]
fn json_reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "rm.txt", &format!("{}cmd gamma-depth I\ncmd delta I\n", RM_ORD));
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = bin()
            .args(["run", &file, "--seed", "11", "--json", p.to_str().unwrap()])
            .output()
            .unwrap();
        assert!(out.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let c1 = dir.path().join("c1.json");
    let c2 = dir.path().join("c2.json");
    for p in [&c1, &c2] {
        let out = bin()
            .args(["corpus-verify", "--count", "6", "--n", "2-3", "--modules", "2", "--seed", "3", "--json"])
            .arg(p)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(fs::read(&c1).unwrap(), fs::read(&c2).unwrap());
}

#[test]
fn corpus_verify_agrees_on_a_hundred_instances() {
    let out = bin()
        .args(["corpus-verify", "--count", "100", "--n", "3", "--seed", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("100 AGREE, 0 DISAGREE"));
}

#[test]
fn disagreement_exits_one_and_keeps_the_instance() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "ci.txt", "ring 2 32003\nideal I = x1^2, x2^2\ncmd delta I cap=0\n");
    let json = dir.path().join("d.json");
    let out = bin().args(["run", &file, "--json", json.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("DISAGREE"));
    let v = read_json(&json);
    assert_eq!(v["results"][0]["status"], "DISAGREE");
    assert!(v["source"].as_str().unwrap().contains("ideal I = x1^2, x2^2"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad_power = write(&dir, "p.txt", "ring 2 32003\nideal I = x1^^2\n");
    let out = bin().args(["check", &bad_power]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 14"));

    let undefined = write(&dir, "u.txt", "ring 2 32003\nideal I = x1\ncmd betti J\n");
    let out = bin().args(["run", &undefined]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`J`"));

    let refused = write(&dir, "r.txt", "ring 2 32003\nideal I = x1^2, x2^2\ncmd twovar-decompose I\n");
    let out = bin().args(["run", &refused]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("refused"));

    let out = bin().args(["family", "cubes"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["run"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn prime_comes_from_the_environment() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "rm.txt", RM_ORD);
    let out = bin().env("GAMMA_DEPTH_PRIME", "101").args(["check", &file]).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("ring 2 101\n"));
    let out = bin().env("GAMMA_DEPTH_PRIME", "100").args(["check", &file]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_round_trips() {
    let dir = TempDir::new().unwrap();
    let file = write(
        &dir,
        "m.txt",
        "ring 3 32003\n# comment\nmodule M free 0 1 rels [x1^2 | -2x3], [x2x3 | 0]\ncmd cwl M\n",
    );
    let out = bin().args(["check", &file]).output().unwrap();
    let once = stdout(&out);
    let again = write(&dir, "m2.txt", &once);
    let out = bin().args(["check", &again]).output().unwrap();
    assert_eq!(stdout(&out), once);
    assert!(once.contains("module M free 0 1 rels [x1^2 | -2x3], [x2x3 | 0]"));
}
