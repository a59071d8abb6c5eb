//! End-to-end checks of the command-line surface: file formats round
//! trip through the binary and exit codes follow the contract (0 ok,
//! 1 invalid input, 2 sweep mismatch).

use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ccpoly"))
}

fn write(dir: &Path, name: &str, content: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn instance_json(kind: &str, n: usize, c: &[usize]) -> String {
    // Unit weights over the full coordinate set of the space.
    let coords: Vec<(usize, usize)> = match kind {
        "path" => {
            let mut v: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
            for i in 1..n {
                for j in 1..=n {
                    if j != i {
                        v.push((i, j));
                    }
                }
            }
            v.sort();
            v
        }
        "cycle" => {
            let mut v = Vec::new();
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        v.push((i, j));
                    }
                }
            }
            v
        }
        _ => panic!("unsupported kind in fixture"),
    };
    let weights: Vec<String> = coords
        .iter()
        .map(|(u, v)| format!("[{u},{v},1,1]"))
        .collect();
    let c_str: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!(
        r#"{{"kind":"{kind}","n":{n},"c":[{}],"objective":"minimize","weights":[{}]}}"#,
        c_str.join(","),
        weights.join(",")
    )
}

#[test]
fn dim_enumerate_solve_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let instance = write(dir.path(), "inst.json", &instance_json("path", 5, &[2, 4]));

    let out = bin().arg("dim").arg(&instance).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dimension: 15"), "{text}");

    let out = bin().arg("enumerate").arg(&instance).arg("--count").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // 4 paths of cardinality 2 plus 4*3*2 of cardinality 4.
    assert!(text.contains("count: 28"), "{text}");

    let out = bin().arg("solve").arg(&instance).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("optimal value: 2"), "{text}");
    assert!(text.contains("cross-checked: yes"), "{text}");
}

#[test]
fn facet_check_and_sweep_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let instance = write(dir.path(), "inst.json", &instance_json("cycle", 5, &[2, 4]));
    let ineq = write(
        dir.path(),
        "degree.json",
        r#"{"kind":"cycle","n":5,"c":[2,4],"class":"degree","node":2}"#,
    );

    let out = bin().arg("facet-check").arg(&instance).arg(&ineq).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("valid: yes"), "{text}");
    assert!(text.contains("facet: yes"), "{text}");
    assert!(text.contains("classification: facet"), "{text}");

    let out = bin()
        .arg("sweep")
        .arg("degree-cycle")
        .arg(&instance)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("disagreements=0"), "{text}");

    // JSON report mode parses back.
    let out = bin()
        .arg("sweep")
        .arg("degree-cycle")
        .arg(&instance)
        .arg("--json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["disagreements"], 0);

    // Unknown sweep id: invalid input.
    let out = bin().arg("sweep").arg("no-such-id").arg(&instance).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn separate_lift_deorient_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let instance = write(dir.path(), "inst.json", &instance_json("path", 5, &[2, 4]));
    let point = write(
        dir.path(),
        "point.json",
        r#"{"entries":[[0,1,1,1],[1,2,1,1],[2,5,1,1]]}"#,
    );
    let out = bin().arg("separate").arg(&instance).arg(&point).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cf-node"), "{text}");

    // Lift a path inequality, then feed the printed file back through
    // deorient on a symmetrizable class.
    let ineq = write(
        dir.path(),
        "osmc.json",
        r#"{"kind":"path","n":5,"c":[2,4],"class":"one_sided_min_cut","s":[0,1,2,5],"v":3}"#,
    );
    let out = bin().arg("lift").arg(&ineq).output().unwrap();
    assert!(out.status.success());
    let lifted: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(lifted["kind"], "cycle");

    let cycle_ineq = write(
        dir.path(),
        "cycle-osmc.json",
        r#"{"kind":"cycle","n":5,"c":[2,4],"class":"one_sided_min_cut","s":[1,2,3],"v":4}"#,
    );
    let out = bin().arg("deorient").arg(&cycle_ineq).output().unwrap();
    assert!(out.status.success());
    let undirected: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(undirected["kind"], "undirected-cycle");

    // Odd cycle exclusion cannot be deoriented: invalid input.
    let odd = write(
        dir.path(),
        "odd.json",
        r#"{"kind":"cycle","n":5,"c":[2,4],"class":"odd_excl","s":[1,2],"t":[3,4]}"#,
    );
    let out = bin().arg("deorient").arg(&odd).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_input_is_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.json", r#"{"kind":"path","n":5}"#);
    let out = bin().arg("dim").arg(&broken).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let missing_weight = write(
        dir.path(),
        "missing.json",
        r#"{"kind":"path","n":3,"c":[2,3],"objective":"minimize","weights":[[0,1,1,1]]}"#,
    );
    let out = bin().arg("dim").arg(&missing_weight).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
