use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn szlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szlab")).args(args).env_remove("SZLAB_CACHE_DIR").output().unwrap()
}

fn szlab_env(args: &[&str], cache_dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szlab")).args(args).env("SZLAB_CACHE_DIR", cache_dir).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}\nstderr: {}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn strip_runtime(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("runtime_ms");
            map.values_mut().for_each(strip_runtime);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_runtime),
        _ => {}
    }
}

#[test]
fn field_verify() {
    let out = szlab(&["field", "verify", "--m", "7"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["theta_exponent"], 16);
    assert_eq!(v["certificate"]["holds"], true);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&szlab(&["field", "verify", "--m", "4"])), 2);
    assert_eq!(code(&szlab(&["field", "verify", "--m", "3", "--bogus"])), 2);
    assert_eq!(code(&szlab(&["lattice", "--m", "5"])), 2);
    assert_eq!(code(&szlab(&["classes", "--m", "5", "--oracle"])), 2);
    assert_eq!(code(&szlab(&["degree", "--family", "dihedral", "--n", "7..4"])), 2);
    assert_eq!(code(&szlab(&["degree", "--family", "klein", "--n", "4"])), 2);
    assert_eq!(code(&szlab(&["certify"])), 2);
    let err = String::from_utf8(szlab(&["field", "verify", "--m", "3", "--bogus"]).stderr).unwrap();
    assert!(err.contains("--bogus"));
}

#[test]
fn degree_of_a_family_member() {
    let out = szlab(&["degree", "--family", "dihedral", "--n", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let g = szlab::group::family("dihedral", 4).unwrap();
    let r = szlab::group::permutability_degree(&g).unwrap();
    assert_eq!(v["order"], 16);
    assert_eq!(v["degree_num"], r.degree.numer().to_string());
    assert_eq!(v["degree_den"], r.degree.denom().to_string());
    assert_eq!(v["degree"]["num"], r.degree.numer().to_string());
    assert!(v["runtime_ms"].is_u64());
}

#[test]
fn degree_range_is_deterministic_across_thread_counts() {
    let mut a = json(&szlab(&["degree", "--family", "cq8", "--n", "3..5"]));
    let mut b = json(&szlab(&["--threads", "1", "degree", "--family", "cq8", "--n", "3..5"]));
    strip_runtime(&mut a);
    strip_runtime(&mut b);
    assert_eq!(a, b);
    assert_eq!(a["results"].as_array().unwrap().len(), 3);
    // C1 × Q8: every subgroup of Q8 is normal
    assert_eq!(a["results"][0]["degree"], serde_json::json!({"num": "1", "den": "1"}));
}

#[test]
fn degree_csv() {
    let out = szlab(&["degree", "--family", "dihedral", "--n", "4..5", "--csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,n,order,subgroup_count,class_count,degree_num,degree_den,runtime_ms");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("dihedral,4,16,19,"));
}

#[test]
fn degree_from_cayley_table() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("s3.txt");
    // S3 with 0 = id, 1,2 = 3-cycles, 3,4,5 = transpositions
    let table = "6\n0 1 2 3 4 5\n1 2 0 4 5 3\n2 0 1 5 3 4\n3 5 4 0 2 1\n4 3 5 1 0 2\n5 4 3 2 1 0\n";
    std::fs::write(&p, table).unwrap();
    let out = szlab(&["degree", "--cayley", p.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["degree"], serde_json::json!({"num": "5", "den": "6"}));
    assert_eq!(v["subgroup_count"], 6);

    std::fs::write(&p, "3\n0 1 2\n1 1 0\n2 0 1\n").unwrap();
    assert_eq!(code(&szlab(&["degree", "--cayley", p.to_str().unwrap()])), 2);
}

#[test]
fn certify_all() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("certs.json");
    let out = szlab(&["certify", "--all", "--m-max", "99", "--out", p.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    let arr = v.as_array().unwrap();
    assert!(arr.len() > 100);
    assert!(arr.iter().all(|c| c["holds"] == true && c["schema"] == 1));
}

#[test]
fn certify_single_degree() {
    let out = szlab(&["certify", "--m", "9"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v.as_array().unwrap().iter().any(|c| c["name"] == "f_max"));
}

#[test]
fn classes_with_oracle() {
    let out = szlab(&["classes", "--m", "3", "--oracle"]);
    let v = json(&out);
    assert_eq!(v["exact_class_count"], "101");
    assert_eq!(v["boundP"], "507");
    assert_eq!(v["oracle_subgroup_count"], 101);
    assert_eq!(v["checks"]["upper_le_boundP"], true);
    assert_eq!(v["checks"]["gamma_le_boundGamma"], true);
    // the closed-form class count disagrees with the brute-force class count
    assert_eq!(v["checks"]["class_count_matches"], false);
    assert_eq!(code(&out), 1);
    let out = szlab(&["classes", "--m", "5"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn structure_certificates() {
    for m in ["3", "5"] {
        let out = szlab(&["sz", "verify-structure", "--m", m]);
        assert_eq!(code(&out), 0);
        assert_eq!(json(&out)["certificate"]["holds"], true);
    }
}

#[test]
fn sz_build_writes_cache() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("sz8.szlat");
    let out = szlab(&["sz", "build", "--m", "3", "--out", p.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["order"], 29120);
    let (order, subs) = szlab::szlattice::cache::load(&p).unwrap();
    assert_eq!(order, 29120);
    assert_eq!(subs.iter().map(|s| s.size()).collect::<Vec<_>>(), vec![64, 7, 448]);
    assert_eq!(code(&szlab(&["sz", "build", "--m", "5", "--out", p.to_str().unwrap()])), 2);
}

#[test]
fn lattice_with_cache_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let first = szlab_env(&["lattice", "--m", "3"], dir.path());
    assert_eq!(code(&first), 0, "{}", String::from_utf8_lossy(&first.stderr));
    let cache = dir.path().join("sz8-lattice.szlat");
    assert!(cache.exists());
    let v = json(&first);
    assert_eq!(v["total_subgroups"], 17295);
    assert_eq!(v["sylow_count"], 65);
    assert_eq!(v["ti_verified"], true);
    assert_eq!(v["two_subgroups_without_trivial"], 6500);
    assert_eq!(v["two_subgroups_with_trivial"], 6501);
    assert_eq!(v["induction_base_case"]["holds"], true);
    let second = szlab_env(&["lattice", "--m", "3"], dir.path());
    assert!(String::from_utf8_lossy(&second.stderr).contains("loaded 17295"));
    assert_eq!(first.stdout, second.stdout);

    // a corrupt cache is reported, not silently rebuilt
    let mut bytes = std::fs::read(&cache).unwrap();
    bytes[0] = b'X';
    let bad = dir.path().join("bad.szlat");
    std::fs::write(&bad, bytes).unwrap();
    assert_eq!(code(&szlab(&["lattice", "--m", "3", "--cache", bad.to_str().unwrap()])), 1);
}

#[test]
fn lattice_degree_budget_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.szlat");
    let ck = dir.path().join("ck.json");
    let (c, k) = (cache.to_str().unwrap(), ck.to_str().unwrap());
    let out = szlab(&["lattice", "--m", "3", "--cache", c, "--degree", "--budget-mins", "0", "--checkpoint", k]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["degree"]["complete"], false);
    assert_eq!(v["degree"]["classes_done"], 0);
    assert!(ck.exists());
    let out = szlab(&["lattice", "--m", "3", "--cache", c, "--degree", "--checkpoint", k]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["degree"]["degree"], serde_json::json!({"num": "20997", "den": "6647045"}));
    assert_eq!(v["degree"]["within_ti_bound"], true);
}
