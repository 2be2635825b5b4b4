use std::io::Write;
use std::process::{Command, Output};

fn tiltlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiltlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = tiltlab(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn mindeg_prints_compact_json() {
    let o = tiltlab(&["mindeg", "321", "213"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"ell":2,"d":[1,1]}"#);
}

#[test]
fn interval_dot_is_a_diamond() {
    let o = tiltlab(&["interval", "231", "123", "--format", "dot"]);
    let s = stdout(&o);
    assert!(s.starts_with("digraph"));
    let nodes = s.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("->")).count();
    let edges = s.lines().filter(|l| l.contains("->")).count();
    assert_eq!((nodes, edges), (4, 4), "{s}");
    for w in ["231", "213", "321", "123"] {
        assert!(s.contains(&format!("\"{w}\";")));
    }
}

#[test]
fn rpoly_methods_agree() {
    let s = stdout(&tiltlab(&["rpoly", "231", "123"]));
    assert_eq!(s.matches("q^2 - 2q + 1").count(), 3, "{s}");
    assert!(s.contains("agree"));
    let v = json(&["rpoly", "231", "123", "--method", "hecke"]);
    assert_eq!(v["hecke"], "q^2 - 2q + 1");
}

#[test]
fn graph_has_fifteen_edges() {
    let v = json(&["graph", "--n", "3"]);
    let edges = v.as_array().unwrap();
    assert_eq!(edges.len(), 15);
    let quantum = edges.iter().filter(|e| e["weight"].as_array().unwrap().iter().any(|x| x != 0)).count();
    assert_eq!(quantum, 7);
}

#[test]
fn exit_codes() {
    assert_eq!(tiltlab(&["mindeg", "321", "2134"]).status.code(), Some(1));
    assert_eq!(tiltlab(&["mindeg", "3x1", "213"]).status.code(), Some(1));
    assert_eq!(tiltlab(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(tiltlab(&["--help"]).status.code(), Some(0));
    assert_eq!(tiltlab(&["descent-cycle", "231", "123", "1"]).status.code(), Some(0));
    assert_eq!(tiltlab(&["descent-cycle", "123", "123", "1"]).status.code(), Some(1));
    let o = tiltlab(&["mindeg", "12345678910", "12345678910"]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn member_reads_json_matrices() {
    let dir = std::env::temp_dir().join(format!("tiltlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    // the permutation matrix of 213 lies in T°_{231,123}; 132 does not
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, r#"[[0,1,0],["1","0","0"],[0,0,1]]"#).unwrap();
    let v = json(&["member", path.to_str().unwrap(), "231", "123", "--open"]);
    assert_eq!(v["member"], false);
    let v = json(&["member", path.to_str().unwrap(), "231", "123"]);
    assert_eq!(v["member"], true);
    std::fs::write(&path, "[[1,0,0],[0,0,1],[0,1,0]]").unwrap();
    let v = json(&["member", path.to_str().unwrap(), "231", "123"]);
    assert_eq!(v["member"], false);
    std::fs::write(&path, "[[1,2],[2,4]]").unwrap();
    assert_eq!(tiltlab(&["member", path.to_str().unwrap(), "21", "12"]).status.code(), Some(1));
}

#[test]
fn count_matches_the_r_polynomial() {
    assert_eq!(stdout(&tiltlab(&["count", "231", "123", "--p", "2"])).trim(), "1");
    assert_eq!(stdout(&tiltlab(&["count", "321", "123", "--p", "3"])).trim(), "2");
}

#[test]
fn tnn_example() {
    let v = json(&["tnn", "4231", "3142", "--a", "4,4,2,2", "--word", "s1s2s3|s1s2s3s2s1|s1"]);
    assert_eq!(v["signs"], "++--");
    assert_eq!(v["jcirc"], serde_json::json!([5, 6, 7, 11]));
    assert_eq!(v["trace"].as_array().unwrap().len(), 12);
}

#[test]
fn gw_coefficients() {
    let v = json(&["gw", "321", "123"]);
    assert_eq!(v["d"], serde_json::json!([1, 1]));
    assert_eq!(v["coefficients"], serde_json::json!({"132": 1, "213": 1}));
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = tiltlab(&["verify", "--n", "3", "--seed", "11", "--format", "json"]);
    let b = tiltlab(&["verify", "--n", "3", "--seed", "11", "--format", "json", "--threads", "1"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["seed"], 11);
    assert_eq!(v["passed"], true);
    let two = tiltlab(&["verify", "--n", "2"]);
    assert_eq!(two.status.code(), Some(0));
    let four = tiltlab(&["verify", "--n", "4", "--seed", "5"]);
    assert_eq!(four.status.code(), Some(0), "{}", stdout(&four));
}

#[test]
fn sample_deodhar_is_seeded() {
    let a = stdout(&tiltlab(&["sample-deodhar", "2413", "3142", "--seed", "9"]));
    let b = stdout(&tiltlab(&["sample-deodhar", "2413", "3142", "--seed", "9"]));
    assert_eq!(a, b);
}

#[test]
fn printed_words_parse_back() {
    let v = json(&["word", "136254", "--a", "3,3,1,1,1,6"]);
    let w = v["word"].as_str().unwrap().to_string();
    let o = tiltlab(&["subwords", "136254", "136254", "--a", "3,3,1,1,1,6", "--word", &w]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("1 distinguished subword"));
}
