use std::process::Command;

use ksrd::format::{parse_graph, write_graph};
use ksrd_core::{make_family, FamilySpec};
use serde_json::Value;

fn ksrd(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ksrd")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(stdout: &str) -> Value {
    serde_json::from_str(stdout).unwrap()
}

#[test]
fn formula_d6() {
    let (code, out, _) = ksrd(&["formula", "--family", "dn:6", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"value\":16,\"kind\":\"exact\",\"source\":\"Prop-Dn\"}\n");
}

#[test]
fn gamma_with_oracle() {
    let (code, out, _) = ksrd(&["gamma", "--graph", "path:5", "--k", "2", "--oracle"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["gamma"], 4);
    assert_eq!(v["oracle_gamma"], 4);
    assert_eq!(v["labels"].as_array().unwrap().len(), 5);
    assert!(v["stats"]["ms"].is_number());
}

#[test]
fn verify_improper_path() {
    let (code, out, _) = ksrd(&["verify", "--graph", "path:3", "--labels", "0 2 0", "--k", "2"]);
    assert_eq!(code, 1);
    let v = json(&out);
    assert_eq!(v["proper"], false);
    assert_eq!(v["witness"], serde_json::json!([0, 2]));
    assert_eq!(v["slack"], -1);
}

#[test]
fn verify_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("p5.txt");
    let labels = dir.path().join("f.json");
    std::fs::write(&graph, "5 4\n0 1\n1 2\n2 3\n3 4\n").unwrap();
    std::fs::write(&labels, r#"{"k":2,"labels":[0,2,0,2,0]}"#).unwrap();
    let (code, out, _) = ksrd(&["verify", "--graph", graph.to_str().unwrap(), "--labels", labels.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!((v["proper"].clone(), v["slack"].clone()), (Value::Bool(true), Value::from(0)));
    assert!(v.get("witness").is_none());
    let (_, out, _) = ksrd(&["verify", "--graph", "path:5", "--labels", "1 1 1 1 1", "--k", "3"]);
    assert_eq!(json(&out)["slack"], Value::Null);
}

#[test]
fn json_is_deterministic_apart_from_stats() {
    let strip = |s: &str| {
        let mut v = json(s);
        v.as_object_mut().unwrap().remove("stats");
        v.to_string()
    };
    let args = ["gamma", "--graph", "grid:2,4", "--k", "2"];
    assert_eq!(strip(&ksrd(&args).1), strip(&ksrd(&args).1));
    let args = ["relations", "--graph", "random:7", "--seed", "11", "--k", "2"];
    assert_eq!(ksrd(&args).1, ksrd(&args).1);
}

#[test]
fn construct_writes_labeling() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("rpp5.txt");
    let (code, out, _) = ksrd(&["construct", "--family", "rpp:5", "--k", "2", "--out", out_file.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!((v["weight"].clone(), v["verified"].clone()), (Value::from(20), Value::Bool(true)));
    let text = std::fs::read_to_string(&out_file).unwrap();
    assert_eq!(text.split_whitespace().count(), 30);
    let (code, _, _) = ksrd(&["verify", "--graph", "rpp:5", "--labels", out_file.to_str().unwrap(), "--k", "2"]);
    assert_eq!(code, 0);
}

#[test]
fn discharge_k4() {
    let (code, out, _) = ksrd(&["discharge", "--graph", "kn:4", "--labels", "3 0 0 0"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["min_charge_thirds"], 2);
    assert_eq!(v["conserved"], true);
    assert_eq!(v["transfers"].as_array().unwrap().len(), 3);
    let (code, _, err) = ksrd(&["discharge", "--graph", "path:4", "--labels", "1 1 1 1"]);
    assert_eq!(code, 2);
    assert!(err.contains("not cubic"));
}

#[test]
fn family_text_is_edge_list() {
    let (code, out, _) = ksrd(&["family", "--family", "cycle:3", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out, "3 3\n0 1\n1 2\n0 2\n");
    let (_, out, _) = ksrd(&["family", "--family", "dn:5"]);
    let v = json(&out);
    assert_eq!(
        (v["n"].clone(), v["m"].clone(), v["cubic"].clone()),
        (Value::from(20), Value::from(30), Value::Bool(true))
    );
}

#[test]
fn text_and_csv_formats() {
    let (_, out, _) = ksrd(&["formula", "--family", "knp:5,4", "--k", "3", "--format", "text"]);
    assert_eq!(out, "value: 7\nkind: exact\nsource: Thm-Knp\n");
    let (_, out, _) = ksrd(&["formula", "--family", "knp:5,4", "--k", "3", "--format", "csv"]);
    assert_eq!(out, "value,kind,source\n7,exact,Thm-Knp\n");
}

#[test]
fn exit_codes() {
    assert_eq!(ksrd(&["frobnicate"]).0, 2);
    assert_eq!(ksrd(&["verify", "--graph", "path:3", "--labels", "4 0 0", "--k", "2"]).0, 2);
    assert_eq!(ksrd(&["verify", "--graph", "nonsense", "--labels", "0", "--k", "1"]).0, 2);
    assert_eq!(ksrd(&["formula", "--family", "path:3", "--k", "4"]).0, 2);
    assert_eq!(ksrd(&["construct", "--family", "grid:3,3", "--k", "2"]).0, 2);
    let (code, out, err) = ksrd(&["gamma", "--graph", "grid:3,4", "--k", "2", "--budget", "10"]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert!(err.contains("not proven optimal"));
    assert_eq!(
        ksrd(&["verify", "--graph", "path:9", "--labels", "0 2 0 0 2 0 0 2 0", "--k", "3", "--budget", "1"]).0,
        3
    );
    assert_eq!(ksrd(&["--help"]).0, 0);
}

#[test]
fn malformed_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "2 1\n0 0\n").unwrap();
    let (code, out, err) = ksrd(&["gamma", "--graph", path.to_str().unwrap(), "--k", "1"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("self-loop") || err.contains("loop"), "{err}");
}

#[test]
fn repro_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("repro.csv");
    let (code, out, _) = ksrd(&["repro", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(json(&out)["failures"], serde_json::json!([]));
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,params,k,formula_value,kind,source,constructed_weight,verified,bruteforce_value,status"
    );
    assert!(lines.all(|l| l.ends_with(",ok")));
    assert!(csv.contains("\ndn,6,2,16,exact,Prop-Dn,16,true,,ok\n"));
    assert!(csv.contains("\npath,5,2,4,exact,Thm-Pn,4,true,4,ok\n"));
}

#[test]
fn edge_list_round_trip_on_families() {
    let specs = [
        "path:1", "path:7", "cycle:9", "kn:1", "kn:6", "star:5", "wheel:7", "knp:4,3", "grid2:6", "grid:3,4", "dn:5",
        "dn:9", "rpp:5", "rpp:8", "an:5", "an:10",
    ];
    for s in specs {
        let g = make_family(&s.parse::<FamilySpec>().unwrap()).unwrap();
        let text = write_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        assert_eq!(parsed.vertex_count(), g.vertex_count(), "{s}");
        assert_eq!(parsed.edges(), g.edges(), "{s}");
        assert_eq!(write_graph(&parsed), text, "{s}");
    }
}
