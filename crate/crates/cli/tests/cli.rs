use std::process::{Command, Output};

fn spacking(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spacking"))
        .args(args)
        .env_remove("SPACKING_JOBS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn decide_exit_codes() {
    let out = spacking(&["decide", "--graph", "@petersen", "--sequence", "1,2,2,2,2,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "unsat");

    let out = spacking(&["decide", "--graph", "@k4", "--sequence", "1,2,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["witness"]["assignment"].as_array().unwrap().len(), 4);

    let out = spacking(&["decide", "--graph", "garbage", "--sequence", "1,2"]);
    assert_eq!(out.status.code(), Some(3));

    let out = spacking(&["decide", "--graph", "@f1p16", "--sequence", "1,1,3,3,3", "--max-nodes", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_rows_and_job_independence() {
    let out = spacking(&["table", "--family", "1,2,2,2,2,2,2", "--max-n", "10", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "10,11,7,0,1,19"), "{text}");

    let run = |jobs: &str| {
        let out = spacking(&["table", "--family", "1,1,2,3,3", "--max-n", "10", "--format", "json", "--jobs", jobs]);
        assert!(out.status.success());
        out.stdout
    };
    let one = run("1");
    assert_eq!(one, run("3"));
    let v: serde_json::Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(v["rows"]["10"], serde_json::json!({"2": 2, "3": 9, "4": 7, "5": 1}));
}

#[test]
fn table_from_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cubic.g6");
    let enumerated = spacking(&["enumerate", "--n", "8"]);
    std::fs::write(&path, &enumerated.stdout).unwrap();
    let provider = format!("catalog:{}", path.display());
    let out = spacking(&["table", "--family", "1,2,3,4,5,6,7,8", "--max-n", "8", "--provider", &provider, "--format", "csv"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("\n8,3,2,5\n"));
}

#[test]
fn screen_reports() {
    let out = spacking(&["screen", "--question", "1123", "--max-n", "10"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    assert_eq!(v["graphs_checked"], 26);
    assert_eq!(spacking(&["screen", "--question", "nope", "--max-n", "10"]).status.code(), Some(2));
}

#[test]
fn construct_methods() {
    let dir = tempfile::tempdir().unwrap();
    let replay = dir.path().join("replay.json");
    let out = spacking(&["construct", "--method", "11223", "--graph", "@petersen", "--strict", "--replay", replay.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(json(&out)["fallback"], serde_json::Value::Null);
    let log: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&replay).unwrap()).unwrap();
    assert!(log.as_array().unwrap().len() >= 10);

    assert_eq!(spacking(&["construct", "--method", "1222", "--graph", "@k4"]).status.code(), Some(3));

    let out = spacking(&["construct", "--method", "s1333", "--graph", "@k4"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["witness"]["assignment"].as_array().unwrap().len(), 10);

    let out = spacking(&["construct", "--method", "lift", "--graph", "@k33", "--sequence", "1,1"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["witness"]["sequence"], serde_json::json!([1, 3, 3]));
}

#[test]
fn convert_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("edges.txt");
    std::fs::write(&edges, "4 0-1 1-2 2-3 3-0\n3 0-1\n").unwrap();
    let g6 = spacking(&["convert", "--from", "edges", "--to", "graph6", edges.to_str().unwrap()]);
    assert!(g6.status.success());
    let g6_path = dir.path().join("g.g6");
    std::fs::write(&g6_path, &g6.stdout).unwrap();
    let back = spacking(&["convert", "--from", "graph6", "--to", "edges", g6_path.to_str().unwrap()]);
    let text = String::from_utf8(back.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.starts_with("4 "));
}

#[test]
fn enumerate_and_packing() {
    let out = spacking(&["enumerate", "--n", "12"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 85);
    let out = spacking(&["enumerate", "--n", "10", "--bipartite"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 2);
    assert_eq!(spacking(&["enumerate", "--n", "7"]).status.code(), Some(3));
    let v = json(&spacking(&["packing", "--graph", "@k4"]));
    assert_eq!(v["packing_chromatic"], 4);
}
