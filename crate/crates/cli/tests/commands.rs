use std::fs;
use std::process::{Command, Output};

use fission::graph::{complete_multipartite, graph_from_json, graph_to_json, supernova, Multigraph};
use fission::tree::{tree_from_json, View};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fission"))
        .args(args)
        .env_remove("FISSION_CACHE_DIR")
        .env("FISSION_OEIS_URL", "http://127.0.0.1:9")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn count_formats() {
    let md = run(&["count", "--stat", "phi", "--k-max", "3", "--n-max", "4"]);
    assert_eq!(code(&md), 0);
    let text = stdout(&md);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("| k\\n |"), "{text}");
    assert_eq!(lines.len(), 2 + 4);
    assert!(lines[5].contains(" 9 |"), "{text}");

    let csv = stdout(&run(&["count", "--stat", "sigma", "--k-max", "2", "--n-max", "5", "--format", "csv"]));
    assert_eq!(csv, "k\\n,1,2,3,4,5\n1,0,1,2,6,14\n2,0,1,4,16,48\n");

    let json = stdout(&run(&["count", "--stat", "ext-ss", "--k-max", "1", "--n-max", "4", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["stat"], "ext-ss");
    assert_eq!(v["rows"][0][3], "5");
}

#[test]
fn count_to_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.md");
    let b = dir.path().join("b.md");
    for path in [&a, &b] {
        let o = run(&["count", "--stat", "Phi", "--k-max", "12", "--n-max", "30", "--out", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        assert!(o.stdout.is_empty());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn enumerate_lists_trees() {
    let text = stdout(&run(&["enumerate", "--slope", "3", "--leaves", "4"]));
    assert_eq!(text.lines().count(), 9);
    let again = stdout(&run(&["enumerate", "--slope", "3", "--leaves", "4"]));
    assert_eq!(text, again);

    let json = stdout(&run(&["enumerate", "--slope", "2", "--leaves", "4", "--mult", "--format", "json"]));
    let trees: Vec<_> = json.lines().map(|l| tree_from_json(l).unwrap()).collect();
    assert_eq!(trees.len(), 9);
    assert!(trees.iter().all(|t| t.view() == View::Multiplicity && t.slope() == 2 && t.rank() == 4));
}

#[test]
fn graph_output() {
    let dot = stdout(&run(&["graph", "--tree", "[2,2]", "--kind", "fission"]));
    assert!(dot.starts_with("graph G {\n"));
    assert_eq!(dot.matches(" -- ").count(), 4);

    let json = stdout(&run(&["graph", "--tree", "[[1],[1],[1],[1]]", "--kind", "fission", "--format", "json"]));
    let g = graph_from_json(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(g.edges().len(), 6);
    assert!(g.edges().iter().all(|e| e.2 == 2));

    let stokes = stdout(&run(&["graph", "--tree", "3", "--kind", "stokes", "--format", "json"]));
    let g = graph_from_json(&serde_json::from_str(&stokes).unwrap()).unwrap();
    assert_eq!(g, complete_multipartite(&[1, 1, 1]).unwrap());

    let legs = stdout(&run(&["graph", "--tree", "[1,1]", "--kind", "fission", "--legs", "2,1", "--format", "json"]));
    let g = graph_from_json(&serde_json::from_str(&legs).unwrap()).unwrap();
    assert_eq!(g.vertex_count(), 5);

    let equipped = stdout(&run(&[
        "graph",
        "--tree",
        r#"{"view":"mult","shape":[[2],[1,1]]}"#,
        "--kind",
        "fission",
        "--format",
        "json",
    ]));
    let g = graph_from_json(&serde_json::from_str(&equipped).unwrap()).unwrap();
    assert_eq!(g.dims().unwrap().iter().sum::<u64>(), 4);
}

#[test]
fn core_recovers_legs() {
    let dir = tempfile::tempdir().unwrap();
    let core = Multigraph::from_edges(3, &[(0, 1, 2), (0, 2, 2), (1, 2, 1)]).unwrap();
    let g = supernova(&core, &[1, 0, 3]).unwrap();
    let path = dir.path().join("g.json");
    fs::write(&path, graph_to_json(&g).to_string()).unwrap();
    let o = run(&["core", "--graph", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let found = graph_from_json(&serde_json::from_str(&stdout(&o)).unwrap()).unwrap();
    assert_eq!(found.undecorated(), core);
    assert_eq!(found.legs().unwrap(), &[1, 0, 3]);

    let simple = supernova(&complete_multipartite(&[2, 2]).unwrap(), &[1, 1, 0, 0]).unwrap();
    fs::write(&path, graph_to_json(&simple).to_string()).unwrap();
    assert_eq!(code(&run(&["core", "--graph", path.to_str().unwrap()])), 2);
}

#[test]
fn verify_passes() {
    let o = run(&["verify", "--suite", "tables"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("PASS")));
    assert!(!text.contains("FAIL"));
    assert_eq!(code(&run(&["verify", "--suite", "oracle", "--k-max", "4", "--n-max", "6"])), 0);
}

#[test]
fn usage_and_input_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["count", "--stat", "nope", "--k-max", "3", "--n-max", "3"],
        &["count", "--stat", "phi", "--k-max", "3"],
        &["enumerate", "--slope", "2", "--leaves", "0"],
        &["graph", "--tree", "[[1],1]", "--kind", "fission"],
        &["graph", "--tree", "[1,1,1]", "--kind", "stokes", "--legs", "1,2"],
        &["graph", "--tree", "5", "--kind", "fission"],
        &["core", "--graph", "/nonexistent/graph.json"],
        &["verify", "--suite", "everything"],
        &["oeis", "--id", "B000041", "--terms", "5", "--offline"],
        &["oeis", "--id", "A000001", "--terms", "5", "--offline"],
        &["frobnicate"],
    ];
    for args in cases {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
}

#[test]
fn oeis_offline_uses_bundled_snapshots() {
    let cache = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_fission"))
        .args(["oeis", "--id", "A001970", "--terms", "11", "--offline"])
        .env("FISSION_CACHE_DIR", cache.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("match for 11 terms from index 0"), "{text}");
    assert!(text.contains("1,1,3,6,14,27,58,111,223,424,817"), "{text}");
    assert!(fs::read_dir(cache.path()).unwrap().next().is_none(), "offline run wrote to the cache");

    let missing = Command::new(env!("CARGO_BIN_EXE_fission"))
        .args(["oeis", "--id", "A203552", "--terms", "5", "--offline"])
        .env("FISSION_CACHE_DIR", cache.path())
        .output()
        .unwrap();
    assert_eq!(code(&missing), 1);
}
