use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn rankagg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankagg")).args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn classify_examples() {
    let out = rankagg(&["classify", path_str(&fixture("example1.json"))]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["verdict"], "PP");

    let out = rankagg(&["classify", path_str(&fixture("peer_rating.json"))]);
    let v = json_of(&out);
    assert_eq!(v["verdict"], "IP");
    assert_eq!(v["witness"]["cycle"], serde_json::json!(["1", "2", "3"]));

    let out = rankagg(&["classify", path_str(&fixture("two_cliques.json"))]);
    assert_eq!(json_of(&out)["verdict"], "IP");

    let out = rankagg(&["classify", path_str(&fixture("dictatorship.json"))]);
    let v = json_of(&out);
    assert_eq!(v["verdict"], "DP");
    assert_eq!(v["witness"]["complete_individual"], "v1");
}

#[test]
fn malformed_profiles_exit_with_validation_code() {
    let dir = tempfile::tempdir().unwrap();
    let small = write_temp(
        &dir,
        "small.json",
        r#"{"schema_version":1,"alternatives":["a","b","c"],"individuals":[
            {"id":"v1","evaluates":["a","b"]},{"id":"v2","evaluates":["c"]},{"id":"v3","evaluates":["a","c"]}]}"#,
    );
    let out = rankagg(&["classify", path_str(&small)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("v2"));

    let extra = write_temp(
        &dir,
        "extra.json",
        r#"{"schema_version":1,"alternatives":["a","b","c"],"individuals":[],"comment":"x"}"#,
    );
    assert_eq!(rankagg(&["classify", path_str(&extra)]).status.code(), Some(2));
    assert_eq!(rankagg(&["classify", "/nonexistent/profile.json"]).status.code(), Some(2));
}

#[test]
fn aggregate_example1() {
    let out = rankagg(&[
        "aggregate",
        "--rule",
        "fstarstar",
        path_str(&fixture("example1.json")),
        path_str(&fixture("example1_rankings.json")),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let order: Vec<String> =
        v["order"].as_array().unwrap().iter().map(|t| t[0].as_str().unwrap().to_string()).collect();
    assert_eq!(order, ["a2", "a5", "a7", "a6", "a4", "a1", "a3"]);
    assert_eq!(v["constraint_arcs"].as_array().unwrap().len(), 10);
    assert_eq!(v["degenerate"], false);
}

#[test]
fn unanimity_rule_returns_the_unanimous_order() {
    let dir = tempfile::tempdir().unwrap();
    let profile = write_temp(
        &dir,
        "p.json",
        r#"{"schema_version":1,"alternatives":["a","b","c"],"individuals":[
            {"id":"x","evaluates":["a","b","c"]},{"id":"y","evaluates":["a","b","c"]},{"id":"z","evaluates":["a","b","c"]}]}"#,
    );
    let rankings = write_temp(
        &dir,
        "r.json",
        r#"{"rankings":{"x":[["c"],["a"],["b"]],"y":[["c"],["a"],["b"]],"z":[["c"],["a"],["b"]]}}"#,
    );
    let out = rankagg(&["aggregate", "--rule", "fstar", path_str(&profile), path_str(&rankings)]);
    assert_eq!(json_of(&out)["order"], serde_json::json!([["c"], ["a"], ["b"]]));
}

#[test]
fn tiebreak_orders_unconstrained_alternatives() {
    let dir = tempfile::tempdir().unwrap();
    let rankings = write_temp(
        &dir,
        "r.json",
        r#"{"rankings":{"1":[["2","3"]],"2":[["1","3"]],"3":[["1","2"]]}}"#,
    );
    let out = rankagg(&[
        "aggregate",
        "--rule",
        "fstar",
        "--tiebreak",
        "3,1,2",
        path_str(&fixture("peer_rating.json")),
        path_str(&rankings),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["order"], serde_json::json!([["3"], ["1"], ["2"]]));

    let bad = rankagg(&[
        "aggregate",
        "--rule",
        "fstar",
        "--tiebreak",
        "3,1",
        path_str(&fixture("peer_rating.json")),
        path_str(&rankings),
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn f_double_star_needs_condition1() {
    let dir = tempfile::tempdir().unwrap();
    let rankings = write_temp(
        &dir,
        "r.json",
        r#"{"rankings":{"1":[["2"],["3"]],"2":[["1"],["3"]],"3":[["1"],["2"]]}}"#,
    );
    let out = rankagg(&[
        "aggregate",
        "--rule",
        "fstarstar",
        path_str(&fixture("peer_rating.json")),
        path_str(&rankings),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_of(&out)["cycle"], serde_json::json!(["1", "2", "3"]));
}

#[test]
fn verify_reports() {
    let out = rankagg(&["verify", "--rule", "fstarstar", path_str(&fixture("example1.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["profile_space_size"], 2925);
    for axiom in ["tv", "pc", "wpc", "iia", "nc", "nd"] {
        assert_eq!(v["results"][axiom]["pass"], true, "{axiom}");
    }

    let out = rankagg(&["verify", "--rule", "fstarstar", path_str(&fixture("dictatorship.json"))]);
    let v = json_of(&out);
    assert_eq!(v["results"]["nd"]["pass"], false);
    assert_eq!(v["results"]["nd"]["counterexample"]["individual"], "v1");
    assert!(v["quasi_dictators"].as_array().unwrap().contains(&Value::from("v1")));

    let out = rankagg(&[
        "verify",
        "--rule",
        "constant",
        "--axioms",
        "pc,nc",
        path_str(&fixture("dictatorship.json")),
    ]);
    let v = json_of(&out);
    assert_eq!(v["results"]["pc"]["pass"], false);
    assert_eq!(v["results"]["nc"]["counterexample"]["kind"], "constant");
    assert!(v["results"].get("tv").is_none());
}

#[test]
fn verify_rule_preconditions() {
    let out = rankagg(&["verify", "--rule", "dictatorship", path_str(&fixture("example1.json"))]);
    assert_eq!(out.status.code(), Some(3));
    let out = rankagg(&[
        "verify",
        "--rule",
        "dictatorship",
        "--dictator",
        "v2",
        path_str(&fixture("dictatorship.json")),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = rankagg(&[
        "verify",
        "--rule",
        "fstar",
        "--axioms",
        "tv,xx",
        path_str(&fixture("example1.json")),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_4() {
    let out = rankagg(&[
        "verify",
        "--rule",
        "fstarstar",
        "--budget",
        "100",
        path_str(&fixture("example1.json")),
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2925"));

    let out = rankagg(&["census", "--alts", "5", "--inds", "6"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn census_and_table() {
    let out = rankagg(&["census", "--alts", "3", "--inds", "3", "--method", "symmetric"]);
    let v = json_of(&out);
    assert_eq!(v["method"], "symmetric");
    assert_eq!(v["counts"], serde_json::json!({"IP": 6, "DP": 37, "PP": 21}));
    assert_eq!(v["proportions"]["DP"]["exact"], "37/64");

    let out = rankagg(&["census", "--alts", "2", "--inds", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = rankagg(&["table1", "--alts", "3", "--inds", "3,21", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["cells"], serde_json::json!([["0.58", "1.00"]]));
    assert_eq!(v["exact"][0][0], "37/64");
}

#[test]
fn witness_cyclic() {
    let out = rankagg(&["witness-cyclic", path_str(&fixture("peer_rating.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["unanimity_cycle"], serde_json::json!(["2", "1", "3"]));
    for (_, tiers) in v["rankings"].as_object().unwrap() {
        assert_eq!(tiers.as_array().unwrap().len(), 2);
    }

    let out = rankagg(&["witness-cyclic", path_str(&fixture("pairs_ip.json"))]);
    assert_eq!(out.status.code(), Some(0));

    let out = rankagg(&["witness-cyclic", path_str(&fixture("example1.json"))]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Condition 1 holds; no witness"));
}

#[test]
fn repro_matches_bundled_goldens() {
    let out = rankagg(&["repro"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.lines().all(|l| l.starts_with("ok")));
}

#[test]
fn goldens_on_disk_match_regenerated_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = rankagg(&["repro", "--write", path_str(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    for entry in std::fs::read_dir(fixture("golden")).unwrap() {
        let entry = entry.unwrap();
        let fresh = std::fs::read(dir.path().join(entry.file_name())).unwrap();
        assert_eq!(fresh, std::fs::read(entry.path()).unwrap(), "{:?}", entry.file_name());
    }
}

#[test]
fn documents_round_trip_byte_identical() {
    // the bundled fixtures are already in canonical form; witness output
    // embeds a rankings document that must read back unchanged
    let out = rankagg(&["witness-cyclic", path_str(&fixture("peer_rating.json"))]);
    let v = json_of(&out);
    let doc = serde_json::json!({ "rankings": v["rankings"] });
    let first = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "r.json", &first);
    let agg = rankagg(&[
        "aggregate",
        "--rule",
        "fstar",
        path_str(&fixture("peer_rating.json")),
        path_str(&path),
    ]);
    assert_eq!(agg.status.code(), Some(0));
    let reparsed: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(serde_json::to_string_pretty(&reparsed).unwrap() + "\n", first);
}
