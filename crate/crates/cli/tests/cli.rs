use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschubert"))
        .args(args)
        .env_remove("QSCHUBERT_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

const GW: &[&str] = &["gw", "--space", "A", "--m", "3", "--n", "3", "--lambda", "3,2,1", "--mu", "3,2,1", "--nu", "2,1", "--d", "1"];
const QPROD: &[&str] = &["qprod", "--space", "A", "--m", "3", "--n", "3", "--lambda", "3,2,1", "--mu", "2"];

#[test]
fn golden_outputs() {
    assert_eq!(stdout(GW), "2");
    assert_eq!(stdout(&[GW, &["--method", "puzzle"]].concat()), "2");
    assert_eq!(stdout(&[QPROD, &["--format", "text"]].concat()), "s[3,3,2] + q*s[2] + q*s[1,1]");
    assert_eq!(stdout(&["puzzle", "--type", "1step", "--nw", "101", "--ne", "101", "--s", "011"]), "1");
    assert_eq!(stdout(&["puzzle", "--type", "2step", "--nw", "102021", "--ne", "102021", "--s", "010212"]), "2");
}

#[test]
fn string_commands() {
    assert_eq!(stdout(&["string", "encode", "--m", "4", "--n", "5", "--lambda", "4,4,3,1"]), "101101001");
    assert_eq!(stdout(&["string", "perm", "--m", "4", "--n", "5", "--lambda", "4,4,3,1"]), "2,5,7,8,1,3,4,6,9");
    assert_eq!(stdout(&["string", "jd", "--m", "3", "--n", "3", "--lambda", "3,2,1", "--d", "1"]), "102021");
    assert_eq!(stdout(&["string", "decode", "--s", "0101"]), "(1) in 2x2");
}

#[test]
fn lr_and_isotropic_products() {
    assert_eq!(stdout(&["lr", "--m", "2", "--n", "2", "--lambda", "1", "--mu", "1"]), "s[2] + s[1,1]");
    let puzzle = stdout(&["lr", "--m", "3", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--method", "puzzle"]);
    assert_eq!(puzzle, stdout(&["lr", "--m", "3", "--n", "3", "--lambda", "2,1", "--mu", "2,1"]));
    assert_eq!(stdout(&["lr", "--m", "3", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"]), "2");
    let lg = ["qprod", "--space", "LG", "--n", "3", "--lambda", "3,1", "--mu", "2,1", "--check"];
    assert_eq!(stdout(&lg), stdout(&[&lg[..], &["--method", "pieri"]].concat()));
    assert_eq!(stdout(&["qprod", "--space", "OG", "--n", "2", "--lambda", "2", "--mu", "2"]), "q*s[]");
    let og = ["gw", "--space", "OG", "--n", "2", "--lambda", "2,1", "--mu", "0", "--nu", "", "--d", "0"];
    assert_eq!(stdout(&og), "1");
    assert_eq!(stdout(&[&og[..], &["--method", "duality"]].concat()), "1");
}

#[test]
fn exit_codes() {
    // malformed partition, missing parameter, unknown suite, wrong method
    assert_eq!(code(&["qprod", "--space", "A", "--m", "2", "--n", "2", "--lambda", "1,x", "--mu", "1"]), 2);
    assert_eq!(code(&["qprod", "--space", "A", "--m", "2", "--n", "2", "--lambda", "1,2", "--mu", "1"]), 2);
    assert_eq!(code(&["qprod", "--space", "A", "--n", "2", "--lambda", "1", "--mu", "1"]), 2);
    assert_eq!(code(&["verify", "--suite", "nope"]), 2);
    assert_eq!(code(&["gw", "--space", "LG", "--n", "2", "--lambda", "1", "--mu", "1", "--nu", "1", "--d", "1", "--method", "duality"]), 2);
    // domain errors
    assert_eq!(code(&["qprod", "--space", "LG", "--n", "3", "--lambda", "1,1", "--mu", "1"]), 1);
    assert_eq!(code(&["qprod", "--space", "A", "--m", "2", "--n", "2", "--lambda", "3", "--mu", "1"]), 1);
    assert_eq!(code(&["puzzle", "--type", "1step", "--nw", "012", "--ne", "012", "--s", "012"]), 1);
    assert_eq!(code(&["puzzle", "--type", "2step", "--nw", "0012", "--ne", "0112", "--s", "0012"]), 1);
}

#[test]
fn verify_suites() {
    let out = stdout(&["verify", "--suite", "puzzle-conjecture", "--max-N", "6"]);
    assert!(out.lines().last().unwrap().starts_with("PASS ("), "{out}");
    assert!(stdout(&["verify", "--suite", "duality", "--max-n", "3"]).ends_with("checks)"));
    assert!(stdout(&["verify", "--suite", "presentations", "--max-N", "8"]).contains("PASS"));
}

#[test]
fn json_schema_and_round_trip() {
    let text = stdout(&[QPROD, &["--format", "json"]].concat());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), text);
    let result = v["result"].as_array().unwrap();
    let keys: Vec<(Vec<u64>, u64)> = result
        .iter()
        .map(|t| {
            let nu = t["nu"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            (nu, t["d"].as_u64().unwrap())
        })
        .collect();
    assert_eq!(keys, vec![(vec![1, 1], 1), (vec![2], 1), (vec![3, 3, 2], 0)]);
    assert!(result.iter().all(|t| t["c"] == 1));
    assert_eq!(v["query"]["lambda"], serde_json::json!([3, 2, 1]));
    let gw: serde_json::Value = serde_json::from_str(&stdout(&[GW, &["--format", "json"]].concat())).unwrap();
    assert_eq!(gw["result"][0]["c"], 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["qprod", "--space", "LG", "--n", "4", "--lambda", "4,2,1", "--mu", "3,2", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let p = path.to_str().unwrap();
    let cold = stdout(&[QPROD, &["--format", "json"]].concat());
    let first = stdout(&[QPROD, &["--format", "json", "--cache", p]].concat());
    let warm = stdout(&[QPROD, &["--format", "json", "--cache", p]].concat());
    assert_eq!(cold, first);
    assert_eq!(cold, warm);
    let lines = std::fs::read_to_string(&path).unwrap();
    assert_eq!(lines.lines().count(), 1);
    let rec: serde_json::Value = serde_json::from_str(lines.lines().next().unwrap()).unwrap();
    assert!(rec["engine"].is_string() && rec["key"].as_str().unwrap().len() == 64);

    // the environment variable is used when no flag is given
    let out = Command::new(env!("CARGO_BIN_EXE_qschubert"))
        .args(GW)
        .env("QSCHUBERT_CACHE", p)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2");
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 2);

    // records from another engine version are ignored
    let stale = lines.replace(&format!("\"engine\":\"{}\"", rec["engine"].as_str().unwrap()), "\"engine\":\"0.0.0-old\"");
    let tampered: String = stale.replace("\"c\":1", "\"c\":7");
    std::fs::write(&path, tampered).unwrap();
    assert_eq!(stdout(&[QPROD, &["--format", "json", "--cache", p]].concat()), cold);

    // a current record is served without recomputation
    std::fs::write(&path, lines.replace("\"c\":1", "\"c\":7")).unwrap();
    assert!(stdout(&[QPROD, &["--format", "json", "--cache", p]].concat()).contains("\"c\":7"));
}
