use std::process::Command;

use serde_json::{json, Value};

const PAIR: &str = r#"{"n":2,"members":[[1,2],[1,2]]}"#;
const CHAIN: &str = r#"{"n":3,"members":[[1],[1,2],[1,2,3]]}"#;
const STAIR: &str = r#"{"lambda":[3,2,1]}"#;
const SQUARE: &str = r#"{"lambda":[2,2]}"#;
const BIG_STAIR: &str = r#"{"lambda":[6,5,4,3,2,1],"mu":[2,1]}"#;

struct Run {
    code: i32,
    stdout: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }

    fn result(&self) -> Value {
        self.json()["result"].clone()
    }
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_shellable"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
    }
}

#[test]
fn pair_is_not_shellable() {
    let r = run(&["shellable", "--family", PAIR]);
    assert_eq!(r.code, 1);
    assert_eq!(r.result(), json!(false));
    let r = run(&["shellable", "--family", CHAIN]);
    assert_eq!(r.code, 0);
    assert_eq!(r.result(), json!(true));
}

#[test]
fn marriage_predicate() {
    assert_eq!(run(&["marriage", "--family", PAIR]).code, 0);
    let r = run(&[
        "marriage",
        "--family",
        r#"{"n":2,"members":[[1,2],[1,2],[1,2]]}"#,
    ]);
    assert_eq!((r.code, r.result()), (1, json!(false)));
}

#[test]
fn worked_average() {
    let r = run(&["count", "average", "--shape", BIG_STAIR, "--m", "16"]);
    assert_eq!(r.code, 0);
    let result = r.result();
    assert_eq!(result["text"], "20074070016/5");
    assert_eq!(result["num"], "20074070016");
    assert_eq!(result["den"], "5");
    assert_eq!(result["integer_part"], "4014814003");
    assert_eq!(result["fractional_part"], "1/5");
    let closed = run(&["count", "average-closed", "--shape", BIG_STAIR, "--m", "16"]);
    assert_eq!(closed.result(), result);
}

#[test]
fn literal_shape_is_out_of_range() {
    let r = run(&[
        "count",
        "average",
        "--shape",
        r#"{"lambda":[6,5,4,3,2,1],"mu":[1]}"#,
        "--m",
        "16",
    ]);
    assert_eq!(r.code, 2);
    assert_eq!(r.json()["error"]["kind"], "hypothesis");
}

#[test]
fn syt_count() {
    let r = run(&["shape", "syt-count", "--shape", STAIR]);
    assert_eq!((r.code, r.result()), (0, json!(16)));
    let r = run(&["shape", "syt-count", "--shape", r#"{"lambda":[5,5]}"#]);
    assert_eq!(r.code, 3);
    assert_eq!(r.json()["error"]["kind"], "oracle-limit");
}

#[test]
fn input_errors_are_structured() {
    for args in [
        vec!["marriage", "--family", "{not json"],
        vec!["marriage", "--family", r#"{"n":2,"members":[[3]]}"#],
        vec!["marriage"],
        vec!["frobnicate"],
        vec![
            "configs",
            "solve",
            "--shape",
            STAIR,
            "--m",
            "5",
            "--config",
            "[5,3,1,3,1,1]",
        ],
        vec!["verify", "no-such-suite"],
    ] {
        let r = run(&args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        let v = r.json();
        assert!(v["error"]["message"].is_string(), "{args:?}");
        assert!(v["error"]["kind"].is_string(), "{args:?}");
    }
}

#[test]
fn reports_round_trip_canonically() {
    for args in [
        vec!["unique-set", "--shape", BIG_STAIR],
        vec!["configs", "enumerate", "--shape", SQUARE],
        vec!["count", "average", "--shape", BIG_STAIR, "--m", "17"],
    ] {
        let r = run(&args);
        let reparsed = r.json();
        assert_eq!(
            serde_json::to_string(&reparsed).unwrap(),
            r.stdout.trim_end()
        );
        assert_eq!(reparsed["version"], env!("CARGO_PKG_VERSION"));
        assert_eq!(run(&args).stdout, r.stdout);
    }
}

#[test]
fn transversal_commands() {
    assert_eq!(
        run(&["transversal", "--family", PAIR]).result(),
        json!([1, 2])
    );
    let r = run(&[
        "transversal",
        "--family",
        r#"{"n":2,"members":[[1,2],[1,2],[1,2]]}"#,
    ]);
    assert_eq!((r.code, r.result()), (0, Value::Null));
    assert_eq!(
        run(&["transversals", "--family", PAIR]).result(),
        json!([[1, 2], [2, 1]])
    );
    assert_eq!(
        run(&["transversals", "--family", CHAIN]).result(),
        json!([[1, 2, 3]])
    );
}

#[test]
fn shelling_orders() {
    assert_eq!(
        run(&["shelling-order", "--family", CHAIN]).result(),
        json!([1, 2, 3])
    );
    assert_eq!(
        run(&["shelling-order", "--family", PAIR]).result(),
        Value::Null
    );
    let r = run(&["shelling-order", "--family", CHAIN, "--order", "[3,2,1]"]);
    assert_eq!((r.code, r.result()), (1, json!(false)));
}

#[test]
fn unique_set_and_range() {
    let r = run(&["unique-set", "--shape", BIG_STAIR]).result();
    assert_eq!(r["cells"], json!([[1, 3], [2, 2], [3, 1]]));
    assert_eq!(run(&["m-range", "--shape", STAIR]).result(), json!([6, 6]));
    assert_eq!(
        run(&["m-range", "--shape", BIG_STAIR]).result(),
        json!([16, 18])
    );
}

#[test]
fn configs_commands() {
    let all = run(&["configs", "enumerate", "--shape", SQUARE]).result();
    assert_eq!(all.as_array().unwrap().len(), 12);

    let r = run(&[
        "configs",
        "count",
        "--family",
        PAIR,
        "--transversal",
        "[1,2]",
        "--m",
        "2",
        "--config",
        "[2,2]",
    ]);
    assert_eq!(r.result(), json!(0));
    let r = run(&[
        "configs",
        "count",
        "--shape",
        SQUARE,
        "--m",
        "4",
        "--config",
        "[1,1,1,1]",
    ]);
    assert_eq!(r.result(), json!(2));

    let solved = run(&[
        "configs",
        "solve",
        "--shape",
        STAIR,
        "--m",
        "6",
        "--config",
        "[5,3,1,3,1,1]",
    ]);
    let word = solved.result().to_string();
    let r = run(&["configs", "classify", "--shape", STAIR, "--word", &word]);
    assert_eq!(r.result(), json!([5, 3, 1, 3, 1, 1]));
    let r = run(&[
        "configs",
        "classify",
        "--shape",
        STAIR,
        "--word",
        &word,
        "--config",
        "[1,1,1,1,1,1]",
    ]);
    assert_eq!((r.code, r.result()), (1, json!(false)));
}

#[test]
fn csv_output() {
    let r = run(&[
        "configs", "count", "--shape", SQUARE, "--m", "4", "--format", "csv",
    ]);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines[0], "config,count");
    assert_eq!(lines.len(), 13);
    assert_eq!(lines[1], "\"[1,1,1,1]\",2");
    let r = run(&["shape", "syt-count", "--shape", STAIR, "--format", "csv"]);
    assert_eq!(r.stdout, "result\n16\n");
}

#[test]
fn shape_commands() {
    let hooks = run(&["shape", "hooks", "--shape", STAIR]).result();
    let lengths: Vec<u64> = hooks
        .as_array()
        .unwrap()
        .iter()
        .map(|h| h["hook_length"].as_u64().unwrap())
        .collect();
    assert_eq!(lengths, vec![5, 3, 1, 3, 1, 1]);

    let fam = run(&["shape", "family", "--shape", STAIR]).result();
    assert_eq!(fam["transversal"], json!([1, 2, 3, 4, 5, 6]));
    assert_eq!(fam["family"]["n"], 6);

    let corners = run(&["shape", "corners", "--shape", r#"{"lambda":[4,2,2]}"#]).result();
    assert_eq!(corners["inner_corners"], json!([[1, 4], [3, 2]]));

    let r = run(&[
        "shape",
        "balanced-check",
        "--shape",
        r#"{"lambda":[4,3,2]}"#,
        "--tableau",
        "[[4,5,8,3],[6,7,9],[1,2]]",
    ]);
    assert_eq!((r.code, r.result()), (0, json!(true)));
    let r = run(&[
        "shape",
        "balanced-check",
        "--shape",
        r#"{"lambda":[4,3,2]}"#,
        "--tableau",
        "[1,2,3,4,5,6,7,8,9]",
    ]);
    assert_eq!((r.code, r.result()), (1, json!(false)));
    let r = run(&["shape", "balanced-check", "--shape", STAIR]);
    assert_eq!(r.code, 0);
    assert_eq!(r.result()["balanced"], 16);
}

#[test]
fn count_commands() {
    assert_eq!(
        run(&["count", "stirling", "18", "16"]).result(),
        json!("9996")
    );
    assert_eq!(
        run(&["count", "surjections", "4", "2"]).result(),
        json!("14")
    );
    assert_eq!(
        run(&["count", "surjections", "3", "2"]).result(),
        json!("6")
    );
    let brute = run(&["count", "average-brute", "--shape", SQUARE, "--m", "4"]).result();
    assert_eq!(brute["text"], "2");
    let r = run(&["count", "average", "--family", PAIR, "--m", "2"]);
    assert_eq!(r.code, 2);
}

#[test]
fn verify_suites() {
    let r = run(&["verify", "list"]);
    assert_eq!(r.code, 0);
    assert!(r.result().as_array().unwrap().len() >= 10);
    let r = run(&["verify", "duality", "--bound", "4", "--seed", "3"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.result()["passed"], true);
    assert_eq!(r.json()["inputs"]["seed"], 3);
    let r = run(&["verify", "tail-bound", "--bound", "9"]);
    assert_eq!(r.code, 3);
}
