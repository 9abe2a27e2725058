use std::path::PathBuf;
use std::process::{Command, Output};

fn knotcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotcover")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn scratch(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("knotcover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn jones_of_trefoil() {
    let o = knotcover(&["jones", "2; 1 1 1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.starts_with("J(-1)") && l.ends_with(" -3")), "{}", stdout(&o));
}

#[test]
fn lambda2_json() {
    let o = knotcover(&["lambda2", "2; 1 1 1", "--format=json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lambda2"], "-1/6");
    assert_eq!(v["sigma"], "-2");
}

#[test]
fn double_with_negative_twist() {
    let o = knotcover(&["double", "2; 1 1 1", "--m=-1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("lambda2        -8"), "{s}");
    assert!(s.contains("diagram check  pass"), "{s}");
}

#[test]
fn h1order_csv() {
    let o = knotcover(&["h1order", "2; 1 1 1", "--p=3", "--format=csv"]);
    assert_eq!(stdout(&o), "braid,alexander,p,order\n2; 1 1 1,t - 1 + t^-1,3,4\n");
    let o = knotcover(&["h1order", "2; 1 1", "--p=3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lescop_file() {
    let f = scratch("hopf.txt", "# two 0-framed linked circles\n2\n0 1\n1 0\nzeta default 0\n");
    let o = knotcover(&["lescop", &f, "--format=json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["det"], "-1");
    assert_eq!(v["lambda"], "0");
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(knotcover(&[]).status.code(), Some(2));
    assert_eq!(knotcover(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(knotcover(&["jones", "2; 9"]).status.code(), Some(2));
    assert_eq!(knotcover(&["jones", "2; 1", "--format=yaml"]).status.code(), Some(2));
    assert_eq!(knotcover(&["verify", "bundled", "--checks=h3"]).status.code(), Some(2));
    assert_eq!(knotcover(&["invariants", "/nonexistent/corpus.txt"]).status.code(), Some(2));
    let bad = scratch("bad.txt", "ok | 2; 1\nbroken line\n");
    let o = knotcover(&["invariants", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn verify_unknot_h1() {
    let c = scratch("unknot.txt", "unknot | 2; 1 | knot\n");
    let o = knotcover(&["verify", &c, "--checks=h1", "--format=csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let header: Vec<&str> = s.lines().next().unwrap().split(',').collect();
    let row: Vec<&str> = s.lines().nth(1).unwrap().split(',').collect();
    let h1 = header.iter().position(|c| *c == "h1").unwrap();
    assert_eq!(row[h1], "1");
}

#[test]
fn bundled_corpus_against_golden() {
    let o = knotcover(&["verify", "bundled", "--golden", &data("golden.txt"), "--jobs=2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all checks passed"));
}

#[test]
fn corrupted_golden_is_flagged() {
    let text = std::fs::read_to_string(data("golden.txt")).unwrap().replace("lambda2 3_1 -1/6", "lambda2 3_1 1/6");
    let g = scratch("golden-bad.txt", &text);
    let o = knotcover(&["verify", "bundled", "--checks=h1", "--golden", &g]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL [golden] golden lambda2 3_1"), "{}", stdout(&o));
    let o = knotcover(&["invariants", "bundled", "--golden", &g]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn written_golden_round_trips() {
    let c = scratch("small.txt", "3_1 | 2; 1 1 1\nhopf | 2; 1 1\n");
    let out = std::env::temp_dir().join(format!("knotcover-cli-{}", std::process::id())).join("written.txt");
    let out = out.to_string_lossy().into_owned();
    let o = knotcover(&["verify", &c, "--checks=h1", "--write-golden", &out]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&out).unwrap().contains("lambda2 3_1 -1/6"));
    assert_eq!(knotcover(&["verify", &c, "--checks=skein", "--golden", &out]).status.code(), Some(0));
}

#[test]
fn output_is_independent_of_jobs() {
    let run = |j: &str| stdout(&knotcover(&["verify", "bundled", "--checks=skein,h1,corollary1", "--format=json", j]));
    assert_eq!(run("--jobs=1"), run("--jobs=3"));
}
