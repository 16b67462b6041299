use std::process::{Command, Output};

fn ordseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordseq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn os_prints_sequence_and_invariants() {
    let o = ordseq(&["os", "C6"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("1:1,2:1,3:2,6:2  psi=21 rho=648"));
    assert!(text.contains("psi2=95 exponent=6 nilpotent=yes"));
    assert!(stdout(&ordseq(&["os", "C1"])).starts_with("1:1 "));
}

#[test]
fn os_json_carries_exact_rho() {
    let o = ordseq(&["--json", "os", "PSL(3,4)"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rho = v["rho"].as_str().unwrap();
    assert_eq!(rho.len(), 13944);
    assert!(rho.starts_with("41845799868765303707"));
    assert_eq!(v["nilpotent"], false);
    let text = stdout(&ordseq(&["os", "PSL(3,4)"]));
    assert!(text.contains("rho=4.1845799868765303707e13943"), "{text}");
}

#[test]
fn parse_and_size_errors() {
    let o = ordseq(&["os", "C3 x Dic1?"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 9"));
    assert_eq!(code(&ordseq(&["os", "S9"])), 3);
    assert_eq!(code(&ordseq(&["--max-size", "10", "os", "C12"])), 3);
    assert_eq!(code(&ordseq(&["frobnicate"])), 2);
}

#[test]
fn compare_relations() {
    assert_eq!(stdout(&ordseq(&["compare", "C12", "A4"])), "A>B strong\n");
    let text = stdout(&ordseq(&["compare", "Dic3", "A4"]));
    assert!(text.starts_with("A>B not-strong\ncertificate: orders {3}"), "{text}");
    assert_eq!(stdout(&ordseq(&["compare", "D12", "A4"])), "incomparable\n");
    assert_eq!(stdout(&ordseq(&["compare", "A4", "C12"])), "B>A strong\n");
    assert_eq!(stdout(&ordseq(&["compare", "Ab(4,4)", "C2 x Q8"])), "A=B strong\n");
    assert_eq!(code(&ordseq(&["compare", "C4", "C6"])), 4);
}

#[test]
fn poset_output() {
    let dot = stdout(&ordseq(&["poset", "60", "--dot"]));
    assert_eq!(dot.matches("[label=").count(), 13);
    assert!(dot.contains("rankdir=BT"));
    let o = ordseq(&["poset", "16", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["items"].as_array().unwrap().len(), 9);
    assert_eq!(stdout(&ordseq(&["poset", "1", "--dot"])).matches("[label=").count(), 1);
    assert_eq!(code(&ordseq(&["poset", "17"])), 5);
}

#[test]
fn output_is_deterministic() {
    let a = ordseq(&["poset", "60", "--dot"]);
    let b = ordseq(&["poset", "60", "--dot"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn realize_verdicts() {
    assert_eq!(stdout(&ordseq(&["realize", "1:1,2:3,3:2", "6"])), "plausible\nS3\n");
    let text = stdout(&ordseq(&["realize", "1:1,2:2,4:1", "4"]));
    assert!(text.starts_with("implausible: rule mod-p"), "{text}");
    let text = stdout(&ordseq(&["realize", "[[1,1],[2,3],[4,12]]", "16"]));
    for name in ["C4 x C4", "C2 x Q8"] {
        assert!(text.lines().any(|l| l == name), "{text}");
    }
    assert_eq!(code(&ordseq(&["realize", "1:1,2:x", "2"])), 2);
}

#[test]
fn graphs() {
    let gk = stdout(&ordseq(&["graph", "gk", "A5"]));
    assert_eq!(gk.matches("[label=").count(), 3);
    assert!(!gk.contains("--"));
    let o = ordseq(&["--json", "graph", "gk", "C6"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["edges"], serde_json::json!([[0, 1]]));
    assert_eq!(v["labels"], serde_json::json!(["2", "3"]));
    let k4 = stdout(&ordseq(&["graph", "power", "C4"]));
    assert_eq!(k4.matches(" -- ").count(), 6);
    let d = stdout(&ordseq(&["graph", "dpower", "S3"]));
    assert!(d.starts_with("digraph"));
}

#[test]
fn partition_ops() {
    let tsv = stdout(&ordseq(&["partition", "counts", "2", "3+3"]));
    assert!(tsv.starts_with("order\telements\tcyclic_subgroups\n1\t1\t1\n"));
    assert!(tsv.ends_with("total\t\t22\n"));
    let o = ordseq(&["--json", "partition", "counts", "3", "2+1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["divisor_product"], 6);
    assert_eq!(stdout(&ordseq(&["partition", "conjugate", "4+2+1"])), "3+2+1+1\n");
    assert_eq!(stdout(&ordseq(&["partition", "compare", "4+1+1", "3+3"])), "incomparable\n");
    assert_eq!(stdout(&ordseq(&["partition", "chain", "4+1+1", "2+2+2"])), "4+1+1 -> 3+2+1 -> 2+2+2\n");
    assert_eq!(stdout(&ordseq(&["partition", "sequence", "2", "2"])), "1:1,2:1,4:2\n");
    assert_eq!(stdout(&ordseq(&["partition", "identify", "1:1,2:7,4:56", "2"])), "2+2+2\n");
    assert_eq!(code(&ordseq(&["partition", "compare", "3", "2"])), 4);
}

#[test]
fn verify_selection_and_exit_status() {
    let o = ordseq(&["verify", "--suite", "gap-bounds", "--order", "8"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("equality: Q8"));
    assert_eq!(code(&ordseq(&["verify", "--suite", "unknown"])), 2);
    assert_eq!(code(&ordseq(&["verify"])), 2);
    let o = ordseq(&["--json", "verify", "--suite", "reference", "--suite", "order16"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    // The exit status tracks the reports, whatever they say.
    let o = ordseq(&["verify", "--all"]);
    let text = stdout(&o);
    let any_failed = text.lines().any(|l| l.starts_with("FAIL "));
    assert_eq!(code(&o), if any_failed { 1 } else { 0 }, "{text}");
    assert!(!text.contains("simple-pair"));
    assert!(stdout(&ordseq(&["verify", "--stretch"])).contains("simple-pair"));
}
