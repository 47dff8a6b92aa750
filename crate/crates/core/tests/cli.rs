use std::process::Command;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_strata-forge"));
    c.env_remove("STRATA_FORGE_BUDGET");
    c
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn covers_on_a2_lists_both_covers() {
    let (code, text) = run(&["covers", "F2"]);
    assert_eq!(code, 0);
    assert!(text.contains("P(1): dims [1 1] length 2"), "{text}");
    assert!(text.contains("P(2): dims [0 1] length 1"), "{text}");
}

#[test]
fn present_on_cp1_recovers() {
    let (code, text) = run(&["present", "F3", "--report", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["present"]["recovered_dim"], 5);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "recovery" && c["passed"] == true));
}

#[test]
fn check_on_single_vertex_passes() {
    let (code, text) = run(&["check", "F1"]);
    assert_eq!(code, 0);
    assert!(!text.contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["covers", "F4", "--budget", "3"]).0, 3);
    assert_eq!(run(&["covers", "F4", "--prime", "4"]).0, 2);
    assert_eq!(run(&["covers", "no/such/file.json"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let out = bin().args(["covers", "F3", "--quiet"]).env("STRATA_FORGE_BUDGET", "2").output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty() && out.stderr.is_empty());
}

#[test]
fn other_primes_and_oracle_off() {
    let (code, text) = run(&["check", "F5", "--prime", "2", "--oracle", "off"]);
    assert_eq!(code, 0);
    assert!(text.contains("over F_2") && !text.contains("oracle 1"));
}
