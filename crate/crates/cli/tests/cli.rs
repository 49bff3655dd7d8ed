use std::process::{Command, Output};

fn socle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_socle"))
        .args(args)
        .env_remove("SOCLE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn socle_dual_space_has_two_layers() {
    let out = socle(&["socle", "--lambda", "1", "--mu", "-"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "layer 0:\n  1 x (V*/V_*)[-] ⊗ V[1; -]\nlayer 1:\n  1 x (V*/V_*)[1] ⊗ V[-; -]\n"
    );
}

#[test]
fn socle_without_dual_part_has_one_layer() {
    let out = socle(&["socle", "--lambda", "-", "--mu", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).matches("layer").count(), 1);
}

#[test]
fn socle_json_shape() {
    let out = socle(&["socle", "--lambda", "2,1", "--mu", "-", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let layers = v["layers"].as_array().unwrap();
    assert_eq!(layers.len(), 4);
    let total: usize = layers.iter().map(|l| l.as_array().unwrap().len()).sum();
    assert_eq!(total, 6);
    assert_eq!(v["lambda"], serde_json::json!([2, 1]));
    assert_eq!(layers[0][0]["mult"], serde_json::json!(1));
}

#[test]
fn socle_json_round_trips_byte_for_byte() {
    let out = socle(&[
        "socle", "--lambda", "3,2,1", "--mu", "1", "--format", "json",
    ]);
    let text = stdout(&out);
    let report: socle_core::socle::SocleReport = serde_json::from_str(text.trim_end()).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap() + "\n", text);
}

#[test]
fn lengths() {
    for (m, n, want) in [("1", "0", "2\n"), ("0", "1", "1\n"), ("1", "1", "3\n")] {
        let out = socle(&["length", "--m", m, "--n", n]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), want);
    }
    let out = socle(&["simple-length", "--lambda", "2,1", "--mu", "-"]);
    assert_eq!(stdout(&out), "6\n");
}

#[test]
fn lr_coproduct_and_dim() {
    assert_eq!(stdout(&socle(&["lr", "2,1", "1", "2"])), "1\n");
    let out = socle(&["coproduct", "1"]);
    assert_eq!(stdout(&out), "1 - ⊗ 1\n1 1 ⊗ -\n");
    assert_eq!(
        stdout(&socle(&[
            "dim", "--rank", "3", "--lambda", "1", "--mu", "1"
        ])),
        "8\n"
    );
}

#[test]
fn coproduct_text_is_ordered_by_degree() {
    let text = stdout(&socle(&["coproduct", "2,1"]));
    let degrees: Vec<usize> = text
        .lines()
        .map(|l| {
            let left = l.split(' ').nth(1).unwrap();
            if left == "-" {
                0
            } else {
                left.split(',').map(|x| x.parse::<usize>().unwrap()).sum()
            }
        })
        .collect();
    assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(text, stdout(&socle(&["coproduct", "2,1"])));
}

#[test]
fn malformed_partition_names_the_argument() {
    let out = socle(&["socle", "--lambda", "1,3", "--mu", "-"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--lambda"));
    assert!(stdout(&out).is_empty());
}

#[test]
fn rank_too_small_is_a_usage_error() {
    let out = socle(&["dim", "--rank", "1", "--lambda", "1", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("rank"));
}

#[test]
fn unknown_suite() {
    let out = socle(&["verify", "everything"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("everything"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["hopf", "branching"] {
        let out = socle(&["verify", suite]);
        assert!(out.status.success(), "{suite}: {}", stdout(&out));
        assert!(stdout(&out).lines().all(|l| l.starts_with("PASS ")));
    }
    let out = socle(&["verify", "brute", "--budget", "20000", "--format", "json"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let checks: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(checks
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn budget_env_var_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_socle"))
        .args(["verify", "brute"])
        .env("SOCLE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("budget"));
}
