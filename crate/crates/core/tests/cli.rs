use std::process::{Command, Output};

use serde_json::Value;

fn harary(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_harary"));
    cmd.args(args).env_remove("HARARY_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("harary-cli-{}-{name}", std::process::id()))
}

#[test]
fn exit_codes() {
    let ok = harary(&["poly", "--graph", "K3", "--property", "edgeless"], &[]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("x^3 - 3x^2 + 2x"));

    let failed = harary(&["verify", "chk_not_harary"], &[]);
    assert_eq!(failed.status.code(), Some(1));

    assert_eq!(harary(&["verify", "nonexistent"], &[]).status.code(), Some(2));
    assert_eq!(harary(&["poly", "--graph", "K3"], &[]).status.code(), Some(2));

    let cap = harary(&["poly", "--graph", "P13", "--property", "edgeless"], &[]);
    assert_eq!(cap.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&cap.stderr).contains("limit"));
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["mates", "--order", "6", "--invariant", "ind", "--format", "json"];
    let one = harary(&args, &[("HARARY_THREADS", "1")]);
    let four = harary(&args, &[("HARARY_THREADS", "4")]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let bad = harary(&args, &[("HARARY_THREADS", "zero")]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn config_file_and_flag_override() {
    let cfg = scratch("config.toml");
    std::fs::write(&cfg, "enumeration = 4\nformat = \"csv\"\n").unwrap();
    let cfg_s = cfg.to_str().unwrap();

    let capped = harary(&["mates", "--order", "5", "--invariant", "chromatic", "--config", cfg_s], &[]);
    assert_eq!(capped.status.code(), Some(3));

    let out = harary(&["mates", "--order", "4", "--invariant", "chromatic", "--config", cfg_s], &[]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().next(), Some("n,total,classes,unique,index"));

    let flag = harary(
        &["mates", "--order", "5", "--invariant", "chromatic", "--config", cfg_s, "--enumeration", "5", "--format", "json"],
        &[],
    );
    assert_eq!(json(&flag)["total"], 34);

    std::fs::write(&cfg, "colour = 3\n").unwrap();
    assert_eq!(harary(&["verify", "--list", "--config", cfg_s], &[]).status.code(), Some(2));
    std::fs::remove_file(cfg).unwrap();
}

#[test]
fn census_file_ingestion() {
    let file = scratch("trees.g6");
    // P4, K1,3 and C4 in graph6
    std::fs::write(&file, "Ch\nCs\nCl\n").unwrap();
    let f = file.to_str().unwrap();
    let out = harary(&["mates", "--census", f, "--invariant", "chromatic", "--format", "json"], &[]);
    let v = json(&out);
    assert_eq!(v["total"], 3);
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);

    let cmp = harary(&["compare", "chromatic", "ind", "--census", f, "--format", "json"], &[]);
    assert_eq!(json(&cmp)["graphs"], 3);

    std::fs::write(&file, "Ch\n!!\n").unwrap();
    let bad = harary(&["mates", "--census", f, "--invariant", "chromatic"], &[]);
    assert_eq!(bad.status.code(), Some(2));
    std::fs::remove_file(file).unwrap();
}

#[test]
fn verify_json_report() {
    let out = harary(&["verify", "chk_ind_mates_cn_dn", "--format", "json"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], 1);
    let details = v["results"][0]["details"].as_array().unwrap();
    assert!(details.iter().any(|d| d.as_str().unwrap().contains("IND(C6) = IND(D6)")));
}

#[test]
fn random_two_cycles_json() {
    let out = harary(
        &["random", "two-cycles", "--r", "3", "--d", "2", "--n", "50,100", "--trials", "20", "--format", "json"],
        &[],
    );
    let v = json(&out);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[1]["params"]["n"], 100);
    assert_eq!(reports[0]["params"]["d"], "2/1");
}
