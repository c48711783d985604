//! End-to-end checks of the binary: exit codes, stable bytes, file inputs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn dfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dfree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp_file(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("dfree-test-{}-{name}", std::process::id()));
    std::fs::write(&path, body).expect("temp file");
    path
}

#[test]
fn count_table_and_exit_zero() {
    let out = dfree(&["count", "--graph", "complete:3", "--forbidden", "triangle:cyclic"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "hfree 6\ntotal 8\np_contains 1/4\n");
}

#[test]
fn count_json_round_trips_byte_identically() {
    let out = dfree(&[
        "count",
        "--graph",
        "complete:4",
        "--forbidden",
        "triangle:cyclic",
        "--json",
    ]);
    assert!(out.status.success());
    let line = stdout(&out);
    assert_eq!(line.trim(), r#"{"hfree":"24","total":"64","p_contains":"5/8"}"#);
    let parsed: dfree_core::orient::CountResult = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), line.trim());
}

#[test]
fn identical_invocations_identical_bytes() {
    let args = [
        "count",
        "--graph",
        "fan:2,3",
        "--forbidden",
        "bowtie:antidirected",
        "--json",
    ];
    assert_eq!(stdout(&dfree(&args)), stdout(&dfree(&args)));
    let mc_args = [
        "count",
        "--graph",
        "complete:4",
        "--forbidden",
        "triangle:cyclic",
        "--mc",
        "--samples",
        "2000",
        "--seed",
        "11",
        "--json",
    ];
    assert_eq!(stdout(&dfree(&mc_args)), stdout(&dfree(&mc_args)));
}

#[test]
fn bipartite_host_is_bowtie_free() {
    let out = dfree(&["count", "--graph", "turan:6,2", "--forbidden", "bowtie:antidirected"]);
    assert!(stdout(&out).starts_with("hfree 512\ntotal 512\n"));
}

#[test]
fn graph_subcommand_renders_text_format() {
    let out = dfree(&["graph", "--spec", "star:3"]);
    assert_eq!(stdout(&out), "n 4\ne 0 1\ne 0 2\ne 0 3\n");
    // oriented patterns render as arc lines
    let out = dfree(&["graph", "--spec", "triangle:cyclic"]);
    assert_eq!(stdout(&out), "n 3\na 0 1\na 1 2\na 2 0\n");
    // and mixed files round-trip through the partial rendering
    let po = tmp_file("po.g", "n 3\ne 0 1\na 2 1\n");
    let out = dfree(&["graph", "--spec", po.to_str().unwrap()]);
    assert_eq!(stdout(&out), "n 3\ne 0 1\na 2 1\n");
    let _ = std::fs::remove_file(po);
}

#[test]
fn file_inputs_work() {
    let host = tmp_file("host.g", "n 3\ne 0 1\ne 1 2\ne 0 2\n");
    let pat = tmp_file("pat.g", "n 3\na 0 1\na 1 2\na 2 0\n");
    let out = dfree(&[
        "count",
        "--graph",
        host.to_str().unwrap(),
        "--forbidden",
        pat.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("hfree 6\n"));
    let _ = std::fs::remove_file(host);
    let _ = std::fs::remove_file(pat);
}

#[test]
fn extremal_star_matching_family_from_files() {
    let star = tmp_file("star2.g", "n 3\ne 0 1\ne 0 2\n");
    let matching = tmp_file("matching2.g", "n 4\ne 0 1\ne 2 3\n");
    let out = dfree(&[
        "extremal",
        "--n",
        "6",
        "--forbidden-file",
        &format!("{},{}", star.to_str().unwrap(), matching.to_str().unwrap()),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("max_edges 1\n"), "{}", stdout(&out));
    let _ = std::fs::remove_file(star);
    let _ = std::fs::remove_file(matching);
}

#[test]
fn decomp_and_mprime_agree_for_the_anti_bowtie() {
    let d = dfree(&["decomp", "--graph", "fan:2,3", "--json"]);
    assert!(d.status.success());
    let fam: serde_json::Value = serde_json::from_str(stdout(&d).trim()).unwrap();
    assert_eq!(fam["members"].as_array().unwrap().len(), 2);
    assert_eq!(fam["p"], 2);
    let m = dfree(&["mprime", "--forbidden", "fan:2,3:antidirected-cyclic", "--json"]);
    assert!(m.status.success());
    let members: serde_json::Value = serde_json::from_str(stdout(&m).trim()).unwrap();
    assert_eq!(members.as_array().unwrap().len(), 2);
}

#[test]
fn maxd_reports_k4() {
    let out = dfree(&["maxd", "--n", "4", "--forbidden", "triangle:cyclic", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["max_count"], "24");
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_single_claim_exits_zero() {
    let out = dfree(&["verify", "--claim", "K4_T_PROB"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass"));
}

#[test]
fn verify_failing_claim_exits_one() {
    // B1_P5 carries a documented bad reference value; its red exit is part
    // of the contract
    let out = dfree(&["verify", "--claim", "B1_P5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    // usage errors are 2
    assert_eq!(dfree(&["verify", "--claim", "NO_SUCH"]).status.code(), Some(2));
    assert_eq!(dfree(&["count", "--graph", "nope:1", "--forbidden", "triangle:cyclic"])
        .status
        .code(), Some(2));
    assert_eq!(dfree(&["count"]).status.code(), Some(2)); // clap missing args
    // capacity errors are 3
    assert_eq!(
        dfree(&["count", "--graph", "complete:10", "--forbidden", "triangle:cyclic"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        dfree(&["extremal", "--n", "9", "--forbidden", "complete:3"]).status.code(),
        Some(3)
    );
}

#[test]
fn force_overrides_the_extremal_envelope() {
    // n = 8 is past the default envelope but fine with --force on an easy
    // family: ex(8, K7) = t(8, 6) = 26 and the sweep stops after ~400 graphs
    let out = dfree(&["extremal", "--n", "8", "--forbidden", "complete:7", "--force"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("max_edges 26\n"), "{}", stdout(&out));
}

#[test]
fn verify_tag_filter() {
    let out = dfree(&["verify", "--claim", "all", "--tag", "prop51", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let ids: Vec<&str> =
        v.as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["P51A_COUNT", "P51B_COUNT"]);
}
