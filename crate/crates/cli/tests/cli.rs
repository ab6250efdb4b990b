use std::process::{Command, Output};

use orelim::infmat::MatrixName;
use orelim::report::{CheckReport, CheckStatus};
use orelim_cli::format::reserialize_minor;
use orelim_cli::{cmd_catalog, cmd_ore_residual, ExitStatus, Format, MinorJson};

fn orelim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orelim")).args(args).env_remove("ORELIM_DEPTH").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const NAMES: [&str; 23] = [
    "identity",
    "V",
    "D_q",
    "F",
    "P",
    "S",
    "P_x",
    "P_x_prime",
    "T0P",
    "T0S",
    "T0",
    "T0_inv",
    "M0_tilde",
    "M1p_tilde",
    "M2p_tilde",
    "Lp_tilde",
    "Lp_inv_tilde",
    "U1p_tilde",
    "U2p_tilde",
    "U0_tilde",
    "L0_tilde",
    "signed_stirling_upper",
    "ones_lower_band",
];

#[test]
fn every_catalog_name_is_listed() {
    for name in NAMES {
        assert!(name.parse::<MatrixName>().is_ok(), "{name}");
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    for name in NAMES {
        for n in [1, 4, 7] {
            let out = cmd_catalog(name, n, Format::Json, Some("-2/3")).unwrap();
            let json = out.stdout.trim_end();
            assert_eq!(reserialize_minor(json).unwrap(), json, "{name} n = {n}");
        }
    }
}

#[test]
fn malformed_minor_json_is_rejected() {
    assert!(MinorJson::parse(r#"{"name":"x","n":2,"entries":[["1"]]}"#).is_err());
    assert!(MinorJson::parse(r#"{"name":"x","n":1,"entries":[["1 +"]]}"#).is_err());
    assert!(MinorJson::parse("[1]").is_err());
}

#[test]
fn catalog_formats() {
    let json = orelim(&["catalog", "--name", "M0_tilde", "--n", "2", "--format", "json"]);
    assert_eq!(
        stdout(&json),
        "{\"name\":\"M0_tilde\",\"n\":2,\"entries\":[[\"x - 1\",\"x + 1\"],[\"x^2 - 1\",\"2*x^2 + 2\"]]}\n"
    );
    let csv = orelim(&["catalog", "--name", "T0_inv", "--n", "3", "--format", "csv"]);
    assert_eq!(stdout(&csv), "1,0,0\nx + 1,1,0\nx^2 + x + 1,x + 1,1\n");
    let pretty = orelim(&["catalog", "--name", "identity", "--n", "1", "--format", "pretty"]);
    assert!(stdout(&pretty).contains("  1\n"));
    let default = orelim(&["catalog", "--name", "identity", "--n", "1"]);
    assert_eq!(stdout(&default), "{\"name\":\"identity\",\"n\":1,\"entries\":[[\"1\"]]}\n");
}

#[test]
fn lu_examples() {
    let v = orelim(&["lu", "--name", "V", "--n", "4"]);
    let lu: orelim_cli::LuJson = serde_json::from_slice(&v.stdout).unwrap();
    let pascal: Vec<Vec<String>> =
        (0..4).map(|i| (0..4).map(|j| orelim::exactpoly::binomial(i, j).to_string()).collect()).collect();
    assert_eq!(lu.l, pascal);
    assert_eq!(lu.u[3], ["0", "0", "0", "6"]);
    let id = orelim(&["lu", "--name", "identity", "--n", "5"]);
    let lu: orelim_cli::LuJson = serde_json::from_slice(&id.stdout).unwrap();
    assert_eq!(lu.l, lu.u);
}

#[test]
fn exit_codes() {
    assert_eq!(orelim(&["catalog", "--name", "nope", "--n", "2"]).status.code(), Some(2));
    assert_eq!(orelim(&["catalog", "--name", "D_q", "--n", "2"]).status.code(), Some(2));
    assert_eq!(orelim(&["catalog", "--name", "V", "--n", "0"]).status.code(), Some(2));
    assert_eq!(orelim(&["catalog", "--name", "V"]).status.code(), Some(2));
    assert_eq!(orelim(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(orelim(&["--help"]).status.code(), Some(0));
    let singular = orelim(&["lu", "--name", "D_q", "--q", "0", "--n", "3"]);
    assert_eq!(singular.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&singular.stderr).contains("1x1"));
    assert_eq!(orelim(&["ore-residual", "--poly", "1", "--c", "1", "--n", "3"]).status.code(), Some(0));
    let nonzero = orelim(&["ore-residual", "--poly", "0; 1 E^1 H^0", "--c", "0", "--n", "1"]);
    assert_eq!((stdout(&nonzero).as_str(), nonzero.status.code()), ("2 E^2\n", Some(1)));
    let family = orelim(&["ore-residual", "--poly", "0; 1 E^1 H^0", "--c", "2", "--n", "4"]);
    assert_eq!((stdout(&family).as_str(), family.status.code()), ("0\n", Some(0)));
    let bad = orelim(&["ore-residual", "--poly", "0; 1 E^", "--c", "2", "--n", "4"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("position 7"));
    assert_eq!(orelim(&["ore-residual", "--poly", "1", "--c", "-1/2", "--n", "1", "--k", "2"]).status.code(), Some(3));
}

#[test]
fn ore_residual_with_k() {
    let trivial = cmd_ore_residual("H; E H; H^2", "1/2", 3, Some(3)).unwrap();
    assert_eq!((trivial.stdout.as_str(), trivial.status), ("0\n", ExitStatus::Success));
    let base = cmd_ore_residual("0; E", "0", 1, Some(0)).unwrap();
    assert_eq!(base.stdout, "2 E^2\n");
}

#[test]
fn verify_writes_a_report() {
    let path = std::env::temp_dir().join(format!("orelim-verify-{}.json", std::process::id()));
    let out = orelim(&["verify", "--suite", "matrix", "--depth", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let reports: Vec<CheckReport> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(reports.len(), 3 * 15);
    assert!(reports.iter().all(|r| r.status == CheckStatus::Pass && r.witness.is_none()));
    let names: Vec<&str> = reports.iter().take(15).map(|r| r.name.as_str()).collect();
    assert_eq!(names[0], "vandermonde_LDU");
    assert_eq!(names[14], "fundamental_sequence");
}

#[test]
fn depth_from_environment() {
    let run = |env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_orelim"));
        cmd.args(["verify", "--suite", "matrix"]);
        match env {
            Some(d) => cmd.env("ORELIM_DEPTH", d),
            None => cmd.env_remove("ORELIM_DEPTH"),
        };
        let out = cmd.output().unwrap();
        serde_json::from_slice::<Vec<CheckReport>>(&out.stdout).unwrap().len()
    };
    assert_eq!(run(Some("2")), 2 * 15);
    assert_eq!(run(None), 8 * 15);
}

#[test]
fn verify_ore_with_c_list() {
    let out = orelim(&["verify", "--suite", "ore", "--depth", "1", "--c", "0,-1,1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<CheckReport> = serde_json::from_slice(&out.stdout).unwrap();
    let cs: std::collections::BTreeSet<&str> =
        reports.iter().filter_map(|r| r.parameters.get("c").map(String::as_str)).collect();
    assert!(cs.contains("-1") && cs.contains("1/2") && cs.contains("0"));
    assert!(reports.iter().all(|r| !r.failed()));
}
