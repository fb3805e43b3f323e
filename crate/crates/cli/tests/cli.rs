use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sutcomb")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn slope_delta_of_meridian_and_longitude() {
    assert_eq!(run(&["slope-delta", "1/0", "0/1"]), (0, "1\n".into(), String::new()));
    assert_eq!(run(&["slope-delta", "-1/2", "3/5"]).1, "11\n");
}

#[test]
fn bad_slope_is_a_usage_error() {
    let (code, out, err) = run(&["slope-delta", "2/4", "0/1"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn scharlemann_on_bigon() {
    let (code, out, _) = run(&["graph-scharlemann", &data("bigon.graph")]);
    assert_eq!(code, 0);
    assert_eq!(out, "scharlemann cycle: label 1, length 2\n  1.1 -> 2.2\n  2.1 -> 1.2\n");
    let (_, out, _) = run(&["graph-scharlemann", &data("loop.graph")]);
    assert!(out.starts_with("scharlemann cycle: label 1, length 1\n"), "{out}");
}

#[test]
fn non_gabai_graph_exits_one() {
    let (code, out, _) = run(&["graph-check", &data("too_many_boundary.graph")]);
    assert_eq!(code, 1);
    assert!(out.starts_with("Gabai bound: "), "{out}");
    assert_eq!(run(&["graph-scharlemann", &data("too_many_boundary.graph")]).0, 1);
}

#[test]
fn malformed_files_name_file_line_and_field() {
    let path = data("bad_sign.graph");
    let (code, out, err) = run(&["graph-check", &path]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with(&format!("{path}:6: vertices[0].sign: ")), "{err}");
    assert_eq!(err.lines().count(), 1);

    let path = data("version_two.graph");
    let (code, _, err) = run(&["graph-check", &path]);
    assert_eq!(code, 2);
    assert!(err.starts_with(&format!("{path}:2: version: unsupported format version 2")), "{err}");

    assert_eq!(run(&["graph-check", &data("missing.graph")]).0, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["slope-delta", "1/0"]).0, 2);
    assert_eq!(run(&["verify", "nothing"]).0, 2);
}

#[test]
fn dot_export() {
    let (code, out, _) = run(&["graph-check", "--dot", &data("bigon.graph")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph disc {\n"));
    assert_eq!(out.matches(" -- ").count(), 2);
}

#[test]
fn norms_inline_and_from_file() {
    let (code, out, _) = run(&["norm", "--genus", "1", "--punctures", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "euler: 0\nthurston_norm: 0\nbeta_norm: 3\n");
    let (_, out, _) = run(&["norm", &data("genus_two.surface")]);
    assert_eq!(out, "euler: -2\nthurston_norm: 2\nbeta_norm: 2\n");
}

#[test]
fn index_of_a_disc() {
    let (code, out, _) = run(&["index", &data("disc.index")]);
    assert_eq!((code, out.as_str()), (0, "index: 2\n"));
}

#[test]
fn cobordism_lens_summand() {
    let (code, out, _) = run(&["cobordism", &data("sphere.cobordism")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("H_1: Z/3\n"), "{out}");
    assert!(out.contains("lens summand: order 3\n"));
    let (_, out, _) = run(&["cobordism", "--genus", "1", "--kind", "closed_genus_g", "--q", "4", "--alpha", "4", "--a", "2,-6"]);
    assert!(out.starts_with("H_1: Z^2 + Z/2\n"), "{out}");
    assert!(out.contains("product: no\n"));
    let (code, _, _) = run(&["cobordism", "--genus", "0", "--kind", "sphere", "--q", "0", "--alpha", "4"]);
    assert_eq!(code, 2);
}

#[test]
fn scenario_exit_codes() {
    let (code, out, _) = run(&["scenario", &data("genus_two.scenario")]);
    assert_eq!(code, 0);
    assert!(out.ends_with("conclusion: inequality holds (2 <= 2)\n"), "{out}");
    let (code, out, _) = run(&["scenario", &data("torus_no_flags.scenario")]);
    assert_eq!(code, 1);
    assert!(out.ends_with("conclusion: theorem not applicable: N_irreducible unset\n"), "{out}");
}

#[test]
fn verify_scharlemann_mu_three() {
    let (code, out, err) = run(&["verify", "scharlemann", "--max-v", "4", "--mu", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("mu=3"));
    assert!(out.contains("failures: 0\n"));
    assert!(out.ends_with("ok\n"));
    assert!(err.contains("wall time"));
}

#[test]
fn records_are_single_versioned_lines() {
    let (code, out, _) = run(&["--format", "records", "slope-delta", "1/0", "0/1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"version\":1,\"a\":\"1/0\",\"b\":\"0/1\",\"command\":\"slope-delta\",\"delta\":1}\n");
    let (_, out, _) = run(&["--format", "records", "verify", "lambda", "--max-v", "3"]);
    assert_eq!(out.lines().count(), 3);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["version"], 1);
        assert!(v.get("wall_time_s").is_none());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify", "connectivity", "--instances", "300", "--seed", "7"],
        vec!["--format", "records", "verify", "scharlemann", "--max-v", "3"],
        vec!["graph-scharlemann", "--format", "records", &data("bigon.graph")],
    ] {
        let owned: Vec<&str> = args.iter().map(|s| s.as_ref()).collect();
        let first = run(&owned);
        assert_eq!(first.0, 0);
        assert_eq!(first.1, run(&owned).1);
    }
    let (_, out, _) = run(&["verify", "connectivity", "--instances", "50", "--seed", "7"]);
    assert!(out.contains("seed=7"));
}
