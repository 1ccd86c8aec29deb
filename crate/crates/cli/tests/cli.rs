use std::path::Path;
use std::process::{Command, Output};

const PILE: &str = "[pile]
length = 26 m
diameter = 1 m
elastic_modulus = 29.2 GPa
thermal_expansion = 1e-5 1/degC
shaft_stiffness = 16.7 MPa/m
";

fn pile(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pile")).args(args).output().unwrap()
}

fn write_spec(dir: &Path, body: &str) -> String {
    let path = dir.join("run.spec");
    std::fs::write(&path, format!("{PILE}\n{body}")).unwrap();
    path.display().to_string()
}

fn run_ok(args: &[&str]) -> Output {
    let out = pile(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    out
}

fn rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn solve_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "[load]\nname = a\nforce = -0.5 MN\ndelta_t = -10 degC\n");
    let (o1, o2) = (dir.path().join("1"), dir.path().join("2"));
    for o in [&o1, &o2] {
        run_ok(&["solve", "--spec", &spec, "--out", o.to_str().unwrap()]);
    }
    for f in ["profile-a.csv", "profile-a.json", "profile-a.svg"] {
        let a = std::fs::read(o1.join(f)).unwrap();
        assert!(!a.is_empty());
        assert_eq!(a, std::fs::read(o2.join(f)).unwrap(), "{f}");
    }
}

#[test]
fn zero_temperature_change_gives_zero_thermal_columns() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "[load]\nname = m\nforce = -1 MN\ndelta_t = 0 degC\n");
    let out = dir.path().join("o");
    run_ok(&["solve", "--spec", &spec, "--out", out.to_str().unwrap(), "--format", "csv"]);
    let csv = std::fs::read_to_string(out.join("profile-m.csv")).unwrap();
    assert!(csv.starts_with("x_m,u_thermal,u_mech,u_combined,eps_thermal,eps_mech,eps_combined,sig_thermal_Pa,sig_mech_Pa,sig_combined_Pa\n"));
    for r in rows(&csv) {
        assert_eq!((r[1], r[4], r[7]), (0.0, 0.0, 0.0));
        assert_eq!(r[3], r[2]);
    }
    assert!(!out.join("profile-m.svg").exists());
}

#[test]
fn scenario_one_has_interior_tension() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "[load]\nname = c\nforce = -0.5 MN\ndelta_t = -10 degC\n");
    let out = dir.path().join("o");
    run_ok(&["solve", "--spec", &spec, "--out", out.to_str().unwrap(), "--format", "csv"]);
    let r = rows(&std::fs::read_to_string(out.join("profile-c.csv")).unwrap());
    let tensile: Vec<f64> = r.iter().filter(|r| r[9] > 0.0).map(|r| r[0]).collect();
    assert!(!tensile.is_empty());
    assert!(tensile.iter().all(|x| *x > 0.0 && *x < 26.0));
    assert!(r.last().unwrap()[9] < 0.0);
}

#[test]
fn depth_from_head_reverses_rows() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "[load]\nname = c\nforce = -0.5 MN\ndelta_t = -10 degC\n");
    let (tip, head) = (dir.path().join("t"), dir.path().join("h"));
    run_ok(&["solve", "--spec", &spec, "--out", tip.to_str().unwrap(), "--format", "csv", "--grid", "27"]);
    run_ok(&["solve", "--spec", &spec, "--out", head.to_str().unwrap(), "--format", "csv", "--grid", "27", "--depth-from", "head"]);
    let t = rows(&std::fs::read_to_string(tip.join("profile-c.csv")).unwrap());
    let h = rows(&std::fs::read_to_string(head.join("profile-c.csv")).unwrap());
    assert_eq!(t.len(), 27);
    for (a, b) in t.iter().zip(h.iter().rev()) {
        assert!((a[0] + b[0] - 26.0).abs() < 1e-12);
        assert_eq!(a[1..], b[1..]);
    }
}

#[test]
fn unknown_unit_reports_line_and_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "[load]\nforce = -0.5 ton\n");
    let out = pile(&["solve", "--spec", &spec]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 9") && err.contains("unknown unit token 'ton'"), "{err}");
}

#[test]
fn missing_spec_exits_one() {
    let out = pile(&["nullpoint", "--spec", "/nonexistent/run.spec"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oracle_check_passes_and_catches_corrupted_psi() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "[load]\nname = c\nforce = -0.5 MN\ndelta_t = -10 degC\n");
    let ok = run_ok(&["oracle-check", "--spec", &spec]);
    assert!(String::from_utf8_lossy(&ok.stdout).contains("all checks passed"));
    let bad = pile(&["oracle-check", "--spec", &spec, "--corrupt-psi", "1.01"]);
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8_lossy(&bad.stderr);
    assert!(err.contains("fields[c]") && err.contains("null-point[c]"), "{err}");
}

#[test]
fn single_eta_sweep_matches_nullpoint() {
    let dir = tempfile::tempdir().unwrap();
    let body = "[load]\nname = s\nscenario = I\neta = 4.58\nanchor_force = -0.5 MN\n\n\
                [sweep]\nname = one\npair = same-sign\netas = 4.58\nanchor_force = -0.5 MN\n";
    let spec = write_spec(dir.path(), body);
    let out = dir.path().join("o");
    let o = out.to_str().unwrap();
    run_ok(&["nullpoint", "--spec", &spec, "--out", o, "--format", "csv"]);
    run_ok(&["sweep", "--spec", &spec, "--out", o, "--format", "csv"]);
    let np = std::fs::read_to_string(out.join("nullpoint.csv")).unwrap();
    let np: Vec<&str> = np.lines().nth(1).unwrap().split(',').collect();
    let sw = std::fs::read_to_string(out.join("sweep-one-same-sign.csv")).unwrap();
    let sw: Vec<&str> = sw.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(np[4], sw[1]);
    assert_eq!(np[5], sw[2]);
    assert_eq!(np[9..], sw[3..]);
    assert!((np[4].parse::<f64>().unwrap() - 9.23).abs() < 0.01);
}

#[test]
fn nullpoint_prints_table() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "[load]\nname = h\nforce = -1 MN\ndelta_t = 10 degC\n");
    let out = run_ok(&["nullpoint", "--spec", &spec, "--out", dir.path().join("o").to_str().unwrap()]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("EXISTS_INTERIOR") && text.contains("2.1387") && text.contains("1.4052"), "{text}");
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("o/nullpoint.json")).unwrap()).unwrap();
    assert_eq!(json[0]["report"]["scenario"], "II");
}

#[test]
fn svg_outputs_carry_axis_labels() {
    let dir = tempfile::tempdir().unwrap();
    let body = "[load]\nname = a\nforce = -1 MN\ndelta_t = 10 degC\n\n[sweep]\nname = s\neta_min = 1\neta_max = 1000\ncount = 30\nspacing = log\nanchor_force = -0.5 MN\n";
    let spec = write_spec(dir.path(), body);
    let out = dir.path().join("o");
    run_ok(&["solve", "--spec", &spec, "--out", out.to_str().unwrap(), "--format", "svg"]);
    run_ok(&["sweep", "--spec", &spec, "--out", out.to_str().unwrap(), "--format", "svg"]);
    let profile = std::fs::read_to_string(out.join("profile-a.svg")).unwrap();
    for label in ["displacement (mm)", "strain (microstrain)", "stress (MPa)", "height above tip x (m)", "#d62728", "#1f77b4"] {
        assert!(profile.contains(label), "{label}");
    }
    let sweep = std::fs::read_to_string(out.join("sweep-s.svg")).unwrap();
    for label in ["eta = |dT| / |dT_eq| (-)", "null point height above tip (m)", "mid-length", "same sign", "opposite sign"] {
        assert!(sweep.contains(label), "{label}");
    }
}

#[test]
fn shipped_example_spec_is_valid() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/table1.spec");
    let spec = pile_cli::RunSpec::read(Path::new(path)).unwrap();
    assert_eq!(spec.loads.len(), 5);
    assert_eq!(spec.sweeps.len(), 1);
}

#[test]
fn nullpoint_absent_below_threshold_and_thermal_only_at_mid_length() {
    let dir = tempfile::tempdir().unwrap();
    let body = "[load]\nname = below\nscenario = II\neta = 2.0\nanchor_delta_t = 10 degC\n\n[load]\nname = thermal\ndelta_t = 10 degC\n";
    let spec = write_spec(dir.path(), body);
    let out = run_ok(&["nullpoint", "--spec", &spec, "--out", dir.path().join("o").to_str().unwrap()]);
    let text = String::from_utf8_lossy(&out.stdout);
    let below = text.lines().find(|l| l.starts_with("below")).unwrap();
    assert!(below.contains("ABSENT") && below.contains("2.1387"), "{below}");
    let thermal = text.lines().find(|l| l.starts_with("thermal ")).unwrap();
    assert!(thermal.contains("13.0000") && thermal.contains("THERMAL_ONLY"), "{thermal}");
    let csv = std::fs::read_to_string(dir.path().join("o/nullpoint.csv")).unwrap();
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert_eq!((row[4], row[5]), ("", "0"));
}
