use std::path::Path;
use std::process::{Command, Output};

fn ohsz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ohsz")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = ohsz(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

/// Header row and numeric rows, comments dropped.
fn rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let body = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    (header, body)
}

fn numbers(text: &str) -> Vec<Vec<f64>> {
    rows(text).1.iter().map(|r| r.iter().map(|c| c.parse().unwrap()).collect()).collect()
}

fn fit_value(report: &str, key: &str) -> f64 {
    report
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("{key} missing in {report}"))
        .parse()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn spectrum_zero_field_row_and_crossing() {
    let text = ok(&["spectrum", "--theta-deg", "60", "--b-min", "0", "--b-max", "0.1", "--points", "1001"]);
    assert!(text.contains("# energy_unit: cm^-1"));
    let (header, _) = rows(&text);
    assert_eq!(header.len(), 9);
    assert_eq!(header[0], "B_T");
    let data = numbers(&text);
    for (i, v) in data[0][1..].iter().enumerate() {
        let want = if i < 4 { 0.0278 } else { -0.0278 };
        assert!((v - want).abs() < 5e-5, "{v}");
    }
    for r in &data {
        for i in 1..=4 {
            assert!((r[i] + r[9 - i]).abs() <= 1e-9);
        }
    }
    let at_min = data.iter().min_by(|a, b| a[4].abs().total_cmp(&b[4].abs())).unwrap();
    assert!((at_min[0] - 0.049626).abs() < 1e-4);
}

#[test]
fn crossings_at_zero_field() {
    let text = ok(&["crossings", "--theta-deg", "60"]);
    let (_, body) = rows(&text);
    let mut locs: Vec<f64> = Vec::new();
    for r in &body {
        assert_eq!(r[2], "real-crossing");
        let b: f64 = r[0].parse().unwrap();
        if !locs.iter().any(|l| (l - b).abs() < 1e-6) {
            locs.push(b);
        }
    }
    let want = [0.0, 0.0496, 0.0744, 0.1489];
    assert_eq!(locs.len(), want.len(), "{text}");
    for (a, b) in locs.iter().zip(want) {
        assert!((a - b).abs() < 1e-4);
    }
}

#[test]
fn b1_crossing_becomes_avoided() {
    let text = ok(&["crossings", "--theta-deg", "60", "--e-vcm", "1000"]);
    let (_, body) = rows(&text);
    let b1 = body
        .iter()
        .find(|r| r[3] == "4" && r[4] == "5" && (0.045..0.06).contains(&r[0].parse::<f64>().unwrap()))
        .expect("record near B1");
    assert_eq!(b1[2], "avoided");
    assert!(b1[5].parse::<f64>().unwrap() > 0.0);
}

#[test]
fn parallel_fields_keep_real_crossings() {
    let text = ok(&["crossings", "--theta-rad", "0", "--e-vcm", "2000"]);
    let (_, body) = rows(&text);
    assert!(body.iter().all(|r| r[2] == "real-crossing"));
    assert!(body.iter().any(|r| r[6] == "f2-analytic"));
}

#[test]
fn b1_scan_approximation() {
    let text = ok(&["b1", "--vs", "e", "--from", "0", "--to", "500", "--points", "51", "--theta-deg", "60"]);
    let data = numbers(&text);
    assert!((data[0][1] - 0.049626).abs() < 1e-6 && (data[0][2] - 0.049626).abs() < 1e-6);
    for r in &data {
        assert!(((r[1] - r[2]) / r[1]).abs() < 0.01);
    }
}

#[test]
fn gap_scan_and_fits() {
    let dir = tempfile::tempdir().unwrap();
    let gap_e = dir.path().join("gap_e.csv");
    ok(&[
        "gap", "--vs", "e", "--from", "10", "--to", "70", "--points", "25", "--theta-deg", "60", "--unit", "ghz",
        "--out", gap_e.to_str().unwrap(),
    ]);
    let report = ok(&["fit", "--input", gap_e.to_str().unwrap(), "--model", "power-in-e", "--from", "10", "--to", "70"]);
    assert!((fit_value(&report, "exponent") - 3.0).abs() <= 0.05, "{report}");
    assert!(report.contains("model: power-in-e"));

    let gap_t = dir.path().join("gap_t.csv");
    ok(&[
        "gap", "--vs", "theta", "--from", "0.01", "--to", "3.1315926", "--points", "121", "--e-vcm", "4000",
        "--out", gap_t.to_str().unwrap(),
    ]);
    let report =
        ok(&["fit", "--input", gap_t.to_str().unwrap(), "--model", "power-in-sin-theta", "--from", "0", "--to", "4"]);
    assert!((fit_value(&report, "exponent") - 1.0).abs() <= 0.3, "{report}");
}

#[test]
fn gap_vs_field_starts_at_zero_and_grows() {
    let text = ok(&["gap", "--vs", "e", "--from", "0", "--to", "500", "--points", "26", "--theta-deg", "60"]);
    let data = numbers(&text);
    assert_eq!(data[0][1], 0.0);
    assert!(data.windows(2).all(|w| w[1][1] > w[0][1]));
}

#[test]
fn fit_rejects_bad_windows() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "d.csv", "x,y\n1,1\n2,8\n3,27\n4,64\n5,125\n6,0\n");
    let o = ohsz(&["fit", "--input", &f, "--model", "power-in-e", "--from", "1", "--to", "6"]);
    assert_eq!(o.status.code(), Some(1));
    let o = ohsz(&["fit", "--input", &f, "--model", "power-in-e", "--from", "1", "--to", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let r = ok(&["fit", "--input", &f, "--model", "power-in-e", "--from", "1", "--to", "5"]);
    assert!((fit_value(&r, "exponent") - 3.0).abs() < 1e-6);
    assert!((fit_value(&r, "coefficient") - 1.0).abs() < 1e-6);
}

#[test]
fn audit_pass_and_injected_fault() {
    let text = ok(&["audit", "--samples", "300"]);
    assert!(text.contains("status: pass"));
    assert!(fit_value(&text, "max_product_rel") <= 1e-6);

    let o = ohsz(&["audit", "--samples", "50", "--flip-sign", "6"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("suspect_coefficients: g6("), "{text}");

    let text = ok(&["audit", "--samples", "100", "--zero-field"]);
    assert!(fit_value(&text, "zero_field_rel") <= 1e-12);
}

#[test]
fn outputs_are_deterministic() {
    let args = ["crossings", "--theta-deg", "47", "--e-vcm", "1800"];
    assert_eq!(ok(&args), ok(&args));
    let args = ["spectrum", "--theta-deg", "30", "--e-vcm", "700", "--points", "64"];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn plot_is_deterministic_and_validates_input() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("b1.csv");
    ok(&["b1", "--vs", "e", "--from", "0", "--to", "500", "--points", "21", "--theta-deg", "60", "--out", data.to_str().unwrap()]);
    let a = ok(&["plot", "--input", data.to_str().unwrap()]);
    let b = ok(&["plot", "--input", data.to_str().unwrap()]);
    assert_eq!(a, b);
    assert!(a.starts_with("<svg"));
    assert_eq!(a.matches("<polyline").count(), 2);
    assert!(a.contains("stroke-dasharray"));

    let empty = write(dir.path(), "empty.csv", "# nothing\nx,y\n");
    assert_eq!(ohsz(&["plot", "--input", &empty]).status.code(), Some(1));
    let o = ohsz(&["spectrum", "--b-min", "0.2", "--b-max", "0.1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn hamiltonian_dump() {
    let text = ok(&["hamiltonian", "--b-tesla", "0.1", "--e-vcm", "1000", "--theta-deg", "30"]);
    let rows: Vec<Vec<f64>> =
        text.lines().map(|l| l.split(' ').map(|c| c.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 8);
    for i in 0..8 {
        assert_eq!(rows[i].len(), 8);
        for j in 0..8 {
            assert_eq!(rows[i][j], rows[j][i]);
        }
    }
}

#[test]
fn config_file_changes_scaling() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "oh.toml", "delta_ghz = 1.0\n");
    let text = ok(&["spectrum", "--points", "2", "--config", &cfg]);
    assert!(!text.contains("# delta_tilde_ghz: 8.33500000000e0"));
    let bad = write(dir.path(), "bad.toml", "delta_ghz = -1.0\n");
    assert_eq!(ohsz(&["spectrum", "--config", &bad]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(ohsz(&["nonsense"]).status.code(), Some(1));
    assert_eq!(ohsz(&["b1", "--vs", "e"]).status.code(), Some(1));
    assert_eq!(ohsz(&["spectrum", "--theta-deg", "1", "--theta-rad", "1"]).status.code(), Some(1));
    assert_eq!(ohsz(&["--help"]).status.code(), Some(0));
}
