use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_pauli-renyi");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
}

const QUICK: &[&str] = &["--grid", "101x101", "--samples", "2000", "--points", "200"];

#[test]
fn eval_eigenstate_is_lower_saturated() {
    let o = run(&["eval", "--eigenstate", "z+", "--alpha", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let sum: f64 = value(&text, "renyi_sum").parse().unwrap();
    assert!((sum - 2.0 * std::f64::consts::LN_2).abs() < 1e-15);
    assert_eq!(value(&text, "classification"), "lower-saturated");
}

#[test]
fn eval_completely_mixed() {
    let text = stdout(&run(&["eval", "--bloch", "0,0,0", "--alpha", "0.5"]));
    let sum: f64 = value(&text, "renyi_sum").parse().unwrap();
    assert!((sum - 3.0 * std::f64::consts::LN_2).abs() < 1e-15);
    assert_eq!(value(&text, "upper_bound_kind"), "mixed");
    assert_eq!(value(&text, "classification"), "interior");
}

#[test]
fn eval_upper_saturating_state() {
    // cos 2τ = 1/√3 on φ = π/4
    let tau = (1.0 / 3f64.sqrt()).acos() / 2.0;
    let angles = format!("{tau},{}", std::f64::consts::FRAC_PI_4);
    let text = stdout(&run(&["eval", "--angles", &angles, "--alpha", "0.5"]));
    let gap: f64 = value(&text, "gap_upper").parse().unwrap();
    assert!(gap.abs() < 1e-12);
    assert_eq!(value(&text, "classification"), "upper-saturated");
}

#[test]
fn saturate_classifications() {
    let o = run(&["saturate", "--eigenstate", "x-", "--alpha", "0.5"]);
    assert!(stdout(&o).starts_with("kind=lower-saturated axis=x "));
    let o = run(&["saturate", "--bloch", "0,0,0", "--alpha", "0.5"]);
    assert!(stdout(&o).starts_with("kind=interior axis=none "));
    let o = run(&["saturate", "--mix", "0.5,z", "--alpha", "0.3"]);
    assert!(stdout(&o).starts_with("kind=interior "));
    let o = run(&["saturate", "--angles", "0.4776583090622546,0.7853981633974483", "--alpha", "0.5"]);
    assert!(stdout(&o).starts_with("kind=upper-saturated "));
}

#[test]
fn band_csv() {
    let o = run(&["band", "--alpha-range", "0.01:1:0.01"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "alpha,lower,B_renyi,A_tsallis");
    assert_eq!(lines.len(), 101);
    let rows: Vec<Vec<f64>> = lines[1..]
        .iter()
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    for r in &rows {
        assert!(2.0 / 3.0 - 1e-12 <= r[3] && r[3] <= r[2] + 1e-12, "{r:?}");
    }
    assert!(rows[0][2] > 0.99);
    let last = rows.last().unwrap();
    assert_eq!(last[0], 1.0);
    assert!((last[2] - 0.744).abs() < 1e-3 && (last[3] - last[2]).abs() < 1e-9);
    assert_eq!(lines[100], "1.00000000000,0.666666666667,0.744007551249,0.744007551249");
    assert_eq!(text, stdout(&run(&["band", "--alpha-range", "0.01:1:0.01"])));
}

#[test]
fn band_to_file_and_unwritable_path() {
    let dir = std::env::temp_dir().join(format!("pauli-renyi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("band.csv");
    let o = run(&["band", "--alpha", "0.5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
    let o = run(&["band", "--out", "/nonexistent-dir/x/band.csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(run(&["eval", "--eigenstate", "q+", "--alpha", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--bloch", "1,1,1", "--alpha", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--angles", "0.1", "--alpha", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--mix", "1.5,x", "--alpha", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["band", "--alpha-range", "1:0:0.1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--eigenstate", "z+", "--alpha", "1.5"]).status.code(), Some(3));
    assert_eq!(run(&["eval", "--eigenstate", "z+", "--alpha", "-0.5"]).status.code(), Some(3));
    assert_eq!(run(&["band", "--alpha-range", "0.5:1.2:0.1"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--alpha", "0"]).status.code(), Some(3));
}

#[test]
fn quick_verify_passes() {
    let mut args = vec!["verify", "--alpha", "0.25,1"];
    args.extend_from_slice(QUICK);
    let o = run(&args);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    for line in text.lines() {
        assert!(line.starts_with("check=") && line.contains(" passed=true "), "{line}");
    }
}

#[test]
fn verify_output_independent_of_threads() {
    let mut one = vec!["verify", "--alpha", "0.25,1", "--threads", "1"];
    one.extend_from_slice(QUICK);
    let mut four = vec!["verify", "--alpha", "0.25,1", "--threads", "4"];
    four.extend_from_slice(QUICK);
    assert_eq!(stdout(&run(&one)), stdout(&run(&four)));
}

#[test]
fn injected_wrong_constant_fails() {
    let mut args = vec!["verify", "--alpha", "0.25,1", "--inject-wrong-lower"];
    args.extend_from_slice(QUICK);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("check=grid_min_sum alpha=0.25 claimed=1.33629"));
}

#[test]
fn default_alpha_set_reports_relative_gap_failure() {
    let mut args = vec!["verify"];
    args.extend_from_slice(QUICK);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let failed: Vec<&str> = text.lines().filter(|l| l.contains("passed=false")).collect();
    assert_eq!(failed.len(), 1, "{text}");
    assert!(failed[0].starts_with("check=band_relative_gap alpha=0.5 "));
}

#[test]
fn verify_csv_format() {
    let mut args = vec!["verify", "--alpha", "0.5", "--format", "csv"];
    args.extend_from_slice(QUICK);
    let text = stdout(&run(&args));
    assert_eq!(text.lines().next(), Some("check,alpha,claimed,observed,err,passed"));
}
