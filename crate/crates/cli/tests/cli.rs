//! Exit-code and diagnostic behavior of the command-line interface.

use std::process::Command;

fn openbook(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_openbook"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
        output.status.code().unwrap_or(-1),
    )
}

fn write_temp(dir: &tempfile::TempDir, name: &str, content: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn validate_accepts_good_files_and_names_violations() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_temp(
        &dir,
        "good.cfk",
        "cfk v1\ngenerator g1 A=1\ngenerator g0 A=0\ngenerator gm1 A=-1\narrow g0 gm1 h=0\narrow g0 g1 h=1\n",
    );
    let (stdout, _, code) = openbook(&["cfk", "validate", &good]);
    assert_eq!(code, 0);
    assert!(stdout.contains("status: valid"));

    // d^2 != 0 through the chain a -> b -> c
    let bad = write_temp(
        &dir,
        "bad.cfk",
        "cfk v1\ngenerator a A=2\ngenerator b A=1\ngenerator c A=0\narrow a b h=0\narrow b c h=0\n",
    );
    let (_, stderr, code) = openbook(&["cfk", "validate", &bad]);
    assert_eq!(code, 1);
    assert!(stderr.contains("ValidationError"), "{stderr}");
    assert!(stderr.contains("'a'") && stderr.contains("'c'"), "{stderr}");
}

#[test]
fn json_errors_are_structured() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_temp(
        &dir,
        "drop.cfk",
        "cfk v1\ngenerator a A=0\ngenerator b A=2\narrow a b h=1\n",
    );
    let (stdout, _, code) = openbook(&["cfk", "validate", &bad, "--json"]);
    assert_eq!(code, 1);
    let value: serde_json::Value = serde_json::from_str(stdout.trim_end()).unwrap();
    assert_eq!(value["command"], "cfk validate");
    assert_eq!(value["error"]["kind"], "ValidationError");
}

#[test]
fn domain_error_variants_reach_the_exit_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let trefoil = write_temp(
        &dir,
        "t1r.cfk",
        "cfk v1\ngenerator g1 A=1\ngenerator g0 A=0\ngenerator gm1 A=-1\narrow g0 gm1 h=0\narrow g0 g1 h=1\n",
    );
    let (_, stderr, code) = openbook(&["surgery", "hf", "--n", "1", "--m", "0", &trefoil]);
    assert_eq!(code, 1);
    assert!(stderr.contains("SlopeTooSmall"), "{stderr}");

    let (_, stderr, code) = openbook(&["contact", "verdict", "--slope", "4/2", &trefoil]);
    assert_eq!(code, 1);
    assert!(stderr.contains("NonCoprime"), "{stderr}");

    let (_, stderr, code) = openbook(&["farey", "slamdunk", "--slope", "3/1", "--n", "3"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("Indeterminate"), "{stderr}");

    let (_, stderr, code) = openbook(&["farey", "path", "--from", "3", "--to", "5/2"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("SlopeNotAbove"), "{stderr}");
}

#[test]
fn usage_errors_exit_two() {
    let (_, _, code) = openbook(&["farey", "path", "--from", "1", "--to", "not-a-slope"]);
    assert_eq!(code, 2);
    let (_, _, code) = openbook(&["no-such-command"]);
    assert_eq!(code, 2);
    let (_, _, code) = openbook(&["cfk", "validate", "/no/such/file.cfk"]);
    assert_eq!(code, 2);
    let (_, _, code) = openbook(&["cfk", "staircase", "--k", "0", "--hand", "right"]);
    assert_eq!(code, 2);
}

#[test]
fn staircase_round_trips_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t3l.cfk");
    let path_str = path.to_str().unwrap();
    let (_, _, code) = openbook(&[
        "cfk",
        "staircase",
        "--k",
        "3",
        "--hand",
        "left",
        "--out",
        path_str,
    ]);
    assert_eq!(code, 0);
    let (stdout, _, code) = openbook(&["cfk", "genus", path_str]);
    assert_eq!(code, 0);
    assert!(stdout.contains("genus: 3"));
    assert!(stdout.contains("fibered_like: true"));

    // without --out the document itself is printed
    let (stdout, _, code) = openbook(&["cfk", "staircase", "--k", "1", "--hand", "right"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "cfk v1\n\
         generator g1 A=1 M=0\n\
         generator g0 A=0 M=1\n\
         generator gm1 A=-1 M=0\n\
         arrow g0 gm1 h=0\n\
         arrow g0 g1 h=1\n"
    );
}

#[test]
fn heegaard_grading_reports_non_integral_warning() {
    let dir = tempfile::tempdir().unwrap();
    let domain = write_temp(
        &dir,
        "d.domain",
        "domain v1\nregion out mult=0\nregion in mult=1\ngenerator x corners=in,in,in,in\ngenerator y corners=out,out,out,in\n",
    );
    let (stdout, _, code) = openbook(&["heegaard", "grading", &domain, "--x", "x", "--y", "y"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("alexander_difference: 3/4"), "{stdout}");
    assert!(stdout.contains("integral: false"));
    assert!(stdout.contains("warning:"), "{stdout}");

    let (_, stderr, code) = openbook(&["heegaard", "grading", &domain, "--x", "x", "--y", "zz"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("UnknownGenerator"), "{stderr}");
}

#[test]
fn hfk_text_output_is_sorted_by_grading() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_temp(
        &dir,
        "t2r.cfk",
        &openbook_core::cfk::BifilteredComplex::staircase(2, openbook_core::cfk::Hand::Right)
            .to_cfk_v1(),
    );
    let (stdout, _, code) = openbook(&["cfk", "hfk", &file]);
    assert_eq!(code, 0);
    assert!(
        stdout.contains("hfk_ranks: -2:1 -1:1 0:1 1:1 2:1"),
        "{stdout}"
    );
}
