//! End-to-end runs of the command-line binary.

use std::process::{Command, Output};

fn affine_tl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affine-tl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fc_check_reports_non_commutative_word() {
    let o = affine_tl(&[
        "fc-check",
        "--graph",
        "caffine",
        "--n",
        "3",
        "--word",
        "1 3 2 1 2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "not fully commutative\n");
}

#[test]
fn tl_mul_applies_the_four_term_relation() {
    let o = affine_tl(&[
        "tl-mul", "--graph", "caffine", "--n", "4", "--word", "1 2 1 2",
    ]);
    assert_eq!(stdout(&o), "2 * b[1 2]\n");
}

#[test]
fn enumerate_lists_seven_b2_elements() {
    let o = affine_tl(&["enumerate", "--graph", "b", "--n", "2", "--max-len", "4"]);
    assert_eq!(stdout(&o).lines().count(), 7);
}

#[test]
fn exit_codes() {
    assert_eq!(
        affine_tl(&["enumerate", "--graph", "b"]).status.code(),
        Some(2)
    );
    assert_eq!(affine_tl(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        affine_tl(&["tl-mul", "--n", "3", "--word", "1 9"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn diagram_files_round_trip_through_the_binary() {
    let o = affine_tl(&["diagram", "--n", "4", "--word", "1 2 1 3"]);
    let text = stdout(&o);
    let body: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
    let path = std::env::temp_dir().join(format!("affine-tl-cli-{}.txt", std::process::id()));
    std::fs::write(&path, &body).unwrap();
    let p = path.to_str().unwrap();
    let factored = affine_tl(&["diagram", "--input", p]);
    assert_eq!(factored.status.code(), Some(0));
    assert!(stdout(&factored).contains("admissible, a-value 2"));
    let inverse = affine_tl(&["theta", "--n", "4", "--input", p]);
    assert_eq!(stdout(&inverse), "1 2 1 3\n");
    std::fs::write(
        &path,
        "n=2 loops=1\nedge N1-S1 deco=\nedge N2-S2 deco=\nedge N3-S3 deco=\nedge N4-S4 deco=\n",
    )
    .unwrap();
    let bad = affine_tl(&["diagram", "--input", p]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("violation"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["theta", "--n", "2", "--max-len", "8"];
    let (a, b) = (affine_tl(&args), affine_tl(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}
