//! Acceptance suite: one pass/fail line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;

use affine_tl::verify::run_all;

fn main() -> ExitCode {
    let results = run_all(20_240_601);
    for r in &results {
        println!("{r} [{:.2?}]", r.elapsed);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
