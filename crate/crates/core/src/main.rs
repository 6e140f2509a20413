use std::process::ExitCode;

fn main() -> ExitCode {
    let code = affine_tl::cli::run_args(
        std::env::args_os(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    ExitCode::from(code)
}
