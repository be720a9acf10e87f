use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(lyndon_core::cli::run(std::env::args_os()))
}
