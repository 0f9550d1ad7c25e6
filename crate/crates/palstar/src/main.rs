use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(palstar::cli::run(std::env::args_os()))
}
