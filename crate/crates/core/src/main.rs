use std::process::ExitCode;

fn main() -> ExitCode {
    brocard::cli_io::run(std::env::args_os()).into()
}
