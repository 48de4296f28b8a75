use std::process::ExitCode;

fn main() -> ExitCode {
    codenat::cli::main()
}
