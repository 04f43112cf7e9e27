use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = matroid_forge::cli::run_args(std::env::args_os());
    let mut stream: Box<dyn Write> = if outcome.code == matroid_forge::cli::EXIT_INPUT {
        Box::new(std::io::stderr())
    } else {
        Box::new(std::io::stdout())
    };
    let _ = stream.write_all(outcome.report.as_bytes());
    ExitCode::from(outcome.code as u8)
}
