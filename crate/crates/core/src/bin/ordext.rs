use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let limit = std::env::var(ordext::cli::ENUM_LIMIT_VAR).ok();
    let code = ordext::cli::run(
        std::env::args_os(),
        limit.as_deref(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
