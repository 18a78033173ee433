use std::io::Write;
use std::process::ExitCode;

use annihilator_cli::{configure_threads, parse_args, run};

fn main() -> ExitCode {
    let plan = match parse_args(std::env::args().skip(1)) {
        Ok(plan) => plan,
        Err(e) => {
            if e.is_info {
                print!("{e}");
            } else {
                eprint!("{e}");
            }
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if let Err(e) = configure_threads() {
        eprint!("{e}");
        return ExitCode::from(e.exit_code() as u8);
    }
    let outcome = run(&plan);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
