use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rankweight_cli::commands::{run, Cli};

fn main() -> ExitCode {
    // clap uses 2 for usage errors; here 2 means a failed cross-check
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((text, code)) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("grw: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
