use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use voikit::cli::{emit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli).and_then(emit) {
        Ok(Some(text)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
