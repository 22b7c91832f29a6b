use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use qcell_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, failure)) => {
            std::io::stdout().write_all(out.as_bytes()).ok();
            match failure {
                None => ExitCode::SUCCESS,
                Some(e) => {
                    eprintln!("qcell: {}", e);
                    ExitCode::from(e.exit_code() as u8)
                }
            }
        }
        Err(e) => {
            eprintln!("qcell: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
