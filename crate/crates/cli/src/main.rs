use std::process::ExitCode;

use clap::Parser;
use qarrow_cli::config::{resolve, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let invocation = match resolve(cli) {
        Ok(inv) => inv,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(2);
        }
    };
    match qarrow_cli::execute(&invocation) {
        Ok(summary) => {
            print!("{summary}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
