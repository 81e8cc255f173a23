mod args;
mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::report::EXIT_INPUT;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(report) => match report.emit(cli.format, cli.out.as_deref()) {
            Ok(()) => ExitCode::from(report.status),
            Err(e) => {
                eprintln!("trace-recon: cannot write output: {e}");
                ExitCode::from(EXIT_INPUT)
            }
        },
        Err(e) => {
            eprintln!("trace-recon: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
