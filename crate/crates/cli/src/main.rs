mod args;
mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Format};
use input::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            let _ = e.print();
            return ExitCode::from(2);
        }
        Err(e) => {
            let err = CliError::Usage(e.to_string().trim_end().to_string());
            println!("{}", report::to_json(&report::error_report("", &err)));
            return ExitCode::from(err.exit_code());
        }
    };

    let command = commands::name(&cli.command);
    match commands::execute(&cli.command) {
        Ok(outcome) => {
            match cli.format {
                Format::Json => {
                    println!("{}", report::to_json(&report::report(&command, &outcome)));
                }
                Format::Csv => print!("{}", report::to_csv(&outcome.result)),
            }
            ExitCode::from(outcome.exit_code())
        }
        Err(err) => {
            println!("{}", report::to_json(&report::error_report(&command, &err)));
            ExitCode::from(err.exit_code())
        }
    }
}
