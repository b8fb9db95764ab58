use clap::error::ErrorKind;
use clap::Parser;

use kappa_cli::cli::Cli;
use kappa_cli::commands;

/// Exit codes: 0 success (all checks equal), 1 usage/parse/computation
/// errors, 2 at least one failed check.
fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            err.print().expect("stderr is writable");
            std::process::exit(code);
        }
    };
    match commands::run(cli.command) {
        Ok(report) => {
            print!("{}", report.render());
            std::process::exit(if report.any_failed() { 2 } else { 0 });
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(1);
        }
    }
}
