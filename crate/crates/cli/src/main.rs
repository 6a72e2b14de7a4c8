use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use edgeideal_cli::{run, Cli, Format, Report};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };

    let (report, code) = match run(&cli.command) {
        Ok(payload) => (Report::ok(payload), 0),
        Err(failure) => {
            let code = failure.exit_code();
            if cli.format == Format::Text {
                eprintln!("error: {failure}");
            }
            let report = failure.into_report();
            (report, code)
        }
    };

    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    ExitCode::from(code)
}
