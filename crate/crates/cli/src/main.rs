mod args;
mod cache;
mod commands;
mod ctx;
mod error;
mod graph;
mod output;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use error::CliError;

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", e.to_json());
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let msg = e.render().to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            return fail(&CliError::Usage(first.to_string()));
        }
    };
    let outcome = match commands::run(cli.command, &cli.opts) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(e) =
        output::emit(&mut out, &outcome.config, &outcome.table).and_then(|_| Ok(out.flush()?))
    {
        return fail(&e);
    }
    if outcome.truncated {
        return fail(&CliError::Budget(format!(
            "node-visit budget of {} exhausted; partial series emitted",
            cli.opts.budget
        )));
    }
    ExitCode::SUCCESS
}
