use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use surfcover_cli::error::{CliError, INTERNAL};
use surfcover_cli::{run, Cli};

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", e.to_json());
    ExitCode::from(e.exit_code as u8)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SURFCOVER_LOG", "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::usage(e.render().to_string().trim_end())),
    };
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => return fail(&e),
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.render(cli.format).as_bytes()).is_err() {
        return ExitCode::from(INTERNAL as u8);
    }
    let violated: Vec<&str> = out.report.violations().map(|c| c.name).collect();
    if violated.is_empty() {
        ExitCode::SUCCESS
    } else {
        fail(&CliError::new(
            "AuditViolation",
            format!("bounds violated: {}", violated.join(", ")),
            INTERNAL,
        ))
    }
}
