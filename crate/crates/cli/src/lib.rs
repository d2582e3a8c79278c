//! Command-line front end: argument parsing, configuration and reports.

pub mod cli;
pub mod commands;
pub mod config;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use nucleon_emission::Error;

use cli::{Cli, Command};
use commands::{Report, Selection};
use config::RunConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_THRESHOLD: i32 = 2;

fn execute(cli: &Cli) -> Result<Report, Error> {
    let mut cfg = RunConfig::resolve(&cli.global)?;
    match &cli.command {
        Command::KCoeff { source } => commands::k_coeff(source, &cfg),
        Command::Binding { source } => commands::binding(source, &cfg),
        Command::Compare {
            mode,
            nuclides,
            min_a,
            max_a,
        } => {
            let selection = Selection {
                nuclides,
                min_a: *min_a,
                max_a: *max_a,
            };
            commands::compare(*mode, &selection, &cfg)
        }
        Command::InferStable => commands::infer_stable(&cfg),
        Command::DynamicsCheck { trials } => {
            if let Some(t) = trials {
                cfg.trials = *t;
                cfg.validate()?;
            }
            commands::dynamics_check(cfg.trials, &cfg)
        }
    }
    .and_then(|report| {
        if let Some(bytes) = report.emit(&cfg)? {
            std::io::stdout()
                .write_all(&bytes)
                .map_err(|e| Error::Io(e.to_string()))?;
        }
        Ok(report)
    })
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(report) if report.threshold_violated => {
            eprintln!("nemit: {}: a check exceeded its bound", report.command);
            EXIT_THRESHOLD
        }
        Ok(_) => EXIT_OK,
        Err(e) => {
            eprintln!("nemit: {e}");
            EXIT_ERROR
        }
    }
}
