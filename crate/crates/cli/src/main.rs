use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use splineqi::Degree;
use splineqi_cli::args::{Cli, Command};
use splineqi_cli::commands;
use splineqi_cli::table::{emit, Table};
use splineqi_cli::CliError;

fn run(cli: Cli) -> Result<(), CliError> {
    let mut failed = 0;
    let tables: Vec<Table> = match cli.command {
        Command::Approximate { degree, n, function, interval, points } => {
            commands::approximate(degree, n, &function, interval.a, interval.b, points)?
        }
        Command::Integrate { degree, n, function, interval, baseline, extrapolate } => {
            commands::integrate(degree, &n.0, &function, interval.a, interval.b, baseline, extrapolate)?
        }
        Command::Differentiate { degree, n, function, interval } => {
            commands::differentiate(degree, &n.0, &function, interval.a, interval.b)?
        }
        Command::Roots { n, function, interval, refine } => {
            commands::roots(n, &function, interval.a, interval.b, refine)?
        }
        Command::Norms { degree, n, resolution, interval } => {
            let degrees = degree.map_or_else(|| Degree::ALL.to_vec(), |d| vec![d]);
            commands::norms(&degrees, n, resolution, interval.a, interval.b)?
        }
        Command::ReproducePaper => {
            let (tables, details, bad) = commands::reproduce_paper();
            let mut err = io::stderr().lock();
            for line in details {
                writeln!(err, "{line}")?;
            }
            failed = bad;
            tables
        }
    };
    match &cli.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            emit(&tables, cli.format, &mut w)?;
            w.flush()?;
        }
        None => emit(&tables, cli.format, io::stdout().lock())?,
    }
    if failed > 0 {
        return Err(CliError::Acceptance { failed });
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
