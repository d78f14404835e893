//! Command-line front end for `ccgeom`.
//!
//! [`run`] parses arguments, executes one subcommand and returns the process
//! exit status: [`EXIT_OK`], [`EXIT_RESIDUAL`] or [`EXIT_USAGE`].

pub mod area;
pub mod args;
pub mod construct;
pub mod error;
pub mod render;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use ccgeom::{run_trials, TrialConfig};
use clap::Parser;

pub use args::Cli;
pub use error::{CliError, EXIT_OK, EXIT_RESIDUAL, EXIT_USAGE};

use args::{Command, GeometrySelection, ReportFormat, Toggle};
use construct::{Construction, FigureParams};
use render::RenderSpec;

/// Parses `argv` (program name first) and runs it, writing results to `out`
/// (or the `--out` file) and diagnostics to `err`.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Verify(a) => {
            let radii = match (a.radius.is_empty(), a.geometry) {
                (false, _) => a.radius,
                (true, GeometrySelection::Euclidean) => vec![1.0],
                (true, _) => vec![0.5, 1.0, 2.0],
            };
            let mut cfg = TrialConfig {
                geometries: a.geometry.kinds(),
                radii,
                trials: a.trials,
                s_frac: a.s_frac,
                theta_frac: a.theta_frac,
                seed: a.seed,
                ..TrialConfig::default()
            };
            if let Some(t) = a.tol_thm {
                cfg.tolerances.thm = t;
            }
            let report = run_trials::<f64>(&cfg)?;
            let text = match a.format {
                ReportFormat::Json => report::to_json(&report)?,
                ReportFormat::Csv => report::to_csv(&report),
            };
            emit(&text, a.out.as_deref(), out)?;
            write!(err, "{}", report::summary(&report))?;
            Ok(if report.pass { EXIT_OK } else { EXIT_RESIDUAL })
        }
        Command::Construct(a) => {
            let fig = construct::build(&FigureParams::try_from(&a.figure)?)?;
            let c = construct::describe(&fig)?;
            emit(&construct::to_json(&c)?, a.out.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Area(a) => {
            let rows = area::table(a.geometry.into(), a.radius, &a.rho, a.oracle == Toggle::On, a.tol)?;
            emit(&area::format(&rows, a.format), None, out)?;
            Ok(EXIT_OK)
        }
        Command::Render(a) => {
            let c: Construction = match &a.input {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|source| CliError::Read { path: path.clone(), source })?;
                    serde_json::from_str(&text)?
                }
                None => construct::describe(&construct::build(&FigureParams::try_from(&a.figure)?)?)?,
            };
            let spec = RenderSpec {
                projection: a.projection.map(Into::into),
                size: a.size,
                stroke: a.stroke,
                elements: a.elements,
            };
            emit(&render::render_svg(&c, &spec)?, a.out.as_deref(), out)?;
            Ok(EXIT_OK)
        }
    }
}
