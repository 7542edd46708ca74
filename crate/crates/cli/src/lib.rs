//! Command-line front end for `covosc`: parameter scans written as CSV or
//! JSON with a provenance header and a footer of cross-check results.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 numerical failure
//! (quadrature, grid, or a cross-check past its tolerance), 3 I/O.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::path::PathBuf;

pub use config::{Cli, Command, Format, RangeSpec, RunConfig};
pub use error::CliError;
pub use output::{Cell, Table};

/// Where output goes: `--out`, else `<out-dir>/<command>.<ext>` (the
/// directory may come from `COVOSC_OUT_DIR`), else stdout (`None`).
pub fn destination(cli: &Cli) -> Option<PathBuf> {
    cli.opts.out.clone().or_else(|| {
        cli.opts.out_dir.as_ref().map(|d| {
            d.join(format!(
                "{}.{}",
                cli.command.name(),
                cli.opts.format.extension()
            ))
        })
    })
}

/// Validates the arguments and computes the table.
pub fn run(cli: &Cli) -> Result<Table, CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    commands::execute(&cfg)
}
