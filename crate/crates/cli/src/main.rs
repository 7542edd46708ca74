use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use covosc_cli::{destination, run, Cli, CliError};

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let io = |source| CliError::Io {
                path: p.to_path_buf(),
                source,
            };
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(io)?;
            }
            std::fs::write(p, text).map_err(io)
        }
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

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

    let result = run(&cli).and_then(|table| {
        let path = destination(&cli);
        write_output(path.as_deref(), &table.render(cli.opts.format))?;
        if table.passed {
            Ok(())
        } else {
            Err(CliError::Numerical(format!(
                "{}: a cross-check exceeded its tolerance (see footer)",
                cli.command.name()
            )))
        }
    });

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("covosc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
