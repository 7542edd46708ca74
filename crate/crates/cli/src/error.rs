use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("{0}")]
    Domain(String),

    /// A numerical step failed or a cross-check missed its tolerance.
    #[error("{0}")]
    Numerical(String),

    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Io { .. } => 3,
        }
    }

    /// Wraps a library error raised while computing `context`.
    pub fn from_lib(err: covosc::Error, context: impl std::fmt::Display) -> Self {
        match err {
            covosc::Error::Domain(_) => CliError::Domain(format!("{context}: {err}")),
            covosc::Error::Quadrature { .. } | covosc::Error::Grid(_) => {
                CliError::Numerical(format!("{context}: {err}"))
            }
        }
    }
}
