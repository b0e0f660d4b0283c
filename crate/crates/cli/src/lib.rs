//! File formats, reports and subcommands behind the `pasf` binary.

pub mod commands;
pub mod format;
pub mod report;

use std::path::PathBuf;

/// Exit code when the checked property holds or a construction succeeded.
pub const EXIT_HOLDS: u8 = 0;
/// Exit code for unreadable input or bad arguments.
pub const EXIT_INPUT: u8 = 1;
/// Exit code when the property fails or a contract is violated.
pub const EXIT_FAILS: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] pasf_core::Error),
}

impl CliError {
    /// Machine-readable code for the JSON error envelope.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "Io",
            CliError::Parse { .. } => "ParseError",
            CliError::Usage(_) => "InvalidArgument",
            CliError::Core(e) => e.code(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        use pasf_core::Error as E;
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => EXIT_INPUT,
            CliError::Core(e) => match e {
                E::InvalidExponent(_)
                | E::ZeroDimension
                | E::DimensionMismatch { .. }
                | E::MixedExponents
                | E::NonSquare { .. }
                | E::RequiresSquare { .. }
                | E::SpaceMismatch
                | E::InsufficientCoordinates { .. }
                | E::InvalidArgument(_) => EXIT_INPUT,
                _ => EXIT_FAILS,
            },
        }
    }
}
