//! Command-line plumbing around `phylo-consensus`: reading tree files,
//! generating instances and timing the consensus methods.

pub mod bench;
pub mod commands;
pub mod io;

use std::path::PathBuf;

use phylo_consensus::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}:{line}:{column}: {source}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        source: CoreError,
    },
    #[error("{path}:{line}: leaf label set differs from the first tree")]
    LeafSet { path: PathBuf, line: usize },
    #[error("{path}: no trees found")]
    NoTrees { path: PathBuf },
    #[error("result disagrees with the brute-force oracle ({missing} clusters missing, {extra} unexpected)")]
    OracleMismatch { missing: usize, extra: usize },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Parse { .. } | Self::NoTrees { .. } => 2,
            Self::LeafSet { .. } => 3,
            Self::OracleMismatch { .. } => 4,
            Self::Usage(_) | Self::Io(_) | Self::Core(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let parse = CliError::Parse {
            path: "x".into(),
            line: 1,
            column: 1,
            source: CoreError::EmptyProfile,
        };
        assert_eq!(parse.exit_code(), 2);
        assert_eq!(
            CliError::LeafSet {
                path: "x".into(),
                line: 2
            }
            .exit_code(),
            3
        );
        assert_eq!(
            CliError::OracleMismatch {
                missing: 1,
                extra: 0
            }
            .exit_code(),
            4
        );
        assert_eq!(CliError::Usage("u".into()).exit_code(), 1);
    }
}
