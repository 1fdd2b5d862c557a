use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A core validation failure, located by field path and source line.
    #[error("{path} (line {line}): {source}")]
    Validation {
        path: String,
        line: usize,
        #[source]
        source: sigmabeta_core::Error,
    },

    #[error("{path} (line {line}): {message}")]
    Schema {
        path: String,
        line: usize,
        message: String,
    },

    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] sigmabeta_core::Error),
}

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const COUNTEREXAMPLE: u8 = 1;
    pub const USAGE: u8 = 2;

    /// Exit code of a completed verification run.
    pub fn for_verdict(passed: bool) -> u8 {
        if passed {
            OK
        } else {
            COUNTEREXAMPLE
        }
    }
}

impl CliError {
    /// Every error is a usage, validation or IO problem; counterexamples are
    /// reported through a successful run with exit code 1.
    pub fn exit_code(&self) -> u8 {
        exit::USAGE
    }
}
