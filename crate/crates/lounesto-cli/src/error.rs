use thiserror::Error;

/// Failures that stop a command. Mathematical inconsistencies are reported
/// per record and turned into exit code 2 by the caller instead.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: usize, message: String },
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        1
    }
}
