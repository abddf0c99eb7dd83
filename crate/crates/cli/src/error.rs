use std::path::PathBuf;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] arstar_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{context}: {source}")]
    Json {
        context: String,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Input(String),
    /// A checked statement failed; the rendered output is still emitted.
    #[error("{failures} check(s) failed")]
    Mismatch { failures: usize, output: String },
    /// Some rows were beyond a cap; the rendered output is still emitted.
    #[error("{skipped} instance(s) skipped at a cap")]
    Skipped { skipped: usize, output: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(arstar_core::Error::CapExceeded { .. }) | CliError::Skipped { .. } => {
                EXIT_CAP
            }
            CliError::Mismatch { .. } => EXIT_MISMATCH,
            _ => EXIT_INPUT,
        }
    }

    /// Output still worth emitting alongside the error.
    pub fn partial_output(&self) -> Option<&str> {
        match self {
            CliError::Mismatch { output, .. } | CliError::Skipped { output, .. } => Some(output),
            _ => None,
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes() {
        let cap = CliError::Core(arstar_core::Error::CapExceeded {
            what: "oracle vertices",
            got: 8,
            cap: 7,
        });
        assert_eq!(cap.exit_code(), EXIT_CAP);
        assert_eq!(CliError::input("bad").exit_code(), EXIT_INPUT);
        let other = CliError::Core(arstar_core::Error::SelfLoop(1));
        assert_eq!(other.exit_code(), EXIT_INPUT);
        let m = CliError::Mismatch {
            failures: 1,
            output: String::new(),
        };
        assert_eq!(m.exit_code(), EXIT_MISMATCH);
    }
}
