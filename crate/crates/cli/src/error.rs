use thiserror::Error;

/// Process exit status for each failure class.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const INPUT: i32 = 2;
    pub const RESOURCE: i32 = 3;
    pub const MISMATCH: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] trisect_core::Error),

    #[error("{0}")]
    Input(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("fixture {0} not found")]
    FixtureMissing(String),

    #[error("{0} reproduction check(s) failed")]
    Mismatch(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(trisect_core::Error::ResourceLimit { .. }) => exit::RESOURCE,
            CliError::Mismatch(_) => exit::MISMATCH,
            _ => exit::INPUT,
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
