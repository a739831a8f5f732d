use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("resource exhausted: {0}")]
    Resource(String),
    #[error(transparent)]
    Kernel(#[from] jquartic::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 0 pass, 1 verification failure, 2 configuration error, 3 resource
    /// exhaustion.
    pub fn exit_code(&self) -> u8 {
        use jquartic::Error as K;
        match self {
            CliError::Verification(_) => 1,
            CliError::Config(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Kernel(K::Overflow(_) | K::SearchExhausted { .. }) => 3,
            CliError::Kernel(K::Invariant(_)) => 1,
            CliError::Kernel(_) => 2,
            CliError::Io(_) | CliError::Csv(_) => 2,
        }
    }
}
