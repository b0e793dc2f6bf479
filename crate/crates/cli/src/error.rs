use linshap_core::engine::EngineError;
use linshap_core::oracle::OracleError;
use linshap_core::GameError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed game file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid `{field}`: {reason}")]
    Invalid { field: String, reason: String },
    #[error("{0}")]
    Game(#[from] GameError),
    #[error("{0}")]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Engine(EngineError),
}

impl CliError {
    pub fn invalid(field: impl Into<String>, reason: impl Into<String>) -> Self {
        CliError::Invalid {
            field: field.into(),
            reason: reason.into(),
        }
    }

    /// 2 for input problems, 3 when the capacity guard trips.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(EngineError::CapacityExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(err: EngineError) -> Self {
        match err {
            EngineError::PlayerOutOfRange { player, players } => CliError::invalid(
                "player",
                format!("index {player} out of range for {players} players"),
            ),
            other => CliError::Engine(other),
        }
    }
}
