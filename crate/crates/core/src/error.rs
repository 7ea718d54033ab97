use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("universe of {0} elements exceeds the 32-element limit")]
    UniverseTooLarge(usize),

    #[error("subset {mask:#x} has elements outside a universe of {n}")]
    OutOfUniverse { mask: u32, n: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid set system: {0}")]
    InvalidSystem(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("incomplete table: no value for subset {0:#x}")]
    IncompleteTable(u32),

    #[error("alpha must lie in [0, 1], got {0}")]
    InvalidAlpha(String),

    #[error("k must be at least {min}, got {k}")]
    InvalidK { k: usize, min: usize },

    #[error("strategy {strategy} cannot run on tables built at alpha = {alpha}")]
    StrategyMismatch { strategy: String, alpha: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("instance of {n} vertices exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
