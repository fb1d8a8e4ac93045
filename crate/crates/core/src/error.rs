use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("letter `{0}` is not in the alphabet")]
    UnknownLetter(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("radius {given} is too small, at least {required} is required")]
    RadiusTooSmall { given: u64, required: u64 },
    #[error("{context}: {message}")]
    Schema { context: String, message: String },
    #[error("state sets do not chain: {0}")]
    StateMismatch(String),
    #[error("incompatible input: {0}")]
    Incompatible(String),
    #[error("no occurrence of `{word}` with margin {required} on both sides")]
    InsufficientMargin { word: String, required: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(input: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn schema(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            context: context.into(),
            message: message.into(),
        }
    }
}
