use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("degree {degree} exceeds the truncation cutoff {cutoff}")]
    CutoffExceeded { degree: usize, cutoff: usize },

    #[error("{0} is not cocommutative")]
    NotCocommutative(String),

    #[error("group relative Rota-Baxter identity fails at (h, k) = ({h}, {k}): {detail}")]
    GroupRbViolation { h: String, k: String, detail: String },

    #[error("matched pair axioms fail: {0}")]
    MatchedPairViolation(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidStructure(message.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
