use std::path::PathBuf;

use thiserror::Error;

use crate::partition::Partition;

/// Errors raised by the computational kernel and the analysis layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {context}")]
    SizeMismatch { context: String },

    #[error("{partition}[{level}] is not a partition (need level >= {threshold})")]
    BelowThreshold {
        partition: Partition,
        level: usize,
        threshold: usize,
    },

    #[error("level {level} exceeds the resource ceiling {limit}")]
    ResourceLimit { level: usize, limit: usize },

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("character sum {sum} is not divisible by {order} (kernel bug)")]
    NonIntegral { sum: i128, order: i128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed witness: {0}")]
    MalformedWitness(String),

    #[error("invalid cache file {path}: {reason}")]
    Cache { path: PathBuf, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
