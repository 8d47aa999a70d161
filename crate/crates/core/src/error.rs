//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The mapping does not structurally fit the layer/accelerator pair.
    /// This is distinct from a capacity violation, which yields a report
    /// with `valid = false`.
    #[error("malformed mapping: {0}")]
    MalformedMapping(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("index {index} out of range for parameter `{param}` ({count} options)")]
    IndexOutOfRange {
        param: String,
        index: usize,
        count: u64,
    },

    #[error("index vector has {got} entries, space has {want} parameters")]
    ArityMismatch { got: usize, want: usize },

    #[error("map space has {size} points, which exceeds the enumeration limit {limit}")]
    SpaceTooLarge { size: String, limit: u128 },

    #[error("agent `{cluster}` would need a joint policy over {size} options, above the cap of {max}; increase the agent budget B or max_joint_size")]
    JointTooLarge {
        cluster: String,
        size: String,
        max: u128,
    },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("need at least {need} rows, dataset has {got}")]
    TooFewRows { need: usize, got: usize },

    #[error("agent budget {budget} out of range [1, {max}]")]
    BudgetOutOfRange { budget: usize, max: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("non-finite reward passed to policy update")]
    NonFiniteReward,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
