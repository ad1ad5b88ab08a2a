use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative part {0}")]
    NegativePart(i64),
    #[error("parts are not non-increasing at position {0}")]
    NotNonIncreasing(usize),
    #[error("repeated part {0}")]
    RepeatedPart(u64),
    #[error("non-positive part {0}")]
    NonPositivePart(i64),
    #[error("bead count {given} is smaller than the number of parts {needed}")]
    BeadCountTooSmall { given: usize, needed: usize },
    #[error("hook {0} does not belong to the partition")]
    ForeignHook(String),
    #[error("bar {0} does not belong to the bar-partition")]
    ForeignBar(String),
    #[error("{core} is not a {ell}-core")]
    NotACore { core: String, ell: usize },
    #[error("{core} is not a {ell}-bar-core")]
    NotABarCore { core: String, ell: usize },
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error("level {0} is even; bar-partition levels must be odd")]
    EvenLevel(usize),
    #[error("expected {expected} quotient components, got {got}")]
    ComponentCount { expected: usize, got: usize },
    #[error("shard index {index} out of range for {count} shards")]
    InvalidShard { index: usize, count: usize },
    #[error("corollary requires s > t, got s = {s}, t = {t}")]
    LevelOrder { s: usize, t: usize },
    #[error("empty parameter set: {0}")]
    EmptyScope(&'static str),
    #[error("cannot parse literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },
}
