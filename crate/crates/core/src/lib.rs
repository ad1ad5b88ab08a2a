//! Partition combinatorics: hooks, beta-sets, `ℓ`-cores and `ℓ`-quotients,
//! bar-partitions with their bars, bar-cores and bar-quotients, blocks of
//! partitions, and exhaustive verifiers for the `s`-core / `t`-core theorems.
//!
//! Every value is immutable once built and every operation is a pure
//! function, so values can be shared freely between sweep workers.

pub mod bar_partitions;
pub mod blocks;
pub mod enumeration;
mod error;
pub mod partitions;

pub use bar_partitions::{Bar, BarKind, BarPartition, BarQuotientDecomposition};
pub use blocks::{
    BarBlockId, BlockId, CorollaryCase, Counterexample, Scope, Statement, SweepOptions, Verdict,
    VerificationReport,
};
pub use enumeration::SweepPlan;
pub use error::{Error, Result};
pub use partitions::{BetaSet, Hook, Partition, QuotientDecomposition};
