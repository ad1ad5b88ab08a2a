//! Blocks of partitions and bar-partitions, principal blocks, and the
//! exhaustive verifiers built on them.

mod report;
mod verify;

use crate::bar_partitions::{check_odd_level, BarPartition};
use crate::error::Result;
use crate::partitions::Partition;

pub use report::{
    CoreSize, CorollaryCase, Counterexample, Scope, Statement, Verdict, VerificationReport,
};
pub use verify::{
    bar_corollary_shard, bar_theorem_shard, corollary_shard, theorem_shard, verify_bar_corollary,
    verify_bar_order_independence, verify_bar_quotient_bijection, verify_bar_theorem,
    verify_bar_theorem_over, verify_core_theorem, verify_core_theorem_over, verify_corollary,
    verify_order_independence, verify_quotient_bijection, SweepOptions,
};

/// The `ℓ`-block of partitions of `n` with a given `ℓ`-core.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockId {
    pub level: usize,
    pub core: Partition,
    pub n: usize,
}

/// The `ℓ̄`-block of bar-partitions of `n` with a given `ℓ̄`-core.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarBlockId {
    pub level: usize,
    pub core: BarPartition,
    pub n: usize,
}

pub fn block_id(lambda: &Partition, ell: usize) -> BlockId {
    BlockId {
        level: ell,
        core: lambda.core(ell),
        n: lambda.size(),
    }
}

pub fn bar_block_id(lambda: &BarPartition, ell: usize) -> Result<BarBlockId> {
    Ok(BarBlockId {
        level: ell,
        core: lambda.core(ell)?,
        n: lambda.size(),
    })
}

/// `γ_s((n))`: the single row `(n mod s)`.
pub fn principal_core(n: usize, s: usize) -> Partition {
    assert!(s >= 1, "level must be at least 1");
    Partition::from_sorted(match n % s {
        0 => vec![],
        r => vec![r],
    })
}

/// `γ̄_s((n))` for odd `s`: the single part `(n mod s)`.
pub fn principal_bar_core(n: usize, s: usize) -> Result<BarPartition> {
    check_odd_level(s)?;
    Ok(BarPartition::from_sorted(match n % s {
        0 => vec![],
        r => vec![r],
    }))
}

/// Whether `λ` lies in the `s`-block of `|λ|` containing `(|λ|)`.
pub fn in_principal_block(lambda: &Partition, s: usize) -> bool {
    lambda.core(s) == principal_core(lambda.size(), s)
}

pub fn in_principal_bar_block(lambda: &BarPartition, s: usize) -> Result<bool> {
    Ok(lambda.core(s)? == principal_bar_core(lambda.size(), s)?)
}
