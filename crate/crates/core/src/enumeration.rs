//! Deterministic generators for partitions, bar-partitions and cores, and
//! the shard plans used to split sweeps across workers.

use crate::bar_partitions::{check_odd_level, BarPartition};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        current: if n == 0 {
            Some(Vec::new())
        } else {
            Some(vec![n])
        },
    }
}

/// All partitions of `n` into distinct parts, in descending lexicographic order.
pub fn bar_partitions_of(n: usize) -> BarPartitions {
    BarPartitions {
        current: if n == 0 {
            Some(Vec::new())
        } else {
            Some(vec![n])
        },
    }
}

/// The `t`-cores of `n`, in the order of [`partitions_of`].
pub fn cores_of(n: usize, t: usize) -> impl Iterator<Item = Partition> {
    assert!(t >= 1, "level must be at least 1");
    partitions_of(n).filter(move |p| p.is_core(t))
}

/// The `t̄`-cores of `n` for odd `t`, in the order of [`bar_partitions_of`].
pub fn bar_cores_of(n: usize, t: usize) -> Result<impl Iterator<Item = BarPartition>> {
    check_odd_level(t)?;
    Ok(bar_partitions_of(n).filter(move |p| p.is_core(t).expect("odd level checked")))
}

#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        self.current = next_partition(&parts);
        Some(Partition::from_sorted(parts))
    }
}

fn next_partition(parts: &[usize]) -> Option<Vec<usize>> {
    let k = parts.iter().rposition(|&p| p > 1)?;
    let mut next = parts[..k].to_vec();
    let cap = parts[k] - 1;
    let mut rest = parts[k + 1..].len() + 1 + cap;
    while rest > 0 {
        let x = rest.min(cap);
        next.push(x);
        rest -= x;
    }
    Some(next)
}

#[derive(Debug, Clone)]
pub struct BarPartitions {
    current: Option<Vec<usize>>,
}

impl Iterator for BarPartitions {
    type Item = BarPartition;

    fn next(&mut self) -> Option<BarPartition> {
        let parts = self.current.take()?;
        self.current = next_bar_partition(&parts);
        Some(BarPartition::from_sorted(parts))
    }
}

fn next_bar_partition(parts: &[usize]) -> Option<Vec<usize>> {
    let mut rest = 0;
    for k in (0..parts.len()).rev() {
        let lowered = parts[k] - 1;
        let fill = rest + 1;
        // distinct parts below `lowered` sum to at most lowered(lowered-1)/2
        if lowered >= 1 && fill <= lowered * (lowered - 1) / 2 {
            let mut next = parts[..k].to_vec();
            next.push(lowered);
            let mut cap = lowered - 1;
            let mut left = fill;
            while left > 0 {
                let x = left.min(cap);
                next.push(x);
                left -= x;
                cap = x - 1;
            }
            return Some(next);
        }
        rest += parts[k];
    }
    None
}

/// One shard of a sweep over the partitions (or bar-partitions) of every
/// `n` in `n_values`. Items are dealt round-robin in generator order, so the
/// shards of a fixed `shard_count` are disjoint and together cover the scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepPlan {
    pub n_values: Vec<usize>,
    pub s_levels: Vec<usize>,
    pub t_levels: Vec<usize>,
    pub shard_count: usize,
    pub shard_index: usize,
}

impl SweepPlan {
    pub fn new(
        n_values: Vec<usize>,
        s_levels: Vec<usize>,
        t_levels: Vec<usize>,
        shard_count: usize,
        shard_index: usize,
    ) -> Result<Self> {
        if shard_index >= shard_count {
            return Err(Error::InvalidShard {
                index: shard_index,
                count: shard_count,
            });
        }
        Ok(Self {
            n_values,
            s_levels,
            t_levels,
            shard_count,
            shard_index,
        })
    }

    /// The same scope as shard `index` of `count`.
    pub fn with_shard(&self, count: usize, index: usize) -> Result<Self> {
        Self::new(
            self.n_values.clone(),
            self.s_levels.clone(),
            self.t_levels.clone(),
            count,
            index,
        )
    }

    fn deal<T>(&self, items: impl Iterator<Item = (usize, T)>) -> impl Iterator<Item = (usize, T)> {
        let (count, index) = (self.shard_count, self.shard_index);
        items
            .enumerate()
            .filter(move |(k, _)| k % count == index)
            .map(|(_, item)| item)
    }

    /// This shard's `(n, λ)` work items.
    pub fn partitions(&self) -> impl Iterator<Item = (usize, Partition)> + '_ {
        let all = self
            .n_values
            .iter()
            .flat_map(|&n| partitions_of(n).map(move |p| (n, p)));
        self.deal(all)
    }

    /// This shard's `(n, λ)` work items over bar-partitions.
    pub fn bar_partitions(&self) -> impl Iterator<Item = (usize, BarPartition)> + '_ {
        let all = self
            .n_values
            .iter()
            .flat_map(|&n| bar_partitions_of(n).map(move |p| (n, p)));
        self.deal(all)
    }
}

/// The partition work items of `plan`.
pub fn shard(plan: &SweepPlan) -> impl Iterator<Item = (usize, Partition)> + '_ {
    plan.partitions()
}
