//! Independent oracles checked against the abacus-based implementation.

use std::collections::BTreeSet;

use partition_cores::enumeration::{bar_partitions_of, partitions_of};
use partition_cores::{BarPartition, Partition};

type Nodes = BTreeSet<(usize, usize)>;

fn nodes(lambda: &Partition) -> Nodes {
    lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
        .collect()
}

fn from_nodes(nodes: &Nodes) -> Partition {
    let rows = nodes.iter().map(|&(i, _)| i).max().unwrap_or(0);
    let parts: Vec<i64> = (1..=rows)
        .map(|i| nodes.iter().filter(|&&(r, _)| r == i).count() as i64)
        .collect();
    Partition::new(&parts).unwrap()
}

/// Hook length by walking the diagram: the node, those to its right, those below.
fn walked_hook(nodes: &Nodes, (i, j): (usize, usize)) -> usize {
    1 + nodes.iter().filter(|&&(r, c)| r == i && c > j).count()
        + nodes.iter().filter(|&&(r, c)| c == j && r > i).count()
}

/// Removes the nodes of the hook at (i, j), then moves the nodes cut off
/// below and right of the corner one step up and one step left.
fn literal_remove(lambda: &Partition, (i, j): (usize, usize)) -> Partition {
    let all = nodes(lambda);
    let foot = all
        .iter()
        .filter(|&&(_, c)| c == j)
        .map(|&(r, _)| r)
        .max()
        .unwrap();
    let mut kept: Nodes = BTreeSet::new();
    for &(r, c) in &all {
        let in_hook = (r == i && c >= j) || (c == j && r >= i);
        if in_hook {
            continue;
        }
        if r > i && r <= foot && c > j {
            kept.insert((r - 1, c - 1));
        } else {
            kept.insert((r, c));
        }
    }
    from_nodes(&kept)
}

/// Repeatedly removes the first (ℓ)-hook found, using only node walking.
fn brute_core(lambda: &Partition, ell: usize) -> Partition {
    let mut current = lambda.clone();
    loop {
        let ns = nodes(&current);
        match ns
            .iter()
            .find(|&&node| walked_hook(&ns, node).is_multiple_of(ell))
        {
            Some(&node) => current = literal_remove(&current, node),
            None => return current,
        }
    }
}

fn pentagonal_counts(max: usize) -> Vec<u64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut sum = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sum += sign * p[n - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                sum += sign * p[n - g2];
            }
        }
        p[n] = sum;
    }
    p.into_iter().map(|v| v as u64).collect()
}

/// Partitions of `n` into odd parts not exceeding `max`, counted by recursion.
fn odd_part_count(n: usize, max: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n))
        .filter(|k| k % 2 == 1)
        .map(|k| odd_part_count(n - k, k))
        .sum()
}

/// ℓ̄-core by runner arithmetic: drop multiples of ℓ; for each residue pair
/// {i, ℓ-i} keep the surplus of one residue, packed at the bottom.
fn abacus_bar_core(lambda: &BarPartition, ell: usize) -> BarPartition {
    let mut parts = Vec::new();
    for i in 1..=ell / 2 {
        let up = lambda.parts().iter().filter(|&&a| a % ell == i).count() as i64;
        let down = lambda
            .parts()
            .iter()
            .filter(|&&a| a % ell == ell - i)
            .count() as i64;
        let (residue, surplus) = if up >= down {
            (i, up - down)
        } else {
            (ell - i, down - up)
        };
        parts.extend((0..surplus as usize).map(|k| residue + k * ell));
    }
    BarPartition::from_parts(parts).unwrap()
}

#[test]
fn hook_lengths_match_node_walking() {
    for n in 0..=14 {
        for lambda in partitions_of(n) {
            let ns = nodes(&lambda);
            for h in lambda.hooks() {
                assert_eq!(
                    h.length,
                    walked_hook(&ns, (h.row, h.col)),
                    "{lambda} at {h}"
                );
            }
            assert_eq!(lambda.hooks().len(), n);
        }
    }
}

#[test]
fn hook_removal_matches_literal_removal() {
    for n in 1..=12 {
        for lambda in partitions_of(n) {
            for h in lambda.hooks() {
                let expected = literal_remove(&lambda, (h.row, h.col));
                assert_eq!(lambda.remove_hook(&h).unwrap(), expected, "{lambda} at {h}");
                assert_eq!(expected.size(), n - h.length);
            }
        }
    }
}

#[test]
fn core_matches_brute_force_removal() {
    for n in 0..=13 {
        for lambda in partitions_of(n) {
            for ell in 1..=7 {
                assert_eq!(
                    lambda.core(ell),
                    brute_core(&lambda, ell),
                    "{lambda}, ell {ell}"
                );
            }
        }
    }
}

#[test]
fn weight_counts_divisible_hooks() {
    for n in 0..=16 {
        for lambda in partitions_of(n) {
            for ell in 1..=8 {
                let count = lambda
                    .hook_lengths()
                    .iter()
                    .filter(|h| *h % ell == 0)
                    .count();
                assert_eq!(lambda.weight(ell), count);
                assert_eq!(lambda.is_core(ell), count == 0);
            }
        }
    }
}

#[test]
fn partition_counts_match_pentagonal_recurrence() {
    let expected = pentagonal_counts(40);
    assert_eq!(expected[10], 42);
    for (n, &count) in expected.iter().enumerate() {
        assert_eq!(partitions_of(n).count() as u64, count, "p({n})");
    }
}

#[test]
fn distinct_part_counts_match_odd_part_counts() {
    assert_eq!(odd_part_count(10, 10), 10);
    for n in 0..=40 {
        assert_eq!(
            bar_partitions_of(n).count() as u64,
            odd_part_count(n, n),
            "q({n})"
        );
    }
}

#[test]
fn bar_core_matches_runner_arithmetic() {
    for n in 0..=22 {
        for lambda in bar_partitions_of(n) {
            for ell in [1, 3, 5, 7, 9, 11] {
                assert_eq!(
                    lambda.core(ell).unwrap(),
                    abacus_bar_core(&lambda, ell),
                    "{lambda}"
                );
            }
        }
    }
}

#[test]
fn bar_weight_counts_divisible_bars() {
    for n in 0..=20 {
        for lambda in bar_partitions_of(n) {
            for ell in [1, 3, 5, 7, 9] {
                let count = lambda
                    .bar_lengths()
                    .iter()
                    .filter(|b| *b % ell == 0)
                    .count();
                let core = abacus_bar_core(&lambda, ell);
                assert_eq!(lambda.weight(ell).unwrap(), count);
                assert_eq!(count * ell, n - core.size());
            }
        }
    }
}

#[test]
fn principal_bar_corollary_instance_by_enumeration() {
    // every 3-core of 9 has a 5-core other than (4)
    let row = Partition::new(&[4]).unwrap();
    let three_cores: Vec<Partition> = partitions_of(9)
        .filter(|l| {
            nodes(l)
                .iter()
                .all(|&node| !walked_hook(&nodes(l), node).is_multiple_of(3))
        })
        .collect();
    assert!(!three_cores.is_empty());
    for lambda in three_cores {
        assert_ne!(brute_core(&lambda, 5), row, "{lambda}");
    }
}
