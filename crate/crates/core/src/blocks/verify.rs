use std::collections::HashSet;
use std::ops::RangeInclusive;
use std::thread;
use std::time::Instant;

use super::report::{
    CoreSize, CorollaryCase, Counterexample, Scope, Statement, VerificationReport,
};
use super::{in_principal_bar_block, in_principal_block};
use crate::bar_partitions::{check_odd_level, BarPartition};
use crate::enumeration::SweepPlan;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// How a sweep is executed. Neither field changes the report of a sweep that
/// finds no counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Number of worker threads, one shard each.
    pub jobs: usize,
    /// Stop each shard at its first witness and keep only the smallest.
    pub fail_fast: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            fail_fast: false,
        }
    }
}

fn run_sharded<F>(plan: &SweepPlan, opts: SweepOptions, work: F) -> Result<VerificationReport>
where
    F: Fn(&SweepPlan, bool) -> VerificationReport + Sync,
{
    let start = Instant::now();
    let jobs = opts.jobs.max(1);
    let plans = (0..jobs)
        .map(|k| plan.with_shard(jobs, k))
        .collect::<Result<Vec<_>>>()?;
    let reports: Vec<VerificationReport> = if jobs == 1 {
        vec![work(&plans[0], opts.fail_fast)]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = plans
                .iter()
                .map(|p| {
                    let work = &work;
                    scope.spawn(move || work(p, opts.fail_fast))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };
    let mut merged = reports
        .into_iter()
        .reduce(VerificationReport::merge)
        .expect("at least one shard");
    if opts.fail_fast {
        merged.counterexamples.truncate(1);
    }
    merged.elapsed_seconds = start.elapsed().as_secs_f64();
    Ok(merged)
}

fn check_levels(levels: &[usize], what: &'static str) -> Result<()> {
    if levels.is_empty() {
        return Err(Error::EmptyScope(what));
    }
    if levels.contains(&0) {
        return Err(Error::ZeroLevel);
    }
    Ok(())
}

fn check_odd_levels(levels: &[usize], what: &'static str) -> Result<()> {
    check_levels(levels, what)?;
    levels.iter().try_for_each(|&l| check_odd_level(l))
}

fn sorted_levels(levels: &[usize]) -> Vec<usize> {
    let mut v = levels.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn theorem_scope(statement: Statement, plan: &SweepPlan) -> Scope {
    Scope {
        statement,
        n_min: plan.n_values.iter().copied().min().unwrap_or(0),
        n_max: plan.n_values.iter().copied().max().unwrap_or(0),
        s: plan.s_levels.clone(),
        t: plan.t_levels.clone(),
        cases: Vec::new(),
    }
}

/// One shard of the partition theorem sweep: for every `t`-core `λ` in the
/// shard and every `s`, checks that `γ_s(λ)` is a `t`-core.
pub fn theorem_shard(plan: &SweepPlan, fail_fast: bool) -> VerificationReport {
    let mut checked = 0;
    let mut witnesses = Vec::new();
    'sweep: for (n, lambda) in plan.partitions() {
        let lengths = lambda.hook_lengths();
        let mut s_cores: Vec<Option<Partition>> = vec![None; plan.s_levels.len()];
        for &t in &plan.t_levels {
            if lengths.iter().any(|h| h % t == 0) {
                continue;
            }
            for (k, &s) in plan.s_levels.iter().enumerate() {
                checked += 1;
                let core = s_cores[k].get_or_insert_with(|| lambda.core(s));
                if !core.is_core(t) {
                    witnesses.push(Counterexample {
                        n,
                        partition: lambda.parts().to_vec(),
                        s,
                        t,
                    });
                    if fail_fast {
                        break 'sweep;
                    }
                }
            }
        }
    }
    VerificationReport::new(theorem_scope(Statement::Theorem1, plan), checked, witnesses)
}

/// One shard of the bar-partition theorem sweep. Levels must be odd.
pub fn bar_theorem_shard(plan: &SweepPlan, fail_fast: bool) -> VerificationReport {
    let mut checked = 0;
    let mut witnesses = Vec::new();
    'sweep: for (n, lambda) in plan.bar_partitions() {
        let lengths = lambda.bar_lengths();
        let mut s_cores: Vec<Option<BarPartition>> = vec![None; plan.s_levels.len()];
        for &t in &plan.t_levels {
            if lengths.iter().any(|b| b % t == 0) {
                continue;
            }
            for (k, &s) in plan.s_levels.iter().enumerate() {
                checked += 1;
                let core =
                    s_cores[k].get_or_insert_with(|| lambda.core(s).expect("odd level checked"));
                if !core.is_core(t).expect("odd level checked") {
                    witnesses.push(Counterexample {
                        n,
                        partition: lambda.parts().to_vec(),
                        s,
                        t,
                    });
                    if fail_fast {
                        break 'sweep;
                    }
                }
            }
        }
    }
    VerificationReport::new(theorem_scope(Statement::Theorem2, plan), checked, witnesses)
}

/// Checks that the `s`-core of every `t`-core of every `n ≤ n_max` is again a
/// `t`-core, for all `s` in `s_set` and `t` in `t_set`.
pub fn verify_core_theorem(
    n_max: usize,
    s_set: &[usize],
    t_set: &[usize],
    opts: SweepOptions,
) -> Result<VerificationReport> {
    verify_core_theorem_over(0..=n_max, s_set, t_set, opts)
}

pub fn verify_core_theorem_over(
    n_range: RangeInclusive<usize>,
    s_set: &[usize],
    t_set: &[usize],
    opts: SweepOptions,
) -> Result<VerificationReport> {
    check_levels(s_set, "s levels")?;
    check_levels(t_set, "t levels")?;
    let plan = SweepPlan::new(
        n_range.collect(),
        sorted_levels(s_set),
        sorted_levels(t_set),
        1,
        0,
    )?;
    run_sharded(&plan, opts, theorem_shard)
}

/// Bar-partition analogue of [`verify_core_theorem`]; all levels must be odd.
pub fn verify_bar_theorem(
    n_max: usize,
    s_set: &[usize],
    t_set: &[usize],
    opts: SweepOptions,
) -> Result<VerificationReport> {
    verify_bar_theorem_over(0..=n_max, s_set, t_set, opts)
}

pub fn verify_bar_theorem_over(
    n_range: RangeInclusive<usize>,
    s_set: &[usize],
    t_set: &[usize],
    opts: SweepOptions,
) -> Result<VerificationReport> {
    check_odd_levels(s_set, "s levels")?;
    check_odd_levels(t_set, "t levels")?;
    let plan = SweepPlan::new(
        n_range.collect(),
        sorted_levels(s_set),
        sorted_levels(t_set),
        1,
        0,
    )?;
    run_sharded(&plan, opts, bar_theorem_shard)
}

fn corollary_plan(s: usize, t: usize, a_max: usize) -> Result<SweepPlan> {
    if t == 0 {
        return Err(Error::ZeroLevel);
    }
    if s <= t {
        return Err(Error::LevelOrder { s, t });
    }
    let n_values = (t..s)
        .flat_map(|r| (0..=a_max).map(move |a| a * s + r))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    SweepPlan::new(n_values, vec![s], vec![t], 1, 0)
}

struct CorollaryTally {
    cases: Vec<CorollaryCase>,
}

impl CorollaryTally {
    fn new(plan: &SweepPlan) -> Self {
        let (s, t) = (plan.s_levels[0], plan.t_levels[0]);
        let cases = plan
            .n_values
            .iter()
            .map(|&n| CorollaryCase {
                s,
                t,
                r: n % s,
                a: n / s,
                n,
                t_cores: 0,
                core_sizes: Vec::new(),
            })
            .collect();
        Self { cases }
    }

    fn record(&mut self, n: usize, core_size: usize) {
        let case = self
            .cases
            .iter_mut()
            .find(|c| c.n == n)
            .expect("n drawn from plan");
        case.t_cores += 1;
        // m = b·s + r with 0 ≤ b ≤ a, since hooks of length s come off whole
        let size = CoreSize {
            m: core_size,
            b: (core_size - case.r) / case.s,
        };
        if let Err(at) = case.core_sizes.binary_search(&size) {
            case.core_sizes.insert(at, size);
        }
    }

    fn into_report(
        self,
        statement: Statement,
        plan: &SweepPlan,
        witnesses: Vec<Counterexample>,
    ) -> VerificationReport {
        let checked = self.cases.iter().map(|c| c.t_cores).sum();
        let mut scope = theorem_scope(statement, plan);
        scope.cases = self.cases;
        VerificationReport::new(scope, checked, witnesses)
    }
}

/// One shard of the partition corollary sweep. The plan carries a single
/// `s` and `t`, and `n` values of the form `a·s + r` with `t ≤ r < s`.
pub fn corollary_shard(plan: &SweepPlan, fail_fast: bool) -> VerificationReport {
    let (s, t) = (plan.s_levels[0], plan.t_levels[0]);
    let mut tally = CorollaryTally::new(plan);
    let mut witnesses = Vec::new();
    for (n, lambda) in plan.partitions() {
        if !lambda.is_core(t) {
            continue;
        }
        tally.record(n, lambda.core(s).size());
        if in_principal_block(&lambda, s) {
            witnesses.push(Counterexample {
                n,
                partition: lambda.parts().to_vec(),
                s,
                t,
            });
            if fail_fast {
                break;
            }
        }
    }
    tally.into_report(Statement::Corollary1, plan, witnesses)
}

pub fn bar_corollary_shard(plan: &SweepPlan, fail_fast: bool) -> VerificationReport {
    let (s, t) = (plan.s_levels[0], plan.t_levels[0]);
    let mut tally = CorollaryTally::new(plan);
    let mut witnesses = Vec::new();
    for (n, lambda) in plan.bar_partitions() {
        if !lambda.is_core(t).expect("odd level checked") {
            continue;
        }
        tally.record(n, lambda.core(s).expect("odd level checked").size());
        if in_principal_bar_block(&lambda, s).expect("odd level checked") {
            witnesses.push(Counterexample {
                n,
                partition: lambda.parts().to_vec(),
                s,
                t,
            });
            if fail_fast {
                break;
            }
        }
    }
    tally.into_report(Statement::Corollary2, plan, witnesses)
}

/// Checks that for every `t ≤ r < s` and `a ≤ a_max`, no `t`-core of
/// `n = a·s + r` lies in the principal `s`-block of `n`.
pub fn verify_corollary(
    s: usize,
    t: usize,
    a_max: usize,
    opts: SweepOptions,
) -> Result<VerificationReport> {
    let plan = corollary_plan(s, t, a_max)?;
    run_sharded(&plan, opts, corollary_shard)
}

/// Bar-partition analogue of [`verify_corollary`]; `s` and `t` must be odd.
pub fn verify_bar_corollary(
    s: usize,
    t: usize,
    a_max: usize,
    opts: SweepOptions,
) -> Result<VerificationReport> {
    check_odd_level(s)?;
    check_odd_level(t)?;
    let plan = corollary_plan(s, t, a_max)?;
    run_sharded(&plan, opts, bar_corollary_shard)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Checks, at level `g`, that the `(g)`-hook lengths of `λ` are `g` times the
/// hook lengths of its quotient, and that removing any `(g)`-hook of length
/// `kg` removes a `k`-hook from exactly one quotient component.
pub fn verify_quotient_bijection(lambda: &Partition, g: usize) -> bool {
    let decomposition = lambda.decompose(g);
    let quotient = &decomposition.components;

    let divisible = sorted(
        lambda
            .hook_lengths()
            .into_iter()
            .filter(|h| h % g == 0)
            .collect(),
    );
    let scaled = sorted(
        quotient
            .iter()
            .flat_map(Partition::hook_lengths)
            .map(|h| h * g)
            .collect(),
    );
    if divisible != scaled {
        return false;
    }

    lambda.divisible_hooks(g).iter().all(|(hook, rest)| {
        let after = rest.decompose(g);
        if after.core != decomposition.core {
            return false;
        }
        let changed: Vec<usize> = (0..g)
            .filter(|&i| quotient[i] != after.components[i])
            .collect();
        let [i] = changed[..] else {
            return false;
        };
        let k = hook.length / g;
        quotient[i]
            .hooks()
            .iter()
            .filter(|h| h.length == k)
            .any(|h| quotient[i].remove_hook(h).as_ref() == Ok(&after.components[i]))
    })
}

/// Bar analogue of [`verify_quotient_bijection`]: `(g)`-bars of `λ` against
/// bars of component 0 and hooks of the partition components.
pub fn verify_bar_quotient_bijection(lambda: &BarPartition, g: usize) -> Result<bool> {
    let quotient = lambda.quotient(g)?;

    let divisible = sorted(
        lambda
            .bar_lengths()
            .into_iter()
            .filter(|b| b % g == 0)
            .collect(),
    );
    let scaled = sorted(
        quotient
            .component0
            .bar_lengths()
            .into_iter()
            .chain(quotient.components.iter().flat_map(Partition::hook_lengths))
            .map(|l| l * g)
            .collect(),
    );
    if divisible != scaled {
        return Ok(false);
    }

    for (bar, rest) in lambda.divisible_bars(g)? {
        let after = rest.quotient(g)?;
        if after.core != quotient.core {
            return Ok(false);
        }
        let k = bar.length / g;
        let changed: Vec<usize> = (0..quotient.components.len())
            .filter(|&i| quotient.components[i] != after.components[i])
            .collect();
        let ok = match (quotient.component0 == after.component0, &changed[..]) {
            (false, []) => quotient
                .component0
                .bars()
                .iter()
                .filter(|b| b.length == k)
                .any(|b| quotient.component0.remove_bar(b).as_ref() == Ok(&after.component0)),
            (true, &[i]) => quotient.components[i]
                .hooks()
                .iter()
                .filter(|h| h.length == k)
                .any(|h| {
                    quotient.components[i].remove_hook(h).as_ref() == Ok(&after.components[i])
                }),
            _ => false,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Explores every sequence of `(ℓ)`-hook removals from `λ` and checks that
/// all of them stop at `γ_ℓ(λ)`.
pub fn verify_order_independence(lambda: &Partition, ell: usize) -> bool {
    let core = lambda.core(ell);
    let mut seen = HashSet::new();
    let mut stack = vec![lambda.clone()];
    while let Some(current) = stack.pop() {
        if !seen.insert(current.clone()) {
            continue;
        }
        let moves = current.divisible_hooks(ell);
        if moves.is_empty() && current != core {
            return false;
        }
        stack.extend(moves.into_iter().map(|(_, rest)| rest));
    }
    true
}

/// Bar analogue of [`verify_order_independence`].
pub fn verify_bar_order_independence(lambda: &BarPartition, ell: usize) -> Result<bool> {
    let core = lambda.core(ell)?;
    let mut seen = HashSet::new();
    let mut stack = vec![lambda.clone()];
    while let Some(current) = stack.pop() {
        if !seen.insert(current.clone()) {
            continue;
        }
        let moves = current.divisible_bars(ell)?;
        if moves.is_empty() && current != core {
            return Ok(false);
        }
        stack.extend(moves.into_iter().map(|(_, rest)| rest));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn single_non_coprime_instance() {
        let lam = p(&[3, 1]);
        assert!(lam.is_core(6));
        let core = lam.core(4);
        assert_eq!(core, Partition::empty());
        assert!(core.is_core(6));
    }

    #[test]
    fn t_equal_one_is_vacuous_beyond_zero() {
        let report = verify_core_theorem(10, &[2, 3], &[1], SweepOptions::default()).unwrap();
        assert!(report.is_verified());
        // only the empty partition of 0 is a 1-core
        assert_eq!(report.checked, 2);
    }

    #[test]
    fn corollary_scope() {
        let report = verify_corollary(5, 3, 2, SweepOptions::default()).unwrap();
        assert!(report.is_verified());
        let ns: Vec<usize> = report.scope.cases.iter().map(|c| c.n).collect();
        assert_eq!(ns, vec![3, 4, 8, 9, 13, 14]);
        for case in &report.scope.cases {
            assert!(case.r >= 3 && case.r < 5 && case.a <= 2);
            assert!(case
                .core_sizes
                .iter()
                .all(|c| c.m == c.b * 5 + case.r && c.b <= case.a));
        }
        assert_eq!(
            verify_corollary(3, 3, 2, SweepOptions::default()).unwrap_err(),
            Error::LevelOrder { s: 3, t: 3 }
        );
    }

    #[test]
    fn bar_theorem_rejects_even_levels() {
        assert_eq!(
            verify_bar_theorem(5, &[3, 4], &[3], SweepOptions::default()).unwrap_err(),
            Error::EvenLevel(4)
        );
        assert!(verify_bar_corollary(7, 2, 2, SweepOptions::default()).is_err());
        assert!(verify_core_theorem(5, &[], &[2], SweepOptions::default()).is_err());
    }

    #[test]
    fn bar_single_instance() {
        let lam = BarPartition::new(&[2]).unwrap();
        assert!(lam.is_core(3).unwrap());
        let core = lam.core(9).unwrap();
        assert_eq!(core, lam);
        assert!(core.is_core(3).unwrap());
    }

    #[test]
    fn bijection_examples() {
        assert!(verify_quotient_bijection(&p(&[4, 2, 1]), 3));
        assert!(verify_quotient_bijection(&p(&[4, 2, 1]).core(3), 3));
        assert!(verify_bar_quotient_bijection(&BarPartition::new(&[3, 2, 1]).unwrap(), 3).unwrap());
    }

    #[test]
    fn order_independence_examples() {
        assert!(verify_order_independence(&p(&[4, 2, 1]), 3));
        assert!(verify_bar_order_independence(&BarPartition::new(&[3, 2, 1]).unwrap(), 3).unwrap());
    }

    #[test]
    fn fail_fast_keeps_one_witness() {
        // a deliberately false statement: every partition is a 2-core
        let plan = SweepPlan::new((0..=6).collect(), vec![1], vec![1], 1, 0).unwrap();
        let report = run_sharded(
            &plan,
            SweepOptions {
                jobs: 2,
                fail_fast: true,
            },
            |plan, ff| {
                let witnesses: Vec<_> = plan
                    .partitions()
                    .filter(|(_, l)| !l.is_core(2))
                    .take(if ff { 1 } else { usize::MAX })
                    .map(|(n, l)| Counterexample {
                        n,
                        partition: l.parts().to_vec(),
                        s: 1,
                        t: 1,
                    })
                    .collect();
                VerificationReport::new(theorem_scope(Statement::Theorem1, plan), 1, witnesses)
            },
        )
        .unwrap();
        assert_eq!(report.counterexamples.len(), 1);
        assert!(!report.is_verified());
    }
}
