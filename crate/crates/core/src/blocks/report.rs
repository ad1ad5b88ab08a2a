use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

/// Which statement a sweep checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statement {
    /// The `s`-core of a `t`-core is a `t`-core.
    Theorem1,
    /// The `s̄`-core of a `t̄`-core is a `t̄`-core.
    Theorem2,
    /// The principal `s`-block of `n = as + r` contains no `t`-core.
    Corollary1,
    /// The principal `s̄`-block of `n = as + r` contains no `t̄`-core.
    Corollary2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
}

/// An observed `s`-core size `m = b·s + r` inside a corollary case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CoreSize {
    pub m: usize,
    pub b: usize,
}

/// One `n = a·s + r` instance of a corollary sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryCase {
    pub s: usize,
    pub t: usize,
    pub r: usize,
    pub a: usize,
    pub n: usize,
    /// Number of `t`-cores of `n` examined.
    pub t_cores: u64,
    /// Sizes of the `s`-cores of those `t`-cores.
    pub core_sizes: Vec<CoreSize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Scope {
    pub statement: Statement,
    pub n_min: usize,
    pub n_max: usize,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cases: Vec<CorollaryCase>,
}

/// A witness `(λ, s, t)` against the statement being verified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    #[serde(serialize_with = "literal")]
    pub partition: Vec<usize>,
    pub s: usize,
    pub t: usize,
}

fn literal<S: Serializer>(parts: &[usize], ser: S) -> Result<S::Ok, S::Error> {
    if parts.is_empty() {
        return ser.serialize_str("-");
    }
    let joined: Vec<String> = parts.iter().map(usize::to_string).collect();
    ser.serialize_str(&joined.join(","))
}

impl Counterexample {
    /// Orders by `n`, then by generator order of the partition (descending
    /// lexicographic), then `s`, then `t`.
    fn sort_key(&self) -> (usize, Reverse<&[usize]>, usize, usize) {
        (self.n, Reverse(&self.partition[..]), self.s, self.t)
    }
}

impl Ord for Counterexample {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Counterexample {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub scope: Scope,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_seconds: f64,
    pub verdict: Verdict,
}

impl VerificationReport {
    /// Builds a report; counterexamples are sorted by `(n, λ, s, t)` and
    /// corollary cases by `(s, t, n)`.
    pub fn new(mut scope: Scope, checked: u64, mut counterexamples: Vec<Counterexample>) -> Self {
        counterexamples.sort();
        scope.cases.sort_by_key(|c| (c.s, c.t, c.n));
        let verdict = if counterexamples.is_empty() {
            Verdict::Verified
        } else {
            Verdict::Refuted
        };
        Self {
            scope,
            checked,
            counterexamples,
            elapsed_seconds: 0.0,
            verdict,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    /// Combines two reports over disjoint pieces of a scope. The result does
    /// not depend on the order of the operands, except for `elapsed_seconds`
    /// which is summed.
    pub fn merge(self, other: VerificationReport) -> VerificationReport {
        let mut s = self.scope.s;
        s.extend(other.scope.s);
        s.sort_unstable();
        s.dedup();
        let mut t = self.scope.t;
        t.extend(other.scope.t);
        t.sort_unstable();
        t.dedup();

        let mut cases: BTreeMap<(usize, usize, usize), CorollaryCase> = BTreeMap::new();
        for case in self.scope.cases.into_iter().chain(other.scope.cases) {
            let key = (case.s, case.t, case.n);
            match cases.get_mut(&key) {
                Some(existing) => {
                    existing.t_cores += case.t_cores;
                    existing.core_sizes.extend(case.core_sizes);
                    existing.core_sizes.sort_unstable();
                    existing.core_sizes.dedup();
                }
                None => {
                    cases.insert(key, case);
                }
            }
        }

        let scope = Scope {
            statement: self.scope.statement,
            n_min: self.scope.n_min.min(other.scope.n_min),
            n_max: self.scope.n_max.max(other.scope.n_max),
            s,
            t,
            cases: cases.into_values().collect(),
        };
        let mut counterexamples = self.counterexamples;
        counterexamples.extend(other.counterexamples);
        let mut merged = Self::new(scope, self.checked + other.checked, counterexamples);
        merged.elapsed_seconds = self.elapsed_seconds + other.elapsed_seconds;
        merged
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scope(statement: Statement) -> Scope {
        Scope {
            statement,
            n_min: 0,
            n_max: 3,
            s: vec![2],
            t: vec![3],
            cases: vec![],
        }
    }

    fn witness(n: usize, parts: &[usize]) -> Counterexample {
        Counterexample {
            n,
            partition: parts.to_vec(),
            s: 2,
            t: 3,
        }
    }

    #[test]
    fn verdict_follows_counterexamples() {
        let ok = VerificationReport::new(scope(Statement::Theorem1), 5, vec![]);
        assert!(ok.is_verified());
        let bad = VerificationReport::new(scope(Statement::Theorem1), 5, vec![witness(2, &[2])]);
        assert_eq!(bad.verdict, Verdict::Refuted);
    }

    #[test]
    fn merge_is_order_independent() {
        let a = VerificationReport::new(
            scope(Statement::Theorem1),
            3,
            vec![witness(4, &[2, 2]), witness(4, &[3, 1])],
        );
        let b =
            VerificationReport::new(scope(Statement::Theorem1), 4, vec![witness(3, &[1, 1, 1])]);
        let ab = a.clone().merge(b.clone());
        let ba = b.merge(a);
        assert_eq!(ab, ba);
        assert_eq!(ab.checked, 7);
        let order: Vec<_> = ab
            .counterexamples
            .iter()
            .map(|c| c.partition.clone())
            .collect();
        assert_eq!(order, vec![vec![1, 1, 1], vec![3, 1], vec![2, 2]]);
    }

    #[test]
    fn json_shape() {
        let report =
            VerificationReport::new(scope(Statement::Corollary2), 1, vec![witness(0, &[])]);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["verdict"], "refuted");
        assert_eq!(json["scope"]["statement"], "corollary2");
        assert_eq!(json["counterexamples"][0]["partition"], "-");
        assert!(json["scope"].get("cases").is_none());
        assert!(json["elapsed_seconds"].is_f64());
    }
}
