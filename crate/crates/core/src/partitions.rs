//! Partitions, hooks, beta-sets, `ℓ`-cores and `ℓ`-quotients.
//!
//! Cores and quotients are computed on an abacus: a partition with `m` parts
//! (padded with zeros) is encoded by the bead positions `λ_i + m - i`, and a
//! hook of length `k` is a bead sliding down `k` positions into a gap. With
//! `m` a multiple of `ℓ`, the beads congruent to `r` modulo `ℓ` form runner
//! `r`, and component `r` of the quotient is read off that runner.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition: a non-increasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A hook `h_ij` of a partition, with 1-based row and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hook {
    pub row: usize,
    pub col: usize,
    pub arm: usize,
    pub leg: usize,
    pub length: usize,
}

/// A finite set of distinct bead positions, kept in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSet {
    beads: Vec<usize>,
}

/// The `ℓ`-core, `ℓ`-quotient and `ℓ`-weight of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientDecomposition {
    pub ell: usize,
    pub core: Partition,
    pub components: Vec<Partition>,
    pub weight: usize,
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) of length {}", self.row, self.col, self.length)
    }
}

/// Smallest multiple of `ell` that is at least `len`.
pub(crate) fn normalized_bead_count(len: usize, ell: usize) -> usize {
    len.div_ceil(ell) * ell
}

fn check_level(ell: usize) {
    assert!(ell >= 1, "level must be at least 1");
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates raw integer parts, stripping trailing zeros.
    pub fn new(parts: &[i64]) -> Result<Self> {
        let mut checked = Vec::with_capacity(parts.len());
        for &p in parts {
            if p < 0 {
                return Err(Error::NegativePart(p));
            }
            checked.push(p as usize);
        }
        Self::from_parts(checked)
    }

    /// Builds a partition from non-negative parts, stripping trailing zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing(i + 1));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// Trusted constructor for parts already known to be valid.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The number `n` being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let conj = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self::from_sorted(conj)
    }

    /// All hooks in row-major order, one per node.
    pub fn hooks(&self) -> Vec<Hook> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i0, &part) in self.parts.iter().enumerate() {
            for j0 in 0..part {
                let arm = part - j0 - 1;
                let leg = conj.parts[j0] - i0 - 1;
                out.push(Hook {
                    row: i0 + 1,
                    col: j0 + 1,
                    arm,
                    leg,
                    length: arm + leg + 1,
                });
            }
        }
        out
    }

    /// Hook lengths in row-major order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        self.hooks().into_iter().map(|h| h.length).collect()
    }

    fn owns_hook(&self, h: &Hook) -> bool {
        if h.row == 0 || h.col == 0 || h.row > self.len() || h.col > self.parts[h.row - 1] {
            return false;
        }
        let arm = self.parts[h.row - 1] - h.col;
        let leg = self.parts[h.row..]
            .iter()
            .take_while(|&&p| p >= h.col)
            .count();
        h.arm == arm && h.leg == leg && h.length == arm + leg + 1
    }

    /// Removes the rim hook associated with `h`.
    pub fn remove_hook(&self, h: &Hook) -> Result<Partition> {
        if !self.owns_hook(h) {
            return Err(Error::ForeignHook(h.to_string()));
        }
        let beta = self.beta_set(self.len())?;
        let from = self.parts[h.row - 1] + self.len() - h.row;
        Ok(beta.slide(from, h.length).partition())
    }

    /// Beta-set with `m` beads: `{λ_i + m - i}` with missing parts read as 0.
    pub fn beta_set(&self, m: usize) -> Result<BetaSet> {
        if m < self.len() {
            return Err(Error::BeadCountTooSmall {
                given: m,
                needed: self.len(),
            });
        }
        let beads = (1..=m)
            .map(|i| self.parts.get(i - 1).copied().unwrap_or(0) + m - i)
            .collect();
        Ok(BetaSet { beads })
    }

    fn normalized_beta_set(&self, ell: usize) -> BetaSet {
        self.beta_set(normalized_bead_count(self.len(), ell))
            .expect("normalized bead count covers every part")
    }

    /// The `ℓ`-core, by pushing every bead as far down its runner as it goes.
    pub fn core(&self, ell: usize) -> Partition {
        check_level(ell);
        let beta = self.normalized_beta_set(ell);
        let mut counts = vec![0usize; ell];
        for &b in &beta.beads {
            counts[b % ell] += 1;
        }
        let beads = counts
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| (0..c).map(move |k| r + k * ell))
            .collect();
        BetaSet::from_unsorted(beads).partition()
    }

    /// The `ℓ`-quotient: component `r` is read from the beads congruent to
    /// `r` modulo `ℓ` of the normalized beta-set, at positions `⌊b/ℓ⌋`.
    pub fn quotient(&self, ell: usize) -> Vec<Partition> {
        check_level(ell);
        let beta = self.normalized_beta_set(ell);
        let mut runners = vec![Vec::new(); ell];
        // Beads are visited in decreasing order, so each runner stays sorted.
        for &b in &beta.beads {
            runners[b % ell].push(b / ell);
        }
        runners
            .into_iter()
            .map(|beads| BetaSet { beads }.partition())
            .collect()
    }

    /// Number of hooks whose length is divisible by `ℓ`.
    pub fn weight(&self, ell: usize) -> usize {
        check_level(ell);
        (self.size() - self.core(ell).size()) / ell
    }

    pub fn is_core(&self, ell: usize) -> bool {
        check_level(ell);
        self.hooks().iter().all(|h| h.length % ell != 0)
    }

    pub fn decompose(&self, ell: usize) -> QuotientDecomposition {
        let core = self.core(ell);
        let components = self.quotient(ell);
        let weight = components.iter().map(Partition::size).sum();
        QuotientDecomposition {
            ell,
            core,
            components,
            weight,
        }
    }

    /// Rebuilds the partition with the given `ℓ`-core and `ℓ`-quotient.
    pub fn from_core_and_quotient(
        core: &Partition,
        components: &[Partition],
        ell: usize,
    ) -> Result<Partition> {
        if ell == 0 {
            return Err(Error::ZeroLevel);
        }
        if components.len() != ell {
            return Err(Error::ComponentCount {
                expected: ell,
                got: components.len(),
            });
        }
        if !core.is_core(ell) {
            return Err(Error::NotACore {
                core: core.to_string(),
                ell,
            });
        }
        let depth = components.iter().map(Partition::len).max().unwrap_or(0);
        let m = normalized_bead_count(core.len(), ell) + depth * ell;
        let beta = core.beta_set(m)?;
        let mut counts = vec![0usize; ell];
        for &b in &beta.beads {
            counts[b % ell] += 1;
        }
        let mut beads = Vec::with_capacity(m);
        for (r, (component, &c)) in components.iter().zip(&counts).enumerate() {
            let runner = component.beta_set(c)?;
            beads.extend(runner.beads.iter().map(|&pos| pos * ell + r));
        }
        Ok(BetaSet::from_unsorted(beads).partition())
    }

    /// Every hook of length divisible by `ℓ`, paired with the partition left
    /// after removing it, in row-major order.
    pub fn divisible_hooks(&self, ell: usize) -> Vec<(Hook, Partition)> {
        check_level(ell);
        self.hooks()
            .into_iter()
            .filter(|h| h.length % ell == 0)
            .map(|h| {
                let rest = self.remove_hook(&h).expect("hook enumerated from self");
                (h, rest)
            })
            .collect()
    }
}

impl BetaSet {
    /// Builds a beta-set from distinct positions in any order.
    pub fn new(beads: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut beads: Vec<usize> = beads.into_iter().collect();
        beads.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = beads.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedPart(w[0] as u64));
        }
        Ok(Self { beads })
    }

    fn from_unsorted(mut beads: Vec<usize>) -> Self {
        beads.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(beads.windows(2).all(|w| w[0] > w[1]));
        Self { beads }
    }

    /// Bead positions in decreasing order.
    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.beads.binary_search_by(|b| position.cmp(b)).is_ok()
    }

    /// Shifts every bead up by one and adds a bead at position 0. The
    /// encoded partition does not change.
    pub fn shifted(&self) -> BetaSet {
        let mut beads: Vec<usize> = self.beads.iter().map(|b| b + 1).collect();
        beads.push(0);
        Self { beads }
    }

    /// Decodes: the `k`-th largest bead `b_k` contributes part `b_k - (m - k)`.
    pub fn partition(&self) -> Partition {
        let m = self.beads.len();
        let parts = self
            .beads
            .iter()
            .enumerate()
            .map(|(k, &b)| b - (m - k - 1))
            .filter(|&p| p > 0)
            .collect();
        Partition::from_sorted(parts)
    }

    fn slide(&self, from: usize, by: usize) -> BetaSet {
        let to = from - by;
        debug_assert!(self.contains(from) && !self.contains(to));
        let beads = self
            .beads
            .iter()
            .map(|&b| if b == from { to } else { b })
            .collect();
        Self::from_unsorted(beads)
    }
}

pub(crate) fn write_literal(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("-");
    }
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

pub(crate) fn parse_literal(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|e| Error::Parse {
                literal: s.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_literal(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `4,2,1`; the empty partition is `-`. Parts must be positive.
    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_literal(s)?;
        if let Some(&p) = raw.iter().find(|&&p| p <= 0) {
            return Err(Error::NonPositivePart(p));
        }
        Partition::new(&raw)
    }
}
