//! Bar-partitions (partitions into distinct parts), their bars, and the
//! `ℓ̄`-core and `ℓ̄`-quotient for odd `ℓ`.
//!
//! A part `a` carries a within-row bar of length `d` whenever `a - d` is not
//! itself a part (`a - d = 0` is allowed and deletes the part), and each pair
//! of parts `a > a'` carries a two-row bar of length `a + a'`. Removing a bar
//! shortens the part by `d`, or deletes both parts.
//!
//! For the quotient, parts divisible by `ℓ` give component 0 directly. For
//! `1 ≤ i ≤ (ℓ-1)/2`, residues `i` and `ℓ - i` are merged into one two-sided
//! bead sequence: position `k ≥ 0` is filled when `ℓk + i` is a part, and
//! position `-k-1` is filled unless `ℓk + ℓ - i` is a part. Every bar of
//! length `dℓ` on those residues is then a bead sliding down `d` places.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{parse_literal, write_literal, Partition};

/// A partition with pairwise distinct positive parts, stored decreasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarPartition {
    parts: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BarKind {
    /// Shortens the part in `row` by the bar length.
    WithinRow,
    /// Deletes the parts in `row` and `partner` (`partner > row`).
    TwoRow { partner: usize },
}

/// A bar of a bar-partition. Rows are 1-based indices into the parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bar {
    pub row: usize,
    pub kind: BarKind,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarQuotientDecomposition {
    pub ell: usize,
    pub core: BarPartition,
    pub component0: BarPartition,
    pub components: Vec<Partition>,
    pub weight: usize,
}

impl fmt::Display for Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BarKind::WithinRow => write!(f, "row {} of length {}", self.row, self.length),
            BarKind::TwoRow { partner } => {
                write!(f, "rows {},{} of length {}", self.row, partner, self.length)
            }
        }
    }
}

pub(crate) fn check_odd_level(ell: usize) -> Result<()> {
    match ell {
        0 => Err(Error::ZeroLevel),
        l if l % 2 == 0 => Err(Error::EvenLevel(l)),
        _ => Ok(()),
    }
}

impl BarPartition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates parts in any order; they must be distinct and positive.
    pub fn new(parts: &[i64]) -> Result<Self> {
        let mut checked = Vec::with_capacity(parts.len());
        for &p in parts {
            if p <= 0 {
                return Err(Error::NonPositivePart(p));
            }
            checked.push(p as usize);
        }
        Self::from_parts(checked)
    }

    pub fn from_parts(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = parts.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedPart(w[0] as u64));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains(&self, part: usize) -> bool {
        self.parts.binary_search_by(|p| part.cmp(p)).is_ok()
    }

    /// The same parts viewed as an ordinary partition.
    pub fn as_partition(&self) -> Partition {
        Partition::from_sorted(self.parts.clone())
    }

    /// All bars, row by row; within a row, two-row bars come first (longest
    /// first), then within-row bars (longest first).
    pub fn bars(&self) -> Vec<Bar> {
        let mut out = Vec::with_capacity(self.size());
        for (i0, &a) in self.parts.iter().enumerate() {
            let row = i0 + 1;
            for (j0, &b) in self.parts.iter().enumerate().skip(i0 + 1) {
                out.push(Bar {
                    row,
                    kind: BarKind::TwoRow { partner: j0 + 1 },
                    length: a + b,
                });
            }
            for d in (1..=a).rev() {
                if !self.contains(a - d) {
                    out.push(Bar {
                        row,
                        kind: BarKind::WithinRow,
                        length: d,
                    });
                }
            }
        }
        out
    }

    pub fn bar_lengths(&self) -> Vec<usize> {
        self.bars().into_iter().map(|b| b.length).collect()
    }

    fn owns_bar(&self, b: &Bar) -> bool {
        if b.row == 0 || b.row > self.len() {
            return false;
        }
        let a = self.parts[b.row - 1];
        match b.kind {
            BarKind::WithinRow => b.length >= 1 && b.length <= a && !self.contains(a - b.length),
            BarKind::TwoRow { partner } => {
                partner > b.row && partner <= self.len() && b.length == a + self.parts[partner - 1]
            }
        }
    }

    pub fn remove_bar(&self, b: &Bar) -> Result<BarPartition> {
        if !self.owns_bar(b) {
            return Err(Error::ForeignBar(b.to_string()));
        }
        let mut parts = self.parts.clone();
        match b.kind {
            BarKind::WithinRow => {
                let shortened = parts[b.row - 1] - b.length;
                parts.remove(b.row - 1);
                if shortened > 0 {
                    let at = parts.partition_point(|&p| p > shortened);
                    parts.insert(at, shortened);
                }
            }
            BarKind::TwoRow { partner } => {
                parts.remove(partner - 1);
                parts.remove(b.row - 1);
            }
        }
        Ok(Self::from_sorted(parts))
    }

    /// Bars whose length is divisible by `ℓ`, each paired with the result of
    /// removing it.
    pub fn divisible_bars(&self, ell: usize) -> Result<Vec<(Bar, BarPartition)>> {
        check_odd_level(ell)?;
        Ok(self
            .bars()
            .into_iter()
            .filter(|b| b.length % ell == 0)
            .map(|b| {
                let rest = self.remove_bar(&b).expect("bar enumerated from self");
                (b, rest)
            })
            .collect())
    }

    /// The canonical removal sequence leading to the `ℓ̄`-core: at each step
    /// the longest `(ℓ)`-bar, ties going to the smallest row.
    pub fn core_trace(&self, ell: usize) -> Result<Vec<(Bar, BarPartition)>> {
        check_odd_level(ell)?;
        let mut trace = Vec::new();
        let mut current = self.clone();
        while let Some(bar) = current
            .bars()
            .into_iter()
            .filter(|b| b.length % ell == 0)
            .max_by(|x, y| x.length.cmp(&y.length).then(y.row.cmp(&x.row)))
        {
            current = current.remove_bar(&bar)?;
            trace.push((bar, current.clone()));
        }
        Ok(trace)
    }

    /// The `ℓ̄`-core.
    pub fn core(&self, ell: usize) -> Result<BarPartition> {
        Ok(self
            .core_trace(ell)?
            .pop()
            .map(|(_, rest)| rest)
            .unwrap_or_else(|| self.clone()))
    }

    /// Number of bars whose length is divisible by `ℓ`.
    pub fn weight(&self, ell: usize) -> Result<usize> {
        check_odd_level(ell)?;
        Ok(self.bars().iter().filter(|b| b.length % ell == 0).count())
    }

    pub fn is_core(&self, ell: usize) -> Result<bool> {
        check_odd_level(ell)?;
        Ok(self.bars().iter().all(|b| b.length % ell != 0))
    }

    /// The `ℓ̄`-quotient together with the core and weight.
    pub fn quotient(&self, ell: usize) -> Result<BarQuotientDecomposition> {
        let core = self.core(ell)?;
        let component0 = BarPartition::from_sorted(
            self.parts
                .iter()
                .filter(|&&a| a % ell == 0)
                .map(|&a| a / ell)
                .collect(),
        );
        let components: Vec<Partition> = (1..=ell / 2)
            .map(|i| ChargedSequence::from_parts(&self.parts, ell, i).partition())
            .collect();
        let weight = component0.size() + components.iter().map(Partition::size).sum::<usize>();
        Ok(BarQuotientDecomposition {
            ell,
            core,
            component0,
            components,
            weight,
        })
    }

    /// Rebuilds the bar-partition with the given `ℓ̄`-core and `ℓ̄`-quotient.
    pub fn from_core_and_quotient(
        core: &BarPartition,
        component0: &BarPartition,
        components: &[Partition],
        ell: usize,
    ) -> Result<BarPartition> {
        check_odd_level(ell)?;
        if components.len() != ell / 2 {
            return Err(Error::ComponentCount {
                expected: ell / 2,
                got: components.len(),
            });
        }
        if !core.is_core(ell)? {
            return Err(Error::NotABarCore {
                core: core.to_string(),
                ell,
            });
        }
        let mut parts: Vec<usize> = component0.parts.iter().map(|&a| a * ell).collect();
        for (k, component) in components.iter().enumerate() {
            let i = k + 1;
            let charge = ChargedSequence::from_parts(&core.parts, ell, i).charge();
            parts.extend(ChargedSequence::from_partition(component, charge).parts(ell, i));
        }
        BarPartition::from_parts(parts)
    }
}

/// Two-sided 0/1 bead sequence for one residue pair `{i, ℓ - i}`. Only the
/// finite window that differs from "filled below, empty above" is stored.
struct ChargedSequence {
    /// Filled positions `k ≥ 0`, decreasing.
    upper: Vec<i64>,
    /// Empty positions `< 0`, decreasing.
    holes: Vec<i64>,
}

impl ChargedSequence {
    fn from_parts(parts: &[usize], ell: usize, i: usize) -> Self {
        let mut upper = Vec::new();
        let mut holes = Vec::new();
        for &a in parts {
            if a % ell == i {
                upper.push((a / ell) as i64);
            } else if a % ell == ell - i {
                holes.push(-((a / ell) as i64) - 1);
            }
        }
        // parts are decreasing, so upper is decreasing and holes increasing
        holes.reverse();
        Self { upper, holes }
    }

    /// Sequence with the given charge whose decoded partition is `mu`:
    /// the `k`-th filled position from the top is `mu_k - k + charge`.
    fn from_partition(mu: &Partition, charge: i64) -> Self {
        let len = mu.len() as i64;
        let filled: BTreeSet<i64> = mu
            .parts()
            .iter()
            .enumerate()
            .map(|(k, &m)| m as i64 - (k as i64 + 1) + charge)
            .collect();
        // everything below charge - len is filled
        let floor = charge - len;
        let upper = filled
            .iter()
            .rev()
            .copied()
            .filter(|&p| p >= 0)
            .chain((0..floor).rev())
            .collect();
        let holes = (floor.min(0)..0)
            .rev()
            .filter(|q| !filled.contains(q))
            .collect();
        Self { upper, holes }
    }

    fn charge(&self) -> i64 {
        self.upper.len() as i64 - self.holes.len() as i64
    }

    fn is_filled(&self, pos: i64) -> bool {
        if pos >= 0 {
            self.upper.contains(&pos)
        } else {
            !self.holes.contains(&pos)
        }
    }

    fn empties_below(&self, pos: i64) -> usize {
        let holes = self.holes.iter().filter(|&&q| q < pos).count();
        if pos <= 0 {
            holes
        } else {
            let filled = self.upper.iter().filter(|&&q| q < pos).count();
            holes + pos as usize - filled
        }
    }

    /// Reading filled positions from the top, each contributes the number of
    /// empty positions below it.
    fn partition(&self) -> Partition {
        let top = self.upper.first().copied().unwrap_or(-1);
        let bottom = self.holes.last().copied().unwrap_or(0);
        let parts = (bottom..=top)
            .rev()
            .filter(|&p| self.is_filled(p))
            .map(|p| self.empties_below(p))
            .filter(|&m| m > 0)
            .collect();
        Partition::from_sorted(parts)
    }

    fn parts(&self, ell: usize, i: usize) -> impl Iterator<Item = usize> + '_ {
        let up = self.upper.iter().map(move |&k| ell * k as usize + i);
        let down = self
            .holes
            .iter()
            .map(move |&q| ell * (-q - 1) as usize + ell - i);
        up.chain(down)
    }
}

impl fmt::Display for BarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_literal(f, &self.parts)
    }
}

impl FromStr for BarPartition {
    type Err = Error;

    /// Parses a strictly decreasing literal such as `5,3,2`; empty is `-`.
    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_literal(s)?;
        if let Some(i) = raw.windows(2).position(|w| w[0] <= w[1]) {
            if raw[i] == raw[i + 1] {
                return Err(Error::RepeatedPart(raw[i].max(0) as u64));
            }
            return Err(Error::NotNonIncreasing(i + 1));
        }
        BarPartition::new(&raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(parts: &[i64]) -> BarPartition {
        BarPartition::new(parts).unwrap()
    }

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn row_lengths(lam: &BarPartition, row: usize) -> Vec<usize> {
        lam.bars()
            .iter()
            .filter(|b| b.row == row)
            .map(|b| b.length)
            .collect()
    }

    #[test]
    fn make_bar_partition_validates() {
        assert_eq!(bp(&[3, 2, 1]).size(), 6);
        assert_eq!(bp(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert_eq!(BarPartition::new(&[2, 2]), Err(Error::RepeatedPart(2)));
        assert_eq!(BarPartition::new(&[2, 0]), Err(Error::NonPositivePart(0)));
        assert!(bp(&[]).is_empty());
    }

    #[test]
    fn bars_by_row() {
        let lam = bp(&[3, 2, 1]);
        assert_eq!(row_lengths(&lam, 1), vec![5, 4, 3]);
        assert_eq!(row_lengths(&lam, 2), vec![3, 2]);
        assert_eq!(row_lengths(&lam, 3), vec![1]);
        assert_eq!(bp(&[2]).bar_lengths(), vec![2, 1]);
        assert_eq!(bp(&[1]).bar_lengths(), vec![1]);
    }

    #[test]
    fn remove_bar_examples() {
        let lam = bp(&[3, 2, 1]);
        let pair = Bar {
            row: 2,
            kind: BarKind::TwoRow { partner: 3 },
            length: 3,
        };
        assert_eq!(lam.remove_bar(&pair).unwrap(), bp(&[3]));
        let whole = Bar {
            row: 1,
            kind: BarKind::WithinRow,
            length: 3,
        };
        assert_eq!(lam.remove_bar(&whole).unwrap(), bp(&[2, 1]));
        assert_eq!(bp(&[3]).remove_bar(&whole).unwrap(), BarPartition::empty());
        let shorten = Bar {
            row: 1,
            kind: BarKind::WithinRow,
            length: 2,
        };
        assert_eq!(bp(&[5, 1]).remove_bar(&shorten).unwrap(), bp(&[3, 1]));
    }

    #[test]
    fn remove_bar_rejects_foreign_bar() {
        let lam = bp(&[3, 2, 1]);
        // 3 - 1 = 2 is a part
        let blocked = Bar {
            row: 1,
            kind: BarKind::WithinRow,
            length: 1,
        };
        assert!(matches!(
            lam.remove_bar(&blocked),
            Err(Error::ForeignBar(_))
        ));
        let wrong = Bar {
            row: 1,
            kind: BarKind::TwoRow { partner: 2 },
            length: 4,
        };
        assert!(lam.remove_bar(&wrong).is_err());
    }

    #[test]
    fn core_examples() {
        assert_eq!(bp(&[3, 2, 1]).core(3).unwrap(), BarPartition::empty());
        assert_eq!(bp(&[3, 2, 1]).core(5).unwrap(), bp(&[1]));
        assert_eq!(bp(&[2]).core(3).unwrap(), bp(&[2]));
        assert_eq!(bp(&[10]).core(7).unwrap(), bp(&[3]));
        assert_eq!(bp(&[6, 4, 1]).core(1).unwrap(), BarPartition::empty());
    }

    #[test]
    fn canonical_trace_prefers_longest_bar() {
        let trace = bp(&[3, 2, 1]).core_trace(3).unwrap();
        assert_eq!(trace.len(), 2);
        // both first-row 3 and pair (2,1) have length 3; row 1 wins
        assert_eq!(
            trace[0].0,
            Bar {
                row: 1,
                kind: BarKind::WithinRow,
                length: 3
            }
        );
        assert_eq!(trace[0].1, bp(&[2, 1]));
    }

    #[test]
    fn even_levels_are_rejected() {
        let lam = bp(&[3, 2, 1]);
        assert_eq!(lam.core(4), Err(Error::EvenLevel(4)));
        assert_eq!(lam.quotient(2).unwrap_err(), Error::EvenLevel(2));
        assert_eq!(lam.weight(6), Err(Error::EvenLevel(6)));
        assert_eq!(lam.is_core(8), Err(Error::EvenLevel(8)));
        assert_eq!(lam.core(0), Err(Error::ZeroLevel));
    }

    #[test]
    fn weight_and_core_tests() {
        assert_eq!(bp(&[3, 2, 1]).weight(3).unwrap(), 2);
        assert_eq!(bp(&[3, 2, 1]).weight(5).unwrap(), 1);
        assert_eq!(bp(&[7, 4, 2]).weight(1).unwrap(), 13);
        assert!(bp(&[2]).is_core(3).unwrap());
        assert!(!bp(&[3, 2, 1]).is_core(3).unwrap());
        assert!(BarPartition::empty().is_core(9).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let q = bp(&[3, 2, 1]).quotient(3).unwrap();
        assert_eq!(q.component0, bp(&[1]));
        assert_eq!(q.components, vec![p(&[1])]);
        assert_eq!(q.weight, 2);
        assert!(q.core.is_empty());

        let q = bp(&[5]).quotient(5).unwrap();
        assert_eq!(q.component0, bp(&[1]));
        assert_eq!(q.components, vec![Partition::empty(); 2]);

        let core = bp(&[4, 1]);
        assert!(core.is_core(3).unwrap());
        let q = core.quotient(3).unwrap();
        assert_eq!(q.weight, 0);
        assert!(q.component0.is_empty() && q.components.iter().all(Partition::is_empty));
    }

    #[test]
    fn reconstruction_examples() {
        let lam =
            BarPartition::from_core_and_quotient(&BarPartition::empty(), &bp(&[1]), &[p(&[1])], 3)
                .unwrap();
        assert_eq!(lam, bp(&[3, 2, 1]));

        let core = bp(&[7, 4, 1]);
        assert!(core.is_core(3).unwrap());
        let none = vec![Partition::empty()];
        assert_eq!(
            BarPartition::from_core_and_quotient(&core, &BarPartition::empty(), &none, 3).unwrap(),
            core
        );
        assert!(matches!(
            BarPartition::from_core_and_quotient(&bp(&[3]), &BarPartition::empty(), &none, 3),
            Err(Error::NotABarCore { .. })
        ));
        assert!(matches!(
            BarPartition::from_core_and_quotient(&core, &BarPartition::empty(), &[], 3),
            Err(Error::ComponentCount {
                expected: 1,
                got: 0
            })
        ));
    }

    #[test]
    fn charged_sequence_round_trips_with_negative_charge() {
        // parts 2, 5 are both ≡ 2 (mod 3): charge -2
        let lam = bp(&[8, 5, 2]);
        let q = lam.quotient(3).unwrap();
        let back =
            BarPartition::from_core_and_quotient(&q.core, &q.component0, &q.components, 3).unwrap();
        assert_eq!(back, lam);
    }

    #[test]
    fn literal_round_trip() {
        assert_eq!("5,3,2".parse::<BarPartition>().unwrap(), bp(&[5, 3, 2]));
        assert_eq!("-".parse::<BarPartition>().unwrap(), BarPartition::empty());
        assert!("3,3".parse::<BarPartition>().is_err());
        assert!("2,3".parse::<BarPartition>().is_err());
        assert_eq!(bp(&[5, 3, 2]).to_string(), "5,3,2");
    }
}
