//! Exhaustive ground truth.
//!
//! The oracle walks all `n^k` colorings with a mixed-radix counter, classifies
//! each one directly from its definition and tallies the results. It shares no
//! code with the closed-form counts beyond the table type, so agreement
//! between the two is evidence rather than tautology.
//!
//! Work is split by the color of the first ball. Each part tallies into
//! machine integers and the parts are merged by exact addition in color
//! order, so the result does not depend on scheduling.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problems::problem3_repeats_fixed_length;
use crate::sequence::{z_count, SequenceClass};
use crate::table::DistributionTable;
use crate::Count;

/// Largest number of colorings enumerated unless configured otherwise.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A concrete sequence of palette indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
    palette: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, palette: u32) -> Result<Self> {
        if let Some(&color) = colors.iter().find(|&&c| c >= palette) {
            return Err(Error::ColorOutOfRange { color, palette });
        }
        Ok(Coloring { colors, palette })
    }

    /// Parses letters `A`, `B`, ... as colors 0, 1, ... .
    ///
    /// ```
    /// use colorseq::oracle::Coloring;
    /// let c = Coloring::from_letters("ABCA", 3).unwrap();
    /// assert_eq!(c.colors(), &[0, 1, 2, 0]);
    /// assert!(Coloring::from_letters("ABD", 3).is_err());
    /// ```
    pub fn from_letters(letters: &str, palette: u32) -> Result<Self> {
        let colors = letters
            .chars()
            .map(|ch| {
                let upper = ch.to_ascii_uppercase();
                if upper.is_ascii_uppercase() {
                    Ok(u32::from(upper) - u32::from('A'))
                } else {
                    Err(Error::ColorOutOfRange { color: u32::from(ch), palette })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Coloring::new(colors, palette)
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.colors {
            match char::from_u32(u32::from('A') + c).filter(|ch| ch.is_ascii_uppercase()) {
                Some(ch) => write!(f, "{ch}")?,
                None => write!(f, "[{c}]")?,
            }
        }
        Ok(())
    }
}

/// The statistics of one coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassStats {
    /// Balls whose color occurs on at least one other ball.
    pub m: u64,
    /// Colors used at least twice.
    pub lambda: u64,
    /// Balls whose color already occurred at an earlier position.
    pub mu: u64,
    /// Colors used at least once.
    pub distinct: u64,
}

/// Classifies a coloring.
///
/// ```
/// use colorseq::oracle::{classify, Coloring};
/// let stats = classify(&Coloring::from_letters("AABBCCDDDD", 4).unwrap());
/// assert_eq!((stats.m, stats.lambda, stats.mu, stats.distinct), (10, 4, 6, 4));
/// ```
pub fn classify(coloring: &Coloring) -> ClassStats {
    let mut occurrences = vec![0u32; coloring.palette as usize];
    classify_into(&coloring.colors, &mut occurrences)
}

/// `occurrences` must hold one slot per palette color; it is overwritten.
fn classify_into(colors: &[u32], occurrences: &mut [u32]) -> ClassStats {
    occurrences.iter_mut().for_each(|o| *o = 0);
    let mut mu = 0;
    for &c in colors {
        let seen = &mut occurrences[c as usize];
        if *seen > 0 {
            mu += 1;
        }
        *seen += 1;
    }
    let mut m = 0;
    for &c in colors {
        if occurrences[c as usize] >= 2 {
            m += 1;
        }
    }
    let lambda = occurrences.iter().filter(|&&o| o >= 2).count() as u64;
    let distinct = occurrences.iter().filter(|&&o| o >= 1).count() as u64;
    ClassStats { m, lambda, mu, distinct }
}

/// `n^k` as a machine integer, if it fits.
pub fn coloring_count(k: u64, n: u64) -> Option<u64> {
    match n {
        0 => Some(u64::from(k == 0)),
        1 => Some(1),
        _ => n.checked_pow(u32::try_from(k).ok()?),
    }
}

/// Identifies one compared quantity in a [`VerificationReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CellId {
    /// `Z(k, n, m, λ)` against the oracle's `(m, λ)` cell.
    Match { m: u64, lambda: u64 },
    /// The repeat count for `μ` against the oracle's `μ` bucket.
    Repeat { mu: u64 },
    /// Sum over a view, formula side against oracle side.
    Total { view: View },
    /// `n^k` against the number of colorings the oracle classified.
    Mass { view: View },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum View {
    Match,
    Repeat,
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellId::Match { m, lambda } => write!(f, "cell (m={m}, lambda={lambda})"),
            CellId::Repeat { mu } => write!(f, "repeats mu={mu}"),
            CellId::Total { view } => write!(f, "{view:?} total"),
            CellId::Mass { view } => write!(f, "{view:?} mass vs n^k"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub cell: CellId,
    pub formula: Count,
    pub oracle: Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub k: u64,
    pub n: u64,
    /// `(m, λ)` cells plus `μ` buckets compared.
    pub cells_checked: u64,
    pub mismatches: Vec<Mismatch>,
    pub passed: bool,
}

/// Outcome of verifying every `(k, n)` pair in a rectangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeReport {
    pub max_k: u64,
    pub max_n: u64,
    pub reports: Vec<VerificationReport>,
    /// Pairs left out because `n^k` exceeds the budget.
    pub skipped: Vec<(u64, u64)>,
    pub passed: bool,
}

/// Exhaustive enumerator with a cap on the number of colorings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    budget: u64,
    parallel: bool,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { budget: DEFAULT_BUDGET, parallel: true }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Runs everything on the calling thread.
    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn fits(&self, k: u64, n: u64) -> bool {
        coloring_count(k, n).is_some_and(|c| c <= self.budget)
    }

    fn check_budget(&self, k: u64, n: u64) -> Result<()> {
        match coloring_count(k, n) {
            Some(c) if c <= self.budget => Ok(()),
            colorings => Err(Error::BudgetExceeded { colorings, budget: self.budget }),
        }
    }

    /// Classifies every length-`k` coloring over `n` colors.
    pub fn enumerate_counts(&self, k: u64, n: u64) -> Result<DistributionTable> {
        self.check_budget(k, n)?;
        let len = k as usize;
        let palette = n as u32;

        let tally = if k == 0 {
            let mut t = Tally::new(0);
            t.record(classify_into(&[], &mut vec![0; palette as usize]));
            t
        } else if self.parallel {
            (0..palette)
                .into_par_iter()
                .map(|first| enumerate_with_first(len, palette, first))
                .collect::<Vec<_>>()
                .into_iter()
                .fold(Tally::new(len), Tally::merge)
        } else {
            (0..palette)
                .map(|first| enumerate_with_first(len, palette, first))
                .fold(Tally::new(len), Tally::merge)
        };
        Ok(tally.into_table(k, n))
    }

    /// Compares the oracle table for `(k, n)` with the closed-form counts.
    pub fn verify(&self, k: u64, n: u64) -> Result<VerificationReport> {
        let oracle = self.enumerate_counts(k, n)?;
        let mut mismatches = Vec::new();
        let mut cells_checked = 0;

        let mut formula_match_total = Count::zero();
        for m in 0..=k {
            for lambda in 0..=m / 2 {
                let formula = z_count(SequenceClass::new(k, n, m, lambda));
                let observed = oracle.cell(m, lambda);
                cells_checked += 1;
                formula_match_total += &formula;
                if formula != observed {
                    mismatches.push(Mismatch { cell: CellId::Match { m, lambda }, formula, oracle: observed });
                }
            }
        }
        // Anything the oracle saw outside the compared cells is also a failure.
        for (&(m, lambda), observed) in &oracle.by_match_cell {
            if m > k || lambda > m / 2 {
                mismatches.push(Mismatch {
                    cell: CellId::Match { m, lambda },
                    formula: Count::zero(),
                    oracle: observed.clone(),
                });
            }
        }

        let max_mu = k.saturating_sub(1);
        let mut formula_repeat_total = Count::zero();
        for mu in 0..=max_mu {
            let formula = problem3_repeats_fixed_length(k, n, mu);
            let observed = oracle.repeats(mu);
            cells_checked += 1;
            formula_repeat_total += &formula;
            if formula != observed {
                mismatches.push(Mismatch { cell: CellId::Repeat { mu }, formula, oracle: observed });
            }
        }
        for (&mu, observed) in oracle.by_repeat_count.range(max_mu + 1..) {
            mismatches.push(Mismatch { cell: CellId::Repeat { mu }, formula: Count::zero(), oracle: observed.clone() });
        }

        let mass = Count::pow(n, k);
        for (view, formula_total, oracle_total) in [
            (View::Match, formula_match_total, oracle.match_total()),
            (View::Repeat, formula_repeat_total, oracle.repeat_total()),
        ] {
            if oracle_total != mass {
                mismatches.push(Mismatch { cell: CellId::Mass { view }, formula: mass.clone(), oracle: oracle_total.clone() });
            }
            if formula_total != oracle_total {
                mismatches.push(Mismatch { cell: CellId::Total { view }, formula: formula_total, oracle: oracle_total });
            }
        }

        Ok(VerificationReport { k, n, cells_checked, passed: mismatches.is_empty(), mismatches })
    }

    /// Verifies every pair `0 ≤ k ≤ max_k`, `0 ≤ n ≤ max_n` that fits the
    /// budget, in row-major `(k, n)` order.
    pub fn verify_range(&self, max_k: u64, max_n: u64) -> RangeReport {
        let mut reports = Vec::new();
        let mut skipped = Vec::new();
        for k in 0..=max_k {
            for n in 0..=max_n {
                match self.verify(k, n) {
                    Ok(report) => reports.push(report),
                    Err(_) => skipped.push((k, n)),
                }
            }
        }
        let passed = reports.iter().all(|r| r.passed);
        RangeReport { max_k, max_n, reports, skipped, passed }
    }
}

/// [`Oracle::enumerate_counts`] with the default budget.
pub fn enumerate_counts(k: u64, n: u64) -> Result<DistributionTable> {
    Oracle::default().enumerate_counts(k, n)
}

/// [`Oracle::verify`] with the default budget.
pub fn verify(k: u64, n: u64) -> Result<VerificationReport> {
    Oracle::default().verify(k, n)
}

/// Machine-integer tallies for one part of the coloring space.
struct Tally {
    lambda_slots: usize,
    cells: Vec<u64>,
    repeats: Vec<u64>,
}

impl Tally {
    fn new(len: usize) -> Self {
        let lambda_slots = len / 2 + 1;
        Tally {
            lambda_slots,
            cells: vec![0; (len + 1) * lambda_slots],
            repeats: vec![0; len.max(1)],
        }
    }

    fn record(&mut self, stats: ClassStats) {
        self.cells[stats.m as usize * self.lambda_slots + stats.lambda as usize] += 1;
        self.repeats[stats.mu as usize] += 1;
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.cells.iter_mut().zip(other.cells) {
            *a += b;
        }
        for (a, b) in self.repeats.iter_mut().zip(other.repeats) {
            *a += b;
        }
        self
    }

    fn into_table(self, k: u64, n: u64) -> DistributionTable {
        let mut table = DistributionTable::new(k, n);
        for (idx, &count) in self.cells.iter().enumerate() {
            let m = (idx / self.lambda_slots) as u64;
            let lambda = (idx % self.lambda_slots) as u64;
            table.add_cell(m, lambda, Count::from(count));
        }
        for (mu, &count) in self.repeats.iter().enumerate() {
            table.add_repeats(mu as u64, Count::from(count));
        }
        table
    }
}

/// All colorings of length `len >= 1` whose first ball has color `first`.
fn enumerate_with_first(len: usize, palette: u32, first: u32) -> Tally {
    let mut tally = Tally::new(len);
    let mut colors = vec![0u32; len];
    colors[0] = first;
    let mut occurrences = vec![0u32; palette as usize];
    loop {
        tally.record(classify_into(&colors, &mut occurrences));
        // Advance the counter over positions 1..len, last position fastest.
        let mut pos = len;
        loop {
            pos -= 1;
            if pos == 0 {
                return tally;
            }
            colors[pos] += 1;
            if colors[pos] < palette {
                break;
            }
            colors[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn stats(letters: &str, palette: u32) -> ClassStats {
        classify(&Coloring::from_letters(letters, palette).unwrap())
    }

    #[test]
    fn classify_examples() {
        assert_eq!(stats("AABBCCDDDD", 4), ClassStats { m: 10, lambda: 4, mu: 6, distinct: 4 });
        assert_eq!(stats("ABC", 3), ClassStats { m: 0, lambda: 0, mu: 0, distinct: 3 });
        assert_eq!(stats("AAAAB", 2), ClassStats { m: 4, lambda: 1, mu: 3, distinct: 2 });
        assert_eq!(stats("", 0), ClassStats { m: 0, lambda: 0, mu: 0, distinct: 0 });
    }

    #[test]
    fn coloring_rejects_out_of_range() {
        assert_eq!(Coloring::new(vec![0, 3], 3), Err(Error::ColorOutOfRange { color: 3, palette: 3 }));
        assert!(Coloring::new(vec![], 0).is_ok());
        assert_eq!(Coloring::from_letters("ABBA", 2).unwrap().to_string(), "ABBA");
    }

    #[test]
    fn enumerate_examples() {
        let t = enumerate_counts(2, 2).unwrap();
        assert_eq!(t.by_match_cell.len(), 2);
        assert_eq!(t.cell(0, 0), 2u32);
        assert_eq!(t.cell(2, 1), 2u32);

        let t = enumerate_counts(0, 3).unwrap();
        assert_eq!(t.by_match_cell.len(), 1);
        assert_eq!(t.cell(0, 0), 1u32);
        assert_eq!(t.repeats(0), 1u32);

        let t = enumerate_counts(5, 3).unwrap();
        assert_eq!(t.cell(4, 1), 30u32);
        assert_eq!(t.cell(4, 2), 90u32);
    }

    #[test]
    fn empty_palette() {
        let t = enumerate_counts(3, 0).unwrap();
        assert!(t.by_match_cell.is_empty());
        assert!(t.by_repeat_count.is_empty());
        assert!(verify(3, 0).unwrap().passed);
    }

    #[test]
    fn budget_is_enforced() {
        let oracle = Oracle::new().with_budget(100);
        assert!(oracle.enumerate_counts(4, 3).is_ok());
        assert_eq!(
            oracle.enumerate_counts(5, 3),
            Err(Error::BudgetExceeded { colorings: Some(243), budget: 100 })
        );
        assert_eq!(
            Oracle::new().enumerate_counts(100, 10),
            Err(Error::BudgetExceeded { colorings: None, budget: DEFAULT_BUDGET })
        );
        assert!(Oracle::new().fits(1_000, 1));
    }

    #[test]
    fn parallel_equals_sequential() {
        for (k, n) in [(1, 5), (4, 4), (6, 3), (5, 6)] {
            let par = Oracle::new().enumerate_counts(k, n).unwrap();
            let seq = Oracle::new().sequential().enumerate_counts(k, n).unwrap();
            assert_eq!(par, seq);
        }
    }

    #[test]
    fn verify_examples() {
        let r = verify(5, 3).unwrap();
        assert!(r.passed, "{:?}", r.mismatches);
        assert_eq!(r.cells_checked, 12 + 5);

        let r = verify(0, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.cells_checked, 2);

        assert!(verify(6, 4).unwrap().passed);
    }

    #[test]
    fn verify_range_skips_over_budget() {
        let report = Oracle::new().with_budget(10).verify_range(3, 3);
        assert!(report.passed);
        assert_eq!(report.skipped, vec![(3, 3)]);
        assert_eq!(report.reports.len() + report.skipped.len(), 16);
    }

    #[test]
    fn random_relabel_and_reverse() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        for _ in 0..2_000 {
            let palette = rng.gen_range(1..8u32);
            let len = rng.gen_range(0..14);
            let colors: Vec<u32> = (0..len).map(|_| rng.gen_range(0..palette)).collect();
            let base = classify(&Coloring::new(colors.clone(), palette).unwrap());

            let mut relabel: Vec<u32> = (0..palette).collect();
            relabel.shuffle(&mut rng);
            let mapped = colors.iter().map(|&c| relabel[c as usize]).collect();
            assert_eq!(classify(&Coloring::new(mapped, palette).unwrap()), base);

            let reversed = colors.iter().rev().copied().collect();
            assert_eq!(classify(&Coloring::new(reversed, palette).unwrap()), base);
        }
    }

    proptest! {
        #[test]
        fn stats_relations(palette in 1u32..9, colors in proptest::collection::vec(0u32..9, 0..20)) {
            let colors: Vec<u32> = colors.into_iter().map(|c| c % palette).collect();
            let k = colors.len() as u64;
            let s = classify(&Coloring::new(colors, palette).unwrap());
            prop_assert_eq!(s.m, s.mu + s.lambda);
            prop_assert_eq!(s.mu, k - s.distinct);
            prop_assert!(s.lambda <= s.m / 2);
            prop_assert!(s.m <= k);
            prop_assert_ne!(s.m, 1);
        }
    }
}
