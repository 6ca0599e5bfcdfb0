use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::Count;

/// Counts for every statistic cell of a fixed `(k, n)`.
///
/// `by_match_cell` is keyed by `(m, λ)` and `by_repeat_count` by `μ`. Only
/// non-zero counts are stored; lookups of absent keys return zero. Iteration
/// is in ascending key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TableRepr", try_from = "TableRepr")]
pub struct DistributionTable {
    pub k: u64,
    pub n: u64,
    pub by_match_cell: BTreeMap<(u64, u64), Count>,
    pub by_repeat_count: BTreeMap<u64, Count>,
}

impl DistributionTable {
    pub fn new(k: u64, n: u64) -> Self {
        DistributionTable {
            k,
            n,
            by_match_cell: BTreeMap::new(),
            by_repeat_count: BTreeMap::new(),
        }
    }

    pub fn cell(&self, m: u64, lambda: u64) -> Count {
        self.by_match_cell.get(&(m, lambda)).cloned().unwrap_or_default()
    }

    pub fn repeats(&self, mu: u64) -> Count {
        self.by_repeat_count.get(&mu).cloned().unwrap_or_default()
    }

    /// Adds `count` to cell `(m, λ)`; zero counts leave the table unchanged.
    pub fn add_cell(&mut self, m: u64, lambda: u64, count: Count) {
        if !count.is_zero() {
            *self.by_match_cell.entry((m, lambda)).or_default() += count;
        }
    }

    pub fn add_repeats(&mut self, mu: u64, count: Count) {
        if !count.is_zero() {
            *self.by_repeat_count.entry(mu).or_default() += count;
        }
    }

    pub fn match_total(&self) -> Count {
        self.by_match_cell.values().sum()
    }

    pub fn repeat_total(&self) -> Count {
        self.by_repeat_count.values().sum()
    }
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    k: u64,
    n: u64,
    by_match_cell: Vec<CellRow>,
    by_repeat_count: Vec<RepeatRow>,
}

#[derive(Serialize, Deserialize)]
struct CellRow {
    m: u64,
    lambda: u64,
    count: Count,
}

#[derive(Serialize, Deserialize)]
struct RepeatRow {
    mu: u64,
    count: Count,
}

impl From<DistributionTable> for TableRepr {
    fn from(t: DistributionTable) -> Self {
        TableRepr {
            k: t.k,
            n: t.n,
            by_match_cell: t
                .by_match_cell
                .into_iter()
                .map(|((m, lambda), count)| CellRow { m, lambda, count })
                .collect(),
            by_repeat_count: t
                .by_repeat_count
                .into_iter()
                .map(|(mu, count)| RepeatRow { mu, count })
                .collect(),
        }
    }
}

impl TryFrom<TableRepr> for DistributionTable {
    type Error = String;

    fn try_from(r: TableRepr) -> Result<Self, Self::Error> {
        let mut t = DistributionTable::new(r.k, r.n);
        for row in r.by_match_cell {
            if t.by_match_cell.insert((row.m, row.lambda), row.count).is_some() {
                return Err(format!("duplicate cell ({}, {})", row.m, row.lambda));
            }
        }
        for row in r.by_repeat_count {
            if t.by_repeat_count.insert(row.mu, row.count).is_some() {
                return Err(format!("duplicate mu {}", row.mu));
            }
        }
        Ok(t)
    }
}
