//! Aggregate counts built from `Z(k, n, m, λ)`.
//!
//! Two statistics are in play. The *match* statistic `m` counts balls whose
//! color occurs on some other ball anywhere in the sequence. The *repeat*
//! statistic `μ` counts balls whose color already occurred earlier. A
//! sequence with `λ` repeated colors has `m = μ + λ`, because the first
//! occurrence of each repeated color is matched but is not a repeat.
//!
//! Every operation accepts all non-negative inputs. `m = 1` has no sequences;
//! `m = 0` and `μ = 0` count injective colorings.

use rayon::prelude::*;

use crate::sequence::{z_count, SequenceClass};
use crate::table::DistributionTable;
use crate::Count;

/// Length-`k` sequences over `n` colors with exactly `m` matched balls.
///
/// Sums `Z(k, n, m, λ)` for `λ` from 0 to `min(⌊m/2⌋, n - k + m)`; an empty
/// range gives zero.
pub fn problem1_matches_fixed_length(k: u64, n: u64, m: u64) -> Count {
    let upper = i128::from(m / 2).min(i128::from(n) - i128::from(k) + i128::from(m));
    if upper < 0 {
        return Count::zero();
    }
    (0..=upper as u64)
        .map(|lambda| z_count(SequenceClass::new(k, n, m, lambda)))
        .sum()
}

/// Sequences of any length over `n` colors with exactly `m` matched balls,
/// summing [`problem1_matches_fixed_length`] over lengths `m ..= m + n - 1`.
///
/// For `m = 0` the same length range is used, so only injective colorings of
/// length below `n` are counted.
pub fn problem2_matches_any_length(n: u64, m: u64) -> Count {
    if n == 0 {
        return Count::zero();
    }
    (m..=m + n - 1)
        .map(|k| problem1_matches_fixed_length(k, n, m))
        .sum()
}

/// Length-`k` sequences over `n` colors with exactly `mu` balls whose color
/// appeared earlier in the sequence.
///
/// Sums `Z(k, n, μ + λ, λ)` for `λ` in `0 ..= μ`. Returns zero when
/// `μ > k - 1`; `μ = 0` gives the injective colorings, including the empty
/// sequence when `k = 0`.
pub fn problem3_repeats_fixed_length(k: u64, n: u64, mu: u64) -> Count {
    if mu == 0 {
        return z_count(SequenceClass::new(k, n, 0, 0));
    }
    if mu >= k {
        return Count::zero();
    }
    (0..=mu)
        .map(|lambda| z_count(SequenceClass::new(k, n, mu + lambda, lambda)))
        .sum()
}

/// Sequences of any length over `n` colors with exactly `mu` repeats, summing
/// [`problem3_repeats_fixed_length`] over lengths `mu + 1 ..= n + mu`.
///
/// The empty sequence is never counted, also not for `mu = 0`.
pub fn problem4_repeats_any_length(n: u64, mu: u64) -> Count {
    (mu + 1..=n + mu)
        .map(|k| problem3_repeats_fixed_length(k, n, mu))
        .sum()
}

/// Every `(m, λ)` cell with `0 ≤ m ≤ k`, `0 ≤ λ ≤ ⌊m/2⌋` and every `μ` in
/// `0 ..= max(k - 1, 0)`, evaluated by formula.
pub fn distribution_table(k: u64, n: u64) -> DistributionTable {
    let cells: Vec<((u64, u64), Count)> = (0..=k)
        .flat_map(|m| (0..=m / 2).map(move |lambda| (m, lambda)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(m, lambda)| ((m, lambda), z_count(SequenceClass::new(k, n, m, lambda))))
        .collect();
    let repeats: Vec<(u64, Count)> = (0..=k.saturating_sub(1))
        .into_par_iter()
        .map(|mu| (mu, problem3_repeats_fixed_length(k, n, mu)))
        .collect();

    let mut table = DistributionTable::new(k, n);
    for ((m, lambda), count) in cells {
        table.add_cell(m, lambda, count);
    }
    for (mu, count) in repeats {
        table.add_repeats(mu, count);
    }
    table
}
