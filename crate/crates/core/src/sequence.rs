//! Counting cells `(k, n, m, λ)` and the central count `Z(k, n, m, λ)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{binomial, falling_factorial};
use crate::error::{Error, Result};
use crate::surjective::doubly_surjective_count;
use crate::Count;

/// One counting cell: length-`k` sequences over an `n`-color palette with
/// exactly `m` matched balls and exactly `lambda` repeated colors.
///
/// No upper bounds are enforced. A combination that cannot occur is still a
/// valid class; it just has count zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SequenceClass {
    pub k: u64,
    pub n: u64,
    pub m: u64,
    pub lambda: u64,
}

impl SequenceClass {
    pub fn new(k: u64, n: u64, m: u64, lambda: u64) -> Self {
        SequenceClass { k, n, m, lambda }
    }

    /// Builds a class from signed inputs, rejecting negatives.
    pub fn from_signed(k: i64, n: i64, m: i64, lambda: i64) -> Result<Self> {
        Ok(SequenceClass {
            k: non_negative("k", k)?,
            n: non_negative("n", n)?,
            m: non_negative("m", m)?,
            lambda: non_negative("lambda", lambda)?,
        })
    }
}

pub(crate) fn non_negative(name: &'static str, value: i64) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::NegativeParameter { name, value })
}

impl fmt::Display for SequenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, n={}, m={}, lambda={})", self.k, self.n, self.m, self.lambda)
    }
}

/// The structural reasons a cell can be empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Constraint {
    /// With `k > n`, at least `k - n + 1` balls must be matched.
    MatchFloor,
    /// At most `⌊m/2⌋` colors can be repeated among `m` matched balls.
    LambdaVsHalfM,
    /// The `k - m` unmatched balls need `k - m` distinct non-repeated colors,
    /// so `λ ≤ n - k + m`.
    LambdaVsSlack,
    /// A single matched ball has nothing to match.
    ExactlyOneMatch,
    /// `m = 0` forces `λ = 0` and `k ≤ n`.
    ZeroMatchShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub feasible: bool,
    pub violated_constraints: Vec<Constraint>,
}

/// Checks every structural constraint and lists those the class violates.
pub fn feasibility(class: SequenceClass) -> FeasibilityReport {
    let SequenceClass { k, n, m, lambda } = class;
    let (k_s, n_s, m_s, l_s) = (k as i128, n as i128, m as i128, lambda as i128);
    let mut violated = Vec::new();

    if k > n && m_s < k_s - n_s + 1 {
        violated.push(Constraint::MatchFloor);
    }
    if lambda > m / 2 {
        violated.push(Constraint::LambdaVsHalfM);
    }
    if l_s > n_s - k_s + m_s {
        violated.push(Constraint::LambdaVsSlack);
    }
    if m == 1 {
        violated.push(Constraint::ExactlyOneMatch);
    }
    if m == 0 && (lambda != 0 || k > n) {
        violated.push(Constraint::ZeroMatchShape);
    }

    FeasibilityReport {
        feasible: violated.is_empty(),
        violated_constraints: violated,
    }
}

/// `Z(k, n, m, λ)`: the number of length-`k` colorings from an `n`-color
/// palette with exactly `m` matched balls and exactly `λ` repeated colors.
///
/// Choose the repeated colors, choose the matched positions, color the
/// unmatched positions injectively with the other colors, then color the
/// matched positions doubly-surjectively onto the repeated colors.
///
/// ```
/// use colorseq::{z_count, SequenceClass};
/// assert_eq!(z_count(SequenceClass::new(5, 3, 4, 1)), 30u32);
/// assert_eq!(z_count(SequenceClass::new(5, 3, 4, 2)), 90u32);
/// ```
pub fn z_count(class: SequenceClass) -> Count {
    if !feasibility(class).feasible {
        return Count::zero();
    }
    let SequenceClass { k, n, m, lambda } = class;
    if m > k {
        return Count::zero();
    }
    // With m <= k, feasibility gives k - m <= n - lambda.
    binomial(n, lambda as i64)
        * binomial(k, m as i64)
        * falling_factorial(n - lambda, k - m)
        * doubly_surjective_count(m, lambda)
}
