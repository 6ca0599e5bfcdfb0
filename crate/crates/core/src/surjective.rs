//! Doubly-surjective functions: maps from an `m`-set onto a `λ`-set in which
//! every point of the codomain has at least two preimages.
//!
//! The count is the inclusion-exclusion sum
//!
//! ```text
//! s(m, λ) = Σ_{j=0..λ} (-1)^j C(λ, j) Σ_{i=0..j} C(j, i) · m^(i falling) · (λ - j)^(m - i)
//! ```
//!
//! where `j` ranges over the codomain points forced to be "bad" (hit at most
//! once) and `i` over how many of those are hit exactly once. Terms with
//! `i > m` vanish because the falling factorial does, and `0^0 = 1`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use crate::arith::{binomial, falling_factorial};
use crate::Count;

/// Number of doubly-surjective functions from an `m`-set onto a `lambda`-set.
///
/// ```
/// use colorseq::doubly_surjective_count;
/// assert_eq!(doubly_surjective_count(0, 0), 1u32);
/// assert_eq!(doubly_surjective_count(4, 2), 6u32);
/// assert_eq!(doubly_surjective_count(3, 2), 0u32);
/// ```
pub fn doubly_surjective_count(m: u64, lambda: u64) -> Count {
    let mut total = BigInt::zero();
    for j in 0..=lambda {
        let free = lambda - j;
        let mut inner = BigUint::zero();
        for i in 0..=j.min(m) {
            let term = binomial(j, i as i64).into_biguint()
                * falling_factorial(m, i).into_biguint()
                * Count::pow(free, m - i).into_biguint();
            inner += term;
        }
        let outer = BigInt::from_biguint(Sign::Plus, binomial(lambda, j as i64).into_biguint() * inner);
        if j % 2 == 0 {
            total += outer;
        } else {
            total -= outer;
        }
    }
    let value = total
        .to_biguint()
        .unwrap_or_else(|| panic!("s({m}, {lambda}) evaluated negative: {total}"));
    Count::from(value)
}
