//! Binomial coefficients and falling factorials over exact integers.

use num_bigint::BigUint;
use num_traits::One;

use crate::Count;

/// `a` choose `b`, totalized to 0 when `b < 0` or `b > a`.
///
/// ```
/// use colorseq::binomial;
/// assert_eq!(binomial(5, 2), 10u32);
/// assert_eq!(binomial(3, 5), 0u32);
/// assert_eq!(binomial(3, -1), 0u32);
/// ```
pub fn binomial(a: u64, b: i64) -> Count {
    let Ok(b) = u64::try_from(b) else {
        return Count::zero();
    };
    if b > a {
        return Count::zero();
    }
    let b = b.min(a - b);
    // Each prefix product is itself a binomial, so the division is exact.
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    Count::from(acc)
}

/// The descending product `a (a-1) ... (a-t+1)` of `t` terms.
///
/// Empty when `t = 0` (giving 1) and zero when `t > a`, since the product
/// then passes through zero.
///
/// ```
/// use colorseq::falling_factorial;
/// assert_eq!(falling_factorial(5, 3), 60u32);
/// assert_eq!(falling_factorial(7, 0), 1u32);
/// assert_eq!(falling_factorial(2, 4), 0u32);
/// ```
pub fn falling_factorial(a: u64, t: u64) -> Count {
    if t > a {
        return Count::zero();
    }
    let mut acc = BigUint::one();
    for factor in (a - t + 1)..=a {
        acc *= factor;
    }
    Count::from(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pascal(rows: usize) -> Vec<Vec<u128>> {
        let mut tri = vec![vec![1u128]];
        for r in 1..rows {
            let prev = &tri[r - 1];
            let mut row = vec![1u128; r + 1];
            for c in 1..r {
                row[c] = prev[c - 1] + prev[c];
            }
            tri.push(row);
        }
        tri
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10u32);
        assert_eq!(binomial(4, 0), 1u32);
        assert_eq!(binomial(3, 5), 0u32);
        assert_eq!(binomial(0, 0), 1u32);
        assert_eq!(binomial(0, 1), 0u32);
        assert_eq!(binomial(7, -3), 0u32);
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let tri = pascal(100);
        for (a, row) in tri.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                assert_eq!(binomial(a as u64, b as i64), v, "C({a},{b})");
            }
        }
    }

    #[test]
    fn binomial_beyond_machine_width() {
        // C(200, 100), checked against a published value.
        let expected: Count = "90548514656103281165404177077484163874504589675413336841320"
            .parse()
            .unwrap();
        assert_eq!(binomial(200, 100), expected);
    }

    #[test]
    fn falling_factorial_edges() {
        assert_eq!(falling_factorial(5, 3), 60u32);
        assert_eq!(falling_factorial(7, 0), 1u32);
        assert_eq!(falling_factorial(2, 4), 0u32);
        assert_eq!(falling_factorial(0, 0), 1u32);
        assert_eq!(falling_factorial(6, 6), 720u32);
    }

    proptest! {
        #[test]
        fn falling_factorial_is_binomial_times_factorial(a in 0u64..60, t in 0u64..60) {
            let mut fact = Count::one();
            for i in 1..=t {
                fact = fact * Count::from(i);
            }
            prop_assert_eq!(falling_factorial(a, t), binomial(a, t as i64) * fact);
        }

        #[test]
        fn binomial_symmetry(a in 0u64..300, b in 0u64..300) {
            prop_assume!(b <= a);
            prop_assert_eq!(binomial(a, b as i64), binomial(a, (a - b) as i64));
        }
    }
}
