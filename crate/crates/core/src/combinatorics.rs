//! Exact combinatorial primitives over arbitrary-precision integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Falling factorial `(a)_j = a (a-1) ⋯ (a-j+1)`.
///
/// The empty product (`j = 0`) is 1, and the result is 0 whenever `j > a`.
pub fn falling_factorial(a: u64, j: u64) -> BigUint {
    if j > a {
        return BigUint::zero();
    }
    (a - j + 1..=a).fold(BigUint::one(), |acc, t| acc * t)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // acc * (n - k + t) is always divisible by t after the previous steps.
    (1..=k).fold(BigUint::one(), |acc, t| acc * (n - k + t) / t)
}

/// Number of weak compositions of `total` into `parts` ordered nonnegative
/// parts, i.e. `C(total + parts - 1, parts - 1)`.
///
/// With zero parts only the empty composition of 0 exists, so the result is
/// 1 for `total = 0` and 0 otherwise. This is the value used for the
/// `C(i + s - 1, s - 1)` factor when an integration block is absent.
pub fn weak_compositions(total: u64, parts: u64) -> BigUint {
    if parts == 0 {
        return if total == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(total + parts - 1, parts - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(5, 2), BigUint::from(20u32));
        assert_eq!(falling_factorial(7, 0), BigUint::one());
        assert_eq!(falling_factorial(3, 5), BigUint::zero());
        assert_eq!(falling_factorial(0, 0), BigUint::one());
        assert_eq!(falling_factorial(5, 5), BigUint::from(120u32));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(3, 1), BigUint::from(3u32));
        assert_eq!(binomial(4, 4), BigUint::one());
        assert_eq!(binomial(6, 2), BigUint::from(15u32));
        assert_eq!(binomial(2, 3), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn binomial_matches_pascal_rule() {
        let mut row = alloc::vec![BigUint::one()];
        for n in 1..=40u64 {
            let mut next = alloc::vec![BigUint::one(); (n + 1) as usize];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            for (k, v) in next.iter().enumerate() {
                assert_eq!(&binomial(n, k as u64), v, "C({n}, {k})");
            }
            row = next;
        }
    }

    #[test]
    fn weak_composition_degenerate_parts() {
        assert_eq!(weak_compositions(0, 0), BigUint::one());
        assert_eq!(weak_compositions(3, 0), BigUint::zero());
        assert_eq!(weak_compositions(4, 1), BigUint::one());
        // 0 ≤ k1 ≤ k2 ≤ 3: (3+2 choose 2) = 10
        assert_eq!(weak_compositions(3, 3), BigUint::from(10u32));
    }
}
