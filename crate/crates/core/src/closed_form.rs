//! Explicit expansion of an arbitrary word as a sum over monotone chains.
//!
//! Write `w = x^{r_n} I^{s_n} ⋯ x^{r_1} I^{s_1}`, `S_j = r_1 + ⋯ + r_j` and
//! `s = s_1 + ⋯ + s_n`. Then
//!
//! ```text
//! w = Σ (-1)^{p_{n-1}} Π_{j=1}^{n-1} (S_j - p_{j-1})_{p_j - p_{j-1}} C(p_j - p_{j-1} + s_{j+1} - 1, s_{j+1} - 1)
//!       · x^{S_n - p_{n-1}} I^{s + p_{n-1}}
//! ```
//!
//! summed over chains `0 = p_0 ≤ p_1 ≤ ⋯ ≤ p_{n-1}` with `p_j ≤ S_j`. Each
//! `p_j` is the total exponent drop after the first `j + 1` factors, so the
//! final monomial depends on the whole drop `p_{n-1}`, not only on its last
//! increment `p_{n-1} - p_{n-2}`. When `s_{j+1} = 0` the binomial counts weak
//! compositions into zero parts: 1 if `p_j = p_{j-1}`, else 0.
//!
//! The weight of a chain is a product of per-stage factors that each depend
//! only on `(p_{j-1}, p_j)`, so the sum is evaluated one level at a time in
//! `O(n S²)` big-integer operations rather than by listing every chain.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{falling_factorial, weak_compositions};
use crate::normal_form::{Monomial, NormalForm};
use crate::word::Word;

/// Normal form of `w` computed from the chain-sum formula, independently of
/// the rewrite engine.
pub fn word_closed_form(w: &Word) -> NormalForm {
    let factors = w.factors();
    let Some(last) = factors.len().checked_sub(1) else {
        return NormalForm::one();
    };
    let partial: Vec<u64> = factors
        .iter()
        .scan(0u64, |acc, f| {
            *acc += f.r;
            Some(*acc)
        })
        .collect();
    let total_x = partial[last];
    let total_i: u64 = factors.iter().map(|f| f.s).sum();

    if last == 0 {
        return NormalForm::monomial(Monomial::new(total_x, total_i), BigInt::one());
    }

    // ways[p] = Σ over chains ending at level j with p_j = p of the product of
    // the first j stage weights. Summing level by level is the nested chain sum
    // with each inner sum factored out.
    let mut ways: Vec<BigUint> = vec![BigUint::one()];
    for j in 1..=last {
        let cap = partial[j - 1];
        let next_s = factors[j].s;
        let mut next = vec![BigUint::zero(); cap as usize + 1];
        for (p_j, slot) in next.iter_mut().enumerate() {
            let p_j = p_j as u64;
            for (p_prev, w) in ways.iter().enumerate().take(p_j as usize + 1) {
                if w.is_zero() {
                    continue;
                }
                let p_prev = p_prev as u64;
                let step = p_j - p_prev;
                let stage = falling_factorial(cap - p_prev, step) * weak_compositions(step, next_s);
                if !stage.is_zero() {
                    *slot += stage * w;
                }
            }
        }
        ways = next;
    }

    ways.into_iter()
        .enumerate()
        .map(|(drop, magnitude)| {
            let drop = drop as u64;
            let c = BigInt::from(magnitude);
            let c = if drop % 2 == 1 { -c } else { c };
            (Monomial::new(total_x - drop, total_i + drop), c)
        })
        .collect()
}
