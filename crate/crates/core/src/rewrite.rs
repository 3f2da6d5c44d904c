//! Normal ordering by left multiplication.
//!
//! Multiplying a normal form on the left by `x^r` only shifts exponents.
//! Multiplying by `I` uses integration by parts,
//!
//! ```text
//! I (x^α I^β) = Σ_{j=0}^{α} (-1)^j (α)_j x^{α-j} I^{β+1+j},
//! ```
//!
//! and `δ` integrations collapse to a single sum because the intermediate
//! indices form weakly increasing chains:
//!
//! ```text
//! I^δ (x^α I^β) = Σ_{k=0}^{α} (-1)^k (α)_k C(k+δ-1, δ-1) x^{α-k} I^{β+δ+k}.
//! ```

use num_bigint::BigInt;

use crate::combinatorics::{falling_factorial, weak_compositions};
use crate::normal_form::{Monomial, NormalForm};
use crate::word::{Generator, Word};
use crate::{Error, Result};

/// Left multiplication by `x^r`.
pub fn apply_x(nf: &NormalForm, r: u64) -> NormalForm {
    if r == 0 {
        return nf.clone();
    }
    nf.map_monomials(|m| Monomial::new(m.x_power + r, m.i_power))
}

fn signed(magnitude: num_bigint::BigUint, negative: bool) -> BigInt {
    let v = BigInt::from(magnitude);
    if negative {
        -v
    } else {
        v
    }
}

/// Left multiplication by a single `I`.
pub fn apply_i(nf: &NormalForm) -> NormalForm {
    let mut out = NormalForm::zero();
    for (m, c) in nf {
        let (alpha, beta) = (m.x_power, m.i_power);
        for j in 0..=alpha {
            let weight = signed(falling_factorial(alpha, j), j % 2 == 1);
            out.add_term(Monomial::new(alpha - j, beta + 1 + j), weight * c);
        }
    }
    out
}

/// `I^δ (x^α I^β)` in normal-ordered form.
///
/// Fails with [`Error::ZeroIntegrationPower`] when `delta == 0`.
pub fn apply_i_power(alpha: u64, beta: u64, delta: u64) -> Result<NormalForm> {
    if delta == 0 {
        return Err(Error::ZeroIntegrationPower);
    }
    let mut out = NormalForm::zero();
    for k in 0..=alpha {
        let magnitude = falling_factorial(alpha, k) * weak_compositions(k, delta);
        out.add_term(Monomial::new(alpha - k, beta + delta + k), signed(magnitude, k % 2 == 1));
    }
    Ok(out)
}

/// Left multiplication of an arbitrary normal form by `I^δ`.
fn apply_i_power_nf(nf: &NormalForm, delta: u64) -> NormalForm {
    if delta == 0 {
        return nf.clone();
    }
    let mut out = NormalForm::zero();
    for (m, c) in nf {
        let image = apply_i_power(m.x_power, m.i_power, delta).expect("delta is positive");
        for (mm, cc) in &image {
            out.add_term(*mm, cc * c);
        }
    }
    out
}

/// Applies the operator `w` on the left of `nf`, innermost block first.
///
/// This is a monoid action: `apply_word(a·b, nf) = apply_word(a, apply_word(b, nf))`.
pub fn apply_word(w: &Word, nf: &NormalForm) -> NormalForm {
    w.blocks().iter().rev().fold(nf.clone(), |acc, block| {
        let e = u64::from(block.exponent);
        match block.generator {
            Generator::X => apply_x(&acc, e),
            Generator::I => apply_i_power_nf(&acc, e),
        }
    })
}

/// The normal-ordered expansion of `w`. The identity maps to `x⁰ I⁰`.
pub fn normal_order(w: &Word) -> NormalForm {
    apply_word(w, &NormalForm::one())
}
