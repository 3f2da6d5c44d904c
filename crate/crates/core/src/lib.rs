#![no_std]

//! Normal ordering in the operator algebra generated by multiplication by `x`
//! and the integration operator `I f(x) = ∫₀ˣ f(t) dt`.
//!
//! The two generators satisfy `[I, x] = -I²`, and every word in them has a
//! unique expansion `Σ c(i, j) xⁱ Iʲ` with integer coefficients. This crate
//! computes that expansion in several independent ways:
//!
//! - [`rewrite`]: the ground-truth engine, folding a word right-to-left with
//!   the integration-by-parts rule `I(x^α I^β) = Σ (-1)ʲ (α)ⱼ x^{α-j} I^{β+1+j}`.
//! - [`tables`]: Bessel numbers for `(xI)ⁿ` and the generalized triangle for
//!   `(x^λ I^δ)ⁿ`, built from their recurrences.
//! - [`closed_form`]: an explicit chain-sum expansion for arbitrary words.
//! - [`oracle`]: the operational action on monomials `xᵐ` over exact
//!   rationals, used to certify the symbolic results.
//!
//! The crate is `no_std` and only needs `alloc`.

extern crate alloc;

pub mod closed_form;
pub mod combinatorics;
mod error;
pub mod normal_form;
pub mod oracle;
pub mod rewrite;
pub mod tables;
pub mod word;

pub use closed_form::word_closed_form;
pub use combinatorics::{binomial, falling_factorial, weak_compositions};
pub use error::Error;
pub use normal_form::{nf_add, nf_equal, nf_scale, Monomial, NormalForm};
pub use oracle::{
    apply_nf_to_monomial, apply_word_to_monomial, verify_equivalence,
    verify_equivalence_with_samples, EquivalenceReport, Rational, RationalMonomial,
    RationalPolynomial, Sample,
};
pub use rewrite::{apply_i, apply_i_power, apply_word, apply_x, normal_order};
pub use tables::{
    bessel_row, bessel_via_identity, general_power_normal_form, generalized_triangle,
    xi_power_normal_form, BesselTriangle, GeneralizedTriangle,
};
pub use word::{Block, Factor, Generator, Word};

pub type Result<T> = core::result::Result<T, Error>;
