//! Operational semantics on monomials.
//!
//! `x` multiplies `c·xᵈ` into `c·xᵈ⁺¹` and `I` integrates it into
//! `c/(d+1)·xᵈ⁺¹`. Evaluating a word this way never touches the rewrite rule,
//! so agreement with a normal form is an independent check of that form.

use alloc::collections::btree_map::{self, BTreeMap, Entry};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::normal_form::NormalForm;
use crate::word::{Generator, Word};

/// Exact rational, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `coeff · x^degree`; the zero value has degree 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMonomial {
    pub coeff: Rational,
    pub degree: u64,
}

impl RationalMonomial {
    pub fn new(coeff: Rational, degree: u64) -> Self {
        let degree = if coeff.is_zero() { 0 } else { degree };
        RationalMonomial { coeff, degree }
    }
}

/// A polynomial in `x` with rational coefficients, zero terms pruned.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    terms: BTreeMap<u64, Rational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        RationalPolynomial::default()
    }

    pub fn add_term(&mut self, degree: u64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(degree) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coeff(&self, degree: u64) -> Rational {
        self.terms.get(&degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms by ascending degree.
    pub fn iter(&self) -> btree_map::Iter<'_, u64, Rational> {
        self.terms.iter()
    }

    pub fn add(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        for (d, c) in other.iter() {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl From<RationalMonomial> for RationalPolynomial {
    fn from(m: RationalMonomial) -> Self {
        let mut p = RationalPolynomial::zero();
        p.add_term(m.degree, m.coeff);
        p
    }
}

/// `m! / (m+j)!` as the product `Π_{t=1}^{j} 1/(m+t)`.
fn integration_factor(m: u64, j: u64) -> Rational {
    let denom = (1..=j).fold(BigInt::one(), |acc, t| acc * (m + t));
    Rational::new(BigInt::one(), denom)
}

/// The image of `xᵐ` under `w`.
pub fn apply_word_to_monomial(w: &Word, m: u64) -> RationalMonomial {
    let mut degree = m;
    let mut denom = BigInt::one();
    for block in w.blocks().iter().rev() {
        let e = u64::from(block.exponent);
        match block.generator {
            Generator::X => degree += e,
            Generator::I => {
                for _ in 0..e {
                    degree += 1;
                    denom *= degree;
                }
            }
        }
    }
    RationalMonomial::new(Rational::new(BigInt::one(), denom), degree)
}

/// The image of `xᵐ` under `Σ c(i, j) xⁱ Iʲ`, using
/// `xⁱ Iʲ xᵐ = m!/(m+j)! · x^{m+i+j}`.
pub fn apply_nf_to_monomial(nf: &NormalForm, m: u64) -> RationalPolynomial {
    let mut out = RationalPolynomial::zero();
    for (mono, c) in nf {
        let coeff = integration_factor(m, mono.i_power) * Rational::from_integer(c.clone());
        out.add_term(m + mono.x_power + mono.i_power, coeff);
    }
    out
}

/// Both sides evaluated at one sample point `xᵐ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub m: u64,
    pub lhs: RationalPolynomial,
    pub rhs: RationalPolynomial,
}

impl Sample {
    pub fn matches(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub equal: bool,
    pub samples: Vec<Sample>,
}

impl EquivalenceReport {
    pub fn first_mismatch(&self) -> Option<&Sample> {
        self.samples.iter().find(|s| !s.matches())
    }
}

/// Compares `w` and `nf` on `xᵐ` for `m = 0..=S+T`, where `S` is the total
/// `I` degree of `w` and `T` the number of terms of `nf`.
///
/// The maps `m ↦ m!/(m+j)!` for distinct `j` are linearly independent, so
/// agreement on more points than there are distinct `j` values pins down
/// every coefficient on the anti-diagonal.
pub fn verify_equivalence(w: &Word, nf: &NormalForm) -> EquivalenceReport {
    let (_, total_i) = w.total_degrees();
    verify_equivalence_with_samples(w, nf, total_i + nf.len() as u64 + 1)
}

/// Like [`verify_equivalence`] with an explicit number of sample points
/// `m = 0..count`.
pub fn verify_equivalence_with_samples(w: &Word, nf: &NormalForm, count: u64) -> EquivalenceReport {
    let samples: Vec<Sample> = (0..count)
        .map(|m| Sample {
            m,
            lhs: apply_word_to_monomial(w, m).into(),
            rhs: apply_nf_to_monomial(nf, m),
        })
        .collect();
    EquivalenceReport { equal: samples.iter().all(Sample::matches), samples }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::Monomial;
    use crate::word::Block;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn nf(terms: &[((u64, u64), i64)]) -> NormalForm {
        terms.iter().map(|&((x, i), c)| (Monomial::new(x, i), BigInt::from(c))).collect()
    }

    fn xixi() -> Word {
        Word::from_blocks([Block::x(1), Block::i(1), Block::x(1), Block::i(1)])
    }

    #[test]
    fn word_on_monomials() {
        let i = Word::from_blocks([Block::i(1)]);
        assert_eq!(apply_word_to_monomial(&i, 0), RationalMonomial::new(q(1, 1), 1));
        assert_eq!(apply_word_to_monomial(&xixi(), 0), RationalMonomial::new(q(1, 3), 4));
        assert_eq!(apply_word_to_monomial(&Word::identity(), 7), RationalMonomial::new(q(1, 1), 7));
    }

    #[test]
    fn normal_form_on_monomials() {
        let p = apply_nf_to_monomial(&nf(&[((1, 1), 1)]), 0);
        assert_eq!(p, RationalMonomial::new(q(1, 1), 2).into());
        let p = apply_nf_to_monomial(&nf(&[((2, 2), 1), ((1, 3), -1)]), 0);
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(4), q(1, 3));
        assert!(apply_nf_to_monomial(&NormalForm::zero(), 5).is_zero());
    }

    #[test]
    fn zero_monomial_has_degree_zero() {
        let z = RationalMonomial::new(Rational::zero(), 9);
        assert_eq!(z.degree, 0);
        assert!(RationalPolynomial::from(z).is_zero());
    }

    #[test]
    fn rational_lowest_terms() {
        let r = q(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert!((q(2, 3) + q(-2, 3)).is_zero());
        assert_eq!(q(2, 3) + q(-2, 3), q(0, 1));
    }

    #[test]
    fn verification_reports() {
        let xi = Word::from_blocks([Block::x(1), Block::i(1)]);
        assert!(verify_equivalence(&xi, &nf(&[((1, 1), 1)])).equal);

        let report = verify_equivalence(&xixi(), &nf(&[((2, 2), 1), ((1, 3), -1)]));
        assert!(report.equal);
        assert_eq!(report.samples.len(), 2 + 2 + 1);

        let report = verify_equivalence(&xixi(), &nf(&[((2, 2), 1)]));
        assert!(!report.equal);
        let bad = report.first_mismatch().unwrap();
        assert_eq!(bad.m, 0);
        assert_eq!(bad.lhs.coeff(4), q(1, 3));
        assert_eq!(bad.rhs.coeff(4), q(1, 2));
    }
}
