//! Sparse integer combinations of the normal-ordered basis `xⁱ Iʲ`.

use alloc::collections::btree_map::{self, BTreeMap, Entry};
use core::cmp::Ordering;
use core::ops::{Add, Neg};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The basis element `x^{x_power} I^{i_power}`.
///
/// Ordered by `i_power`, then `x_power`, which on a single anti-diagonal is the
/// order of increasing offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x_power: u64,
    pub i_power: u64,
}

impl Monomial {
    pub const fn new(x_power: u64, i_power: u64) -> Self {
        Monomial { x_power, i_power }
    }

    pub const fn degree(&self) -> u64 {
        self.x_power + self.i_power
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.i_power, self.x_power).cmp(&(other.i_power, other.x_power))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite sum `Σ c(i, j) xⁱ Iʲ` with nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NormalForm {
    terms: BTreeMap<Monomial, BigInt>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm::default()
    }

    /// The identity operator `x⁰ I⁰`.
    pub fn one() -> Self {
        NormalForm::monomial(Monomial::new(0, 0), BigInt::one())
    }

    pub fn monomial(m: Monomial, coeff: BigInt) -> Self {
        let mut nf = NormalForm::zero();
        nf.add_term(m, coeff);
        nf
    }

    /// Accumulates `coeff · m`, removing the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
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

    /// Terms in ascending `(i_power, x_power)` order.
    pub fn iter(&self) -> btree_map::Iter<'_, Monomial, BigInt> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().copied()
    }

    pub fn add(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> NormalForm {
        if c.is_zero() {
            return NormalForm::zero();
        }
        NormalForm { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    /// Maps every key through `f`, merging collisions.
    pub fn map_monomials<F: FnMut(Monomial) -> Monomial>(&self, mut f: F) -> NormalForm {
        let mut out = NormalForm::zero();
        for (m, c) in self.iter() {
            out.add_term(f(*m), c.clone());
        }
        out
    }

    /// Checks that every key lies on `(R - k, S + k)` for some `0 ≤ k ≤ R`,
    /// the support shape of a word with total degrees `(R, S)`.
    pub fn is_on_anti_diagonal(&self, total_x: u64, total_i: u64) -> bool {
        self.monomials().all(|m| {
            m.x_power + m.i_power == total_x + total_i
                && m.i_power >= total_i
                && m.x_power <= total_x
        })
    }
}

impl FromIterator<(Monomial, BigInt)> for NormalForm {
    fn from_iter<T: IntoIterator<Item = (Monomial, BigInt)>>(iter: T) -> Self {
        let mut nf = NormalForm::zero();
        for (m, c) in iter {
            nf.add_term(m, c);
        }
        nf
    }
}

impl<'a> IntoIterator for &'a NormalForm {
    type Item = (&'a Monomial, &'a BigInt);
    type IntoIter = btree_map::Iter<'a, Monomial, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl Add for &NormalForm {
    type Output = NormalForm;

    fn add(self, rhs: &NormalForm) -> NormalForm {
        NormalForm::add(self, rhs)
    }
}

impl Neg for &NormalForm {
    type Output = NormalForm;

    fn neg(self) -> NormalForm {
        NormalForm { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

pub fn nf_add(a: &NormalForm, b: &NormalForm) -> NormalForm {
    a.add(b)
}

pub fn nf_scale(a: &NormalForm, c: &BigInt) -> NormalForm {
    a.scale(c)
}

pub fn nf_equal(a: &NormalForm, b: &NormalForm) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn nf(terms: &[((u64, u64), i64)]) -> NormalForm {
        terms.iter().map(|&((x, i), c)| (Monomial::new(x, i), BigInt::from(c))).collect()
    }

    #[test]
    fn scale_by_zero_annihilates() {
        assert!(nf_scale(&nf(&[((1, 1), 1)]), &BigInt::zero()).is_zero());
    }

    #[test]
    fn cancellation_prunes() {
        let sum = nf_add(&nf(&[((2, 2), 1)]), &nf(&[((2, 2), -1)]));
        assert!(sum.is_zero());
        assert_eq!(sum, NormalForm::zero());
    }

    #[test]
    fn disjoint_keys_union() {
        let sum = nf_add(&nf(&[((2, 2), 1)]), &nf(&[((1, 3), -1)]));
        assert!(nf_equal(&sum, &nf(&[((2, 2), 1), ((1, 3), -1)])));
        assert_eq!(sum.len(), 2);
    }

    #[test]
    fn iteration_order_by_i_power_then_x_power() {
        let f = nf(&[((0, 9), 1), ((5, 4), 2), ((3, 4), 3), ((2, 7), 4)]);
        let keys: Vec<_> = f.monomials().map(|m| (m.x_power, m.i_power)).collect();
        assert_eq!(keys, [(3, 4), (5, 4), (2, 7), (0, 9)]);
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let f = nf(&[((1, 1), 0), ((2, 0), 3)]);
        assert_eq!(f.len(), 1);
        assert_eq!(f.coeff(Monomial::new(1, 1)), BigInt::zero());
    }

    #[test]
    fn anti_diagonal_check() {
        let f = nf(&[((2, 2), 1), ((1, 3), -1)]);
        assert!(f.is_on_anti_diagonal(2, 2));
        assert!(!f.is_on_anti_diagonal(1, 3));
        assert!(!nf(&[((3, 1), 1)]).is_on_anti_diagonal(2, 2));
    }
}
