//! Coefficient triangles for powers of `x I` and `x^λ I^δ`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{falling_factorial, weak_compositions};
use crate::normal_form::{Monomial, NormalForm};
use crate::{Error, Result};

/// Rows `0..=max_n` of the Bessel triangle (OEIS A001498), built with
/// `a(n, k) = a(n-1, k) + (n-k+1) a(n, k-1)` from `a(0, 0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BesselTriangle {
    rows: Vec<Vec<BigUint>>,
}

impl BesselTriangle {
    pub fn new(max_n: u64) -> Self {
        let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
        for n in 1..=max_n {
            let prev = &rows[(n - 1) as usize];
            let mut row: Vec<BigUint> = Vec::with_capacity(n as usize + 1);
            row.push(BigUint::one());
            for k in 1..=n {
                let above = prev.get(k as usize).cloned().unwrap_or_default();
                let left = &row[(k - 1) as usize];
                row.push(above + left * (n - k + 1));
            }
            rows.push(row);
        }
        BesselTriangle { rows }
    }

    pub fn max_n(&self) -> u64 {
        (self.rows.len() - 1) as u64
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    pub fn row(&self, n: u64) -> Option<&[BigUint]> {
        self.rows.get(n as usize).map(Vec::as_slice)
    }

    /// `a(n, k)`, or zero outside the triangle.
    pub fn get(&self, n: u64, k: u64) -> BigUint {
        self.row(n)
            .and_then(|r| r.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }
}

/// Row `n` of the Bessel triangle, entries `k = 0..=n`.
pub fn bessel_row(n: u64) -> Vec<BigUint> {
    BesselTriangle::new(n).rows.pop().expect("triangle has at least one row")
}

/// `a(n, i)` recomputed from row `n - 1` through
/// `a(n, i) = Σ_{k=0}^{min(n-1, i)} (n-k)_{i-k} a(n-1, k)`.
pub fn bessel_via_identity(n: u64, i: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroParameter("n"));
    }
    if i > n {
        return Err(Error::IndexOutOfRange { n, i });
    }
    let prev = bessel_row(n - 1);
    Ok((0..=i.min(n - 1))
        .map(|k| falling_factorial(n - k, i - k) * &prev[k as usize])
        .sum())
}

/// `(xI)ⁿ = Σ_{k=0}^{n-1} (-1)^k a(n-1, k) x^{n-k} I^{n+k}`.
pub fn xi_power_normal_form(n: u64) -> Result<NormalForm> {
    if n == 0 {
        return Err(Error::ZeroParameter("n"));
    }
    Ok(alternating_anti_diagonal(&bessel_row(n - 1), n, n))
}

/// Rows `1..=n_max` of the coefficients `a^{(λ,δ)}_{n,k}` of `(x^λ I^δ)ⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedTriangle {
    lambda: u64,
    delta: u64,
    rows: Vec<Vec<BigUint>>,
}

impl GeneralizedTriangle {
    pub fn new(lambda: u64, delta: u64, n_max: u64) -> Result<Self> {
        if lambda == 0 {
            return Err(Error::ZeroParameter("lambda"));
        }
        if delta == 0 {
            return Err(Error::ZeroParameter("delta"));
        }
        if n_max == 0 {
            return Err(Error::ZeroParameter("n_max"));
        }
        let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
        for n in 1..n_max {
            let prev = &rows[(n - 1) as usize];
            let top = lambda * (n - 1);
            let row: Vec<BigUint> = (0..=lambda * n)
                .map(|j| {
                    let mut acc = BigUint::zero();
                    for k in 0..=j.min(top) {
                        acc += falling_factorial(lambda * n - k, j - k)
                            * weak_compositions(j - k, delta)
                            * &prev[k as usize];
                    }
                    acc
                })
                .collect();
            rows.push(row);
        }
        Ok(GeneralizedTriangle { lambda, delta, rows })
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn n_max(&self) -> u64 {
        self.rows.len() as u64
    }

    /// Rows in order; index 0 holds row `n = 1`.
    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// Row `n` (1-based), entries `k = 0..=λ(n-1)`.
    pub fn row(&self, n: u64) -> Option<&[BigUint]> {
        n.checked_sub(1)
            .and_then(|idx| self.rows.get(idx as usize))
            .map(Vec::as_slice)
    }
}

pub fn generalized_triangle(lambda: u64, delta: u64, n_max: u64) -> Result<GeneralizedTriangle> {
    GeneralizedTriangle::new(lambda, delta, n_max)
}

/// `(x^λ I^δ)ⁿ = Σ_{k=0}^{λ(n-1)} (-1)^k a^{(λ,δ)}_{n,k} x^{λn-k} I^{δn+k}`.
pub fn general_power_normal_form(lambda: u64, delta: u64, n: u64) -> Result<NormalForm> {
    if n == 0 {
        return Err(Error::ZeroParameter("n"));
    }
    let table = GeneralizedTriangle::new(lambda, delta, n)?;
    let row = table.row(n).expect("row n was built");
    Ok(alternating_anti_diagonal(row, lambda * n, delta * n))
}

fn alternating_anti_diagonal(row: &[BigUint], total_x: u64, total_i: u64) -> NormalForm {
    row.iter()
        .enumerate()
        .map(|(k, v)| {
            let k = k as u64;
            let c = BigInt::from(v.clone());
            let c = if k % 2 == 1 { -c } else { c };
            (Monomial::new(total_x - k, total_i + k), c)
        })
        .collect()
}
