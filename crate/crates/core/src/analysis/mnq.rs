use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::spectra::{extreme_eigs, EigenMode};
use crate::symbols::{eta_coeffs, AggregateSymbol};
use crate::toeplitz::SymToeplitz;

use super::{assemble, BoundReport, CheckTolerances};

/// Upper bounds on `λ_min(M_{n,q})`, `M_{n,q} = (1/q) Σ_j h^{α_j} T_n(|θ|^{2-α_j})`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MnqReport {
    /// `λ_min(M) ≤ λ_0 + (h²/(πq)) Σ_j α_j/(α_j+1)`.
    pub stated: BoundReport,
    /// `λ_min(M) ≤ λ_0 + (1/q) Σ_j α_j h² / (3π(3-α_j))`, the sum of the
    /// remainder norm bounds.
    pub remainder_sum: BoundReport,
    /// `λ_0 + max_j α_j h² / (3π(3-α_j))`, the single-term reading.
    pub single_term_rhs: f64,
    pub lambda_min: f64,
    /// `λ_0 = λ_min(T_n(θ²))`.
    pub lambda0: f64,
    /// `λ_min(M) / h²`.
    pub lambda_min_over_h2: f64,
    /// `λ_0 n²`.
    pub lambda0_n2: f64,
}

impl MnqReport {
    pub fn reports(&self) -> [BoundReport; 2] {
        [self.stated.clone(), self.remainder_sum.clone()]
    }
}

pub(crate) fn lambda0(n: usize) -> Result<f64> {
    let eta = SymToeplitz::assemble(&eta_coeffs(n)?)?;
    Ok(extreme_eigs(&eta, EigenMode::Full)?.0)
}

/// Checks the averaged minimal-eigenvalue bound for `q = alphas.len()` terms.
pub fn mnq_bound_check(n: usize, alphas: &[f64], tol: &CheckTolerances) -> Result<MnqReport> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let q = alphas.len();
    if q == 0 {
        return Err(invalid("need q >= 1 exponents"));
    }
    let h = 1.0 / n as f64;
    let qf = q as f64;
    let weights: Vec<f64> = alphas.iter().map(|&a| h.powf(a) / qf).collect();
    let sym = AggregateSymbol::new(weights, alphas.to_vec())?;
    let m = assemble(&sym, n)?;
    let lambda_min = extreme_eigs(&m, EigenMode::Full)?.0;
    let lambda0 = lambda0(n)?;

    let h2 = h * h;
    let stated_rhs = lambda0 + h2 / (PI * qf) * alphas.iter().map(|a| a / (a + 1.0)).sum::<f64>();
    let per_term = |a: f64| a * h2 / (3.0 * PI * (3.0 - a));
    let chain_rhs = lambda0 + alphas.iter().map(|&a| per_term(a)).sum::<f64>() / qf;
    let single_term_rhs = lambda0 + alphas.iter().map(|&a| per_term(a)).fold(0.0, f64::max);

    let stated = BoundReport::relative("mnq_stated", lambda_min, stated_rhs, tol.rel)
        .with_param("n", n)
        .with_param("q", q)
        .with_param("lambda0", lambda0);
    let remainder_sum = BoundReport::relative("mnq_remainder_sum", lambda_min, chain_rhs, tol.rel)
        .with_param("n", n)
        .with_param("q", q)
        .with_param("single_term_rhs", single_term_rhs);
    Ok(MnqReport {
        stated,
        remainder_sum,
        single_term_rhs,
        lambda_min,
        lambda0,
        lambda_min_over_h2: lambda_min / h2,
        lambda0_n2: lambda0 * (n * n) as f64,
    })
}

/// `q = n`, `α_j = jh`: `λ_min(h T_n(F̂_n)) ≤ λ_0 + (h³/π) Σ_j jh/(jh+1)`.
pub fn final_theorem_check(n: usize, tol: &CheckTolerances) -> Result<MnqReport> {
    let h = 1.0 / n.max(1) as f64;
    let alphas: Vec<f64> = (0..n).map(|j| j as f64 * h).collect();
    let mut r = mnq_bound_check(n, &alphas, tol)?;
    r.stated.name = "final_bound".into();
    Ok(r)
}

/// `(n, λ_min(T_n(θ²)) n²)` for each order.
pub fn eta_min_scaling(ns: &[usize]) -> Result<Vec<(usize, f64)>> {
    ns.iter()
        .map(|&n| Ok((n, lambda0(n)? * (n * n) as f64)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_zero_exponent_is_equality() {
        let r = mnq_bound_check(16, &[0.0], &CheckTolerances::default()).unwrap();
        assert!(r.stated.passed);
        assert!((r.stated.lhs - r.stated.rhs).abs() < 1e-12);
        assert_eq!(r.stated.rhs, r.lambda0);
    }

    #[test]
    fn empty_exponents_rejected() {
        assert!(mnq_bound_check(8, &[], &CheckTolerances::default()).is_err());
    }
}
