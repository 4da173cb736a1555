use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::Result;
use crate::quadrature::Estimate;

use super::coeffs::power_coeff_quadrature;

type Key = (u64, usize, u64);

/// Memo table for single power-law coefficients `a_k(|θ|^{2-α})`, keyed by
/// `(α, k, tol)`. Safe for concurrent use.
#[derive(Debug, Default)]
pub struct CoeffCache {
    map: RwLock<HashMap<Key, (f64, f64)>>,
}

impl CoeffCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Returns `(value, error estimate)`.
    pub fn power(&self, alpha: f64, k: usize, tol: f64) -> Result<(f64, f64)> {
        let key = (alpha.to_bits(), k, tol.to_bits());
        if let Some(&hit) = self.map.read().expect("cache lock poisoned").get(&key) {
            return Ok(hit);
        }
        let Estimate { value, error } = power_coeff_quadrature(alpha, k, tol)?;
        self.map
            .write()
            .expect("cache lock poisoned")
            .insert(key, (value, error));
        Ok((value, error))
    }
}
