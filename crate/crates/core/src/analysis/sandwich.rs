use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectra::{extreme_eigs, EigenMode};
use crate::symbols::AggregateSymbol;
use crate::toeplitz::{loewner_leq, SymToeplitz};

use super::{assemble, BoundReport, CheckTolerances};

/// Weights `c_j ∈ [c_*, c^*]` and symbol factors `f_j = d_j g_j`,
/// `d_j ∈ [d_*, d^*]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SandwichConfig {
    pub n: usize,
    pub c: Vec<f64>,
    pub c_lower: f64,
    pub c_upper: f64,
    pub d: Vec<f64>,
    pub d_lower: f64,
    pub d_upper: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl SandwichConfig {
    /// All `c_j = d_j = 1` with unit bounds.
    pub fn unit(n: usize) -> Self {
        Self {
            n,
            c: vec![1.0; n],
            c_lower: 1.0,
            c_upper: 1.0,
            d: vec![1.0; n],
            d_lower: 1.0,
            d_upper: 1.0,
            seed: None,
        }
    }

    /// `c_j`, `d_j` uniform on the given ranges, drawn from a seeded ChaCha8
    /// stream (all `c` first, then all `d`).
    pub fn random(n: usize, c_range: (f64, f64), d_range: (f64, f64), seed: u64) -> Result<Self> {
        let cfg = Self {
            n,
            c: Vec::new(),
            c_lower: c_range.0,
            c_upper: c_range.1,
            d: Vec::new(),
            d_lower: d_range.0,
            d_upper: d_range.1,
            seed: Some(seed),
        };
        cfg.check_bounds()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = (0..n).map(|_| rng.random_range(c_range.0..=c_range.1)).collect();
        let d = (0..n).map(|_| rng.random_range(d_range.0..=d_range.1)).collect();
        let cfg = Self { c, d, ..cfg };
        cfg.validate()?;
        Ok(cfg)
    }

    fn check_bounds(&self) -> Result<()> {
        let ok = |lo: f64, hi: f64| lo.is_finite() && hi.is_finite() && 0.0 < lo && lo <= hi;
        if !ok(self.c_lower, self.c_upper) {
            return Err(Error::Config(format!(
                "need 0 < c_* <= c^*, got [{}, {}]",
                self.c_lower, self.c_upper
            )));
        }
        if !ok(self.d_lower, self.d_upper) {
            return Err(Error::Config(format!(
                "need 0 < d_* <= d^*, got [{}, {}]",
                self.d_lower, self.d_upper
            )));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.check_bounds()?;
        if self.n == 0 {
            return Err(Error::Config("n must be at least 1".into()));
        }
        if self.c.len() != self.n || self.d.len() != self.n {
            return Err(Error::Config(format!(
                "expected {} weights, got c: {}, d: {}",
                self.n,
                self.c.len(),
                self.d.len()
            )));
        }
        let inside = |v: &[f64], lo: f64, hi: f64| v.iter().all(|x| (lo..=hi).contains(x));
        if !inside(&self.c, self.c_lower, self.c_upper) {
            return Err(Error::Config("some c_j outside [c_*, c^*]".into()));
        }
        if !inside(&self.d, self.d_lower, self.d_upper) {
            return Err(Error::Config("some d_j outside [d_*, d^*]".into()));
        }
        Ok(())
    }
}

struct Extremes {
    min: f64,
    max: f64,
    mu2: f64,
}

fn extremes(t: &SymToeplitz) -> Result<Extremes> {
    let (min, max) = extreme_eigs(t, EigenMode::Full)?;
    Ok(Extremes {
        min,
        max,
        mu2: max / min,
    })
}

/// Two-sided sandwich `lo · inner ≤ outer ≤ hi · inner` and its six scalar
/// consequences.
fn two_sided(
    prefix: &str,
    inner: &SymToeplitz,
    outer: &SymToeplitz,
    lo: f64,
    hi: f64,
    tol: &CheckTolerances,
) -> Result<Vec<BoundReport>> {
    let lower = loewner_leq(&inner.scaled(lo), outer, tol.rel)?;
    let upper = loewner_leq(outer, &inner.scaled(hi), tol.rel)?;
    let e_in = extremes(inner)?;
    let e_out = extremes(outer)?;
    let rel = tol.rel;
    Ok(vec![
        BoundReport::loewner(format!("{prefix}.matrix_lower"), &lower),
        BoundReport::loewner(format!("{prefix}.matrix_upper"), &upper),
        BoundReport::relative(format!("{prefix}.lambda_min_lower"), lo * e_in.min, e_out.min, rel),
        BoundReport::relative(format!("{prefix}.lambda_min_upper"), e_out.min, hi * e_in.min, rel),
        BoundReport::relative(format!("{prefix}.lambda_max_lower"), lo * e_in.max, e_out.max, rel),
        BoundReport::relative(format!("{prefix}.lambda_max_upper"), e_out.max, hi * e_in.max, rel),
        BoundReport::relative(format!("{prefix}.mu2_lower"), lo / hi * e_in.mu2, e_out.mu2, rel),
        BoundReport::relative(format!("{prefix}.mu2_upper"), e_out.mu2, hi / lo * e_in.mu2, rel),
    ])
}

/// Builds `T̂_n` (weights `h^{jh}`), `T̃_n` (weights `c_j h^{jh}`) and `𝒯_n`
/// (weights `c_j d_j h^{jh}`) and checks
///
/// - `d_* T̃_n ≤ 𝒯_n ≤ d^* T̃_n` (prefix `d_sandwich`),
/// - `c_* T̂_n ≤ T̃_n ≤ c^* T̂_n` (prefix `c_sandwich`),
///
/// each with the bounds on `λ_min`, `λ_max` and `μ₂` they imply.
pub fn sandwich_check(cfg: &SandwichConfig, tol: &CheckTolerances) -> Result<Vec<BoundReport>> {
    cfg.validate()?;
    let n = cfg.n;
    let cd: Vec<f64> = cfg.c.iter().zip(&cfg.d).map(|(c, d)| c * d).collect();
    let hat = assemble(&AggregateSymbol::hat(n), n)?;
    let tilde = assemble(&AggregateSymbol::scaled_hat(&cfg.c)?, n)?;
    let full = assemble(&AggregateSymbol::scaled_hat(&cd)?, n)?;

    let mut out = two_sided("d_sandwich", &tilde, &full, cfg.d_lower, cfg.d_upper, tol)?;
    out.extend(two_sided("c_sandwich", &hat, &tilde, cfg.c_lower, cfg.c_upper, tol)?);
    Ok(out
        .into_iter()
        .map(|r| {
            let r = r.with_param("n", n);
            match cfg.seed {
                Some(s) => r.with_param("seed", s),
                None => r,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverted_bounds_rejected() {
        let err = SandwichConfig::random(8, (2.0, 0.5), (1.0, 1.0), 1).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        let mut cfg = SandwichConfig::unit(4);
        cfg.c[2] = 3.0;
        assert!(sandwich_check(&cfg, &CheckTolerances::default()).is_err());
    }

    #[test]
    fn random_config_is_reproducible() {
        let a = SandwichConfig::random(16, (0.5, 2.0), (0.25, 4.0), 7).unwrap();
        let b = SandwichConfig::random(16, (0.5, 2.0), (0.25, 4.0), 7).unwrap();
        assert_eq!(a, b);
        assert!(a.validate().is_ok());
    }

    #[test]
    fn unit_config_is_equality() {
        let reps = sandwich_check(&SandwichConfig::unit(8), &CheckTolerances::default()).unwrap();
        assert_eq!(reps.len(), 16);
        for r in &reps {
            assert!(r.passed, "{r:?}");
            assert!(r.margin.abs() <= 1e-12 * r.rhs.abs().max(1.0), "{r:?}");
        }
    }
}
