//! Symbols on `[-π, π]` and their Fourier coefficients.
//!
//! All symbols here are real, even and nonnegative, so the Fourier
//! coefficients are real cosine coefficients
//! `a_k = (1/π) ∫_0^π f(θ) cos(kθ) dθ` and only `k ≥ 0` is needed.

mod cache;
mod coeffs;
mod sampling;

use std::f64::consts::PI;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub use cache::CoeffCache;
pub use coeffs::{
    eta_coeffs, fourier_coeff_eta, fourier_coeff_power, fourier_coeffs_aggregate,
    fourier_coeffs_aggregate_termwise, psi_coeff, psi_coeff_bound, psi_coeffs,
};

/// Default oversampling factor of the FFT engine (`M = 16 n` samples).
pub const DEFAULT_OVERSAMPLE: usize = 16;

/// Coefficient engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Engine {
    /// Oscillation-partitioned composite Gauss-Legendre quadrature.
    #[default]
    Quadrature,
    /// Uniform sampling of the symbol followed by a discrete Fourier transform.
    FftSampling { oversample: usize },
    /// Analytic coefficients; only available for `α ∈ {0, 1}`.
    ClosedForm,
}

impl Engine {
    pub fn fft() -> Self {
        Engine::FftSampling {
            oversample: DEFAULT_OVERSAMPLE,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Engine::Quadrature => "quadrature",
            Engine::FftSampling { .. } => "fft-sampling",
            Engine::ClosedForm => "closed-form",
        }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(invalid(format!("exponent deficit alpha = {alpha} outside [0, 1]")));
    }
    Ok(())
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta.abs() <= PI) {
        return Err(invalid(format!("theta = {theta} outside [-pi, pi]")));
    }
    Ok(())
}

/// `g(θ) = |θ|^{2-α}` with `α ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerSymbol {
    alpha: f64,
}

impl PowerSymbol {
    pub fn new(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn eval(&self, theta: f64) -> Result<f64> {
        check_theta(theta)?;
        Ok(theta.abs().powf(2.0 - self.alpha))
    }
}

/// Remainder symbol `ψ(θ) = 1_{[-h,h]}(θ) (|θ|^{2-α} h^α - θ²)`, `h = 1/n`.
///
/// Nonnegative, even and supported on `[-h, h]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutoffSymbol {
    n: usize,
    alpha: f64,
}

impl CutoffSymbol {
    pub fn new(n: usize, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("cutoff symbol needs n >= 1"));
        }
        check_alpha(alpha)?;
        Ok(Self { n, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn h(&self) -> f64 {
        1.0 / self.n as f64
    }

    pub fn eval(&self, theta: f64) -> Result<f64> {
        check_theta(theta)?;
        let t = theta.abs();
        let h = self.h();
        if t > h {
            return Ok(0.0);
        }
        Ok(t.powf(2.0 - self.alpha) * h.powf(self.alpha) - t * t)
    }
}

/// `F(θ) = Σ_j w_j |θ|^{2-α_j}` with positive weights and `α_j ∈ [0, 1]`.
///
/// The number of terms is independent of the order of the Toeplitz matrices
/// built from it; for `F̂_n` both are `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateSymbol {
    weights: Vec<f64>,
    exponents: Vec<f64>,
}

impl AggregateSymbol {
    pub fn new(weights: Vec<f64>, exponents: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(invalid("aggregate symbol needs at least one term"));
        }
        if weights.len() != exponents.len() {
            return Err(invalid(format!(
                "{} weights but {} exponents",
                weights.len(),
                exponents.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
            return Err(invalid(format!("weight {w} is not strictly positive")));
        }
        for &a in &exponents {
            check_alpha(a)?;
        }
        Ok(Self { weights, exponents })
    }

    /// `F̂_n(θ) = Σ_{j<n} h^{jh} |θ|^{2-jh}`, `h = 1/n`.
    pub fn hat(n: usize) -> Self {
        Self::scaled_hat(&vec![1.0; n.max(1)]).expect("unit weights are valid")
    }

    /// `Σ_j c_j h^{jh} |θ|^{2-jh}` with `n = c.len()`.
    pub fn scaled_hat(c: &[f64]) -> Result<Self> {
        let n = c.len();
        if n == 0 {
            return Err(invalid("empty weight list"));
        }
        let h = 1.0 / n as f64;
        let exponents: Vec<f64> = (0..n).map(|j| j as f64 * h).collect();
        let weights = c
            .iter()
            .zip(&exponents)
            .map(|(&cj, &a)| cj * h.powf(a))
            .collect();
        Self::new(weights, exponents)
    }

    pub fn single(alpha: f64) -> Result<Self> {
        Self::new(vec![1.0], vec![alpha])
    }

    /// The quadratic symbol `η(θ) = θ²`.
    pub fn eta() -> Self {
        Self::new(vec![1.0], vec![0.0]).expect("valid")
    }

    pub fn num_terms(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn exponents(&self) -> &[f64] {
        &self.exponents
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.weights.iter().copied().zip(self.exponents.iter().copied())
    }

    /// Pointwise value; exactly zero at the origin.
    pub fn eval(&self, theta: f64) -> Result<f64> {
        check_theta(theta)?;
        Ok(self.eval_abs(theta.abs()))
    }

    /// Assumes `0 <= t <= π`.
    pub(crate) fn eval_abs(&self, t: f64) -> f64 {
        if t == 0.0 {
            return 0.0;
        }
        let lt = t.ln();
        self.terms().map(|(w, a)| w * ((2.0 - a) * lt).exp()).sum()
    }

    pub fn coefficients(&self, order: usize, engine: Engine, tol: f64) -> Result<CoeffVector> {
        fourier_coeffs_aggregate(self, order, engine, tol)
    }
}

/// Any member of the symbol family, as used by the `coeffs` subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SymbolSpec {
    Power(PowerSymbol),
    Quadratic,
    Cutoff(CutoffSymbol),
    Aggregate(AggregateSymbol),
}

impl SymbolSpec {
    pub fn eval(&self, theta: f64) -> Result<f64> {
        match self {
            SymbolSpec::Power(p) => p.eval(theta),
            SymbolSpec::Quadratic => {
                check_theta(theta)?;
                Ok(theta * theta)
            }
            SymbolSpec::Cutoff(c) => c.eval(theta),
            SymbolSpec::Aggregate(a) => a.eval(theta),
        }
    }

    /// First `order` Fourier coefficients. The cutoff symbol always uses
    /// quadrature (its coefficients are all below `1e-3` for `n >= 4`).
    pub fn coefficients(&self, order: usize, engine: Engine, tol: f64) -> Result<CoeffVector> {
        match self {
            SymbolSpec::Power(p) => AggregateSymbol::single(p.alpha)?.coefficients(order, engine, tol),
            SymbolSpec::Quadratic => match engine {
                Engine::ClosedForm | Engine::Quadrature => eta_coeffs(order),
                _ => AggregateSymbol::eta().coefficients(order, engine, tol),
            },
            SymbolSpec::Cutoff(c) => psi_coeffs(c.n, c.alpha, order),
            SymbolSpec::Aggregate(a) => a.coefficients(order, engine, tol),
        }
    }
}

/// First `n` Fourier coefficients `a_0..a_{n-1}` of an even real symbol.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffVector {
    pub coeffs: Vec<f64>,
    pub engine: Engine,
    /// Estimated absolute accuracy of every coefficient.
    pub abs_tol: f64,
}

impl CoeffVector {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["k", "coeff"])?;
        for (k, c) in self.coeffs.iter().enumerate() {
            out.write_record([k.to_string(), format!("{c:e}")])?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}
