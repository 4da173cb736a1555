use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// `π(π-1)/log π ≈ 5.8774`.
pub fn heuristic_min_constant() -> f64 {
    PI * (PI - 1.0) / PI.ln()
}

/// Predicted `(λ_min, λ_max)` of `T_n(F̂_n)`: `(π(π-1)/log π)/n` and
/// `π² n / log(πn)`.
pub fn heuristic_extremes(n: usize) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(invalid("heuristic needs n >= 2"));
    }
    let nf = n as f64;
    Ok((heuristic_min_constant() / nf, PI * PI * nf / (PI * nf).ln()))
}

/// Closed form `F̂_q(θ) = θ² (1 - 1/(q|θ|)) / (1 - (q|θ|)^{-1/q})` of the
/// geometric sum; the removable point `q|θ| = 1` takes the limit `q θ²`.
pub fn hat_closed_form(q: usize, theta: f64) -> f64 {
    let t = theta.abs();
    if t == 0.0 {
        return 0.0;
    }
    let qf = q as f64;
    let lt = (qf * t).ln();
    if lt == 0.0 {
        return qf * t * t;
    }
    t * t * (-lt).exp_m1() / (-lt / qf).exp_m1()
}

/// Quantile prediction `Q_q(x) = F̂_q(πx)` for `x ∈ (0, 1)`.
pub fn quantile_prediction(q: usize, x: f64) -> Result<f64> {
    if q == 0 {
        return Err(invalid("q must be at least 1"));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(invalid(format!("x = {x} outside (0, 1)")));
    }
    Ok(hat_closed_form(q, PI * x))
}

/// Growth law against which a series is normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthModel {
    /// `value ~ h`: scaled by `n`.
    H,
    /// `value ~ h²`: scaled by `n²`.
    H2,
    /// `value ~ n`: scaled by `1/n`.
    N,
    /// `value ~ n / log n`: scaled by `log(n)/n`.
    NOverLogN,
    /// `value ~ (πn)² / log(πn)`: scaled by `log(πn)/(πn)²`.
    N2OverLogN,
}

impl GrowthModel {
    pub fn scale(&self, n: usize, value: f64) -> f64 {
        let nf = n as f64;
        match self {
            GrowthModel::H => value * nf,
            GrowthModel::H2 => value * nf * nf,
            GrowthModel::N => value / nf,
            GrowthModel::NOverLogN => value * nf.ln() / nf,
            GrowthModel::N2OverLogN => value * (PI * nf).ln() / (PI * nf).powi(2),
        }
    }
}

pub const DEFAULT_FLATNESS: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub model: GrowthModel,
    pub scaled: Vec<(usize, f64)>,
    /// Largest `|s_{i+1} - s_i| / |s_i|` over consecutive scaled values.
    pub max_rel_deviation: f64,
    pub threshold: f64,
    pub flat: bool,
}

/// Normalizes a doubling series by `model` and measures how flat it is.
pub fn asymptotic_fit(series: &[(usize, f64)], model: GrowthModel, threshold: f64) -> Result<FitReport> {
    if series.len() < 3 {
        return Err(invalid(format!("need at least 3 points, got {}", series.len())));
    }
    if series.windows(2).any(|w| w[1].0 != 2 * w[0].0) || series[0].0 == 0 {
        return Err(invalid("orders must double between consecutive points"));
    }
    let scaled: Vec<(usize, f64)> = series.iter().map(|&(n, v)| (n, model.scale(n, v))).collect();
    let max_rel_deviation = scaled
        .windows(2)
        .map(|w| ((w[1].1 - w[0].1) / w[0].1).abs())
        .fold(0.0, f64::max);
    Ok(FitReport {
        model,
        scaled,
        max_rel_deviation,
        threshold,
        flat: max_rel_deviation < threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_value() {
        assert!((heuristic_min_constant() - 5.8774).abs() < 5e-5);
    }

    #[test]
    fn q_one_is_quadratic() {
        for x in [0.1, 0.37, 0.9] {
            let v = quantile_prediction(1, x).unwrap();
            assert!((v - (PI * x).powi(2)).abs() < 1e-13 * v);
        }
    }

    #[test]
    fn removable_point_is_finite() {
        let q = 8;
        let x = 1.0 / (q as f64 * PI);
        let v = quantile_prediction(q, x).unwrap();
        assert!((v - q as f64 * (PI * x).powi(2)).abs() < 1e-14);
    }

    #[test]
    fn exact_h2_series_is_flat() {
        let s: Vec<(usize, f64)> = [8, 16, 32, 64].iter().map(|&n| (n, 3.0 / (n * n) as f64)).collect();
        let f = asymptotic_fit(&s, GrowthModel::H2, DEFAULT_FLATNESS).unwrap();
        assert!(f.max_rel_deviation < 1e-15 && f.flat);
    }

    #[test]
    fn fit_preconditions() {
        assert!(asymptotic_fit(&[(8, 1.0), (16, 1.0)], GrowthModel::H, 0.1).is_err());
        assert!(asymptotic_fit(&[(8, 1.0), (16, 1.0), (24, 1.0)], GrowthModel::H, 0.1).is_err());
        assert!(quantile_prediction(4, 1.0).is_err());
        assert!(heuristic_extremes(1).is_err());
    }
}
