use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::quadrature::{
    compensated_sum, cos_mul, flatten, integrate_to_tol, panels, rules, Estimate, MAX_REFINEMENTS,
};

use super::{check_alpha, sampling, AggregateSymbol, CoeffCache, CoeffVector, Engine};

fn check_k(k: i64) -> Result<usize> {
    usize::try_from(k).map_err(|_| invalid(format!("negative coefficient index {k}; use |k|")))
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(invalid(format!("tolerance {tol} must be positive")));
    }
    Ok(())
}

fn sign(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn eta_closed(k: usize) -> f64 {
    if k == 0 {
        PI * PI / 3.0
    } else {
        // sin(πk) vanishes at integers, leaving 2 cos(πk) / k².
        let kf = k as f64;
        2.0 * sign(k) / (kf * kf)
    }
}

fn linear_closed(k: usize) -> f64 {
    if k == 0 {
        PI / 2.0
    } else {
        let kf = k as f64;
        (sign(k) - 1.0) / (PI * kf * kf)
    }
}

/// Fourier coefficient of `η(θ) = θ²`: `π²/3` at `k = 0`, `2(-1)^k / k²`
/// otherwise.
pub fn fourier_coeff_eta(k: i64) -> Result<f64> {
    Ok(eta_closed(check_k(k)?))
}

/// `a_0..a_{order-1}` of `η`, closed form.
pub fn eta_coeffs(order: usize) -> Result<CoeffVector> {
    if order == 0 {
        return Err(invalid("order must be at least 1"));
    }
    Ok(CoeffVector {
        coeffs: (0..order).map(eta_closed).collect(),
        engine: Engine::ClosedForm,
        abs_tol: f64::EPSILON * PI * PI,
    })
}

/// Oscillation-partitioned quadrature for `(1/π) ∫_0^π θ^{2-α} cos(kθ) dθ`:
/// panels of length `π/k` between consecutive extrema of `cos(kθ)`, graded
/// towards the algebraic endpoint at zero.
pub(crate) fn power_coeff_quadrature(alpha: f64, k: usize, tol: f64) -> Result<Estimate> {
    let beta = 2.0 - alpha;
    let kf = k as f64;
    let width = if k == 0 { PI } else { PI / kf };
    let est = integrate_to_tol(
        |t: f64| {
            if t == 0.0 {
                0.0
            } else {
                t.powf(beta) * cos_mul(kf, t)
            }
        },
        PI,
        width,
        tol * PI,
    )?;
    Ok(Estimate {
        value: est.value / PI,
        error: est.error / PI,
    })
}

/// `a_k(|θ|^{2-α})` to absolute accuracy `tol`.
pub fn fourier_coeff_power(alpha: f64, k: i64, engine: Engine, tol: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_tol(tol)?;
    let k = check_k(k)?;
    match engine {
        Engine::Quadrature => Ok(power_coeff_quadrature(alpha, k, tol)?.value),
        Engine::ClosedForm => closed_form_power(alpha, k),
        Engine::FftSampling { oversample } => {
            let v = sampling::aggregate(&AggregateSymbol::single(alpha)?, k + 1, oversample)?;
            if v.abs_tol > tol {
                return Err(Error::Accuracy {
                    requested: tol,
                    achieved: v.abs_tol,
                });
            }
            Ok(v.coeffs[k])
        }
    }
}

fn closed_form_power(alpha: f64, k: usize) -> Result<f64> {
    if alpha == 0.0 {
        Ok(eta_closed(k))
    } else if alpha == 1.0 {
        Ok(linear_closed(k))
    } else {
        Err(invalid(format!(
            "closed form only available for alpha in {{0, 1}}, got {alpha}"
        )))
    }
}

/// Coefficients of an aggregate symbol for Toeplitz order `order`.
///
/// The quadrature engine integrates `F(θ) cos(kθ)` for all `k < order` on a
/// shared partition whose panels span at most half a period of
/// `cos((order-1)θ)`; this equals the weighted sum of per-term quadratures on
/// that partition. See [`fourier_coeffs_aggregate_termwise`] for the literal
/// term-by-term sum.
pub fn fourier_coeffs_aggregate(
    sym: &AggregateSymbol,
    order: usize,
    engine: Engine,
    tol: f64,
) -> Result<CoeffVector> {
    if order == 0 {
        return Err(invalid("order must be at least 1"));
    }
    check_tol(tol)?;
    match engine {
        Engine::Quadrature => shared_grid(sym, order, tol),
        Engine::FftSampling { oversample } => sampling::aggregate(sym, order, oversample),
        Engine::ClosedForm => {
            let mut coeffs = vec![0.0; order];
            for (w, a) in sym.terms() {
                for (k, c) in coeffs.iter_mut().enumerate() {
                    *c += w * closed_form_power(a, k)?;
                }
            }
            Ok(CoeffVector {
                coeffs,
                engine,
                abs_tol: f64::EPSILON * PI * PI * sym.total_weight(),
            })
        }
    }
}

fn shared_grid(sym: &AggregateSymbol, order: usize, tol: f64) -> Result<CoeffVector> {
    let rp = rules();
    let kmax = (order - 1).max(1) as f64;
    let mut best = f64::INFINITY;
    for r in 0..=MAX_REFINEMENTS {
        let parts = panels(PI, PI / kmax / f64::from(1u32 << r));
        let (high, scale) = grid_coeffs(sym, &flatten(&parts, &rp.high), order);
        let (low, _) = grid_coeffs(sym, &flatten(&parts, &rp.low), order);
        let diff = high
            .iter()
            .zip(&low)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if diff <= tol {
            return Ok(CoeffVector {
                coeffs: high,
                engine: Engine::Quadrature,
                abs_tol: diff.max(f64::EPSILON * scale),
            });
        }
        best = best.min(diff);
    }
    Err(Error::Accuracy {
        requested: tol,
        achieved: best,
    })
}

/// Returns the coefficients and `Σ|w_i F(θ_i)|/π` (the roundoff scale).
fn grid_coeffs(sym: &AggregateSymbol, nodes: &[(f64, f64)], order: usize) -> (Vec<f64>, f64) {
    let samples: Vec<f64> = nodes
        .par_iter()
        .map(|&(t, w)| w * sym.eval_abs(t) / PI)
        .collect();
    let scale = samples.iter().map(|s| s.abs()).sum();
    let coeffs = (0..order)
        .into_par_iter()
        .map(|k| {
            let kf = k as f64;
            compensated_sum(nodes.iter().zip(&samples).map(|(&(t, _), &s)| s * cos_mul(kf, t)))
        })
        .collect();
    (coeffs, scale)
}

/// Literal term-by-term route `a_k(F) = Σ_j w_j a_k(|θ|^{2-α_j})`, each
/// inner coefficient to accuracy `tol / Σ_j w_j`, memoized in `cache`.
pub fn fourier_coeffs_aggregate_termwise(
    sym: &AggregateSymbol,
    order: usize,
    tol: f64,
    cache: &CoeffCache,
) -> Result<CoeffVector> {
    if order == 0 {
        return Err(invalid("order must be at least 1"));
    }
    check_tol(tol)?;
    let per_term = tol / sym.total_weight();
    let rows: Vec<(f64, f64)> = (0..order)
        .into_par_iter()
        .map(|k| {
            let mut terms = Vec::with_capacity(sym.num_terms());
            let mut err = 0.0;
            for (w, a) in sym.terms() {
                let (v, e) = cache.power(a, k, per_term)?;
                terms.push(w * v);
                err += w * e;
            }
            Ok((compensated_sum(terms), err))
        })
        .collect::<Result<_>>()?;
    let abs_tol = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    Ok(CoeffVector {
        coeffs: rows.into_iter().map(|r| r.0).collect(),
        engine: Engine::Quadrature,
        abs_tol,
    })
}

/// Upper bound `α h³ / (3π(3-α))` on `|a_k(ψ_{n,α})|`.
pub fn psi_coeff_bound(n: usize, alpha: f64) -> f64 {
    let h = 1.0 / n as f64;
    alpha * h.powi(3) / (3.0 * PI * (3.0 - alpha))
}

/// Fourier coefficient of the cutoff remainder symbol `ψ_{n,α}`.
pub fn psi_coeff(n: usize, alpha: f64, k: i64) -> Result<f64> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    check_alpha(alpha)?;
    let k = check_k(k)?;
    Ok(psi_coeff_estimate(n, alpha, k)?.value)
}

fn psi_coeff_estimate(n: usize, alpha: f64, k: usize) -> Result<Estimate> {
    if alpha == 0.0 {
        return Ok(Estimate {
            value: 0.0,
            error: 0.0,
        });
    }
    let h = 1.0 / n as f64;
    let ha = h.powf(alpha);
    let beta = 2.0 - alpha;
    let kf = k as f64;
    let width = if k == 0 { h } else { h.min(PI / kf) };
    let tol = 1e-13 * psi_coeff_bound(n, alpha);
    let est = integrate_to_tol(
        |t: f64| {
            if t == 0.0 {
                0.0
            } else {
                (ha * t.powf(beta) - t * t) * cos_mul(kf, t)
            }
        },
        h,
        width,
        tol * PI,
    )?;
    Ok(Estimate {
        value: est.value / PI,
        error: est.error / PI,
    })
}

/// `a_0..a_{order-1}` of `ψ_{n,α}`.
pub fn psi_coeffs(n: usize, alpha: f64, order: usize) -> Result<CoeffVector> {
    if n == 0 || order == 0 {
        return Err(invalid("n and order must be at least 1"));
    }
    check_alpha(alpha)?;
    let est: Vec<Estimate> = (0..order)
        .into_par_iter()
        .map(|k| psi_coeff_estimate(n, alpha, k))
        .collect::<Result<_>>()?;
    Ok(CoeffVector {
        abs_tol: est.iter().map(|e| e.error).fold(0.0, f64::max),
        coeffs: est.into_iter().map(|e| e.value).collect(),
        engine: Engine::Quadrature,
    })
}
