//! Heuristic extremes, quantile predictions and growth-law fits.

use distorder_toeplitz::analysis::{
    asymptotic_fit, heuristic_extremes, heuristic_min_constant, quantile_prediction, GrowthModel,
};
use distorder_toeplitz::spectra::condition_report;
use distorder_toeplitz::symbols::{AggregateSymbol, Engine};
use distorder_toeplitz::toeplitz::SymToeplitz;

fn main() -> distorder_toeplitz::Result<()> {
    println!("constant pi(pi-1)/log(pi) = {:.6}", heuristic_min_constant());
    let mut mu2 = Vec::new();
    for n in [64, 128, 256, 512] {
        let t = SymToeplitz::assemble(&AggregateSymbol::hat(n).coefficients(n, Engine::Quadrature, 1e-12)?)?;
        let r = condition_report(&t, None)?;
        let (hmin, hmax) = heuristic_extremes(n)?;
        println!(
            "n={n:<4} lambda_min {:.5e} vs {:.5e}   lambda_max {:.4} vs {:.4}",
            r.lambda_min, hmin, r.lambda_max, hmax
        );
        mu2.push((n, r.mu2));
    }
    let fit = asymptotic_fit(&mu2, GrowthModel::N2OverLogN, 0.1)?;
    println!("mu2 log(pi n)/(pi n)^2: {:?}, max change {:.4}", fit.scaled, fit.max_rel_deviation);

    // Empirical quantiles of the spectrum against Q_q(x) = F_q(pi x).
    let q = 8;
    let n = 512;
    let t = SymToeplitz::assemble(&AggregateSymbol::hat(q).coefficients(n, Engine::Quadrature, 1e-12)?)?;
    let spec = condition_report(&t, None)?.full_spectrum.unwrap_or_default();
    for x in [0.1, 0.25, 0.5, 0.75, 0.9] {
        let idx = ((x * n as f64).ceil() as usize).max(1) - 1;
        println!("x={x:<4} lambda = {:.6}  Q_q(x) = {:.6}", spec[idx], quantile_prediction(q, x)?);
    }
    Ok(())
}
