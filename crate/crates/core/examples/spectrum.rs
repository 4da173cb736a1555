//! Extreme eigenvalues and conditioning of T_n(F_n), dense and Lanczos.

use distorder_toeplitz::spectra::{condition_report, extreme_eigs, EigenMode};
use distorder_toeplitz::symbols::{AggregateSymbol, Engine};
use distorder_toeplitz::toeplitz::SymToeplitz;

fn main() -> distorder_toeplitz::Result<()> {
    for n in [64, 128, 256, 512] {
        let t = SymToeplitz::assemble(&AggregateSymbol::hat(n).coefficients(n, Engine::Quadrature, 1e-12)?)?;
        let r = condition_report(&t, None)?;
        let (lo, hi) = extreme_eigs(&t, EigenMode::Iterative)?;
        println!(
            "n={n:<4} lambda_min {:.6e} (lanczos {:.6e})  lambda_max {:.6e} (lanczos {:.6e})  mu2 {:.6e}",
            r.lambda_min, lo, r.lambda_max, hi, r.mu2
        );
        println!(
            "       n*lambda_min {:.4}  scaled lambda_max {:.4}  scaled mu2 {:.4}",
            r.scaled["lambda_min_star"], r.scaled["lambda_max_star"], r.scaled["mu2_star"]
        );
    }
    Ok(())
}
