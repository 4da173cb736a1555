//! Spectrum of the pencil T_n(eta)^{-1} T_n(F_n).

use distorder_toeplitz::spectra::{condition_report, precond_spectrum};
use distorder_toeplitz::symbols::{eta_coeffs, AggregateSymbol, Engine};
use distorder_toeplitz::toeplitz::SymToeplitz;

fn main() -> distorder_toeplitz::Result<()> {
    for n in [64, 128, 256] {
        let a = SymToeplitz::assemble(&AggregateSymbol::hat(n).coefficients(n, Engine::Quadrature, 1e-12)?)?;
        let m = SymToeplitz::assemble(&eta_coeffs(n)?)?;
        let plain = condition_report(&a, None)?;
        let pre = condition_report(&a, Some(&m))?;
        println!(
            "n={n:<4} mu2 {:>12.4} -> {:>8.4}   pencil lambda in [{:.4}, {:.4}]",
            plain.mu2, pre.mu2, pre.lambda_min, pre.lambda_max
        );
        // The pencil spectrum is bracketed by the range of F_n / eta over [-pi, pi].
        let inf = AggregateSymbol::hat(n).eval(std::f64::consts::PI)? / std::f64::consts::PI.powi(2);
        println!("       inf F_n/eta = {inf:.4}");
    }
    let a = SymToeplitz::assemble(&AggregateSymbol::hat(16).coefficients(16, Engine::Quadrature, 1e-12)?)?;
    let ones = precond_spectrum(&a, &a)?;
    println!("self-preconditioned n=16: {:?}", &ones[..4]);
    Ok(())
}
