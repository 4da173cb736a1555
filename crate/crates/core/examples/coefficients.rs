//! Fourier coefficients of the aggregate symbol by both engines.

use distorder_toeplitz::symbols::{fourier_coeff_eta, fourier_coeff_power, AggregateSymbol, Engine};

fn main() -> distorder_toeplitz::Result<()> {
    let n = 64;
    let sym = AggregateSymbol::hat(n);
    let quad = sym.coefficients(n, Engine::Quadrature, 1e-12)?;
    let fft = sym.coefficients(n, Engine::fft(), 1e-12)?;
    println!("n = {n}: quadrature abs_tol {:.2e}, fft abs_tol {:.2e}", quad.abs_tol, fft.abs_tol);
    println!("{:>4} {:>22} {:>22}", "k", "quadrature", "fft");
    for k in [0, 1, 2, 5, 10, 32, 63] {
        println!("{k:>4} {:>22.15e} {:>22.15e}", quad.coeffs[k], fft.coeffs[k]);
    }

    println!("\nsingle terms |theta|^(2-alpha):");
    for alpha in [0.0, 0.25, 0.5, 1.0] {
        let a3 = fourier_coeff_power(alpha, 3, Engine::Quadrature, 1e-13)?;
        println!("  alpha {alpha:<5} a_3 = {a3:.15e}");
    }
    println!("  eta closed form a_3 = {}", fourier_coeff_eta(3)?);
    quad.write_csv(std::io::stdout().lock())?;
    Ok(())
}
