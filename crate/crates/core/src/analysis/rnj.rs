use nalgebra::DMatrix;

use crate::dense::sym_eigenvalues;
use crate::error::Result;
use crate::symbols::{eta_coeffs, psi_coeff_bound, psi_coeffs, AggregateSymbol, Engine};
use crate::toeplitz::{linear_combination, loewner_leq, SymToeplitz};

use super::{BoundReport, CheckTolerances, CHECK_COEFF_TOL};

/// Remainder bounds for one power term:
///
/// - `‖R‖₂ ≤ α / (3πn²(3-α))` with `R = T_n(ψ_{n,α})`,
/// - `h^α T_n(|θ|^{2-α}) ≤ T_n(θ²) + R` in the Loewner order.
pub fn lemma_rnj_check(
    n: usize,
    alpha: f64,
    tol: &CheckTolerances,
) -> Result<(BoundReport, BoundReport)> {
    let h = 1.0 / n as f64;
    let remainder = SymToeplitz::assemble(&psi_coeffs(n, alpha, n)?)?;
    let ev = sym_eigenvalues(&remainder.to_dense());
    let spectral = ev[0].abs().max(ev[ev.len() - 1].abs());
    let bound = psi_coeff_bound(n, alpha) * n as f64;

    let norm = BoundReport::new("remainder_norm", spectral, bound, tol.abs)
        .with_param("n", n)
        .with_param("alpha", alpha)
        .with_param("norm1", remainder.norm1())
        .with_param("frobenius", frobenius(&remainder.to_dense()));

    // α ∈ {0, 1} have exact coefficients; α = 0 makes both sides identical.
    let engine = if alpha == 0.0 || alpha == 1.0 {
        Engine::ClosedForm
    } else {
        Engine::Quadrature
    };
    let power = SymToeplitz::assemble(
        &AggregateSymbol::single(alpha)?.coefficients(n, engine, CHECK_COEFF_TOL)?,
    )?;
    let eta = SymToeplitz::assemble(&eta_coeffs(n)?)?;
    let upper = if alpha == 0.0 {
        eta
    } else {
        linear_combination(&[(1.0, &eta), (1.0, &remainder)])?
    };
    let check = loewner_leq(&power.scaled(h.powf(alpha)), &upper, tol.rel)?;
    let order = BoundReport::loewner("remainder_loewner", &check)
        .with_param("n", n)
        .with_param("alpha", alpha);
    Ok((norm, order))
}

fn frobenius(m: &DMatrix<f64>) -> f64 {
    m.iter().map(|x| x * x).sum::<f64>().sqrt()
}
