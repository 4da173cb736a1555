//! Toeplitz matrix-sequences generated by n-dependent distributed-order
//! fractional symbols.
//!
//! The central object is the Toeplitz matrix `T_n(F)` generated by an
//! aggregate symbol
//!
//! ```text
//! F(θ) = Σ_j w_j |θ|^{2 - α_j},     θ ∈ [-π, π],
//! ```
//!
//! and in particular the canonical choice `F̂_n` with `w_j = h^{jh}`,
//! `α_j = jh`, `h = 1/n`. The crate provides
//!
//! - [`symbols`]: the symbol family and two independent engines for its
//!   Fourier coefficients (oscillation-partitioned quadrature and FFT
//!   sampling),
//! - [`toeplitz`]: symmetric Toeplitz assembly, fast matvec and Loewner-order
//!   tests,
//! - [`spectra`]: extreme eigenvalues, full spectra, preconditioned pencil
//!   spectra and condition reports,
//! - [`analysis`]: numerical verification of the sandwich bounds, the
//!   cutoff-remainder norm bounds, the averaged minimal-eigenvalue bound and
//!   the quantile-based asymptotics,
//! - [`experiments`]: the table/figure/check drivers used by the
//!   `dotoeplitz` binary.
//!
//! ```
//! use distorder_toeplitz::symbols::{AggregateSymbol, Engine};
//! use distorder_toeplitz::toeplitz::SymToeplitz;
//! use distorder_toeplitz::spectra::condition_report;
//!
//! let n = 16;
//! let coeffs = AggregateSymbol::hat(n)
//!     .coefficients(n, Engine::Quadrature, 1e-12)
//!     .unwrap();
//! let t = SymToeplitz::assemble(&coeffs).unwrap();
//! let report = condition_report(&t, None).unwrap();
//! assert!(report.lambda_min > 0.0 && report.mu2 > 1.0);
//! ```

pub mod analysis;
pub(crate) mod dense;
pub mod error;
pub mod experiments;
pub(crate) mod quadrature;
pub mod spectra;
pub mod symbols;
pub mod toeplitz;

pub use error::{Error, Result};
