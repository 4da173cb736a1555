//! Extreme eigenvalues, spectra and condition numbers of symmetric positive
//! definite Toeplitz matrices, with and without a Toeplitz preconditioner.

mod lanczos;

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::dense::{cholesky, congruence, sym_eigenvalues};
use crate::error::{Error, Result};
use crate::toeplitz::{CirculantEmbedding, SymToeplitz};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EigenMode {
    /// Dense symmetric eigendecomposition.
    #[default]
    Full,
    /// Lanczos on `T` for `λ_max`, shift-and-invert Lanczos (Cholesky solves)
    /// for `λ_min`.
    Iterative,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterativeOptions {
    /// Converged when `‖Tv - λv‖₂ ≤ rel_tol · ‖T‖₁`.
    pub rel_tol: f64,
    pub max_iter: usize,
    /// Orders below this use the dense solver for `λ_min` instead of
    /// shift-and-invert.
    pub dense_min_below: usize,
    pub seed: u64,
}

impl Default for IterativeOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            max_iter: 2000,
            dense_min_below: 0,
            seed: 0x5eed,
        }
    }
}

/// `(λ_min, λ_max)`.
pub fn extreme_eigs(t: &SymToeplitz, mode: EigenMode) -> Result<(f64, f64)> {
    match mode {
        EigenMode::Full => {
            let ev = sym_eigenvalues(&t.to_dense());
            Ok((ev[0], ev[ev.len() - 1]))
        }
        EigenMode::Iterative => extreme_eigs_iterative(t, &IterativeOptions::default()),
    }
}

fn residual(t: &SymToeplitz, op: &CirculantEmbedding, v: &[f64]) -> Result<(f64, f64)> {
    let tv = if t.order() < 64 {
        t.matvec_direct(v)?
    } else {
        op.apply(v)?
    };
    let rq: f64 = tv.iter().zip(v).map(|(a, b)| a * b).sum();
    let r = tv
        .iter()
        .zip(v)
        .map(|(a, b)| (a - rq * b).powi(2))
        .sum::<f64>()
        .sqrt();
    Ok((rq, r))
}

pub fn extreme_eigs_iterative(t: &SymToeplitz, opts: &IterativeOptions) -> Result<(f64, f64)> {
    let n = t.order();
    if n == 1 {
        return Ok((t.first_col()[0], t.first_col()[0]));
    }
    let op = CirculantEmbedding::new(t);
    let limit = opts.rel_tol * t.norm1();

    let matvec = |v: &[f64]| {
        if n < 64 {
            t.matvec_direct(v)
        } else {
            op.apply(v)
        }
    };
    let mut top = f64::NAN;
    lanczos::largest(n, opts.max_iter, opts.seed, matvec, |_, v| {
        let (rq, r) = residual(t, &op, v)?;
        top = rq;
        Ok((r <= limit, r))
    })?;

    let bottom = if n < opts.dense_min_below {
        extreme_eigs(t, EigenMode::Full)?.0
    } else {
        match cholesky(t.to_dense()) {
            Ok(chol) => {
                let mut low = f64::NAN;
                let solve = |v: &[f64]| {
                    let b = nalgebra::DVector::from_column_slice(v);
                    Ok(chol.solve(&b).iter().copied().collect())
                };
                lanczos::largest(n, opts.max_iter, opts.seed ^ 1, solve, |_, v| {
                    let (rq, r) = residual(t, &op, v)?;
                    low = rq;
                    Ok((r <= limit, r))
                })?;
                low
            }
            // Indefinite or singular: largest eigenvalue of -T.
            Err(Error::NotPositiveDefinite) => {
                let mut low = f64::NAN;
                let neg = |v: &[f64]| Ok(matvec(v)?.into_iter().map(|x| -x).collect());
                lanczos::largest(n, opts.max_iter, opts.seed ^ 1, neg, |_, v| {
                    let (rq, r) = residual(t, &op, v)?;
                    low = rq;
                    Ok((r <= limit, r))
                })?;
                low
            }
            Err(e) => return Err(e),
        }
    };
    Ok((bottom, top))
}

/// All eigenvalues, ascending; verified against the trace `n · a_0`.
pub fn full_spectrum(t: &SymToeplitz) -> Result<Vec<f64>> {
    let ev = sym_eigenvalues(&t.to_dense());
    let sum: f64 = ev.iter().sum();
    let abs: f64 = ev.iter().map(|x| x.abs()).sum();
    if (sum - t.trace()).abs() > 1e-10 * abs.max(f64::MIN_POSITIVE) {
        return Err(Error::Numerical(format!(
            "eigenvalue sum {sum} differs from trace {}",
            t.trace()
        )));
    }
    Ok(ev)
}

/// Eigenvalues of `M^{-1} A`, ascending, via `L^{-1} A L^{-T}` with
/// `M = L Lᵀ`.
pub fn precond_spectrum(a: &SymToeplitz, m: &SymToeplitz) -> Result<Vec<f64>> {
    if a.order() != m.order() {
        return Err(Error::DimensionMismatch {
            expected: m.order(),
            got: a.order(),
        });
    }
    let chol = cholesky(m.to_dense())?;
    Ok(sym_eigenvalues(&congruence(&a.to_dense(), &chol)))
}

/// Extreme eigenvalues, `μ₂` and the scaled table quantities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub preconditioned: bool,
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub mu2: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub full_spectrum: Option<Vec<f64>>,
    pub scaled: BTreeMap<String, f64>,
}

pub const UNPRECONDITIONED_COLUMNS: [&str; 7] = [
    "n",
    "lambda_min",
    "lambda_min_star",
    "lambda_max",
    "lambda_max_star",
    "mu2",
    "mu2_star",
];

pub const PRECONDITIONED_COLUMNS: [&str; 7] = [
    "n",
    "lambda_min",
    "lambda_min_dagger",
    "lambda_max",
    "lambda_max_dagger",
    "mu2",
    "mu2_dagger",
];

/// Unpreconditioned: `nλ_min`, `log(πn)/(π²n) λ_max`, `log(πn)/(πn)² μ₂`.
/// Preconditioned: `log(n)/n λ_min`, `log(πn)/n² λ_max`, `μ₂/n`.
pub fn scaled_quantities(
    n: usize,
    lambda_min: f64,
    lambda_max: f64,
    mu2: f64,
    preconditioned: bool,
) -> BTreeMap<String, f64> {
    let nf = n as f64;
    let lpn = (PI * nf).ln();
    let mut out = BTreeMap::new();
    if preconditioned {
        out.insert("lambda_min_dagger".into(), nf.ln() / nf * lambda_min);
        out.insert("lambda_max_dagger".into(), lpn / (nf * nf) * lambda_max);
        out.insert("mu2_dagger".into(), mu2 / nf);
    } else {
        out.insert("lambda_min_star".into(), nf * lambda_min);
        out.insert("lambda_max_star".into(), lpn / (PI * PI * nf) * lambda_max);
        out.insert("mu2_star".into(), lpn / (PI * nf).powi(2) * mu2);
    }
    out
}

impl SpectrumReport {
    /// Builds a report from an ascending spectrum.
    pub fn from_spectrum(spectrum: Vec<f64>, preconditioned: bool) -> Result<Self> {
        let n = spectrum.len();
        let (lambda_min, lambda_max) = match (spectrum.first(), spectrum.last()) {
            (Some(&a), Some(&b)) => (a, b),
            _ => return Err(Error::InvalidArgument("empty spectrum".into())),
        };
        if !(lambda_min > 0.0) {
            return Err(Error::NotPositiveDefinite);
        }
        let mu2 = lambda_max / lambda_min;
        Ok(Self {
            n,
            preconditioned,
            lambda_min,
            lambda_max,
            mu2,
            scaled: scaled_quantities(n, lambda_min, lambda_max, mu2, preconditioned),
            full_spectrum: Some(spectrum),
        })
    }

    pub fn columns(&self) -> [&'static str; 7] {
        if self.preconditioned {
            PRECONDITIONED_COLUMNS
        } else {
            UNPRECONDITIONED_COLUMNS
        }
    }

    /// Values in the order of [`SpectrumReport::columns`], `n` excluded.
    pub fn row(&self) -> [f64; 6] {
        let c = self.columns();
        [
            self.lambda_min,
            self.scaled[c[2]],
            self.lambda_max,
            self.scaled[c[4]],
            self.mu2,
            self.scaled[c[6]],
        ]
    }

    pub fn without_spectrum(mut self) -> Self {
        self.full_spectrum = None;
        self
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    /// Header plus one row in table layout, full precision.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(self.columns())?;
        let mut rec = vec![self.n.to_string()];
        rec.extend(self.row().iter().map(|v| format!("{v:e}")));
        out.write_record(rec)?;
        out.flush()?;
        Ok(())
    }
}

/// Spectrum report of `T`, or of `M^{-1} T` when a preconditioner is given.
pub fn condition_report(t: &SymToeplitz, preconditioner: Option<&SymToeplitz>) -> Result<SpectrumReport> {
    match preconditioner {
        None => SpectrumReport::from_spectrum(full_spectrum(t)?, false),
        Some(m) => SpectrumReport::from_spectrum(precond_spectrum(t, m)?, true),
    }
}
