//! FFT-sampling engine: the trapezoidal rule on `M` equispaced points,
//! evaluated for all `k` by one DFT. The error is aliasing,
//! `a_k^{(M)} - a_k = Σ_{l≠0} a_{k+lM}`, estimated by comparing the `M`- and
//! `M/2`-point results (the coarse grid is every other fine sample).

use std::f64::consts::PI;

use rayon::prelude::*;
use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{invalid, Error, Result};

use super::{AggregateSymbol, CoeffVector, Engine};

const IMAG_LIMIT: f64 = 1e-13;

pub(super) fn aggregate(sym: &AggregateSymbol, order: usize, oversample: usize) -> Result<CoeffVector> {
    if oversample < 2 {
        return Err(invalid(format!(
            "oversample factor {oversample} too small; need M >= 2n"
        )));
    }
    let m = 2 * (oversample * order).div_ceil(2);
    let samples: Vec<f64> = (0..m)
        .into_par_iter()
        .map(|j| {
            let t = 2.0 * PI * j as f64 / m as f64;
            sym.eval_abs(if t > PI { 2.0 * PI - t } else { t })
        })
        .collect();
    let coarse: Vec<f64> = samples.iter().step_by(2).copied().collect();
    let fine = dft_cosine(&samples, order)?;
    let rough = dft_cosine(&coarse, order)?;
    let est = fine
        .iter()
        .zip(&rough)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(CoeffVector {
        coeffs: fine,
        engine: Engine::FftSampling { oversample },
        abs_tol: est,
    })
}

/// `(1/M) Σ_j f_j e^{-2πi jk/M}` for `k < order`; the imaginary parts must
/// vanish for even samples.
fn dft_cosine(samples: &[f64], order: usize) -> Result<Vec<f64>> {
    let m = samples.len();
    let mut buf: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    let scale = 1.0 / m as f64;
    let imag = buf[..order]
        .iter()
        .map(|c| (c.im * scale).abs())
        .fold(0.0, f64::max);
    if imag > IMAG_LIMIT {
        return Err(Error::Numerical(format!(
            "imaginary part {imag:e} in coefficients of an even symbol"
        )));
    }
    Ok(buf[..order].iter().map(|c| c.re * scale).collect())
}
