//! Real symmetric Toeplitz matrices stored by their first column.

use std::io::Write;
use std::sync::Arc;

use nalgebra::DMatrix;
use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::dense::sym_eigenvalues;
use crate::error::{invalid, Error, Result};
use crate::symbols::CoeffVector;

/// Default relative tolerance of [`loewner_leq`].
pub const DEFAULT_LOEWNER_TOL: f64 = 1e-10;

/// Orders below this use the direct `O(n²)` product in [`SymToeplitz::matvec`].
const DIRECT_MATVEC_BELOW: usize = 64;

/// `T_{s,t} = first_col[|s - t|]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymToeplitz {
    first_col: Vec<f64>,
}

impl SymToeplitz {
    pub fn new(first_col: Vec<f64>) -> Result<Self> {
        if first_col.is_empty() {
            return Err(invalid("empty first column"));
        }
        Ok(Self { first_col })
    }

    pub fn assemble(coeffs: &CoeffVector) -> Result<Self> {
        Self::new(coeffs.coeffs.clone())
    }

    pub fn identity(n: usize) -> Self {
        let mut col = vec![0.0; n.max(1)];
        col[0] = 1.0;
        Self { first_col: col }
    }

    pub fn order(&self) -> usize {
        self.first_col.len()
    }

    pub fn first_col(&self) -> &[f64] {
        &self.first_col
    }

    pub fn entry(&self, s: usize, t: usize) -> f64 {
        self.first_col[s.abs_diff(t)]
    }

    pub fn trace(&self) -> f64 {
        self.order() as f64 * self.first_col[0]
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.order();
        DMatrix::from_fn(n, n, |s, t| self.entry(s, t))
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            first_col: self.first_col.iter().map(|a| c * a).collect(),
        }
    }

    /// Maximum absolute row sum, `‖T‖₁ = ‖T‖_∞`.
    pub fn norm1(&self) -> f64 {
        let n = self.order();
        let abs: Vec<f64> = self.first_col.iter().map(|a| a.abs()).collect();
        let mut prefix = vec![0.0; n + 1];
        for k in 0..n {
            prefix[k + 1] = prefix[k] + abs[k];
        }
        // Row s touches diagonals 0..=s and 1..=n-1-s.
        (0..n)
            .map(|s| prefix[s + 1] + (prefix[n - s] - prefix[1]))
            .fold(0.0, f64::max)
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.order() {
            return Err(Error::DimensionMismatch {
                expected: self.order(),
                got: x.len(),
            });
        }
        Ok(())
    }

    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if self.order() < DIRECT_MATVEC_BELOW {
            self.matvec_direct(x)
        } else {
            CirculantEmbedding::new(self).apply(x)
        }
    }

    pub fn matvec_direct(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(x)?;
        let n = self.order();
        Ok((0..n)
            .map(|s| (0..n).map(|t| self.entry(s, t) * x[t]).sum())
            .collect())
    }

    pub fn write_first_col_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["k", "coeff"])?;
        for (k, c) in self.first_col.iter().enumerate() {
            out.write_record([k.to_string(), format!("{c:e}")])?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    /// Row-major dense dump, intended for small orders.
    pub fn write_dense_csv<W: Write>(&self, w: W) -> Result<()> {
        let n = self.order();
        let mut out = csv::WriterBuilder::new().has_headers(false).from_writer(w);
        for s in 0..n {
            out.write_record((0..n).map(|t| format!("{:e}", self.entry(s, t))))?;
        }
        out.flush()?;
        Ok(())
    }
}

/// `O(n log n)` product through the `2n` circulant that embeds `T`.
pub struct CirculantEmbedding {
    n: usize,
    symbol: Vec<Complex64>,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl CirculantEmbedding {
    pub fn new(t: &SymToeplitz) -> Self {
        let n = t.order();
        let m = 2 * n;
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(m);
        let inverse = planner.plan_fft_inverse(m);
        let mut symbol = vec![Complex64::new(0.0, 0.0); m];
        for (k, &a) in t.first_col().iter().enumerate() {
            symbol[k].re = a;
            if k > 0 {
                symbol[m - k].re = a;
            }
        }
        forward.process(&mut symbol);
        Self {
            n,
            symbol,
            forward,
            inverse,
        }
    }

    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let m = 2 * self.n;
        let mut buf = vec![Complex64::new(0.0, 0.0); m];
        for (b, &v) in buf.iter_mut().zip(x) {
            b.re = v;
        }
        self.forward.process(&mut buf);
        for (b, s) in buf.iter_mut().zip(&self.symbol) {
            *b *= s;
        }
        self.inverse.process(&mut buf);
        let scale = 1.0 / m as f64;
        Ok(buf[..self.n].iter().map(|c| c.re * scale).collect())
    }
}

/// Coefficient-wise `Σ_i w_i T_i` with positive weights.
pub fn linear_combination(terms: &[(f64, &SymToeplitz)]) -> Result<SymToeplitz> {
    let (_, first) = terms.first().ok_or_else(|| invalid("no terms"))?;
    let n = first.order();
    let mut col = vec![0.0; n];
    for &(w, t) in terms {
        if !(w.is_finite() && w > 0.0) {
            return Err(invalid(format!("weight {w} is not strictly positive")));
        }
        if t.order() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: t.order(),
            });
        }
        for (c, a) in col.iter_mut().zip(t.first_col()) {
            *c += w * a;
        }
    }
    SymToeplitz::new(col)
}

/// Outcome of a Loewner-order test `A ≤ B`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LoewnerCheck {
    pub holds: bool,
    /// `λ_min(B - A)`.
    pub margin: f64,
    /// `‖B - A‖₂`.
    pub norm: f64,
    /// The margin must be at least `-threshold`.
    pub threshold: f64,
}

/// `A ≤ B` iff `λ_min(B - A) ≥ -max(tol ‖B - A‖₂, ε max(‖A‖₁, ‖B‖₁))`.
///
/// The floor `ε max(‖A‖₁, ‖B‖₁)` is the resolution of `B - A` formed in
/// floating point.
pub fn loewner_leq(a: &SymToeplitz, b: &SymToeplitz, tol: f64) -> Result<LoewnerCheck> {
    if a.order() != b.order() {
        return Err(Error::DimensionMismatch {
            expected: a.order(),
            got: b.order(),
        });
    }
    let diff = SymToeplitz::new(
        b.first_col()
            .iter()
            .zip(a.first_col())
            .map(|(x, y)| x - y)
            .collect(),
    )?;
    let ev = sym_eigenvalues(&diff.to_dense());
    let margin = ev[0];
    let norm = ev[0].abs().max(ev[ev.len() - 1].abs());
    let floor = f64::EPSILON * a.norm1().max(b.norm1());
    let threshold = (tol * norm).max(floor);
    Ok(LoewnerCheck {
        holds: margin >= -threshold,
        margin,
        norm,
        threshold,
    })
}
