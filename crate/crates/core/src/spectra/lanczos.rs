//! Lanczos iteration with full reorthogonalization for one extremal
//! eigenpair of a symmetric operator.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn start_vector(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<f64> = (0..n).map(|_| rng.random::<f64>() - 0.5).collect();
    let s = norm(&v);
    v.iter_mut().for_each(|x| *x /= s);
    v
}

/// Largest eigenpair of `apply`. `accept` receives each candidate Ritz pair
/// and decides convergence, returning the residual used in error reports.
/// Returns the number of iterations taken.
pub(crate) fn largest<A, C>(
    n: usize,
    max_iter: usize,
    seed: u64,
    mut apply: A,
    mut accept: C,
) -> Result<usize>
where
    A: FnMut(&[f64]) -> Result<Vec<f64>>,
    C: FnMut(f64, &[f64]) -> Result<(bool, f64)>,
{
    let max_iter = max_iter.clamp(1, n);
    let mut basis: Vec<Vec<f64>> = vec![start_vector(n, seed)];
    let mut alpha: Vec<f64> = Vec::new();
    let mut beta: Vec<f64> = Vec::new();
    let mut next_check = 1usize;
    let mut last = (f64::NAN, f64::INFINITY);

    loop {
        let j = alpha.len();
        let mut w = apply(&basis[j])?;
        let a = dot(&w, &basis[j]);
        alpha.push(a);
        for _ in 0..2 {
            for v in &basis {
                let c = dot(&w, v);
                w.iter_mut().zip(v).for_each(|(x, y)| *x -= c * y);
            }
        }
        let b = norm(&w);
        let m = j + 1;
        let scale = alpha.iter().map(|x| x.abs()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
        let exhausted = m == max_iter || b <= 1e-13 * scale;

        if m >= next_check || exhausted {
            next_check = m + (m / 8).max(2);
            let mut tri = DMatrix::zeros(m, m);
            for i in 0..m {
                tri[(i, i)] = alpha[i];
                if i + 1 < m {
                    tri[(i, i + 1)] = beta[i];
                    tri[(i + 1, i)] = beta[i];
                }
            }
            let eig = SymmetricEigen::new(tri);
            let (top, &value) = eig
                .eigenvalues
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.total_cmp(y.1))
                .expect("nonempty");
            let y = eig.eigenvectors.column(top);
            let mut vector = vec![0.0; n];
            for (i, v) in basis.iter().enumerate() {
                let c = y[i];
                vector.iter_mut().zip(v).for_each(|(x, q)| *x += c * q);
            }
            let s = norm(&vector);
            vector.iter_mut().for_each(|x| *x /= s);
            let (ok, residual) = accept(value, &vector)?;
            last = (value, residual);
            if ok {
                return Ok(m);
            }
        }
        if exhausted {
            return Err(Error::NoConvergence {
                iterations: m,
                estimate: last.0,
                residual: last.1,
            });
        }
        beta.push(b);
        w.iter_mut().for_each(|x| *x /= b);
        basis.push(w);
    }
}
