//! Dense symmetric kernels backing the eigensolvers.

use nalgebra::{Cholesky, DMatrix, Dyn};

use crate::error::{Error, Result};

/// Ascending eigenvalues of a symmetric matrix (eigenvectors are not formed).
pub(crate) fn sym_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

pub(crate) fn cholesky(m: DMatrix<f64>) -> Result<Cholesky<f64, Dyn>> {
    Cholesky::new(m).ok_or(Error::NotPositiveDefinite)
}

/// `L^{-1} A L^{-T}` for the Cholesky factor `L` of `M`, symmetrized.
pub(crate) fn congruence(a: &DMatrix<f64>, chol: &Cholesky<f64, Dyn>) -> DMatrix<f64> {
    let l = chol.l_dirty();
    let x = l
        .solve_lower_triangular(a)
        .expect("Cholesky factor has a positive diagonal");
    let mut c = l
        .solve_lower_triangular(&x.transpose())
        .expect("Cholesky factor has a positive diagonal");
    let n = c.nrows();
    for i in 0..n {
        for j in 0..i {
            let s = 0.5 * (c[(i, j)] + c[(j, i)]);
            c[(i, j)] = s;
            c[(j, i)] = s;
        }
    }
    c
}
