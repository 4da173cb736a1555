//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use nalgebra::DMatrix;

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let x = h * XGK[i];
        let s = f(c - x) + f(c + x);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let (v, e) = gk15(f, a, b);
    if e <= tol || depth == 0 {
        return v;
    }
    let m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, depth - 1) + adapt(f, m, b, 0.5 * tol, depth - 1)
}

/// Globally adaptive Gauss-Kronrod integral of `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    adapt(&f, a, b, tol, 50)
}

/// `(1/π) ∫_0^π θ^{2-α} cos(kθ) dθ`.
pub fn power_coeff(alpha: f64, k: usize, tol: f64) -> f64 {
    let kf = k as f64;
    integrate(|t| t.powf(2.0 - alpha) * (kf * t).cos(), 0.0, PI, tol * PI) / PI
}

/// Cyclic Jacobi eigenvalues of a symmetric matrix, ascending.
pub fn jacobi_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let n = m.nrows();
    let mut a = m.clone();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum();
        if off.sqrt() <= 1e-15 * a.norm() {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Gauss-Jordan inverse with partial pivoting.
pub fn inverse(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    let mut a = m.clone();
    let mut inv = DMatrix::<f64>::identity(n, n);
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[(i, col)].abs().total_cmp(&a[(j, col)].abs()))
            .unwrap();
        a.swap_rows(col, piv);
        inv.swap_rows(col, piv);
        let d = a[(col, col)];
        for j in 0..n {
            a[(col, j)] /= d;
            inv[(col, j)] /= d;
        }
        for i in 0..n {
            if i != col {
                let f = a[(i, col)];
                for j in 0..n {
                    a[(i, j)] -= f * a[(col, j)];
                    inv[(i, j)] -= f * inv[(col, j)];
                }
            }
        }
    }
    inv
}

/// Real eigenvalues of a general matrix with a real positive spectrum, by
/// unshifted QR iteration (Gram-Schmidt), ascending.
pub fn qr_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let n = m.nrows();
    let mut a = m.clone();
    for _ in 0..200_000 {
        let lower: f64 = (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).map(|ij| a[ij].abs()).sum();
        if lower <= 1e-15 * a.norm() {
            break;
        }
        let mut q = DMatrix::<f64>::zeros(n, n);
        let mut r = DMatrix::<f64>::zeros(n, n);
        for j in 0..n {
            let mut v = a.column(j).clone_owned();
            for i in 0..j {
                let qi = q.column(i).clone_owned();
                let d = qi.dot(&v);
                r[(i, j)] = d;
                v -= qi * d;
            }
            let nv = v.norm();
            r[(j, j)] = nv;
            q.set_column(j, &(v / nv));
        }
        a = &r * &q;
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Dense Toeplitz from a first column.
pub fn toeplitz(col: &[f64]) -> DMatrix<f64> {
    let n = col.len();
    DMatrix::from_fn(n, n, |i, j| col[i.abs_diff(j)])
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs())
}
