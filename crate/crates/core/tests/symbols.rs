mod common;

use std::f64::consts::PI;

use distorder_toeplitz::symbols::{
    eta_coeffs, fourier_coeff_eta, fourier_coeff_power, psi_coeff, psi_coeff_bound, AggregateSymbol, Engine,
};
use proptest::prelude::*;

#[test]
fn eta_coefficients_match_quadrature() {
    assert!((fourier_coeff_eta(0).unwrap() - PI * PI / 3.0).abs() < 1e-15);
    for k in 1..=6usize {
        let oracle = common::power_coeff(0.0, k, 1e-13);
        let v = fourier_coeff_eta(k as i64).unwrap();
        assert!((v - oracle).abs() < 1e-12, "k={k}: {v} vs {oracle}");
    }
    assert_eq!(fourier_coeff_eta(1).unwrap(), -2.0);
    assert_eq!(fourier_coeff_eta(2).unwrap(), 0.5);
    assert!(fourier_coeff_eta(-1).is_err());
}

#[test]
fn power_coefficient_half_three() {
    let oracle = common::power_coeff(0.5, 3, 1e-13);
    let v = fourier_coeff_power(0.5, 3, Engine::Quadrature, 1e-12).unwrap();
    assert!((v - oracle).abs() < 1e-10, "{v} vs {oracle}");
}

#[test]
fn power_coefficient_grid_against_oracle() {
    // 10 exponents times 5 frequencies.
    let mut worst = 0.0f64;
    for i in 0..10 {
        let alpha = i as f64 / 9.0;
        for k in [0usize, 1, 4, 17, 63] {
            let oracle = common::power_coeff(alpha, k, 1e-13);
            let v = fourier_coeff_power(alpha, k as i64, Engine::Quadrature, 1e-12).unwrap();
            worst = worst.max((v - oracle).abs());
        }
    }
    assert!(worst < 1e-10, "worst deviation {worst:e}");
}

#[test]
fn closed_form_endpoints() {
    let v = fourier_coeff_power(1.0, 0, Engine::Quadrature, 1e-13).unwrap();
    assert!((v - PI / 2.0).abs() < 1e-13);
    let v = fourier_coeff_power(0.0, 2, Engine::Quadrature, 1e-13).unwrap();
    assert!((v - 0.5).abs() < 1e-13);
    for k in 0..6 {
        let c = fourier_coeff_power(1.0, k, Engine::ClosedForm, 1.0).unwrap();
        let q = fourier_coeff_power(1.0, k, Engine::Quadrature, 1e-13).unwrap();
        assert!((c - q).abs() < 1e-12);
    }
}

#[test]
fn aggregate_zeroth_coefficient_n4() {
    let expected: f64 = (0..4)
        .map(|j| {
            let a = j as f64 / 4.0;
            0.25f64.powf(a) * PI.powf(2.0 - a) / (3.0 - a)
        })
        .sum();
    let c = AggregateSymbol::hat(4).coefficients(4, Engine::Quadrature, 1e-13).unwrap();
    assert!((c.coeffs[0] - expected).abs() < 1e-13);
}

#[test]
fn aggregate_single_term_is_eta() {
    let c = AggregateSymbol::hat(1).coefficients(8, Engine::Quadrature, 1e-13).unwrap();
    let e = eta_coeffs(8).unwrap();
    for (a, b) in c.coeffs.iter().zip(&e.coeffs) {
        assert!((a - b).abs() < 1e-13);
    }
}

#[test]
fn psi_coefficient_n8() {
    let (n, alpha, k) = (8usize, 0.5, 3usize);
    let h = 1.0 / n as f64;
    let oracle = common::integrate(
        |t| (h.powf(alpha) * t.powf(2.0 - alpha) - t * t) * (k as f64 * t).cos(),
        0.0,
        h,
        1e-16,
    ) / PI;
    let v = psi_coeff(n, alpha, k as i64).unwrap();
    assert!((v - oracle).abs() < 1e-14, "{v:e} vs {oracle:e}");
    let bound = 0.5 / (3.0 * PI * 512.0 * 2.5);
    assert!((psi_coeff_bound(n, alpha) - bound).abs() < 1e-20);
    assert!(v.abs() <= bound);
}

#[test]
fn psi_zeroth_coefficient_is_exact() {
    let v = psi_coeff(4, 1.0, 0).unwrap();
    assert!((v - 1.0 / (384.0 * PI)).abs() < 1e-16);
    assert_eq!(psi_coeff(4, 0.0, 5).unwrap(), 0.0);
}

#[test]
fn engines_agree() {
    for n in [8usize, 64, 256] {
        let sym = AggregateSymbol::hat(n);
        let q = sym.coefficients(n, Engine::Quadrature, 1e-12).unwrap();
        let f = sym.coefficients(n, Engine::fft(), 1e-12).unwrap();
        let allowed = q.abs_tol + f.abs_tol;
        let worst = q
            .coeffs
            .iter()
            .zip(&f.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(worst <= allowed, "n={n}: {worst:e} > {allowed:e}");
    }
}

#[test]
fn eval_matches_geometric_closed_form() {
    let q = 1024usize;
    let sym = AggregateSymbol::hat(q);
    for x in [0.003, 0.1, 0.5, 0.9, 1.0] {
        let t = PI * x;
        let qt = q as f64 * t;
        let closed = t * t * (1.0 - 1.0 / qt) / (1.0 - qt.powf(-1.0 / q as f64));
        let v = sym.eval(t).unwrap();
        assert!(common::rel_close(v, closed, 1e-12), "x={x}: {v} vs {closed}");
    }
    assert_eq!(sym.eval(0.0).unwrap(), 0.0);
    assert!((AggregateSymbol::hat(1).eval(PI).unwrap() - PI * PI).abs() < 1e-14);
    assert!(sym.eval(3.5).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coefficients_decay(alpha in 0.0f64..1.0, k in 8usize..40) {
        let a1 = fourier_coeff_power(alpha, 1, Engine::Quadrature, 1e-12).unwrap();
        let a2k = fourier_coeff_power(alpha, 2 * k as i64, Engine::Quadrature, 1e-12).unwrap();
        prop_assert!(a2k.abs() < a1.abs());
    }

    #[test]
    fn zeroth_coefficient_positive(alpha in 0.0f64..=1.0) {
        let a0 = fourier_coeff_power(alpha, 0, Engine::Quadrature, 1e-12).unwrap();
        prop_assert!(a0 > 0.0);
        prop_assert!((a0 - PI.powf(2.0 - alpha) / (3.0 - alpha)).abs() < 1e-12);
    }

    #[test]
    fn psi_respects_bound(n in 1usize..200, alpha in 0.0f64..=1.0, k in 0i64..400) {
        let v = psi_coeff(n, alpha, k).unwrap();
        prop_assert!(v.abs() <= psi_coeff_bound(n, alpha) * (1.0 + 1e-12) + 1e-18);
    }

    #[test]
    fn aggregate_is_even_nonnegative(n in 1usize..64, theta in -PI..PI) {
        let s = AggregateSymbol::hat(n);
        let v = s.eval(theta).unwrap();
        prop_assert!(v >= 0.0);
        prop_assert_eq!(v, s.eval(-theta).unwrap());
    }
}
