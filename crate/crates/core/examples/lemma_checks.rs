//! Remainder-norm, Loewner and averaged-minimum bounds.

use distorder_toeplitz::analysis::{
    eta_min_scaling, final_theorem_check, lemma_rnj_check, mnq_bound_check, summary_text, CheckTolerances,
};

fn main() -> distorder_toeplitz::Result<()> {
    let tol = CheckTolerances::default();
    let mut reports = Vec::new();
    for n in [8, 32, 128] {
        for alpha in [0.1, 0.5, 1.0] {
            let (a, b) = lemma_rnj_check(n, alpha, &tol)?;
            reports.push(a);
            reports.push(b);
        }
    }
    for n in [32, 64, 128] {
        let r = final_theorem_check(n, &tol)?;
        println!(
            "n={n:<4} lambda_min {:.6e} <= {:.6e}; lambda_min/h^2 {:.4}; single-term reading {:.6e}",
            r.lambda_min, r.stated.rhs, r.lambda_min_over_h2, r.single_term_rhs
        );
        reports.extend(r.reports());
    }
    reports.extend(mnq_bound_check(64, &[0.2, 0.4, 0.6], &tol)?.reports());
    print!("{}", summary_text(&reports));
    for (n, v) in eta_min_scaling(&[32, 64, 128, 256])? {
        println!("n={n:<4} n^2 lambda_min(T_n(theta^2)) = {v:.6}");
    }
    Ok(())
}
