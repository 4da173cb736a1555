use std::f64::consts::PI;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    asymptotic_fit, eta_min_scaling, final_theorem_check, heuristic_extremes, heuristic_min_constant,
    lemma_rnj_check, mnq_bound_check, quantile_prediction, sandwich_check, summary_text, write_json_lines,
    write_summary_csv, BoundReport, CheckTolerances, GrowthModel, SandwichConfig, DEFAULT_FLATNESS,
};
use crate::error::Result;
use crate::spectra::{condition_report, SpectrumReport};
use crate::symbols::AggregateSymbol;

use super::config::ExperimentConfig;
use super::tables::{hat_matrix, pencil_report, Preconditioner};

pub const RNJ_ORDERS: [usize; 5] = [8, 16, 32, 64, 128];
pub const RNJ_ALPHAS: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
pub const SANDWICH_ORDERS: [usize; 3] = [16, 32, 64];
pub const MNQ_ORDERS: [usize; 4] = [32, 64, 128, 256];
/// Allowed relative change of `λ_min(T_n(θ²)) n²` per doubling.
pub const ETA_DOUBLING_TOL: f64 = 0.1;
pub const QUANTILE_REL_TOL: f64 = 1e-10;

/// A soft check: reported, never fatal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub name: String,
    pub n: Option<usize>,
    pub value: f64,
    pub target: f64,
    pub lower: f64,
    pub upper: f64,
    pub within: bool,
}

impl Diagnostic {
    fn new(name: &str, n: Option<usize>, value: f64, target: f64, lower: f64, upper: f64) -> Self {
        Self {
            name: name.into(),
            n,
            value,
            target,
            lower,
            upper,
            within: value >= lower && value <= upper,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChecksOutcome {
    pub reports: Vec<BoundReport>,
    pub diagnostics: Vec<Diagnostic>,
    pub files: Vec<PathBuf>,
}

impl ChecksOutcome {
    pub fn failures(&self) -> usize {
        self.reports.iter().filter(|r| !r.passed).count()
    }

    pub fn summary(&self) -> String {
        let mut s = summary_text(&self.reports);
        for d in &self.diagnostics {
            let n = d.n.map(|n| format!(" n={n}")).unwrap_or_default();
            s.push_str(&format!(
                "diag {:<36} {:>12.6} in [{}, {}] target {:.6}{}{}\n",
                d.name,
                d.value,
                d.lower,
                d.upper,
                d.target,
                n,
                if d.within { "" } else { "  (outside)" }
            ));
        }
        s
    }
}

fn collect<T: Send>(items: Vec<Result<Vec<T>>>) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for r in items {
        out.extend(r?);
    }
    Ok(out)
}

pub fn rnj_suite(tol: &CheckTolerances) -> Result<Vec<BoundReport>> {
    let grid: Vec<(usize, f64)> = RNJ_ORDERS
        .iter()
        .flat_map(|&n| RNJ_ALPHAS.iter().map(move |&a| (n, a)))
        .collect();
    collect(
        grid.par_iter()
            .map(|&(n, a)| lemma_rnj_check(n, a, tol).map(|(x, y)| vec![x, y]))
            .collect(),
    )
}

pub fn sandwich_suite(cfg: &ExperimentConfig, tol: &CheckTolerances) -> Result<Vec<BoundReport>> {
    let configs = (0..cfg.num_seeds as u64)
        .flat_map(|i| {
            SANDWICH_ORDERS
                .iter()
                .map(move |&n| SandwichConfig::random(n, cfg.c_range, cfg.d_range, cfg.seed.wrapping_add(i)))
        })
        .collect::<Result<Vec<_>>>()?;
    collect(configs.par_iter().map(|c| sandwich_check(c, tol)).collect())
}

pub fn mnq_suite(tol: &CheckTolerances) -> Result<Vec<BoundReport>> {
    let mut out = collect(
        MNQ_ORDERS
            .par_iter()
            .map(|&n| {
                let fin = final_theorem_check(n, tol)?;
                let partial = mnq_bound_check(n, &[0.25, 0.5, 0.75, 1.0], tol)?;
                let trivial = mnq_bound_check(n, &[0.0], tol)?;
                let mut v = fin.reports().to_vec();
                v.extend(partial.reports());
                v.push(trivial.stated);
                Ok(v)
            })
            .collect(),
    )?;
    let scaling = eta_min_scaling(&MNQ_ORDERS)?;
    for w in scaling.windows(2) {
        let change = (w[1].1 / w[0].1 - 1.0).abs();
        out.push(
            BoundReport::new("eta_min_doubling", change, ETA_DOUBLING_TOL, 0.0)
                .with_param("n", w[1].0)
                .with_param("scaled_prev", w[0].1)
                .with_param("scaled", w[1].1),
        );
    }
    Ok(out)
}

/// Closed form of `F̂_q(πx)` against direct summation of the `q` terms.
pub fn quantile_suite() -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for q in [1usize, 2, 7, 64, 1024] {
        let sym = AggregateSymbol::hat(q);
        for x in [0.01, 0.1, 0.25, 0.5, 0.75, 0.99] {
            let closed = quantile_prediction(q, x)?;
            let direct = sym.eval(PI * x)?;
            out.push(
                BoundReport::new("quantile_closed_form", (closed - direct).abs(), QUANTILE_REL_TOL * direct.abs(), 0.0)
                    .with_param("q", q)
                    .with_param("x", x),
            );
        }
    }
    Ok(out)
}

fn series(rows: &[SpectrumReport], f: impl Fn(&SpectrumReport) -> f64) -> Vec<(usize, f64)> {
    rows.iter().map(|r| (r.n, f(r))).collect()
}

/// Heuristic extremes and growth-law fits over `cfg.orders()`.
pub fn heuristic_diagnostics(cfg: &ExperimentConfig) -> Result<Vec<Diagnostic>> {
    let orders: Vec<usize> = cfg.orders().into_iter().filter(|&n| n >= 2).collect();
    let engine = cfg.engine();
    let plain: Vec<SpectrumReport> = orders
        .par_iter()
        .map(|&n| condition_report(&hat_matrix(n, engine, cfg.tol)?, None).map(|r| r.without_spectrum()))
        .collect::<Result<_>>()?;
    let pencil: Vec<SpectrumReport> = orders
        .par_iter()
        .map(|&n| pencil_report(n, engine, cfg.tol, Preconditioner::Eta).map(|r| r.without_spectrum()))
        .collect::<Result<_>>()?;

    let c = heuristic_min_constant();
    let mut out = Vec::new();
    for r in &plain {
        let (_, hmax) = heuristic_extremes(r.n)?;
        out.push(Diagnostic::new("n_lambda_min", Some(r.n), r.n as f64 * r.lambda_min, c, 5.0, 5.9));
        out.push(Diagnostic::new(
            "lambda_max_scaled",
            Some(r.n),
            r.lambda_max / hmax,
            1.0,
            0.99,
            1.02,
        ));
    }
    let fits: [(&str, Vec<(usize, f64)>, GrowthModel, f64); 5] = [
        ("fit_mu2_n2_over_logn", series(&plain, |r| r.mu2), GrowthModel::N2OverLogN, DEFAULT_FLATNESS),
        ("fit_lambda_min_h", series(&plain, |r| r.lambda_min), GrowthModel::H, DEFAULT_FLATNESS),
        ("fit_pencil_lambda_min_n_over_logn", series(&pencil, |r| r.lambda_min), GrowthModel::NOverLogN, 0.2),
        ("fit_pencil_lambda_max_n2_over_logn", series(&pencil, |r| r.lambda_max), GrowthModel::N2OverLogN, 0.2),
        ("fit_pencil_mu2_n", series(&pencil, |r| r.mu2), GrowthModel::N, 0.2),
    ];
    for (name, s, model, threshold) in fits {
        // Fits need three doubling orders; other sweeps skip them.
        if let Ok(f) = asymptotic_fit(&s, model, threshold) {
            out.push(Diagnostic::new(name, None, f.max_rel_deviation, 0.0, 0.0, threshold));
        }
    }
    Ok(out)
}

/// Every hard bound plus the heuristic diagnostics; writes JSON lines,
/// a CSV summary and a text summary to the output directory.
pub fn run_checks(cfg: &ExperimentConfig) -> Result<ChecksOutcome> {
    cfg.validate()?;
    let tol = CheckTolerances::default();
    // Build every sandwich config first so bad bounds fail before any work.
    for n in SANDWICH_ORDERS {
        SandwichConfig::random(n, cfg.c_range, cfg.d_range, cfg.seed)?;
    }
    std::fs::create_dir_all(&cfg.output_dir)?;

    let mut reports = rnj_suite(&tol)?;
    reports.extend(sandwich_suite(cfg, &tol)?);
    reports.extend(mnq_suite(&tol)?);
    reports.extend(quantile_suite()?);
    let diagnostics = heuristic_diagnostics(cfg)?;

    let mut outcome = ChecksOutcome {
        reports,
        diagnostics,
        files: Vec::new(),
    };
    let dir = &cfg.output_dir;
    let jl = dir.join("checks.jsonl");
    let mut w = BufWriter::new(File::create(&jl)?);
    write_json_lines(&outcome.reports, &mut w)?;
    for d in &outcome.diagnostics {
        serde_json::to_writer(&mut w, d)?;
        writeln!(w)?;
    }
    w.flush()?;
    let csv = dir.join("checks_summary.csv");
    write_summary_csv(&outcome.reports, BufWriter::new(File::create(&csv)?))?;
    let txt = dir.join("checks_summary.txt");
    std::fs::write(&txt, outcome.summary())?;
    outcome.files = vec![jl, csv, txt];
    Ok(outcome)
}

