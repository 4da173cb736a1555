//! Numerical verification of the spectral bounds for `T_n(F̂_n)` and its
//! weighted variants.
//!
//! Every check produces [`BoundReport`]s: the two computed sides of an
//! inequality `lhs ≤ rhs`, the margin `rhs - lhs` and a pass flag.

mod heuristics;
mod mnq;
mod rnj;
mod sandwich;

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;
use crate::symbols::{AggregateSymbol, Engine};
use crate::toeplitz::{LoewnerCheck, SymToeplitz};

pub use heuristics::{
    asymptotic_fit, hat_closed_form, heuristic_extremes, heuristic_min_constant,
    quantile_prediction, FitReport, GrowthModel, DEFAULT_FLATNESS,
};
pub use mnq::{eta_min_scaling, final_theorem_check, mnq_bound_check, MnqReport};
pub use rnj::lemma_rnj_check;
pub use sandwich::{sandwich_check, SandwichConfig};

/// Accuracy requested from the coefficient quadrature inside the checks.
pub(crate) const CHECK_COEFF_TOL: f64 = 1e-13;

/// Tolerances applied when deciding whether an inequality holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckTolerances {
    /// Absolute slack for norm bounds.
    pub abs: f64,
    /// Relative slack for Loewner-order and scalar eigenvalue bounds.
    pub rel: f64,
}

impl Default for CheckTolerances {
    fn default() -> Self {
        Self {
            abs: 1e-12,
            rel: 1e-10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`.
    pub margin: f64,
    pub tol: f64,
    pub passed: bool,
    pub params: BTreeMap<String, Value>,
}

impl BoundReport {
    /// `lhs ≤ rhs` up to the absolute slack `tol`.
    pub fn new(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let margin = rhs - lhs;
        Self {
            name: name.into(),
            lhs,
            rhs,
            margin,
            tol,
            passed: margin >= -tol,
            params: BTreeMap::new(),
        }
    }

    /// `lhs ≤ rhs` up to `rel · max(|lhs|, |rhs|)`.
    pub fn relative(name: impl Into<String>, lhs: f64, rhs: f64, rel: f64) -> Self {
        Self::new(name, lhs, rhs, rel * lhs.abs().max(rhs.abs()))
    }

    /// Matrix inequality `A ≤ B` recorded as `0 ≤ λ_min(B - A)`.
    pub fn loewner(name: impl Into<String>, check: &LoewnerCheck) -> Self {
        let mut r = Self::new(name, 0.0, check.margin, check.threshold);
        r.passed = check.holds;
        r.with_param("norm_diff", check.norm)
    }

    pub fn with_param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

pub fn write_json_lines<W: Write>(reports: &[BoundReport], mut w: W) -> Result<()> {
    for r in reports {
        serde_json::to_writer(&mut w, r)?;
        writeln!(w)?;
    }
    Ok(())
}

pub fn write_summary_csv<W: Write>(reports: &[BoundReport], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["name", "params", "lhs", "rhs", "margin", "tol", "pass"])?;
    for r in reports {
        out.write_record([
            r.name.clone(),
            r.params_string(),
            format!("{:e}", r.lhs),
            format!("{:e}", r.rhs),
            format!("{:e}", r.margin),
            format!("{:e}", r.tol),
            r.passed.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn summary_text(reports: &[BoundReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&format!(
            "{:<4} {:<28} margin {:>12.4e}  {}\n",
            if r.passed { "ok" } else { "FAIL" },
            r.name,
            r.margin,
            r.params_string()
        ));
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    s.push_str(&format!("{} checks, {} failed\n", reports.len(), failed));
    s
}

/// Exact coefficients when every exponent is 0 or 1, quadrature otherwise.
pub(crate) fn assemble(sym: &AggregateSymbol, n: usize) -> Result<SymToeplitz> {
    let engine = if sym.exponents().iter().all(|&a| a == 0.0 || a == 1.0) {
        Engine::ClosedForm
    } else {
        Engine::Quadrature
    };
    SymToeplitz::assemble(&sym.coefficients(n, engine, CHECK_COEFF_TOL)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_flag_follows_margin() {
        assert!(BoundReport::new("a", 1.0, 1.0 - 1e-13, 1e-12).passed);
        assert!(!BoundReport::new("a", 1.0, 0.5, 1e-12).passed);
        assert!(BoundReport::relative("b", 2.0, 2.0 * (1.0 - 1e-12), 1e-10).passed);
    }

    #[test]
    fn summary_lists_failures() {
        let reps = vec![
            BoundReport::new("good", 0.0, 1.0, 0.0).with_param("n", 4),
            BoundReport::new("bad", 1.0, 0.0, 0.0),
        ];
        let s = summary_text(&reps);
        assert!(s.contains("FAIL bad"));
        assert!(s.contains("2 checks, 1 failed"));
        let mut buf = Vec::new();
        write_json_lines(&reps, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 2);
    }
}
