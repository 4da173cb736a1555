//! Composite Gauss-Legendre rules on panel partitions of `[0, b]`.
//!
//! Every integrand handled here is smooth on `(0, b]` with at worst an
//! algebraic endpoint behaviour `θ^β`, `β ≥ 1`, at the origin. The first
//! panel is graded geometrically towards zero, so each graded panel
//! `[a, 2a]` sees the singularity at a fixed relative distance and the rule
//! converges geometrically on it. Accuracy is estimated by comparing a low-
//! and a high-order rule on the same partition.

use std::num::NonZeroUsize;
use std::sync::OnceLock;

use gauss_quad::legendre::GaussLegendre;

use crate::error::{Error, Result};

pub(crate) const LOW_ORDER: usize = 16;
pub(crate) const HIGH_ORDER: usize = 24;
pub(crate) const GRADING_LEVELS: usize = 40;
pub(crate) const MAX_REFINEMENTS: u32 = 6;

pub(crate) struct Rule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl Rule {
    fn new(order: usize) -> Self {
        let gl = GaussLegendre::new(NonZeroUsize::new(order).expect("nonzero order"));
        let (nodes, weights) = gl.as_node_weight_pairs().iter().copied().unzip();
        Self { nodes, weights }
    }

    /// Nodes and weights of the rule mapped onto `[a, b]`.
    pub(crate) fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }
}

pub(crate) struct RulePair {
    pub(crate) low: Rule,
    pub(crate) high: Rule,
}

pub(crate) fn rules() -> &'static RulePair {
    static RULES: OnceLock<RulePair> = OnceLock::new();
    RULES.get_or_init(|| RulePair {
        low: Rule::new(LOW_ORDER),
        high: Rule::new(HIGH_ORDER),
    })
}

/// Partition of `[0, b]`: a first panel of length `min(width, b)` graded
/// towards zero, followed by uniform panels of length `width`.
pub(crate) fn panels(b: f64, width: f64) -> Vec<(f64, f64)> {
    let first = width.min(b);
    let mut out = Vec::with_capacity(GRADING_LEVELS + 1 + (b / width).ceil() as usize);
    let mut lo = first * 0.5f64.powi(GRADING_LEVELS as i32);
    out.push((0.0, lo));
    for _ in 0..GRADING_LEVELS {
        let hi = lo * 2.0;
        out.push((lo, hi.min(first)));
        lo = hi;
    }
    let mut a = first;
    while b - a > 1e-14 * width {
        let next = (a + width).min(b);
        out.push((a, next));
        a = next;
    }
    out
}

/// Composite rule value and `Σ |w f(x)|`.
pub(crate) fn integrate<F: Fn(f64) -> f64>(f: &F, parts: &[(f64, f64)], rule: &Rule) -> (f64, f64) {
    let mut mass = 0.0;
    let value = compensated_sum(parts.iter().map(|&(a, b)| {
        rule.mapped(a, b)
            .map(|(x, w)| {
                let v = w * f(x);
                mass += v.abs();
                v
            })
            .sum::<f64>()
    }));
    (value, mass)
}

/// Flattened `(node, weight)` list of `rule` over all panels.
pub(crate) fn flatten(parts: &[(f64, f64)], rule: &Rule) -> Vec<(f64, f64)> {
    parts.iter().flat_map(|&(a, b)| rule.mapped(a, b)).collect()
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Estimate {
    pub(crate) value: f64,
    pub(crate) error: f64,
}

/// Integrates `f` over `[0, b]`, halving the panel width until the low/high
/// order discrepancy is below `tol`. The reported error is never below the
/// roundoff level `ε Σ|w f|`.
pub(crate) fn integrate_to_tol<F: Fn(f64) -> f64>(
    f: F,
    b: f64,
    width: f64,
    tol: f64,
) -> Result<Estimate> {
    let rp = rules();
    let mut best = f64::INFINITY;
    for r in 0..=MAX_REFINEMENTS {
        let parts = panels(b, width / f64::from(1u32 << r));
        let (high, mass) = integrate(&f, &parts, &rp.high);
        let (low, _) = integrate(&f, &parts, &rp.low);
        let error = (high - low).abs().max(f64::EPSILON * mass);
        if error <= tol {
            return Ok(Estimate { value: high, error });
        }
        best = best.min(error);
    }
    Err(Error::Accuracy {
        requested: tol,
        achieved: best,
    })
}

/// `cos(k t)` with the rounding error of the product `k t` corrected to
/// first order, which matters once `k t` reaches the thousands.
pub(crate) fn cos_mul(k: f64, t: f64) -> f64 {
    let p = k * t;
    let e = k.mul_add(t, -p);
    let (s, c) = p.sin_cos();
    c - s * e
}

/// Neumaier-compensated summation.
pub(crate) fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in iter {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}
