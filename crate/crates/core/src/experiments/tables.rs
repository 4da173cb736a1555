use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::spectra::{condition_report, SpectrumReport};
use crate::symbols::{eta_coeffs, AggregateSymbol, Engine};
use crate::toeplitz::SymToeplitz;

use super::config::{ExperimentConfig, OutputFormat};
use super::reference::{lookup, REFERENCE_REL_TOL, TABLE1, TABLE2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// Spectrum of `T_n(F̂_n)`.
    Table1,
    /// Spectrum of `T_n(η)^{-1} T_n(F̂_n)`.
    Table2,
}

impl TableKind {
    pub fn name(&self) -> &'static str {
        match self {
            TableKind::Table1 => "table1",
            TableKind::Table2 => "table2",
        }
    }

    fn reference(&self) -> &'static [(usize, [f64; 6])] {
        match self {
            TableKind::Table1 => &TABLE1,
            TableKind::Table2 => &TABLE2,
        }
    }
}

/// Matrix used as `M` in `M^{-1} T_n(F̂_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preconditioner {
    Eta,
    /// `M = T_n(F̂_n)`; every eigenvalue is one.
    Itself,
}

/// `T_n(F̂_n)` from the configured engine.
pub fn hat_matrix(n: usize, engine: Engine, tol: f64) -> Result<SymToeplitz> {
    SymToeplitz::assemble(&AggregateSymbol::hat(n).coefficients(n, engine, tol)?)
}

pub fn pencil_report(n: usize, engine: Engine, tol: f64, precond: Preconditioner) -> Result<SpectrumReport> {
    let a = hat_matrix(n, engine, tol)?;
    let m = match precond {
        Preconditioner::Eta => SymToeplitz::assemble(&eta_coeffs(n)?)?,
        Preconditioner::Itself => a.clone(),
    };
    condition_report(&a, Some(&m))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffRow {
    pub n: usize,
    pub quantity: String,
    pub computed: f64,
    pub reference: Option<f64>,
    pub rel_diff: Option<f64>,
    pub deviation: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableOutcome {
    pub table: TableKind,
    pub rows: Vec<SpectrumReport>,
    pub diff: Vec<DiffRow>,
    pub files: Vec<PathBuf>,
}

impl TableOutcome {
    pub fn deviations(&self) -> usize {
        self.diff.iter().filter(|d| d.deviation).count()
    }

    pub fn diff_text(&self) -> String {
        let mut s = format!(
            "{:>6}  {:<18} {:>14} {:>14} {:>10}  {}\n",
            "n", "quantity", "computed", "reference", "rel_diff", "status"
        );
        for d in &self.diff {
            let (r, rel) = match (d.reference, d.rel_diff) {
                (Some(r), Some(rel)) => (sig6(r), format!("{rel:.2e}")),
                _ => ("-".into(), "-".into()),
            };
            let status = match (d.reference, d.deviation) {
                (None, _) => "no reference",
                (_, true) => "DEVIATION",
                _ => "ok",
            };
            s.push_str(&format!(
                "{:>6}  {:<18} {:>14} {:>14} {:>10}  {}\n",
                d.n,
                d.quantity,
                sig6(d.computed),
                r,
                rel,
                status
            ));
        }
        s.push_str(&format!(
            "{} values compared, {} deviations beyond rel {:e}\n",
            self.diff.iter().filter(|d| d.reference.is_some()).count(),
            self.deviations(),
            REFERENCE_REL_TOL
        ));
        s
    }
}

/// Six significant digits.
pub fn sig6(v: f64) -> String {
    format!("{v:.5e}")
}

pub fn diff_rows(kind: TableKind, report: &SpectrumReport) -> Vec<DiffRow> {
    let reference = lookup(kind.reference(), report.n);
    let cols = report.columns();
    report
        .row()
        .iter()
        .enumerate()
        .map(|(i, &computed)| {
            let reference = reference.map(|r| r[i]);
            let rel_diff = reference.map(|r| ((computed - r) / r).abs());
            DiffRow {
                n: report.n,
                quantity: cols[i + 1].to_string(),
                computed,
                reference,
                rel_diff,
                deviation: rel_diff.is_some_and(|d| !(d <= REFERENCE_REL_TOL)),
            }
        })
        .collect()
}

fn table_row(kind: TableKind, n: usize, cfg: &ExperimentConfig) -> Result<SpectrumReport> {
    let report = match kind {
        TableKind::Table1 => condition_report(&hat_matrix(n, cfg.engine(), cfg.tol)?, None)?,
        TableKind::Table2 => pencil_report(n, cfg.engine(), cfg.tol, Preconditioner::Eta)?,
    };
    Ok(report.without_spectrum())
}

fn run_table(kind: TableKind, cfg: &ExperimentConfig) -> Result<TableOutcome> {
    cfg.validate()?;
    std::fs::create_dir_all(&cfg.output_dir)?;
    let orders = cfg.orders();
    let results: Vec<Result<SpectrumReport>> = orders.par_iter().map(|&n| table_row(kind, n, cfg)).collect();

    let mut rows = Vec::new();
    let mut first_err = None;
    for r in results {
        match r {
            Ok(rep) => rows.push(rep),
            Err(e) => {
                first_err = Some(e);
                break;
            }
        }
    }
    let diff: Vec<DiffRow> = rows.iter().flat_map(|r| diff_rows(kind, r)).collect();
    let mut outcome = TableOutcome {
        table: kind,
        rows,
        diff,
        files: Vec::new(),
    };
    write_table(&mut outcome, cfg)?;
    match first_err {
        Some(e) => Err(e),
        None => Ok(outcome),
    }
}

fn write_table(outcome: &mut TableOutcome, cfg: &ExperimentConfig) -> Result<()> {
    let name = outcome.table.name();
    match cfg.format {
        OutputFormat::Csv => {
            let path = cfg.output_dir.join(format!("{name}.csv"));
            let mut w = csv::Writer::from_writer(BufWriter::new(File::create(&path)?));
            let cols = match outcome.table {
                TableKind::Table1 => crate::spectra::UNPRECONDITIONED_COLUMNS,
                TableKind::Table2 => crate::spectra::PRECONDITIONED_COLUMNS,
            };
            w.write_record(cols)?;
            for r in &outcome.rows {
                let mut rec = vec![r.n.to_string()];
                rec.extend(r.row().iter().map(|&v| sig6(v)));
                w.write_record(rec)?;
                w.flush()?;
            }
            let diff_path = cfg.output_dir.join(format!("{name}_diff.csv"));
            let mut d = csv::Writer::from_writer(BufWriter::new(File::create(&diff_path)?));
            d.write_record(["n", "quantity", "computed", "reference", "rel_diff", "deviation"])?;
            let opt = |v: Option<f64>, f: fn(f64) -> String| v.map(f).unwrap_or_default();
            for r in &outcome.diff {
                d.write_record([
                    r.n.to_string(),
                    r.quantity.clone(),
                    sig6(r.computed),
                    opt(r.reference, sig6),
                    opt(r.rel_diff, |x| format!("{x:.3e}")),
                    r.deviation.to_string(),
                ])?;
            }
            d.flush()?;
            outcome.files = vec![path, diff_path];
        }
        OutputFormat::Json => {
            let path = cfg.output_dir.join(format!("{name}.json"));
            let mut w = BufWriter::new(File::create(&path)?);
            serde_json::to_writer_pretty(&mut w, &*outcome)?;
            writeln!(w)?;
            w.flush()?;
            outcome.files = vec![path];
        }
    }
    Ok(())
}

/// Extreme eigenvalues and conditioning of `T_n(F̂_n)` for every order.
pub fn run_table1(cfg: &ExperimentConfig) -> Result<TableOutcome> {
    run_table(TableKind::Table1, cfg)
}

/// Same for the pencil `T_n(η)^{-1} T_n(F̂_n)`.
pub fn run_table2(cfg: &ExperimentConfig) -> Result<TableOutcome> {
    run_table(TableKind::Table2, cfg)
}
