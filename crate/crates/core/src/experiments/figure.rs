use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use serde::Serialize;

use crate::error::Result;
use crate::spectra::{condition_report, SpectrumReport};
use crate::symbols::eta_coeffs;
use crate::toeplitz::SymToeplitz;

use super::config::{ExperimentConfig, OutputFormat};
use super::tables::{diff_rows, hat_matrix, DiffRow, TableKind};

#[derive(Debug, Clone, Serialize)]
pub struct FigureOutcome {
    pub n: usize,
    /// Spectrum of `T_n(F̂_n)`.
    pub plain: SpectrumReport,
    /// Spectrum of `T_n(η)^{-1} T_n(F̂_n)`.
    pub preconditioned: SpectrumReport,
    /// Extremes against the table references when `n` is tabulated.
    pub diff: Vec<DiffRow>,
    pub files: Vec<PathBuf>,
}

impl FigureOutcome {
    pub fn deviations(&self) -> usize {
        self.diff.iter().filter(|d| d.deviation).count()
    }
}

const GNUPLOT: &str = "\
set terminal pngcairo size 900,900
set output 'figure1.png'
set datafile separator ','
set key top left
set multiplot layout 2,1
set xlabel 'index'
plot 'figure1_plain.csv' every ::1 using 1:2 with points pt 7 ps 0.3 title 'T_n(F)', \\
     'figure1_preconditioned.csv' every ::1 using 1:2 with points pt 7 ps 0.3 title 'T_n(eta)^{-1} T_n(F)'
set logscale y
replot
unset multiplot
";

fn write_series(path: &PathBuf, values: &[f64]) -> Result<()> {
    let mut w = csv::Writer::from_writer(BufWriter::new(File::create(path)?));
    w.write_record(["index", "eigenvalue"])?;
    for (i, v) in values.iter().enumerate() {
        w.write_record([(i + 1).to_string(), format!("{v:e}")])?;
    }
    w.flush()?;
    Ok(())
}

/// Full ascending spectra of `T_n(F̂_n)` and of the `η` pencil at `cfg.n`,
/// plus a gnuplot script for regular and logarithmic plots.
pub fn run_figure1(cfg: &ExperimentConfig) -> Result<FigureOutcome> {
    cfg.validate()?;
    std::fs::create_dir_all(&cfg.output_dir)?;
    let n = cfg.n;
    let a = hat_matrix(n, cfg.engine(), cfg.tol)?;
    let m = SymToeplitz::assemble(&eta_coeffs(n)?)?;
    let (plain, preconditioned) = rayon::join(|| condition_report(&a, None), || condition_report(&a, Some(&m)));
    let (plain, preconditioned) = (plain?, preconditioned?);

    let pick = |rows: Vec<DiffRow>| -> Vec<DiffRow> {
        rows.into_iter()
            .filter(|d| d.quantity == "lambda_min" || d.quantity == "lambda_max")
            .collect()
    };
    let mut diff = pick(diff_rows(TableKind::Table1, &plain));
    diff.extend(pick(diff_rows(TableKind::Table2, &preconditioned)));

    let mut outcome = FigureOutcome {
        n,
        plain,
        preconditioned,
        diff,
        files: Vec::new(),
    };
    let dir = &cfg.output_dir;
    match cfg.format {
        OutputFormat::Csv => {
            let p = dir.join("figure1_plain.csv");
            let q = dir.join("figure1_preconditioned.csv");
            write_series(&p, outcome.plain.full_spectrum.as_deref().unwrap_or_default())?;
            write_series(&q, outcome.preconditioned.full_spectrum.as_deref().unwrap_or_default())?;
            outcome.files.extend([p, q]);
        }
        OutputFormat::Json => {
            let p = dir.join("figure1.json");
            let mut w = BufWriter::new(File::create(&p)?);
            serde_json::to_writer(&mut w, &outcome)?;
            writeln!(w)?;
            w.flush()?;
            outcome.files.push(p);
        }
    }
    let gp = dir.join("figure1.gp");
    std::fs::write(&gp, GNUPLOT)?;
    outcome.files.push(gp);
    Ok(outcome)
}
