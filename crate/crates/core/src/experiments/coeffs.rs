use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use crate::error::Result;
use crate::symbols::{AggregateSymbol, CoeffVector};

use super::config::{ExperimentConfig, OutputFormat};

#[derive(Debug, Clone)]
pub struct CoeffsOutcome {
    pub coeffs: CoeffVector,
    pub file: PathBuf,
}

/// First `cfg.n` coefficients of `|θ|^{2-α}`, or of `F̂_n` without `alpha`.
pub fn run_coeffs(cfg: &ExperimentConfig, alpha: Option<f64>) -> Result<CoeffsOutcome> {
    cfg.validate()?;
    let n = cfg.n;
    let (sym, stem) = match alpha {
        Some(a) => (AggregateSymbol::single(a)?, format!("coeffs_n{n}_alpha{a}")),
        None => (AggregateSymbol::hat(n), format!("coeffs_n{n}")),
    };
    let coeffs = sym.coefficients(n, cfg.engine(), cfg.tol)?;
    std::fs::create_dir_all(&cfg.output_dir)?;
    let file = match cfg.format {
        OutputFormat::Csv => {
            let p = cfg.output_dir.join(format!("{stem}.csv"));
            coeffs.write_csv(BufWriter::new(File::create(&p)?))?;
            p
        }
        OutputFormat::Json => {
            let p = cfg.output_dir.join(format!("{stem}.json"));
            let mut w = BufWriter::new(File::create(&p)?);
            writeln!(w, "{}", coeffs.to_json()?)?;
            w.flush()?;
            p
        }
    };
    Ok(CoeffsOutcome { coeffs, file })
}
