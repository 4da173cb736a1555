//! Experiment drivers behind the `dotoeplitz` binary: the two tables, the
//! figure data, the check suites and coefficient dumps.
//!
//! Configuration file (TOML, every key optional):
//!
//! ```toml
//! n_list = [64, 128, 256]
//! n = 1024                # figure1 and coeffs
//! engine = "quadrature"   # or "fft"
//! tol = 1e-12
//! output_dir = "out"
//! format = "csv"          # or "json"
//! seed = 0
//! oversample = 16
//! full_sweep = false      # adds 512, 1024, 2048
//! c_range = [0.5, 2.0]
//! d_range = [0.25, 4.0]
//! num_seeds = 10
//! ```

mod checks;
mod coeffs;
mod config;
mod figure;
pub mod reference;
mod tables;

pub use checks::{
    heuristic_diagnostics, mnq_suite, quantile_suite, rnj_suite, run_checks, sandwich_suite, ChecksOutcome,
    Diagnostic, ETA_DOUBLING_TOL, MNQ_ORDERS, RNJ_ALPHAS, RNJ_ORDERS, SANDWICH_ORDERS,
};
pub use coeffs::{run_coeffs, CoeffsOutcome};
pub use config::{ConfigOverrides, EngineChoice, ExperimentConfig, OutputFormat, EXTENDED_ORDERS};
pub use figure::{run_figure1, FigureOutcome};
pub use tables::{
    diff_rows, hat_matrix, pencil_report, run_table1, run_table2, sig6, DiffRow, Preconditioner, TableKind,
    TableOutcome,
};
