use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use distorder_toeplitz::experiments::{
    run_checks, run_coeffs, run_figure1, run_table1, run_table2, ConfigOverrides, EngineChoice, ExperimentConfig,
    OutputFormat,
};
use distorder_toeplitz::Error;

#[derive(Parser)]
#[command(name = "dotoeplitz", version, about = "Spectra of distributed-order Toeplitz matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// TOML config file; flags take precedence
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Order for figure1 and coeffs
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Comma-separated table orders
    #[arg(long, global = true, value_delimiter = ',')]
    n_list: Option<Vec<usize>>,
    #[arg(long, global = true, value_parser = parse::<EngineChoice>)]
    engine: Option<EngineChoice>,
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true)]
    oversample: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output directory
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_parser = parse::<OutputFormat>)]
    format: Option<OutputFormat>,
    /// Add n = 512, 1024, 2048 to the tables
    #[arg(long, global = true)]
    full_sweep: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Extreme eigenvalues and conditioning of T_n(F_n)
    Table1,
    /// Same for the pencil T_n(eta)^-1 T_n(F_n)
    Table2,
    /// Full spectra of both matrices at order n
    Figure1,
    /// Run the bound checks and diagnostics
    Checks,
    /// Dump Fourier coefficients
    Coeffs {
        /// Single power symbol |theta|^(2-alpha); default is the aggregate
        #[arg(long)]
        alpha: Option<f64>,
    },
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn run(cli: Cli) -> Result<bool, Error> {
    let c = cli.common;
    let overrides = ConfigOverrides {
        n_list: c.n_list,
        n: c.n,
        engine: c.engine,
        tol: c.tol,
        output_dir: c.out,
        format: c.format,
        seed: c.seed,
        oversample: c.oversample,
        full_sweep: c.full_sweep.then_some(true),
    };
    let cfg = ExperimentConfig::resolve(c.config.as_deref(), overrides)?;
    let ok = match cli.command {
        Command::Table1 | Command::Table2 => {
            let out = match cli.command {
                Command::Table1 => run_table1(&cfg)?,
                _ => run_table2(&cfg)?,
            };
            print!("{}", out.diff_text());
            report_files(&out.files);
            out.deviations() == 0
        }
        Command::Figure1 => {
            let out = run_figure1(&cfg)?;
            for d in &out.diff {
                println!("{} {}: {:.6e}{}", d.n, d.quantity, d.computed, flag(d.deviation));
            }
            report_files(&out.files);
            out.deviations() == 0
        }
        Command::Checks => {
            let out = run_checks(&cfg)?;
            print!("{}", out.summary());
            report_files(&out.files);
            out.failures() == 0
        }
        Command::Coeffs { alpha } => {
            let out = run_coeffs(&cfg, alpha)?;
            println!("{} coefficients, engine {}, abs_tol {:e}", out.coeffs.len(), out.coeffs.engine.tag(), out.coeffs.abs_tol);
            report_files(std::slice::from_ref(&out.file));
            true
        }
    };
    Ok(ok)
}

fn flag(dev: bool) -> &'static str {
    if dev {
        "  DEVIATION"
    } else {
        ""
    }
}

fn report_files(files: &[PathBuf]) {
    for f in files {
        eprintln!("wrote {}", f.display());
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ (Error::Config(_) | Error::InvalidArgument(_))) => {
            eprintln!("invalid configuration: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
