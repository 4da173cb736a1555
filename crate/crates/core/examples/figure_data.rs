//! Full spectra of T_n(F_n) and of the eta pencil, with a gnuplot script.

use distorder_toeplitz::experiments::{run_figure1, ExperimentConfig};

fn main() -> distorder_toeplitz::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(256);
    let cfg = ExperimentConfig {
        n,
        output_dir: std::env::temp_dir().join("dotoeplitz-figure"),
        ..Default::default()
    };
    let out = run_figure1(&cfg)?;
    println!(
        "n={n}: T_n(F_n) in [{:.4e}, {:.4e}], pencil in [{:.4}, {:.4}]",
        out.plain.lambda_min, out.plain.lambda_max, out.preconditioned.lambda_min, out.preconditioned.lambda_max
    );
    for f in &out.files {
        println!("wrote {}", f.display());
    }
    Ok(())
}
