//! Both tables with reference diffs, written to a temporary directory.

use distorder_toeplitz::experiments::{run_table1, run_table2, ExperimentConfig};

fn main() -> distorder_toeplitz::Result<()> {
    let cfg = ExperimentConfig {
        output_dir: std::env::temp_dir().join("dotoeplitz-tables"),
        ..Default::default()
    };
    for out in [run_table1(&cfg)?, run_table2(&cfg)?] {
        println!("{}", out.table.name());
        print!("{}", out.diff_text());
        for f in &out.files {
            println!("wrote {}", f.display());
        }
    }
    Ok(())
}
