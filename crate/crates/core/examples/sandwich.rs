//! Two-sided Loewner sandwiches for random weights and symbol factors.

use distorder_toeplitz::analysis::{sandwich_check, summary_text, CheckTolerances, SandwichConfig};

fn main() -> distorder_toeplitz::Result<()> {
    let cfg = SandwichConfig::random(32, (0.5, 2.0), (0.25, 4.0), 2024)?;
    let reports = sandwich_check(&cfg, &CheckTolerances::default())?;
    print!("{}", summary_text(&reports));

    match SandwichConfig::random(32, (2.0, 0.5), (0.25, 4.0), 1) {
        Err(e) => println!("inverted bounds rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
