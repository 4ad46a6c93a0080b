//! Four overlapping methanol lines near 231.15 cm⁻¹ with the control on
//! line (b).
//!
//!     cargo run --example methanol

use eit_spectro::prelude::*;

fn main() -> Result<()> {
    let r = run_scenario(&bundled_scenario("methanol")?)?;
    print!("{}", r.report.to_csv()?);
    println!(
        "eliminated: {}, untouched: {}",
        r.report.count(Verdict::Eliminated),
        r.report.count(Verdict::Untouched)
    );
    println!("residual at target: {:?}", r.metrics.residual_at_target);
    Ok(())
}
