//! Chlorine lines near 13120 cm⁻¹: removing one isotopomer's line (inter)
//! or one line of the same molecule (intra) while a neighbour stays put.
//!
//!     cargo run --example chlorine -- out/

use eit_spectro::prelude::*;

fn main() -> Result<()> {
    let out = std::env::args().nth(1);
    for name in ["cl2-inter", "cl2-intra"] {
        let r = run_scenario(&bundled_scenario(name)?)?;
        println!("{name}:");
        for rec in &r.report.records {
            println!(
                "  {:<22} {:<12} delta' = {:>8.3}  near shift = {:>11.3e}  {}",
                rec.label,
                rec.role.to_string(),
                rec.delta_prime.0,
                rec.shift_near.0,
                rec.verdict
            );
        }
        if let Some(dir) = &out {
            r.write_outputs(std::path::Path::new(dir).join(name))?;
        }
    }
    Ok(())
}
