//! Shift estimate versus exact dressed displacement for a spectator line,
//! and the resulting verdict, as the control detuning shrinks.
//!
//!     cargo run --example control_planning

use eit_spectro::planner::assess_line;
use eit_spectro::prelude::*;

fn main() -> Result<()> {
    let gamma = 0.01;
    let rabi = Wavenumber(0.01);
    let criteria = PlannerCriteria::new(gamma);
    println!("{:>8} {:>12} {:>12} {:>20}", "delta'", "estimate", "exact", "verdict");
    for d in [9.0, 1.0, 0.2, 0.1, 0.05, 0.02, 0.01] {
        let delta = Wavenumber(d);
        let (_, minus) = at_shift_estimate(Wavenumber(0.0), delta, rabi)?;
        let (near, _) = at_shift_exact(delta, rabi);
        let a = assess_line("B", Some((delta, rabi)), &criteria)?;
        println!(
            "{d:>8.3} {:>12.3e} {:>12.3e} {:>20}",
            minus.0,
            near.0,
            a.verdict.to_string()
        );
    }
    Ok(())
}
