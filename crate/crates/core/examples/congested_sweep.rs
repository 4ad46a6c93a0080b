//! Five overlapping lines; the residual at the central line as the control
//! Rabi frequency grows.
//!
//!     cargo run --example congested_sweep

use eit_spectro::prelude::*;

fn main() -> Result<()> {
    let base = bundled_scenario("fig5-congested")?;
    let bare = run_scenario(&base.clone().with_rabi(0.0))?.spectrum.total_at(100.0);
    for rabi in [0.0, 1.0, 2.0, 4.0, 6.0, 8.0] {
        let r = run_scenario(&base.clone().with_rabi(rabi))?;
        let at = r.spectrum.total_at(100.0);
        println!(
            "Omega = {rabi:>4.1}  total at 100 = {at:.4e}  ({:.2e} of uncontrolled)",
            at / bare
        );
    }
    Ok(())
}
