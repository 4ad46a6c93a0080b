//! Two lines a quarter width apart. The control removes line A and leaves
//! line B where it was.
//!
//!     cargo run --example two_line_elimination

use eit_spectro::prelude::*;

fn main() -> Result<()> {
    let cfg = bundled_scenario("fig4-two-lines")?;
    let result = run_scenario(&cfg)?;
    let s = &result.spectrum;
    for e in [99.0, 99.5, 100.0, 100.25, 100.5, 101.0] {
        let i = nearest_index(&s.energies, e);
        println!(
            "E = {:>7.2}  total {:.6}  A {:.6}  B {:.6}",
            s.energies[i],
            s.total[i],
            s.line("model A").unwrap()[i],
            s.line("model B").unwrap()[i]
        );
    }
    println!("B peak shift: {:?}", result.metrics.b_peak_shift);
    Ok(())
}
