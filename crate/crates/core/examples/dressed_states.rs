//! Dressed eigenvalues and amplitudes of the e–s pair for a few detunings.
//!
//!     cargo run --example dressed_states

use eit_spectro::prelude::*;

fn main() -> Result<()> {
    let rabi = Wavenumber(1.0);
    println!(
        "{:>8} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "delta", "lambda1", "|alpha1|", "|beta1|", "|alpha2|", "|beta2|"
    );
    for delta in [-8.0, -2.0, 0.0, 2.0, 8.0] {
        let ds = DressedSystem::new(Wavenumber(delta), rabi)?;
        println!(
            "{:>8.2} {:>10.5} {:>10.5} {:>10.5} {:>10.5} {:>10.5}",
            delta,
            ds.lambda.0 .0,
            ds.alpha.0.norm(),
            ds.beta.0.norm(),
            ds.alpha.1.norm(),
            ds.beta.1.norm()
        );
    }
    Ok(())
}
