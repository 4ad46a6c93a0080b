//! Wavenumbers to GHz and Rabi frequencies to control intensity.
//!
//!     cargo run --example unit_conversion

use eit_spectro::prelude::*;

fn main() -> Result<()> {
    for x in [0.01, 0.025, 1.0] {
        println!("{x} cm^-1 = {:.6} GHz", wavenumber_to_frequency(Wavenumber(x)));
    }
    for mu in [0.1, 1.0] {
        let field = FieldSpec::from_rabi(Wavenumber(0.025), mu)?;
        println!("Omega = 0.025 cm^-1, mu = {mu} D -> {:.4e} W/cm^2", field.intensity);
    }
    Ok(())
}
