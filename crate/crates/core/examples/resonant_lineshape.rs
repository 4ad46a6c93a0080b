//! One line under a resonant control: the EIT hole and the Autler-Townes
//! doublet, printed as a coarse text plot.
//!
//!     cargo run --example resonant_lineshape -- 2.5

use eit_spectro::lineshape::local_maxima;
use eit_spectro::prelude::*;

fn main() -> Result<()> {
    let rabi: f64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2.5);
    let line = SpectralLine::new("model", "A", 0.0, 1.0, 1.0);
    let control = ControlField::resonant(50.0, rabi);
    let grid = centered_grid(0.0, rabi + 4.0, 0.02)?;
    let bare = line_profile(&line, None, &grid)?;
    let dressed = line_profile(&line, Some(&control), &grid)?;

    for i in (0..grid.len()).step_by(grid.len() / 40) {
        let bar = |v: f64| "#".repeat((v * 50.0).round() as usize);
        println!("{:>7.2} |{:<50}| {}", grid[i], bar(dressed[i]), bar(bare[i]).len());
    }
    let peaks: Vec<f64> = local_maxima(&dressed).into_iter().map(|i| grid[i]).collect();
    println!("absorption at line center: {:e}", dressed[nearest_index(&grid, 0.0)]);
    println!("peaks at {peaks:?}");
    Ok(())
}
