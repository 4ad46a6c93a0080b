//! Absorption spectra of overlapping molecular lines under electromagnetically
//! induced transparency.
//!
//! A strong control laser couples the upper level |e⟩ of a chosen transition
//! to an auxiliary level |s⟩. The resulting Autler-Townes doublet decays into
//! the same continuum, and the two decay paths interfere so that the probe
//! absorption of that line vanishes at its bare center. Lines whose upper
//! levels are far from any control resonance keep their Lorentzian shape.
//!
//! Modules, bottom up:
//!
//! - [`units`]: cm⁻¹ as the working unit, GHz and intensity conversions.
//! - [`dressed`]: dressed eigenvalues and amplitudes of the {|e⟩, |s⟩} pair.
//! - [`lineshape`]: effective Hamiltonian, transition dipole, line profiles
//!   and incoherent spectrum synthesis.
//! - [`catalog`]: line-list CSV, bundled datasets, rotational helpers.
//! - [`planner`]: per-line elimination / spectator classification.
//! - [`scenarios`]: bundled, data-driven experiments.
//! - [`cli`]: the `eitspec` command line.
//!
//! ```
//! use eit_spectro::prelude::*;
//!
//! let line = SpectralLine::new("model", "A", 100.0, 1.0, 1.0);
//! let control = ControlField::resonant(60.0, 2.5);
//! let grid = centered_grid(100.0, 10.0, 0.02).unwrap();
//! let profile = line_profile(&line, Some(&control), &grid).unwrap();
//! assert_eq!(profile[nearest_index(&grid, 100.0)], 0.0);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

pub mod catalog;
pub mod cli;
pub mod csvfmt;
pub mod dressed;
pub mod error;
pub mod lineshape;
pub mod planner;
pub mod scenarios;
pub mod units;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::catalog::{
        bundled_catalog, parse_linelist, select_window, serialize_linelist, LineCatalog, RotorConstants,
    };
    pub use crate::dressed::{at_eigenvalues, dressed_coefficients, ControlField, DressedSystem};
    pub use crate::error::{Error, Result};
    pub use crate::lineshape::{
        absorption_probability, auto_grid, centered_grid, effective_hamiltonian, invert_2x2, line_profile,
        nearest_index, synthesize_spectrum, transition_dipole, transition_dipole_resonant, ComplexMatrix2,
        LineSelector, SpectralLine, SpectrumGrid,
    };
    pub use crate::planner::{
        at_shift_estimate, at_shift_exact, evaluate_control, ApplicabilityReport, PlannerCriteria, Role, Verdict,
    };
    pub use crate::scenarios::{bundled_scenario, list_scenarios, run_scenario, ScenarioConfig, ScenarioResult};
    pub use crate::units::{rabi_to_intensity, wavenumber_to_frequency, FieldSpec, Wavenumber};
}
