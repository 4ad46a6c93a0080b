//! Probe absorption line shapes with and without a control field.
//!
//! The dressed pair {|λ₁⟩, |λ₂⟩} decays into a flat continuum with coupling
//! V = √(Γ/π). The effective 2×2 Hamiltonian
//!
//! ```text
//! H(E) = | x − λ₁ − iΓ/2      −iΓ/2     |     x = E − E_e − δ/2
//!        |    −iΓ/2       x − λ₂ − iΓ/2 |
//! ```
//!
//! is inverted at every probe energy and projected onto the dressed
//! amplitudes to give the transition dipole μ(E). At δ = 0 a closed form
//! μ(E) = (E − E_e)/D with D = (E − E_e − iΓ/4)² + Γ²/16 − Ω² is used.
//!
//! Profiles are normalized so that an uncontrolled line peaks at its
//! `strength`; the uncontrolled shape is a Lorentzian of FWHM Γ.

mod matrix;
mod spectrum;

pub use matrix::{invert_2x2, ComplexMatrix2, SINGULARITY_FLOOR};
pub use spectrum::{
    auto_grid, centered_grid, local_maxima, nearest_index, nearest_peak, resolve_controls, synthesize_spectrum,
    LineAbsorption, LineSelector, SpectrumGrid,
};

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dressed::{ControlField, DressedSystem};
use crate::error::{Error, Result};
use crate::units::Wavenumber;

/// One |g⟩ → |e⟩ absorption line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralLine {
    pub species: String,
    pub branch: String,
    /// Line center E_e on the probe axis.
    pub omega_ge: Wavenumber,
    /// Decay width Γ (FWHM of the bare line).
    pub gamma: Wavenumber,
    /// Peak height of the uncontrolled profile.
    pub strength: f64,
}

impl SpectralLine {
    pub fn new(
        species: impl Into<String>,
        branch: impl Into<String>,
        omega_ge: f64,
        gamma: f64,
        strength: f64,
    ) -> Self {
        SpectralLine {
            species: species.into(),
            branch: branch.into(),
            omega_ge: Wavenumber(omega_ge),
            gamma: Wavenumber(gamma),
            strength,
        }
    }

    /// `"<species> <branch>"`, unique within a catalog.
    pub fn label(&self) -> String {
        if self.branch.is_empty() {
            self.species.clone()
        } else {
            format!("{} {}", self.species, self.branch)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.omega_ge.is_finite() {
            return Err(Error::Domain(format!("{}: line center is not finite", self.label())));
        }
        if !(self.gamma.0 > 0.0) || !self.gamma.is_finite() {
            return Err(Error::Domain(format!(
                "{}: width must be positive, got {}",
                self.label(),
                self.gamma.0
            )));
        }
        if !(self.strength >= 0.0) || !self.strength.is_finite() {
            return Err(Error::Domain(format!(
                "{}: strength must be nonnegative, got {}",
                self.label(),
                self.strength
            )));
        }
        Ok(())
    }

    /// Uncontrolled Lorentzian of FWHM Γ peaking at `strength`.
    pub fn lorentzian(&self, energy: f64) -> f64 {
        let half = 0.5 * self.gamma.0;
        let x = energy - self.omega_ge.0;
        self.strength * half * half / (x * x + half * half)
    }
}

/// Which dressed-state amplitude the probe projects onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Projection {
    /// The |e⟩ amplitudes β_j. The probe drives g → e, so this is the
    /// physical weighting and the one used for spectra.
    #[default]
    Excited,
    /// The |s⟩ amplitudes α_j.
    Auxiliary,
}

/// Continuum coupling V = √(Γ/π) of a flat continuum.
pub fn continuum_coupling(gamma: Wavenumber) -> f64 {
    (gamma.0 / PI).sqrt()
}

/// The effective Hamiltonian H(E) coupling the two dressed resonances.
pub fn effective_hamiltonian(energy: Wavenumber, line: &SpectralLine, ds: &DressedSystem) -> ComplexMatrix2 {
    let x = energy.0 - line.omega_ge.0 - 0.5 * ds.delta.0;
    let damp = Complex64::new(0.0, -0.5 * line.gamma.0);
    ComplexMatrix2 {
        m11: Complex64::new(x - ds.lambda.0 .0, 0.0) + damp,
        m12: damp,
        m21: damp,
        m22: Complex64::new(x - ds.lambda.1 .0, 0.0) + damp,
    }
}

/// μ_{E,g} for a line dressed by a control of any detuning.
pub fn transition_dipole(energy: Wavenumber, line: &SpectralLine, ds: &DressedSystem) -> Result<Complex64> {
    transition_dipole_with(energy, line, ds, Projection::Excited)
}

/// As [`transition_dipole`], choosing the amplitude weighting explicitly.
pub fn transition_dipole_with(
    energy: Wavenumber,
    line: &SpectralLine,
    ds: &DressedSystem,
    projection: Projection,
) -> Result<Complex64> {
    let d = invert_2x2(&effective_hamiltonian(energy, line, ds))?;
    let (c1, c2) = match projection {
        Projection::Excited => ds.beta,
        Projection::Auxiliary => ds.alpha,
    };
    let bracket = d.m11 * c1.norm_sqr() + c1 * c2.conj() * d.m12 + c2 * c1.conj() * d.m21 + d.m22 * c2.norm_sqr();
    Ok(bracket * continuum_coupling(line.gamma))
}

/// Closed-form μ_{E,g} for a resonant control (δ = 0), up to the constant
/// prefactor μ_{e,s}V.
///
/// At Ω = 0 the common factor (E − E_e) is cancelled, giving 1/(E − E_e − iΓ/2).
pub fn transition_dipole_resonant(energy: Wavenumber, line: &SpectralLine, rabi: Wavenumber) -> Complex64 {
    let x = energy.0 - line.omega_ge.0;
    let g = line.gamma.0;
    if rabi.0 == 0.0 {
        return Complex64::new(x, -0.5 * g).inv();
    }
    let shifted = Complex64::new(x, -0.25 * g);
    let denom = shifted * shifted + (g * g / 16.0 - rabi.0 * rabi.0);
    Complex64::new(x, 0.0) / denom
}

/// Dipole of the bare line, the Ω → 0 limit of both controlled forms.
pub fn uncontrolled_dipole(energy: Wavenumber, line: &SpectralLine) -> Complex64 {
    Complex64::new(energy.0 - line.omega_ge.0, -0.5 * line.gamma.0).inv()
}

/// First-order absorption probability 2π|ε μ|².
pub fn absorption_probability(probe_amp: f64, mu: Complex64) -> f64 {
    2.0 * PI * (mu * probe_amp).norm_sqr()
}

fn normalize(line: &SpectralLine, probe_amp: f64, mu: Complex64, peak_mu_sqr: f64) -> f64 {
    line.strength * absorption_probability(probe_amp, mu) / (2.0 * PI * peak_mu_sqr)
}

/// Absorption profile of one line on `grid`, unit probe amplitude.
pub fn line_profile(line: &SpectralLine, control: Option<&ControlField>, grid: &[f64]) -> Result<Vec<f64>> {
    line_profile_scaled(line, control, grid, 1.0)
}

/// Absorption profile of one line on `grid`.
///
/// No control, or a control with Ω = 0, gives the bare Lorentzian. A control
/// with δ = 0 uses the closed resonant form; any other detuning goes through
/// the full 2×2 inversion.
pub fn line_profile_scaled(
    line: &SpectralLine,
    control: Option<&ControlField>,
    grid: &[f64],
    probe_amp: f64,
) -> Result<Vec<f64>> {
    line.validate()?;
    if grid.is_empty() {
        return Err(Error::InvalidGrid("empty energy grid".into()));
    }
    let g = line.gamma.0;
    let control = match control {
        Some(c) => {
            c.validate()?;
            if c.rabi.0 == 0.0 {
                None
            } else {
                Some(c)
            }
        }
        None => None,
    };
    let amp2 = probe_amp * probe_amp;
    match control {
        None => Ok(grid.iter().map(|&e| amp2 * line.lorentzian(e)).collect()),
        Some(c) if c.detuning().0 == 0.0 => {
            let peak = 4.0 / (g * g);
            Ok(grid
                .iter()
                .map(|&e| {
                    normalize(
                        line,
                        probe_amp,
                        transition_dipole_resonant(Wavenumber(e), line, c.rabi),
                        peak,
                    )
                })
                .collect())
        }
        Some(c) => {
            let ds = DressedSystem::from_control(c)?;
            let peak = 4.0 / (PI * g);
            grid.iter()
                .map(|&e| transition_dipole(Wavenumber(e), line, &ds).map(|mu| normalize(line, probe_amp, mu, peak)))
                .collect()
        }
    }
}
