//! Spectroscopic unit conversions.
//!
//! Every energy and frequency in the crate is carried in cm⁻¹. Conversions to
//! GHz and to laser intensity happen only at the edges.
//!
//! The intensity convention is `I = ½ ε₀ c ε²` with the field amplitude taken
//! from the angular Rabi frequency, `ε = ħΩ/μ`, where `Ω = 2πc·ω̃` for a
//! wavenumber `ω̃`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Speed of light in vacuum, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Reduced Planck constant, J·s (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Vacuum permittivity, F/m (CODATA 2018).
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;
/// One debye in C·m (10⁻²¹/c).
pub const DEBYE: f64 = 1e-21 / SPEED_OF_LIGHT;
/// GHz per cm⁻¹.
pub const GHZ_PER_WAVENUMBER: f64 = 29.979_245_8;

/// A spectroscopic energy or frequency in cm⁻¹.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Wavenumber(pub f64);

impl Wavenumber {
    pub const ZERO: Wavenumber = Wavenumber(0.0);

    pub fn new(value: f64) -> Self {
        Wavenumber(value)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn abs(self) -> Self {
        Wavenumber(self.0.abs())
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn to_ghz(self) -> f64 {
        wavenumber_to_frequency(self)
    }

    /// Angular frequency in rad/s.
    pub fn to_angular(self) -> f64 {
        2.0 * std::f64::consts::PI * SPEED_OF_LIGHT * 100.0 * self.0
    }
}

impl From<f64> for Wavenumber {
    fn from(value: f64) -> Self {
        Wavenumber(value)
    }
}

impl fmt::Display for Wavenumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} cm^-1", self.0)
    }
}

impl Add for Wavenumber {
    type Output = Wavenumber;
    fn add(self, rhs: Wavenumber) -> Wavenumber {
        Wavenumber(self.0 + rhs.0)
    }
}

impl Sub for Wavenumber {
    type Output = Wavenumber;
    fn sub(self, rhs: Wavenumber) -> Wavenumber {
        Wavenumber(self.0 - rhs.0)
    }
}

impl Neg for Wavenumber {
    type Output = Wavenumber;
    fn neg(self) -> Wavenumber {
        Wavenumber(-self.0)
    }
}

impl Mul<f64> for Wavenumber {
    type Output = Wavenumber;
    fn mul(self, rhs: f64) -> Wavenumber {
        Wavenumber(self.0 * rhs)
    }
}

impl Div<f64> for Wavenumber {
    type Output = Wavenumber;
    fn div(self, rhs: f64) -> Wavenumber {
        Wavenumber(self.0 / rhs)
    }
}

/// Converts cm⁻¹ to GHz.
pub fn wavenumber_to_frequency(x: Wavenumber) -> f64 {
    x.0 * GHZ_PER_WAVENUMBER
}

/// Converts GHz to cm⁻¹.
pub fn frequency_to_wavenumber(ghz: f64) -> Wavenumber {
    Wavenumber(ghz / GHZ_PER_WAVENUMBER)
}

// I = K·Ω² with Ω in cm⁻¹; returns K in W/cm² per (cm⁻¹)².
fn intensity_coefficient(mu_debye: f64) -> Result<f64> {
    if !(mu_debye > 0.0) || !mu_debye.is_finite() {
        return Err(Error::InvalidDipole(mu_debye));
    }
    let field_per_wavenumber = HBAR * Wavenumber(1.0).to_angular() / (mu_debye * DEBYE);
    let w_per_m2 = 0.5 * VACUUM_PERMITTIVITY * SPEED_OF_LIGHT * field_per_wavenumber.powi(2);
    Ok(w_per_m2 * 1e-4)
}

/// Laser intensity in W/cm² needed for Rabi frequency `omega` on a transition
/// with dipole moment `mu_debye`.
pub fn rabi_to_intensity(omega: Wavenumber, mu_debye: f64) -> Result<f64> {
    let k = intensity_coefficient(mu_debye)?;
    Ok(k * omega.0 * omega.0)
}

/// Inverse of [`rabi_to_intensity`]; returns the nonnegative Rabi frequency.
pub fn intensity_to_rabi(intensity: f64, mu_debye: f64) -> Result<Wavenumber> {
    if !(intensity >= 0.0) || !intensity.is_finite() {
        return Err(Error::InvalidIntensity(intensity));
    }
    let k = intensity_coefficient(mu_debye)?;
    Ok(Wavenumber((intensity / k).sqrt()))
}

/// Field strength of a control laser expressed three ways.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldSpec {
    /// Debye.
    pub dipole_moment: f64,
    pub rabi_frequency: Wavenumber,
    /// W/cm².
    pub intensity: f64,
}

impl FieldSpec {
    pub fn from_rabi(rabi: Wavenumber, mu_debye: f64) -> Result<Self> {
        if !(rabi.0 >= 0.0) {
            return Err(Error::Domain(format!(
                "Rabi frequency must be nonnegative, got {}",
                rabi.0
            )));
        }
        Ok(FieldSpec {
            dipole_moment: mu_debye,
            rabi_frequency: rabi,
            intensity: rabi_to_intensity(rabi, mu_debye)?,
        })
    }

    pub fn from_intensity(intensity: f64, mu_debye: f64) -> Result<Self> {
        Ok(FieldSpec {
            dipole_moment: mu_debye,
            rabi_frequency: intensity_to_rabi(intensity, mu_debye)?,
            intensity,
        })
    }
}
