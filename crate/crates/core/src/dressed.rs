//! Autler-Townes dressing of the {|e⟩, |s⟩} pair by the control field.
//!
//! In the rotating frame the control couples |e⟩ and |s⟩ with Rabi frequency
//! Ω and detuning δ = ω_c − (E_e − E_s). The two dressed levels sit at
//! λ₁ = +Ω′ and λ₂ = −Ω′ with Ω′ = √(δ²/4 + Ω²). Each dressed state is
//! α_j|s⟩ + β_j|e⟩.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::Wavenumber;

/// A control laser acting on one e–s transition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ControlField {
    /// Control carrier frequency ω_c.
    pub omega_c: Wavenumber,
    /// Rabi frequency Ω_c, real and nonnegative.
    pub rabi: Wavenumber,
    /// Bare transition frequency E_e − E_s of the coupled pair.
    pub omega_es: Wavenumber,
}

impl ControlField {
    pub fn new(omega_c: f64, rabi: f64, omega_es: f64) -> Self {
        ControlField {
            omega_c: Wavenumber(omega_c),
            rabi: Wavenumber(rabi),
            omega_es: Wavenumber(omega_es),
        }
    }

    /// A control tuned exactly onto `omega_es`.
    pub fn resonant(omega_es: f64, rabi: f64) -> Self {
        Self::new(omega_es, rabi, omega_es)
    }

    pub fn detuning(&self) -> Wavenumber {
        self.omega_c - self.omega_es
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rabi.0 >= 0.0) || !self.rabi.is_finite() {
            return Err(Error::Domain(format!(
                "control Rabi frequency must be finite and nonnegative, got {}",
                self.rabi.0
            )));
        }
        if !self.detuning().is_finite() {
            return Err(Error::Domain("control detuning is not finite".into()));
        }
        Ok(())
    }
}

/// Generalized Rabi frequency Ω′ = √(δ²/4 + Ω²).
pub fn generalized_rabi(delta: Wavenumber, rabi: Wavenumber) -> Wavenumber {
    Wavenumber((0.5 * delta.0).hypot(rabi.0))
}

/// Dressed eigenvalues (λ₁, λ₂) = (+Ω′, −Ω′).
pub fn at_eigenvalues(delta: Wavenumber, rabi: Wavenumber) -> (Wavenumber, Wavenumber) {
    let w = generalized_rabi(delta, rabi);
    (w, -w)
}

/// Ω′ − sδ/2 for branch sign s = 3 − 2j, without cancellation.
fn branch_gap(omega_prime: f64, delta: f64, rabi: f64, sign: f64) -> f64 {
    let half = 0.5 * sign * delta;
    if half <= 0.0 {
        omega_prime - half
    } else {
        // Ω′² − δ²/4 = Ω²
        rabi * rabi / (omega_prime + half)
    }
}

/// Dressed-state amplitudes `(α₁, β₁, α₂, β₂)`.
///
/// α_j = (Ω² / (2Ω′² − (3−2j)δΩ′))^½ and β_j = α_j (Ω′ − (3−2j)δ/2) / Ω*.
/// The denominator is factored as 2Ω′(Ω′ − (3−2j)δ/2) so that the small
/// branch stays accurate when |δ| ≫ Ω.
pub fn dressed_coefficients(
    delta: Wavenumber,
    rabi: Wavenumber,
) -> Result<(Complex64, Complex64, Complex64, Complex64)> {
    if !(rabi.0 > 0.0) {
        return Err(Error::DegenerateCoupling);
    }
    let (d, r) = (delta.0, rabi.0);
    let wp = generalized_rabi(delta, rabi).0;
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for (j, sign) in [1.0, -1.0].into_iter().enumerate() {
        let gap = branch_gap(wp, d, r, sign);
        let alpha = (r * r / (2.0 * wp * gap)).sqrt();
        let beta = alpha * gap / r;
        out[2 * j] = Complex64::new(alpha, 0.0);
        out[2 * j + 1] = Complex64::new(beta, 0.0);
    }
    Ok((out[0], out[1], out[2], out[3]))
}

/// All dressed quantities for one control acting on one line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedSystem {
    pub delta: Wavenumber,
    pub omega_prime: Wavenumber,
    pub lambda: (Wavenumber, Wavenumber),
    pub alpha: (Complex64, Complex64),
    pub beta: (Complex64, Complex64),
}

impl DressedSystem {
    pub fn new(delta: Wavenumber, rabi: Wavenumber) -> Result<Self> {
        let (a1, b1, a2, b2) = dressed_coefficients(delta, rabi)?;
        let lambda = at_eigenvalues(delta, rabi);
        Ok(DressedSystem {
            delta,
            omega_prime: lambda.0,
            lambda,
            alpha: (a1, a2),
            beta: (b1, b2),
        })
    }

    pub fn from_control(control: &ControlField) -> Result<Self> {
        control.validate()?;
        Self::new(control.detuning(), control.rabi)
    }

    /// |α_j|² + |β_j|² for j = 1, 2.
    pub fn norms(&self) -> (f64, f64) {
        (
            self.alpha.0.norm_sqr() + self.beta.0.norm_sqr(),
            self.alpha.1.norm_sqr() + self.beta.1.norm_sqr(),
        )
    }
}
