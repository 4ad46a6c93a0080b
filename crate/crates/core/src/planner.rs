//! Predicts what a control field does to every line of a catalog.
//!
//! A line whose coupled e–s transition is within one linewidth of the
//! control is an A line and gets eliminated. Every other coupled line is a
//! spectator (B line); its dressed level moves by roughly −2Ω′²/δ′, and it
//! counts as untouched when |δ′|/Γ clears the ratio threshold and that shift
//! stays under a fraction of Γ.

use std::collections::BTreeMap;
use std::fmt;

use crate::catalog::LineCatalog;
use crate::csvfmt;
use crate::dressed::{generalized_rabi, ControlField};
use crate::error::{Error, Result};
use crate::lineshape::{resolve_controls, LineSelector, SpectralLine};
use crate::units::Wavenumber;

pub const REPORT_HEADER: [&str; 8] = [
    "label",
    "role",
    "delta_prime_cm1",
    "rabi_cm1",
    "shift_near_cm1",
    "shift_far_cm1",
    "ratio",
    "verdict",
];

/// Approximate AT doublet `(E_AT+, E_AT−)` of a spectator level at `e_prime`:
/// E_AT± = E_e′ + δ′/2 ± (δ′/2 + 2Ω′²/δ′). Valid for |δ′| ≫ Ω′.
pub fn at_shift_estimate(
    e_prime: Wavenumber,
    delta_prime: Wavenumber,
    rabi_prime: Wavenumber,
) -> Result<(Wavenumber, Wavenumber)> {
    let d = delta_prime.0;
    if d == 0.0 {
        return Err(Error::ResonantInput);
    }
    // δ′/2 − (δ′/2 + p) is folded to −p to keep the small branch exact.
    let pull = 2.0 * rabi_prime.0 * rabi_prime.0 / d;
    Ok((Wavenumber(e_prime.0 + (d + pull)), Wavenumber(e_prime.0 - pull)))
}

/// Exact dressed displacements `(near, far)` from the eigenvalues, relative
/// to the bare level. `near` is the e-like branch; at δ′ = 0 it is −Ω′.
pub fn at_shift_exact(delta_prime: Wavenumber, rabi_prime: Wavenumber) -> (Wavenumber, Wavenumber) {
    let d = delta_prime.0;
    let r = rabi_prime.0;
    let wp = generalized_rabi(delta_prime, rabi_prime).0;
    let sign = if d < 0.0 { -1.0 } else { 1.0 };
    let near = if r == 0.0 {
        0.0
    } else {
        -sign * r * r / (wp + 0.5 * d.abs())
    };
    (Wavenumber(near), Wavenumber(0.5 * d + sign * wp))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlannerCriteria {
    /// Linewidth the detuning is compared against.
    pub gamma_ref: Wavenumber,
    /// Minimum |δ′|/Γ for a spectator to count as untouched.
    pub ratio_threshold: f64,
    /// Largest allowed near-branch shift, as a fraction of Γ.
    pub shift_fraction: f64,
}

impl PlannerCriteria {
    pub const DEFAULT_RATIO_THRESHOLD: f64 = 10.0;
    pub const DEFAULT_SHIFT_FRACTION: f64 = 0.1;

    pub fn new(gamma_ref: f64) -> Self {
        PlannerCriteria {
            gamma_ref: Wavenumber(gamma_ref),
            ratio_threshold: Self::DEFAULT_RATIO_THRESHOLD,
            shift_fraction: Self::DEFAULT_SHIFT_FRACTION,
        }
    }

    pub fn with_threshold(mut self, ratio_threshold: f64) -> Self {
        self.ratio_threshold = ratio_threshold;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.gamma_ref.0 > 0.0) || !(self.ratio_threshold > 0.0) || !(self.shift_fraction > 0.0) {
            return Err(Error::Domain(format!("invalid planner criteria {self:?}")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    AResonant,
    BSpectator,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::AResonant => "A-resonant",
            Role::BSpectator => "B-spectator",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Eliminated,
    Shifted,
    Untouched,
    ViolatesCriterion,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Eliminated => "eliminated",
            Verdict::Shifted => "shifted",
            Verdict::Untouched => "untouched",
            Verdict::ViolatesCriterion => "violates-criterion",
        })
    }
}

/// One row of the applicability report.
#[derive(Debug, Clone, PartialEq)]
pub struct LineAssessment {
    pub label: String,
    pub role: Role,
    /// δ′ = ω_c − ω_es; infinite when the line has no coupled |s⟩.
    pub delta_prime: Wavenumber,
    pub rabi: Wavenumber,
    /// Near (e-like) branch displacement. Eq.-14 estimate for spectators,
    /// exact dressed value for A lines.
    pub shift_near: Wavenumber,
    pub shift_far: Wavenumber,
    /// |δ′| / Γ.
    pub ratio: f64,
    pub verdict: Verdict,
}

/// Classifies one line. `coupling` is `(δ′, Ω′)`, or `None` when the control
/// reaches no |s⟩ from this line's upper level. Ω′ = 0 counts as uncoupled.
pub fn assess_line(
    label: impl Into<String>,
    coupling: Option<(Wavenumber, Wavenumber)>,
    criteria: &PlannerCriteria,
) -> Result<LineAssessment> {
    criteria.validate()?;
    let label = label.into();
    let gamma = criteria.gamma_ref.0;
    let (delta, rabi) = match coupling {
        Some((d, r)) if r.0 > 0.0 => (d, r),
        _ => {
            return Ok(LineAssessment {
                label,
                role: Role::BSpectator,
                delta_prime: Wavenumber(f64::INFINITY),
                rabi: Wavenumber(0.0),
                shift_near: Wavenumber(0.0),
                shift_far: Wavenumber(0.0),
                ratio: f64::INFINITY,
                verdict: Verdict::Untouched,
            })
        }
    };
    if !delta.is_finite() || !rabi.is_finite() {
        return Err(Error::Domain(format!("{label}: non-finite detuning or Rabi frequency")));
    }
    let ratio = delta.0.abs() / gamma;
    if delta.0.abs() <= gamma {
        let (near, far) = at_shift_exact(delta, rabi);
        return Ok(LineAssessment {
            label,
            role: Role::AResonant,
            delta_prime: delta,
            rabi,
            shift_near: near,
            shift_far: far,
            ratio,
            verdict: Verdict::Eliminated,
        });
    }
    let (plus, minus) = at_shift_estimate(Wavenumber(0.0), delta, rabi)?;
    let verdict = if ratio < criteria.ratio_threshold {
        Verdict::ViolatesCriterion
    } else if minus.0.abs() < criteria.shift_fraction * gamma {
        Verdict::Untouched
    } else {
        Verdict::Shifted
    };
    Ok(LineAssessment {
        label,
        role: Role::BSpectator,
        delta_prime: delta,
        rabi,
        shift_near: minus,
        shift_far: plus,
        ratio,
        verdict,
    })
}

/// Per-line assessments in catalog order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ApplicabilityReport {
    pub records: Vec<LineAssessment>,
}

impl ApplicabilityReport {
    pub fn get(&self, label: &str) -> Option<&LineAssessment> {
        self.records.iter().find(|r| r.label == label)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
    }

    pub fn a_lines(&self) -> impl Iterator<Item = &LineAssessment> {
        self.records.iter().filter(|r| r.role == Role::AResonant)
    }

    pub fn b_lines(&self) -> impl Iterator<Item = &LineAssessment> {
        self.records.iter().filter(|r| r.role == Role::BSpectator)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csvfmt::writer();
        w.write_record(REPORT_HEADER)?;
        for r in &self.records {
            w.write_record([
                r.label.clone(),
                r.role.to_string(),
                csvfmt::real(r.delta_prime.0),
                csvfmt::real(r.rabi.0),
                csvfmt::real(r.shift_near.0),
                csvfmt::real(r.shift_far.0),
                csvfmt::real(r.ratio),
                r.verdict.to_string(),
            ])?;
        }
        csvfmt::finish(w)
    }
}

/// Assesses a single control laser. `es_map` gives, per line label, the
/// frequency of the e–s transition the control reaches from that line;
/// lines missing from the map have no coupled state.
pub fn evaluate_control(
    cat: &LineCatalog,
    control: &ControlField,
    es_map: &BTreeMap<String, Wavenumber>,
    criteria: &PlannerCriteria,
) -> Result<ApplicabilityReport> {
    control.validate()?;
    let records = cat
        .iter()
        .map(|line| {
            let label = line.label();
            let coupling = es_map.get(&label).map(|&wes| (control.omega_c - wes, control.rabi));
            assess_line(label, coupling, criteria)
        })
        .collect::<Result<_>>()?;
    Ok(ApplicabilityReport { records })
}

/// Assesses per-line control assignments, as used by scenarios.
pub fn evaluate_couplings(
    lines: &[SpectralLine],
    controls: &[(LineSelector, ControlField)],
    criteria: &PlannerCriteria,
) -> Result<ApplicabilityReport> {
    let assigned = resolve_controls(lines, controls)?;
    let records = lines
        .iter()
        .zip(assigned)
        .map(|(line, ctl)| {
            if let Some(c) = &ctl {
                c.validate()?;
            }
            assess_line(line.label(), ctl.map(|c| (c.detuning(), c.rabi)), criteria)
        })
        .collect::<Result<_>>()?;
    Ok(ApplicabilityReport { records })
}
