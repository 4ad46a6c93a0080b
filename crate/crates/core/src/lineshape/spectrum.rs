use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{line_profile_scaled, SpectralLine};
use crate::dressed::ControlField;
use crate::error::{Error, Result};

/// Hard cap on grid size, to catch unit mistakes before allocating.
const MAX_GRID_POINTS: usize = 20_000_000;

/// Picks the lines a control acts on.
///
/// Text form: `*` for every line, `species=NAME` for one species, anything
/// else is an exact line label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum LineSelector {
    All,
    Species(String),
    Label(String),
}

impl LineSelector {
    pub fn label(label: impl Into<String>) -> Self {
        LineSelector::Label(label.into())
    }

    pub fn matches(&self, line: &SpectralLine) -> bool {
        match self {
            LineSelector::All => true,
            LineSelector::Species(s) => &line.species == s,
            LineSelector::Label(l) => &line.label() == l,
        }
    }
}

impl FromStr for LineSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Config("empty line selector".into()));
        }
        Ok(if s == "*" {
            LineSelector::All
        } else if let Some(species) = s.strip_prefix("species=") {
            LineSelector::Species(species.to_string())
        } else {
            LineSelector::Label(s.to_string())
        })
    }
}

impl TryFrom<String> for LineSelector {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<LineSelector> for String {
    fn from(sel: LineSelector) -> String {
        sel.to_string()
    }
}

impl fmt::Display for LineSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineSelector::All => f.write_str("*"),
            LineSelector::Species(s) => write!(f, "species={s}"),
            LineSelector::Label(l) => f.write_str(l),
        }
    }
}

/// Assigns at most one control to each line, in line order.
pub fn resolve_controls(
    lines: &[SpectralLine],
    controls: &[(LineSelector, ControlField)],
) -> Result<Vec<Option<ControlField>>> {
    lines
        .iter()
        .map(|line| {
            let mut hits = controls.iter().filter(|(sel, _)| sel.matches(line));
            let first = hits.next().map(|(_, c)| *c);
            if hits.next().is_some() {
                return Err(Error::AmbiguousControl { line: line.label() });
            }
            Ok(first)
        })
        .collect()
}

/// Absorption of one line across the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct LineAbsorption {
    pub label: String,
    pub values: Vec<f64>,
}

/// Probe absorption on an energy axis, per line and summed.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumGrid {
    /// Strictly increasing probe energies, cm⁻¹.
    pub energies: Vec<f64>,
    pub per_line: Vec<LineAbsorption>,
    /// Pointwise sum of `per_line` in line order.
    pub total: Vec<f64>,
}

impl SpectrumGrid {
    pub fn line(&self, label: &str) -> Option<&[f64]> {
        self.per_line
            .iter()
            .find(|l| l.label == label)
            .map(|l| l.values.as_slice())
    }

    /// Total absorption at the grid point nearest `energy`.
    pub fn total_at(&self, energy: f64) -> f64 {
        self.total[nearest_index(&self.energies, energy)]
    }

    pub fn step(&self) -> Option<f64> {
        match self.energies.as_slice() {
            [a, b, ..] => Some(b - a),
            _ => None,
        }
    }

    /// CSV with header `energy_cm1,total,<label>...`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = crate::csvfmt::writer();
        let mut header = vec!["energy_cm1".to_string(), "total".to_string()];
        header.extend(self.per_line.iter().map(|l| l.label.clone()));
        w.write_record(&header)?;
        for (i, e) in self.energies.iter().enumerate() {
            let mut row = Vec::with_capacity(header.len());
            row.push(crate::csvfmt::real(*e));
            row.push(crate::csvfmt::real(self.total[i]));
            row.extend(self.per_line.iter().map(|l| crate::csvfmt::real(l.values[i])));
            w.write_record(&row)?;
        }
        crate::csvfmt::finish(w)
    }
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid("empty energy grid".into()));
    }
    if grid.iter().any(|e| !e.is_finite()) {
        return Err(Error::InvalidGrid("non-finite energy".into()));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidGrid("energies must be strictly increasing".into()));
    }
    Ok(())
}

/// Grid `center + k·step` for k = −N..=N, N = round(halfwidth/step).
pub fn centered_grid(center: f64, halfwidth: f64, step: f64) -> Result<Vec<f64>> {
    if !center.is_finite() || !(halfwidth > 0.0) || !(step > 0.0) || !halfwidth.is_finite() {
        return Err(Error::InvalidGrid(format!(
            "need finite center and positive halfwidth/step, got {center}, {halfwidth}, {step}"
        )));
    }
    let n = (halfwidth / step).round();
    if 2.0 * n + 1.0 > MAX_GRID_POINTS as f64 {
        return Err(Error::InvalidGrid(format!(
            "{} points exceeds the limit",
            2.0 * n + 1.0
        )));
    }
    let n = n as i64;
    let grid: Vec<f64> = (-n..=n).map(|k| center + k as f64 * step).collect();
    check_grid(&grid)?;
    Ok(grid)
}

/// Default grid: ±10 Γ_max beyond the outermost lines, step Γ_min/50.
pub fn auto_grid(lines: &[SpectralLine]) -> Result<Vec<f64>> {
    if lines.is_empty() {
        return Err(Error::InvalidGrid("automatic grid needs at least one line".into()));
    }
    for line in lines {
        line.validate()?;
    }
    let fold = |init: f64, f: fn(f64, f64) -> f64, get: fn(&SpectralLine) -> f64| lines.iter().map(get).fold(init, f);
    let lo_center = fold(f64::INFINITY, f64::min, |l| l.omega_ge.0);
    let hi_center = fold(f64::NEG_INFINITY, f64::max, |l| l.omega_ge.0);
    let g_max = fold(0.0, f64::max, |l| l.gamma.0);
    let g_min = fold(f64::INFINITY, f64::min, |l| l.gamma.0);
    let lo = lo_center - 10.0 * g_max;
    let hi = hi_center + 10.0 * g_max;
    centered_grid(0.5 * (lo + hi), 0.5 * (hi - lo), g_min / 50.0)
}

/// Per-line profiles summed incoherently.
pub fn synthesize_spectrum(
    lines: &[SpectralLine],
    controls: &[(LineSelector, ControlField)],
    grid: &[f64],
    probe_amp: f64,
) -> Result<SpectrumGrid> {
    check_grid(grid)?;
    if !(probe_amp >= 0.0) || !probe_amp.is_finite() {
        return Err(Error::Domain(format!(
            "probe amplitude must be nonnegative, got {probe_amp}"
        )));
    }
    let assigned = resolve_controls(lines, controls)?;
    let per_line = lines
        .iter()
        .zip(&assigned)
        .map(|(line, control)| {
            Ok(LineAbsorption {
                label: line.label(),
                values: line_profile_scaled(line, control.as_ref(), grid, probe_amp)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = vec![0.0; grid.len()];
    for line in &per_line {
        for (t, v) in total.iter_mut().zip(&line.values) {
            *t += v;
        }
    }
    Ok(SpectrumGrid {
        energies: grid.to_vec(),
        per_line,
        total,
    })
}

/// Index of the grid point closest to `x` (lower one on ties).
pub fn nearest_index(grid: &[f64], x: f64) -> usize {
    let i = grid.partition_point(|&e| e < x);
    if i == 0 {
        0
    } else if i == grid.len() {
        grid.len() - 1
    } else if (grid[i] - x) < (x - grid[i - 1]) {
        i
    } else {
        i - 1
    }
}

/// Interior local maxima; a flat top reports its first point.
pub fn local_maxima(values: &[f64]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut i = 1;
    while i + 1 < values.len() {
        if values[i] > values[i - 1] {
            let mut j = i;
            while j + 1 < values.len() && values[j + 1] == values[i] {
                j += 1;
            }
            if j + 1 < values.len() && values[j + 1] < values[i] {
                out.push(i);
            }
            i = j + 1;
        } else {
            i += 1;
        }
    }
    out
}

/// The local maximum of `values` closest in energy to `center`.
pub fn nearest_peak(energies: &[f64], values: &[f64], center: f64) -> Option<usize> {
    local_maxima(values)
        .into_iter()
        .min_by(|&a, &b| (energies[a] - center).abs().total_cmp(&(energies[b] - center).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines() -> Vec<SpectralLine> {
        vec![
            SpectralLine::new("A", "x", 100.0, 1.0, 1.0),
            SpectralLine::new("B", "y", 100.25, 1.0, 1.0),
        ]
    }

    #[test]
    fn selector_text_forms() {
        assert_eq!("*".parse::<LineSelector>().unwrap(), LineSelector::All);
        assert_eq!(
            "species=B".parse::<LineSelector>().unwrap(),
            LineSelector::Species("B".into())
        );
        assert_eq!("A x".parse::<LineSelector>().unwrap(), LineSelector::label("A x"));
        assert!("  ".parse::<LineSelector>().is_err());
        for s in ["*", "species=Cl", "Cl2 R59 v2-9"] {
            assert_eq!(s.parse::<LineSelector>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn empty_line_list_gives_zero_total() {
        let grid = centered_grid(0.0, 1.0, 0.5).unwrap();
        let s = synthesize_spectrum(&[], &[], &grid, 1.0).unwrap();
        assert!(s.per_line.is_empty());
        assert_eq!(s.total, vec![0.0; 5]);
    }

    #[test]
    fn ambiguous_control_is_rejected() {
        let grid = centered_grid(100.0, 5.0, 0.1).unwrap();
        let controls = vec![
            (LineSelector::All, ControlField::resonant(50.0, 2.5)),
            (LineSelector::label("A x"), ControlField::resonant(50.0, 1.0)),
        ];
        let err = synthesize_spectrum(&lines(), &controls, &grid, 1.0).unwrap_err();
        assert!(matches!(err, Error::AmbiguousControl { ref line } if line == "A x"));
    }

    #[test]
    fn total_is_ordered_sum() {
        let grid = centered_grid(100.0, 5.0, 0.01).unwrap();
        let controls = vec![(LineSelector::label("A x"), ControlField::new(50.3, 2.5, 50.0))];
        let s = synthesize_spectrum(&lines(), &controls, &grid, 0.7).unwrap();
        for i in 0..grid.len() {
            let mut acc = 0.0;
            for l in &s.per_line {
                acc += l.values[i];
            }
            assert_eq!(acc.to_bits(), s.total[i].to_bits());
            assert!(s.total[i] >= 0.0);
        }
    }

    #[test]
    fn probe_amplitude_scales_quadratically() {
        let grid = centered_grid(100.0, 3.0, 0.1).unwrap();
        let a = synthesize_spectrum(&lines(), &[], &grid, 1.0).unwrap();
        let b = synthesize_spectrum(&lines(), &[], &grid, 2.0).unwrap();
        for (x, y) in a.total.iter().zip(&b.total) {
            assert!((4.0 * x - y).abs() <= 1e-14 * y);
        }
    }

    #[test]
    fn grid_validation() {
        assert!(centered_grid(0.0, 0.0, 0.1).is_err());
        assert!(centered_grid(0.0, 1.0, -0.1).is_err());
        assert!(centered_grid(f64::NAN, 1.0, 0.1).is_err());
        assert!(centered_grid(0.0, 1e9, 1e-9).is_err());
        let g = centered_grid(5.0, 1.0, 0.25).unwrap();
        assert_eq!(g, vec![4.0, 4.25, 4.5, 4.75, 5.0, 5.25, 5.5, 5.75, 6.0]);
        assert!(synthesize_spectrum(&lines(), &[], &[1.0, 1.0], 1.0).is_err());
    }

    #[test]
    fn auto_grid_span_and_step() {
        let g = auto_grid(&lines()).unwrap();
        assert!((g[0] - 90.0).abs() < 0.02);
        assert!((g[g.len() - 1] - 110.25).abs() < 0.02);
        assert!(((g[1] - g[0]) - 0.02).abs() < 1e-9);
        assert!(auto_grid(&[]).is_err());
    }

    #[test]
    fn peak_helpers() {
        let v = [0.0, 1.0, 0.5, 2.0, 2.0, 1.0, 3.0];
        assert_eq!(local_maxima(&v), vec![1, 3]);
        let e = [0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        assert_eq!(nearest_peak(&e, &v, 2.6), Some(3));
        assert_eq!(nearest_index(&e, 2.4), 2);
        assert_eq!(nearest_index(&e, 2.6), 3);
        assert_eq!(nearest_index(&e, -4.0), 0);
        assert_eq!(nearest_index(&e, 40.0), 6);
    }
}
