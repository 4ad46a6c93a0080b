//! Named, data-driven experiments: a catalog, the controls acting on it, an
//! energy grid and a probe amplitude.
//!
//! Configs are JSON:
//!
//! ```json
//! {
//!   "name": "fig4-two-lines",
//!   "description": "optional free text",
//!   "catalog": "fig4_two_lines",
//!   "controls": [
//!     { "select": "model A", "omega_c": 100.0, "rabi": 2.5, "omega_es": 100.0 }
//!   ],
//!   "grid": { "center": 100.0, "halfwidth": 10.0, "step": 0.02 },
//!   "probe_amp": 1.0,
//!   "planner": { "gamma_ref": 1.0, "ratio_threshold": 10.0 }
//! }
//! ```
//!
//! `catalog` is a bundled catalog name or a CSV path (relative paths resolve
//! against the config file's directory). `grid` may also be the string
//! `"auto"`. `description` and `planner` are optional.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::catalog::{bundled_catalog, parse_linelist, LineCatalog};
use crate::dressed::ControlField;
use crate::error::{Error, Result};
use crate::lineshape::{
    auto_grid, centered_grid, local_maxima, nearest_index, nearest_peak, resolve_controls, synthesize_spectrum,
    LineSelector, SpectrumGrid,
};
use crate::planner::{evaluate_couplings, ApplicabilityReport, PlannerCriteria};

pub const SPECTRUM_FILE: &str = "spectrum.csv";
pub const REPORT_FILE: &str = "report.csv";

/// One control entry: the lines it acts on and the field seen by them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ControlSpec {
    pub select: LineSelector,
    pub omega_c: f64,
    pub rabi: f64,
    pub omega_es: f64,
}

impl ControlSpec {
    pub fn field(&self) -> ControlField {
        ControlField::new(self.omega_c, self.rabi, self.omega_es)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridSpec {
    Auto,
    Window { center: f64, halfwidth: f64, step: f64 },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawGrid {
    Keyword(String),
    Window { center: f64, halfwidth: f64, step: f64 },
}

impl Serialize for GridSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            GridSpec::Auto => RawGrid::Keyword("auto".into()),
            GridSpec::Window {
                center,
                halfwidth,
                step,
            } => RawGrid::Window {
                center,
                halfwidth,
                step,
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GridSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match RawGrid::deserialize(d)? {
            RawGrid::Keyword(k) if k == "auto" => Ok(GridSpec::Auto),
            RawGrid::Keyword(k) => Err(serde::de::Error::custom(format!(
                "grid must be \"auto\" or {{center, halfwidth, step}}, got \"{k}\""
            ))),
            RawGrid::Window {
                center,
                halfwidth,
                step,
            } => Ok(GridSpec::Window {
                center,
                halfwidth,
                step,
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlannerSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_ref: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio_threshold: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub catalog: String,
    pub controls: Vec<ControlSpec>,
    pub grid: GridSpec,
    pub probe_amp: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub planner: Option<PlannerSpec>,
    #[serde(skip)]
    pub base_dir: Option<PathBuf>,
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Reads a config file; relative catalog paths resolve next to it.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let mut cfg = Self::from_json(&fs::read_to_string(path)?)?;
        cfg.base_dir = path.parent().map(Path::to_path_buf);
        Ok(cfg)
    }

    /// Same scenario with every control's Rabi frequency set to `rabi`.
    pub fn with_rabi(mut self, rabi: f64) -> Self {
        for c in &mut self.controls {
            c.rabi = rabi;
        }
        self
    }

    pub fn load_catalog(&self) -> Result<LineCatalog> {
        if let Some(cat) = bundled_catalog(&self.catalog) {
            return Ok(cat);
        }
        let mut path = PathBuf::from(&self.catalog);
        if path.is_relative() {
            if let Some(base) = &self.base_dir {
                path = base.join(path);
            }
        }
        let text = fs::read_to_string(&path).map_err(|e| {
            Error::Config(format!(
                "catalog `{}` is neither bundled nor readable ({e})",
                self.catalog
            ))
        })?;
        let mut cat = parse_linelist(&text)?;
        if cat.source == "inline" {
            cat.source = path.display().to_string();
        }
        Ok(cat)
    }

    pub fn controls(&self) -> Vec<(LineSelector, ControlField)> {
        self.controls.iter().map(|c| (c.select.clone(), c.field())).collect()
    }

    pub fn grid_for(&self, cat: &LineCatalog) -> Result<Vec<f64>> {
        match self.grid {
            GridSpec::Auto => auto_grid(&cat.lines),
            GridSpec::Window {
                center,
                halfwidth,
                step,
            } => centered_grid(center, halfwidth, step),
        }
    }

    /// Checks everything `run_scenario` needs except the numerics.
    pub fn validate(&self, cat: &LineCatalog) -> Result<()> {
        if self.name.trim().is_empty() {
            return Err(Error::Config("scenario name is empty".into()));
        }
        if !(self.probe_amp >= 0.0) || !self.probe_amp.is_finite() {
            return Err(Error::Config(format!(
                "probe_amp must be nonnegative, got {}",
                self.probe_amp
            )));
        }
        for c in &self.controls {
            c.field().validate()?;
            if !cat.iter().any(|l| c.select.matches(l)) {
                return Err(Error::UnresolvedSelector(c.select.to_string()));
            }
        }
        resolve_controls(&cat.lines, &self.controls())?;
        Ok(())
    }

    fn criteria(&self, cat: &LineCatalog) -> PlannerCriteria {
        let spec = self.planner.unwrap_or_default();
        let gamma = spec
            .gamma_ref
            .unwrap_or_else(|| cat.iter().map(|l| l.gamma.0).fold(0.0, f64::max));
        let mut crit = PlannerCriteria::new(if gamma > 0.0 { gamma } else { 1.0 });
        if let Some(t) = spec.ratio_threshold {
            crit = crit.with_threshold(t);
        }
        crit
    }
}

/// Figures of merit read off the emitted spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ScenarioMetrics {
    /// Center of the first A line, if any.
    pub target_energy: Option<f64>,
    /// Total absorption at the grid point nearest the target.
    pub residual_at_target: Option<f64>,
    /// Largest displacement of a B line's nearest total-spectrum peak from
    /// its bare center.
    pub b_peak_shift: Option<f64>,
    /// Distance between the maxima flanking the first A line's center in
    /// that line's own profile.
    pub at_peak_separation: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioResult {
    pub name: String,
    pub spectrum: SpectrumGrid,
    pub report: ApplicabilityReport,
    pub metrics: ScenarioMetrics,
}

impl ScenarioResult {
    /// Writes `spectrum.csv` and `report.csv` into `dir`, creating it.
    pub fn write_outputs(&self, dir: impl AsRef<Path>) -> Result<()> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir)?;
        fs::write(dir.join(SPECTRUM_FILE), self.spectrum.to_csv()?)?;
        fs::write(dir.join(REPORT_FILE), self.report.to_csv()?)?;
        Ok(())
    }
}

fn metrics(cat: &LineCatalog, spectrum: &SpectrumGrid, report: &ApplicabilityReport) -> ScenarioMetrics {
    let e = &spectrum.energies;
    let (lo, hi) = (e[0], e[e.len() - 1]);
    let mut m = ScenarioMetrics::default();

    let a_line = report
        .a_lines()
        .filter_map(|r| cat.get(&r.label).map(|l| (r, l)))
        .find(|(_, l)| (lo..=hi).contains(&l.omega_ge.0));
    if let Some((rec, line)) = a_line {
        let center = line.omega_ge.0;
        m.target_energy = Some(center);
        m.residual_at_target = Some(spectrum.total[nearest_index(e, center)]);
        if let Some(values) = spectrum.line(&rec.label) {
            let peaks = local_maxima(values);
            let left = peaks.iter().rev().find(|&&i| e[i] < center);
            let right = peaks.iter().find(|&&i| e[i] > center);
            if let (Some(&l), Some(&r)) = (left, right) {
                m.at_peak_separation = Some(e[r] - e[l]);
            }
        }
    }

    let mut worst: Option<f64> = None;
    for rec in report.b_lines() {
        let Some(line) = cat.get(&rec.label) else { continue };
        let center = line.omega_ge.0;
        if !(lo..=hi).contains(&center) {
            continue;
        }
        if let Some(i) = nearest_peak(e, &spectrum.total, center) {
            let shift = e[i] - center;
            if worst.is_none_or(|w| shift.abs() > w.abs()) {
                worst = Some(shift);
            }
        }
    }
    m.b_peak_shift = worst;
    m
}

/// Runs a scenario end to end.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    let cat = cfg.load_catalog()?;
    cfg.validate(&cat)?;
    let controls = cfg.controls();
    let grid = cfg.grid_for(&cat)?;
    let spectrum = synthesize_spectrum(&cat.lines, &controls, &grid, cfg.probe_amp)?;
    let report = evaluate_couplings(&cat.lines, &controls, &cfg.criteria(&cat))?;
    let metrics = metrics(&cat, &spectrum, &report);
    Ok(ScenarioResult {
        name: cfg.name.clone(),
        spectrum,
        report,
        metrics,
    })
}

const BUNDLED: [&str; 5] = [
    include_str!("../data/scenarios/cl2-inter.json"),
    include_str!("../data/scenarios/cl2-intra.json"),
    include_str!("../data/scenarios/fig4-two-lines.json"),
    include_str!("../data/scenarios/fig5-congested.json"),
    include_str!("../data/scenarios/methanol.json"),
];

fn bundled_configs() -> Vec<ScenarioConfig> {
    let mut all: Vec<ScenarioConfig> = BUNDLED
        .iter()
        .map(|t| ScenarioConfig::from_json(t).expect("bundled scenarios are valid"))
        .collect();
    all.sort_by(|a, b| a.name.cmp(&b.name));
    all
}

/// Bundled scenario names with one-line descriptions, sorted by name.
pub fn list_scenarios() -> Vec<(String, String)> {
    bundled_configs().into_iter().map(|c| (c.name, c.description)).collect()
}

pub fn bundled_scenario(name: &str) -> Result<ScenarioConfig> {
    let all = bundled_configs();
    let names = all.iter().map(|c| c.name.clone()).collect();
    all.into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownScenario {
            name: name.to_string(),
            available: names,
        })
}
