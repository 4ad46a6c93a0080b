//! `eitspec` command-line front end.
//!
//! Exit status: 0 success, 1 usage error, 2 data or parse error, 3 numerical
//! failure. Diagnostics go to stderr; results go to files or stdout.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{bundled_catalog, parse_linelist, LineCatalog};
use crate::dressed::ControlField;
use crate::error::{Error, Result};
use crate::lineshape::{auto_grid, centered_grid, synthesize_spectrum, LineSelector};
use crate::planner::{evaluate_control, evaluate_couplings, PlannerCriteria};
use crate::scenarios::{bundled_scenario, list_scenarios, run_scenario, ControlSpec, ScenarioConfig};
use crate::units::{rabi_to_intensity, wavenumber_to_frequency, Wavenumber};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "eitspec",
    version,
    about = "EIT-modified absorption spectra of overlapping lines"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a bundled scenario or a scenario config file.
    Run(RunArgs),
    /// Synthesize a spectrum from a line list and a control file.
    Spectrum(SpectrumArgs),
    /// Classify every line of a catalog under one control field.
    Plan(PlanArgs),
    /// Convert a wavenumber to GHz or to control intensity.
    Convert(ConvertArgs),
    /// List bundled scenarios.
    List,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["scenario", "config"])))]
struct RunArgs {
    /// Name of a bundled scenario (see `list`).
    #[arg(long)]
    scenario: Option<String>,
    /// Path to a JSON scenario config.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory for spectrum.csv and report.csv [default: ./<name>].
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    /// Line-list CSV (or a bundled catalog name).
    #[arg(long)]
    catalog: String,
    /// JSON array of controls: [{"select", "omega_c", "rabi", "omega_es"}, ...].
    #[arg(long)]
    controls: Option<PathBuf>,
    /// Energy grid as center,halfwidth,step in cm^-1, or `auto`.
    #[arg(long, value_parser = parse_grid_arg)]
    grid: GridArg,
    /// Probe amplitude (arbitrary units).
    #[arg(long, default_value_t = 1.0)]
    probe_amp: f64,
    /// Output CSV file [default: stdout].
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PlanArgs {
    /// Line-list CSV (or a bundled catalog name).
    #[arg(long)]
    catalog: String,
    /// Control as omega_c,rabi,omega_es in cm^-1. Without --couplings the
    /// omega_es applies to every line.
    #[arg(long, value_parser = parse_triple)]
    control: (f64, f64, f64),
    /// Reference linewidth in cm^-1 [default: largest width in the catalog].
    #[arg(long)]
    gamma: Option<f64>,
    /// Minimum |delta'|/Gamma for an untouched spectator.
    #[arg(long, default_value_t = PlannerCriteria::DEFAULT_RATIO_THRESHOLD)]
    threshold: f64,
    /// CSV `label,omega_es_cm1[,rabi_cm1]`; only listed lines are coupled.
    #[arg(long)]
    couplings: Option<PathBuf>,
    /// Output CSV file [default: stdout].
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Ghz,
    Intensity,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    /// Value in cm^-1.
    #[arg(long, allow_negative_numbers = true)]
    wavenumber: f64,
    /// `ghz`, or `intensity` (W/cm^2, needs --mu).
    #[arg(long, value_enum)]
    to: Target,
    /// Transition dipole moment in debye.
    #[arg(long)]
    mu: Option<f64>,
    /// Significant digits printed.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u8).range(1..=17))]
    digits: u8,
}

#[derive(Debug, Clone, Copy)]
enum GridArg {
    Auto,
    Window(f64, f64, f64),
}

fn parse_triple(s: &str) -> std::result::Result<(f64, f64, f64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got `{s}`"));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p.parse().map_err(|_| format!("`{p}` is not a number"))?;
    }
    Ok((v[0], v[1], v[2]))
}

fn parse_grid_arg(s: &str) -> std::result::Result<GridArg, String> {
    if s.trim() == "auto" {
        return Ok(GridArg::Auto);
    }
    let (c, h, st) = parse_triple(s)?;
    Ok(GridArg::Window(c, h, st))
}

/// Formats `x` with `digits` significant digits, plain notation when the
/// exponent is moderate.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci.rsplit('e').next().and_then(|e| e.parse().ok()).unwrap_or(0);
    if (-5..15).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

fn load_catalog(spec: &str) -> Result<LineCatalog> {
    let path = Path::new(spec);
    if path.exists() {
        let mut cat = parse_linelist(&fs::read_to_string(path)?)?;
        if cat.source == "inline" {
            cat.source = spec.to_string();
        }
        return Ok(cat);
    }
    bundled_catalog(spec).ok_or_else(|| Error::Config(format!("catalog `{spec}` not found")))
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(p) => {
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(parent)?;
            }
            fs::write(p, text)?;
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| format!("{x:.6e}"))
}

fn cmd_run(args: RunArgs, stdout: &mut dyn Write) -> Result<()> {
    let cfg = match (&args.scenario, &args.config) {
        (Some(name), _) => bundled_scenario(name)?,
        (None, Some(path)) => ScenarioConfig::load(path)?,
        (None, None) => unreachable!("clap enforces the source group"),
    };
    let result = run_scenario(&cfg)?;
    let dir = args.out.unwrap_or_else(|| PathBuf::from(&cfg.name));
    result.write_outputs(&dir)?;
    let m = &result.metrics;
    writeln!(stdout, "scenario: {}", result.name)?;
    writeln!(stdout, "outputs: {}", dir.display())?;
    writeln!(stdout, "target_cm1: {}", fmt_opt(m.target_energy))?;
    writeln!(stdout, "residual_at_target: {}", fmt_opt(m.residual_at_target))?;
    writeln!(stdout, "b_peak_shift_cm1: {}", fmt_opt(m.b_peak_shift))?;
    writeln!(stdout, "at_peak_separation_cm1: {}", fmt_opt(m.at_peak_separation))?;
    for r in &result.report.records {
        writeln!(stdout, "  {:<40} {:<12} {}", r.label, r.role.to_string(), r.verdict)?;
    }
    Ok(())
}

fn cmd_spectrum(args: SpectrumArgs, stdout: &mut dyn Write) -> Result<()> {
    let cat = load_catalog(&args.catalog)?;
    let controls: Vec<ControlSpec> = match &args.controls {
        Some(p) => serde_json::from_str(&fs::read_to_string(p)?)?,
        None => Vec::new(),
    };
    let controls: Vec<(LineSelector, ControlField)> = controls.iter().map(|c| (c.select.clone(), c.field())).collect();
    let grid = match args.grid {
        GridArg::Auto => auto_grid(&cat.lines)?,
        GridArg::Window(c, h, s) => centered_grid(c, h, s)?,
    };
    let spectrum = synthesize_spectrum(&cat.lines, &controls, &grid, args.probe_amp)?;
    emit(args.out.as_deref(), &spectrum.to_csv()?, stdout)
}

fn read_couplings(path: &Path, control: &ControlField) -> Result<Vec<(LineSelector, ControlField)>> {
    let text = fs::read_to_string(path)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec?;
        let row = rec.position().map_or(0, |p| p.line() as usize);
        if rec.get(0) == Some("label") {
            continue;
        }
        let num = |i: usize, col: &str| -> Result<f64> {
            let s = rec.get(i).ok_or_else(|| Error::Parse {
                row,
                column: col.into(),
                message: "missing column".into(),
            })?;
            s.parse().map_err(|_| Error::Parse {
                row,
                column: col.into(),
                message: format!("`{s}` is not a number"),
            })
        };
        let omega_es = num(1, "omega_es_cm1")?;
        let rabi = if rec.len() > 2 {
            num(2, "rabi_cm1")?
        } else {
            control.rabi.0
        };
        out.push((
            LineSelector::label(&rec[0]),
            ControlField::new(control.omega_c.0, rabi, omega_es),
        ));
    }
    Ok(out)
}

fn cmd_plan(args: PlanArgs, stdout: &mut dyn Write) -> Result<()> {
    let cat = load_catalog(&args.catalog)?;
    let (wc, rabi, wes) = args.control;
    let control = ControlField::new(wc, rabi, wes);
    control.validate()?;
    let gamma = args
        .gamma
        .unwrap_or_else(|| cat.iter().map(|l| l.gamma.0).fold(0.0, f64::max));
    let criteria = PlannerCriteria::new(gamma).with_threshold(args.threshold);
    let report = match &args.couplings {
        None => {
            let es: BTreeMap<String, Wavenumber> = cat.iter().map(|l| (l.label(), control.omega_es)).collect();
            evaluate_control(&cat, &control, &es, &criteria)?
        }
        Some(path) => {
            let couplings = read_couplings(path, &control)?;
            for (sel, _) in &couplings {
                if !cat.iter().any(|l| sel.matches(l)) {
                    return Err(Error::UnresolvedSelector(sel.to_string()));
                }
            }
            evaluate_couplings(&cat.lines, &couplings, &criteria)?
        }
    };
    emit(args.out.as_deref(), &report.to_csv()?, stdout)
}

fn cmd_convert(args: ConvertArgs, stdout: &mut dyn Write) -> Result<()> {
    let x = Wavenumber(args.wavenumber);
    let value = match args.to {
        Target::Ghz => wavenumber_to_frequency(x),
        Target::Intensity => {
            let mu = args
                .mu
                .ok_or_else(|| Error::Config("--to intensity needs --mu".into()))?;
            rabi_to_intensity(x, mu)?
        }
    };
    writeln!(stdout, "{}", format_significant(value, args.digits as usize))?;
    Ok(())
}

fn cmd_list(stdout: &mut dyn Write) -> Result<()> {
    for (name, description) in list_scenarios() {
        writeln!(stdout, "{name}\t{description}")?;
    }
    Ok(())
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::UnknownScenario { .. } => EXIT_USAGE,
        e if e.is_numerical() => EXIT_NUMERIC,
        _ => EXIT_DATA,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Run(a) => cmd_run(a, stdout),
        Command::Spectrum(a) => cmd_spectrum(a, stdout),
        Command::Plan(a) => cmd_plan(a, stdout),
        Command::Convert(a) => {
            if a.to == Target::Intensity && a.mu.is_none() {
                let _ = writeln!(stderr, "error: --to intensity requires --mu");
                return EXIT_USAGE;
            }
            cmd_convert(a, stdout)
        }
        Command::List => cmd_list(stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(0.749481145, 5), "0.74948");
        assert_eq!(format_significant(29.9792458, 5), "29.979");
        assert_eq!(format_significant(294180.79991830987, 5), "294181");
        assert_eq!(format_significant(9.99996, 5), "10.000");
        assert_eq!(format_significant(1.5e-9, 3), "1.50e-9");
        assert_eq!(format_significant(0.0, 5), "0");
    }

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(exit_code(&Error::SingularMatrix(1e-310)), EXIT_NUMERIC);
        assert_eq!(exit_code(&Error::DegenerateCoupling), EXIT_NUMERIC);
        assert_eq!(exit_code(&Error::ResonantInput), EXIT_NUMERIC);
        assert_eq!(exit_code(&Error::InvalidDipole(0.0)), EXIT_DATA);
        assert_eq!(exit_code(&Error::Config("x".into())), EXIT_DATA);
        let unknown = Error::UnknownScenario {
            name: "x".into(),
            available: Vec::new(),
        };
        assert_eq!(exit_code(&unknown), EXIT_USAGE);
    }

    #[test]
    fn triple_parsing() {
        assert_eq!(parse_triple("1, 2.5,3e2").unwrap(), (1.0, 2.5, 300.0));
        assert!(parse_triple("1,2").is_err());
        assert!(parse_triple("1,x,2").is_err());
    }
}
