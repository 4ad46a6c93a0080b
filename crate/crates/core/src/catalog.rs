//! Line lists: CSV ingestion, bundled datasets and rotational helpers.
//!
//! The line-list format is UTF-8 CSV whose first record is exactly
//!
//! ```text
//! species,branch,omega_ge_cm1,gamma_cm1,strength
//! ```
//!
//! Lines starting with `#` are comments. A `# source: ...` comment sets the
//! catalog's source label and `# units: ...` its units note.

use std::collections::HashSet;

use crate::csvfmt;
use crate::error::{Error, Result};
use crate::lineshape::SpectralLine;
use crate::units::Wavenumber;

pub const HEADER: [&str; 5] = ["species", "branch", "omega_ge_cm1", "gamma_cm1", "strength"];

const UNITS_NOTE: &str = "cm-1";

/// An ordered set of lines with unique labels.
#[derive(Debug, Clone, PartialEq)]
pub struct LineCatalog {
    pub lines: Vec<SpectralLine>,
    pub source: String,
    pub units: String,
}

impl LineCatalog {
    /// Builds a catalog, checking every line and label uniqueness.
    pub fn new(source: impl Into<String>, lines: Vec<SpectralLine>) -> Result<Self> {
        let mut seen = HashSet::new();
        for line in &lines {
            line.validate()?;
            if !seen.insert(line.label()) {
                return Err(Error::Domain(format!("duplicate line label `{}`", line.label())));
            }
        }
        Ok(LineCatalog {
            lines,
            source: source.into(),
            units: UNITS_NOTE.to_string(),
        })
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SpectralLine> {
        self.lines.iter()
    }

    pub fn get(&self, label: &str) -> Option<&SpectralLine> {
        self.lines.iter().find(|l| l.label() == label)
    }

    pub fn labels(&self) -> Vec<String> {
        self.lines.iter().map(SpectralLine::label).collect()
    }

    pub fn to_csv(&self) -> Result<String> {
        serialize_linelist(self)
    }
}

fn parse_error(row: usize, column: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        row,
        column: column.to_string(),
        message: message.into(),
    }
}

/// Parses a line list; errors name the offending file row and column.
pub fn parse_linelist(text: &str) -> Result<LineCatalog> {
    let mut source = String::from("inline");
    let mut units = String::from(UNITS_NOTE);
    for raw in text.lines() {
        let t = raw.trim_start();
        if let Some(rest) = t.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(s) = rest.strip_prefix("source:") {
                source = s.trim().to_string();
            } else if let Some(u) = rest.strip_prefix("units:") {
                units = u.trim().to_string();
            }
        }
    }

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut records = reader.records();
    let header = match records.next() {
        Some(rec) => rec?,
        None => return Err(parse_error(1, "header", "missing header row")),
    };
    let header_row = header.position().map_or(1, |p| p.line() as usize);
    let got: Vec<&str> = header.iter().collect();
    if got != HEADER {
        return Err(parse_error(
            header_row,
            "header",
            format!("expected `{}`, found `{}`", HEADER.join(","), got.join(",")),
        ));
    }

    let mut lines = Vec::new();
    let mut seen = HashSet::new();
    for rec in records {
        let rec = rec?;
        let row = rec.position().map_or(0, |p| p.line() as usize);
        if rec.len() == 1 && rec[0].is_empty() {
            continue;
        }
        if rec.len() > HEADER.len() {
            return Err(parse_error(
                row,
                "strength",
                format!("{} fields, expected 5", rec.len()),
            ));
        }
        let field =
            |i: usize| -> Result<&str> { rec.get(i).ok_or_else(|| parse_error(row, HEADER[i], "missing column")) };
        let number = |i: usize| -> Result<f64> {
            let s = field(i)?;
            let v: f64 = s
                .parse()
                .map_err(|_| parse_error(row, HEADER[i], format!("`{s}` is not a number")))?;
            if !v.is_finite() {
                return Err(parse_error(row, HEADER[i], format!("`{s}` is not finite")));
            }
            Ok(v)
        };
        let species = field(0)?.to_string();
        let branch = field(1)?.to_string();
        if species.is_empty() {
            return Err(parse_error(row, "species", "empty species"));
        }
        let omega = number(2)?;
        let gamma = number(3)?;
        let strength = number(4)?;
        if gamma <= 0.0 {
            return Err(parse_error(
                row,
                "gamma_cm1",
                format!("width must be positive, got {gamma}"),
            ));
        }
        if strength < 0.0 {
            return Err(parse_error(
                row,
                "strength",
                format!("strength must be nonnegative, got {strength}"),
            ));
        }
        let line = SpectralLine::new(species, branch, omega, gamma, strength);
        if !seen.insert(line.label()) {
            return Err(parse_error(
                row,
                "branch",
                format!("duplicate label `{}`", line.label()),
            ));
        }
        lines.push(line);
    }

    Ok(LineCatalog { lines, source, units })
}

/// Writes the catalog back out with 17-significant-digit numbers.
pub fn serialize_linelist(cat: &LineCatalog) -> Result<String> {
    let mut out = format!("# source: {}\n# units: {}\n", cat.source, cat.units);
    let mut w = csvfmt::writer();
    w.write_record(HEADER)?;
    for l in &cat.lines {
        w.write_record([
            l.species.clone(),
            l.branch.clone(),
            csvfmt::real(l.omega_ge.0),
            csvfmt::real(l.gamma.0),
            csvfmt::real(l.strength),
        ])?;
    }
    out.push_str(&csvfmt::finish(w)?);
    Ok(out)
}

/// Lines with |ω_ge − center| ≤ halfwidth, order preserved.
pub fn select_window(cat: &LineCatalog, center: Wavenumber, halfwidth: Wavenumber) -> LineCatalog {
    LineCatalog {
        lines: cat
            .lines
            .iter()
            .filter(|l| (l.omega_ge.0 - center.0).abs() <= halfwidth.0)
            .cloned()
            .collect(),
        source: cat.source.clone(),
        units: cat.units.clone(),
    }
}

const BUNDLED: [(&str, &str); 4] = [
    ("cl2_table1", include_str!("../data/catalogs/cl2_table1.csv")),
    ("fig4_two_lines", include_str!("../data/catalogs/fig4_two_lines.csv")),
    ("fig5_congested", include_str!("../data/catalogs/fig5_congested.csv")),
    ("methanol_table2", include_str!("../data/catalogs/methanol_table2.csv")),
];

pub fn bundled_catalog_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(n, _)| *n).collect()
}

/// A bundled catalog by name; a trailing `.csv` is accepted.
pub fn bundled_catalog(name: &str) -> Option<LineCatalog> {
    let name = name.strip_suffix(".csv").unwrap_or(name);
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| parse_linelist(text).expect("bundled catalogs are valid"))
}

/// Rigid-rotor level constants for one vibrational level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotorConstants {
    pub b_v: Wavenumber,
    pub const_offset: Wavenumber,
}

/// E_rot = B_v J(J+1) + const.
pub fn rotational_energy(rc: RotorConstants, j: i64) -> Result<Wavenumber> {
    if j < 0 {
        return Err(Error::Domain(format!(
            "rotational quantum number must be >= 0, got {j}"
        )));
    }
    if !(rc.b_v.0 > 0.0) {
        return Err(Error::Domain(format!(
            "rotational constant must be positive, got {}",
            rc.b_v.0
        )));
    }
    let jf = j as f64;
    Ok(Wavenumber(rc.b_v.0 * jf * (jf + 1.0) + rc.const_offset.0))
}

/// E(J+1) − E(J) = 2B_v(J+1).
pub fn rotational_spacing(rc: RotorConstants, j: i64) -> Result<Wavenumber> {
    Ok(rotational_energy(rc, j + 1)? - rotational_energy(rc, j)?)
}
