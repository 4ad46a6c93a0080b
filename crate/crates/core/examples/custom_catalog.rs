//! A user line list and scenario config, parsed from text and run.
//!
//!     cargo run --example custom_catalog

use eit_spectro::prelude::*;

const LINES: &str = "\
# source: example
species,branch,omega_ge_cm1,gamma_cm1,strength
X,R1,500.00,0.02,1.0
X,R2,500.01,0.02,0.6
Y,P7,500.03,0.02,0.8
";

const CONFIG: &str = r#"{
  "name": "custom",
  "description": "remove X R1 from a three-line cluster",
  "catalog": "lines.csv",
  "controls": [
    {"select": "X R1", "omega_c": 120.0, "rabi": 0.05, "omega_es": 120.0},
    {"select": "Y P7", "omega_c": 120.0, "rabi": 0.02, "omega_es": 118.0}
  ],
  "grid": {"center": 500.01, "halfwidth": 0.15, "step": 0.0005},
  "probe_amp": 1.0
}"#;

fn main() -> Result<()> {
    let dir = std::env::temp_dir().join("eit-spectro-custom");
    std::fs::create_dir_all(&dir)?;
    std::fs::write(dir.join("lines.csv"), LINES)?;
    std::fs::write(dir.join("custom.json"), CONFIG)?;

    let cat = parse_linelist(LINES)?;
    println!("{} lines from {}", cat.len(), cat.source);

    let cfg = ScenarioConfig::load(dir.join("custom.json"))?;
    let r = run_scenario(&cfg)?;
    for rec in &r.report.records {
        println!("{:<6} {}", rec.label, rec.verdict);
    }
    r.write_outputs(dir.join("out"))?;
    println!("wrote {}", dir.join("out").display());
    Ok(())
}
