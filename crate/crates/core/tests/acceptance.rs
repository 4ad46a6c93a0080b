//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use eit_spectro::cli::format_significant;
use eit_spectro::lineshape::local_maxima;
use eit_spectro::prelude::*;

type Outcome = std::result::Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn eit_hole() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let gamma = 10f64.powf(rng.gen_range(-3.0..2.0));
        let rabi = gamma * 10f64.powf(rng.gen_range(-3.0..3.0));
        let center = rng.gen_range(-1e4..1e4);
        let line = SpectralLine::new("t", "x", center, gamma, 1.0);
        let ctl = ControlField::resonant(rng.gen_range(0.0..1e4), rabi);
        let p = line_profile(&line, Some(&ctl), &[center]).map_err(|e| e.to_string())?;
        worst = worst.max(p[0]);
    }
    check(
        worst < 1e-20,
        format!("max hole depth {worst:.1e} of peak over 1e4 draws"),
    )
}

fn lorentzian_limit() -> Outcome {
    let line = SpectralLine::new("t", "x", 50.0, 0.3, 1.0);
    let half = 0.15;
    let mut worst = 0.0f64;
    for k in 0..10_000 {
        let e = 50.0 + (k as f64 - 5000.0) * 1e-3;
        let mu = transition_dipole_resonant(Wavenumber(e), &line, Wavenumber(0.0));
        let got = mu.norm_sqr() * half * half;
        let want = half * half / ((e - 50.0).powi(2) + half * half);
        worst = worst.max(((got - want) / want).abs());
    }
    check(worst <= 1e-9, format!("max relative deviation {worst:.1e}"))
}

fn at_splitting() -> Outcome {
    let gamma = 1.0;
    let step = gamma / 50.0;
    let mut details = Vec::new();
    let mut ok = true;
    for mult in [5.0, 10.0, 20.0] {
        let rabi = mult * gamma;
        let line = SpectralLine::new("t", "x", 0.0, gamma, 1.0);
        let grid = centered_grid(0.0, rabi + 5.0 * gamma, step).map_err(|e| e.to_string())?;
        let p = line_profile(&line, Some(&ControlField::resonant(30.0, rabi)), &grid).map_err(|e| e.to_string())?;
        let peaks = local_maxima(&p);
        if peaks.len() != 2 {
            return Err(format!("Ω={mult}Γ: {} maxima", peaks.len()));
        }
        let sep = grid[peaks[1]] - grid[peaks[0]];
        let want = 2.0 * (rabi * rabi - gamma * gamma / 16.0).sqrt();
        ok &= (sep - want).abs() <= step + 1e-12;
        details.push(format!("{mult}Γ: {sep:.4} vs {want:.4}"));
    }
    check(ok, details.join(", "))
}

fn dressed_normalization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let rabi = 10f64.powf(rng.gen_range(-6.0..3.0));
        let delta = rng.gen_range(-1e3..1e3);
        let ds = DressedSystem::new(Wavenumber(delta), Wavenumber(rabi)).map_err(|e| e.to_string())?;
        let (n1, n2) = ds.norms();
        worst = worst.max((n1 - 1.0).abs()).max((n2 - 1.0).abs());
    }
    check(worst <= 1e-12, format!("max |norm - 1| = {worst:.1e}"))
}

fn matrix_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0f64;
    let mut tested = 0;
    while tested < 10_000 {
        let gamma = 10f64.powf(rng.gen_range(-2.0..1.0));
        let line = SpectralLine::new("t", "x", 0.0, gamma, 1.0);
        let ds = DressedSystem::new(
            Wavenumber(rng.gen_range(-100.0..100.0)),
            Wavenumber(rng.gen_range(0.01..100.0)),
        )
        .map_err(|e| e.to_string())?;
        let h = effective_hamiltonian(Wavenumber(rng.gen_range(-200.0..200.0)), &line, &ds);
        let Ok(inv) = invert_2x2(&h) else { continue };
        worst = worst.max((h * inv).max_abs_diff(&ComplexMatrix2::IDENTITY));
        tested += 1;
    }
    check(worst <= 1e-12, format!("max |H·H⁻¹ − I| = {worst:.1e}"))
}

fn two_lines() -> Outcome {
    let cfg = bundled_scenario("fig4-two-lines").map_err(|e| e.to_string())?;
    let r = run_scenario(&cfg).map_err(|e| e.to_string())?;
    let cat = cfg.load_catalog().map_err(|e| e.to_string())?;
    let step = r.spectrum.step().unwrap();
    let b = cat.get("model B").unwrap();
    let a = cat.get("model A").unwrap();
    let lone_b = line_profile(b, None, &r.spectrum.energies).map_err(|e| e.to_string())?;
    let b_ctl = r.spectrum.line("model B").unwrap();
    let peak = |v: &[f64]| r.spectrum.energies[nearest_peak_index(v)];
    let shift = (peak(b_ctl) - peak(&lone_b)).abs();
    let ia = nearest_index(&r.spectrum.energies, a.omega_ge.0);
    let total = r.spectrum.total[ia];
    let rel = ((total - lone_b[ia]) / lone_b[ia]).abs();
    check(
        shift <= step + 1e-12 && rel <= 1e-9,
        format!("B peak moved {shift:.2e} (step {step:.3}); total at A center vs lone B {rel:.1e} rel"),
    )
}

fn nearest_peak_index(v: &[f64]) -> usize {
    v.iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap()
}

fn congested() -> Outcome {
    let base = bundled_scenario("fig5-congested").map_err(|e| e.to_string())?;
    let mut residual = Vec::new();
    for rabi in [0.0, 2.0, 4.0, 6.0] {
        let r = run_scenario(&base.clone().with_rabi(rabi)).map_err(|e| e.to_string())?;
        residual.push(r.spectrum.total_at(100.0));
    }
    let decreasing = residual[1] > residual[2] && residual[2] > residual[3];
    let ratio = residual[3] / residual[0];
    check(
        decreasing && ratio < 0.10,
        format!(
            "residual Ω=2,4,6Γ: {:.2e}, {:.2e}, {:.2e}; Ω=6Γ / uncontrolled = {ratio:.1e}",
            residual[1], residual[2], residual[3]
        ),
    )
}

fn cl2() -> Outcome {
    let e = 13120.0;
    let (_, minus) = at_shift_estimate(Wavenumber(e), Wavenumber(9.0), Wavenumber(0.01)).map_err(|e| e.to_string())?;
    let near = (minus.0 - e).abs();
    let r = run_scenario(&bundled_scenario("cl2-inter").map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let spectator = r.report.get("35Cl37Cl P28 v1-9").ok_or("P28 missing from report")?;
    check(
        near <= 1e-3 && spectator.verdict == Verdict::Untouched,
        format!(
            "near-branch shift {near:.4e} cm⁻¹ (published claim 1e-4), P28 {}",
            spectator.verdict
        ),
    )
}

fn methanol() -> Outcome {
    let r = run_scenario(&bundled_scenario("methanol").map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let elim = r.report.count(Verdict::Eliminated);
    let untouched = r.report.count(Verdict::Untouched);
    check(
        elim == 1 && untouched == 3,
        format!("{elim} eliminated, {untouched} untouched"),
    )
}

fn unit_anchor() -> Outcome {
    let ghz = wavenumber_to_frequency(Wavenumber(0.025));
    let printed = format_significant(ghz, 5);
    let off = (ghz - 0.75).abs() / 0.75;
    check(
        printed == "0.74948" && off < 0.003,
        format!("0.025 cm⁻¹ = {printed} GHz, {:.2}% from 0.75", off * 100.0),
    )
}

fn determinism() -> Outcome {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    let names: Vec<String> = list_scenarios().into_iter().map(|(n, _)| n).collect();
    for name in &names {
        for d in &dirs {
            let cfg = bundled_scenario(name).map_err(|e| e.to_string())?;
            run_scenario(&cfg)
                .and_then(|r| r.write_outputs(d.path().join(name)))
                .map_err(|e| e.to_string())?;
        }
        for file in ["spectrum.csv", "report.csv"] {
            let a = std::fs::read(dirs[0].path().join(name).join(file)).unwrap();
            let b = std::fs::read(dirs[1].path().join(name).join(file)).unwrap();
            if a != b {
                return Err(format!("{name}/{file} differs between runs"));
            }
        }
    }
    Ok(format!("{} scenarios byte-identical", names.len()))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Duration);
    let s = Duration::from_secs;
    let criteria: [Criterion; 11] = [
        ("EIT hole at line center", eit_hole, s(1)),
        ("Lorentzian limit of resonant form", lorentzian_limit, s(1)),
        ("Autler-Townes splitting", at_splitting, s(3)),
        ("dressed-state normalization", dressed_normalization, s(1)),
        ("2x2 inverse oracle", matrix_oracle, s(1)),
        ("two-line elimination", two_lines, s(5)),
        ("congested spectrum residual", congested, s(10)),
        ("Cl2 spectator shift", cl2, s(1)),
        ("methanol classification", methanol, s(1)),
        ("unit anchor", unit_anchor, s(1)),
        ("determinism", determinism, s(30)),
    ];
    let mut failures = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = run();
        let elapsed = t0.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= *budget => (true, d),
            Ok(d) => (false, format!("{d}; took {elapsed:?} > {budget:?}")),
            Err(d) => (false, d),
        };
        failures += usize::from(!ok);
        println!(
            "criterion {:>2} {:<36} {}  [{:.0} ms] {}",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64() * 1e3,
            detail
        );
    }
    println!("acceptance: {} passed, {} failed", criteria.len() - failures, failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
