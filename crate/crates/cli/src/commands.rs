//! The `solve`, `nullpoint`, `sweep` and `oracle-check` commands.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use pile_core::analytic::{sample_profile, thermal_null_point, ResponseProfile, Variant};
use pile_core::fd::{convergence_study, field_errors, find_displacement_zero, solve_bvp};
use pile_core::nullpoint::{
    build_null_point_report, combined_null, displacement_zero_by_bisection, sweep, NullPointReport,
    Spacing, SweepResult,
};
use pile_core::{LoadCase, PileSystem, Scenario, ScenarioPair};
use serde::Serialize;

use crate::error::CliError;
use crate::runspec::{DepthFrom, EtaSpec, RunSpec};
use crate::svg::{self, Panel, Series};

/// FD node count for `oracle-check` unless overridden.
pub const ORACLE_NODES: usize = 10_000;
/// Node counts of the convergence study.
pub const CONVERGENCE_NODES: [usize; 4] = [250, 500, 1000, 2000];
pub const FIELD_TOLERANCE: f64 = 1e-4;
pub const RESIDUAL_TOLERANCE: f64 = 1e-12;
pub const ORDER_RANGE: (f64, f64) = (1.8, 2.2);
pub const MIN_REDUCTION: f64 = 3.5;

const THERMAL_COLOR: &str = "#d62728";
const MECHANICAL_COLOR: &str = "#1f77b4";
const COMBINED_COLOR: &str = "#000000";

fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.') { c } else { '_' })
        .collect()
}

fn write_file(dir: &Path, name: &str, contents: &str, written: &mut Vec<PathBuf>) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(|e| CliError::io(&path, e))?;
    written.push(path);
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Reported coordinate for a height `x` above the tip.
fn coordinate(x: f64, length: f64, depth_from: DepthFrom) -> f64 {
    match depth_from {
        DepthFrom::Tip => x,
        DepthFrom::Head => length - x,
    }
}

fn coordinate_name(depth_from: DepthFrom) -> &'static str {
    match depth_from {
        DepthFrom::Tip => "x",
        DepthFrom::Head => "depth",
    }
}

/// Adding zero turns `-0.0` into `0.0`.
fn z(v: f64) -> f64 {
    v + 0.0
}

fn optional(v: Option<f64>) -> String {
    v.map(|v| format!("{:e}", z(v))).unwrap_or_default()
}

/// CSV of a sampled profile, rows ordered by the reported coordinate.
pub fn profile_csv(profile: &ResponseProfile, depth_from: DepthFrom) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{}_m,u_thermal,u_mech,u_combined,eps_thermal,eps_mech,eps_combined,sig_thermal_Pa,sig_mech_Pa,sig_combined_Pa",
        coordinate_name(depth_from)
    );
    let length = profile.system.length();
    let mut rows: Vec<usize> = (0..profile.len()).collect();
    if depth_from == DepthFrom::Head {
        rows.reverse();
    }
    for i in rows {
        let (u, e, sg) = (profile.displacement[i], profile.strain[i], profile.stress[i]);
        let _ = writeln!(
            s,
            "{},{:e},{:e},{:e},{:e},{:e},{:e},{:e},{:e},{:e}",
            z(coordinate(profile.x[i], length, depth_from)),
            z(u.thermal),
            z(u.mechanical),
            z(u.combined),
            z(e.thermal),
            z(e.mechanical),
            z(e.combined),
            z(sg.thermal),
            z(sg.mechanical),
            z(sg.combined)
        );
    }
    s
}

/// Three panels (displacement, strain, stress) against pile coordinate.
pub fn profile_svg(title: &str, profile: &ResponseProfile, depth_from: DepthFrom) -> String {
    let length = profile.system.length();
    let y: Vec<f64> = profile.x.iter().map(|x| coordinate(*x, length, depth_from)).collect();
    let y_label = match depth_from {
        DepthFrom::Tip => "height above tip x (m)",
        DepthFrom::Head => "depth below head (m)",
    };
    let make = |name: &str, unit: &str, scale: f64, field: &dyn Fn(usize) -> (f64, f64, f64)| {
        let mut panel = Panel::new(name, format!("{name} ({unit})"), y_label);
        panel.y_down = depth_from == DepthFrom::Head;
        let pick = |k: usize| -> Vec<(f64, f64)> {
            (0..y.len())
                .map(|i| {
                    let (t, m, c) = field(i);
                    ([t, m, c][k] * scale, y[i])
                })
                .collect()
        };
        panel.series = vec![
            Series { label: "thermal".into(), color: THERMAL_COLOR, dashed: true, points: pick(0) },
            Series { label: "mechanical".into(), color: MECHANICAL_COLOR, dashed: true, points: pick(1) },
            Series { label: "combined".into(), color: COMBINED_COLOR, dashed: false, points: pick(2) },
        ];
        panel
    };
    let panels = [
        make("displacement", "mm", 1e3, &|i| {
            let c = profile.displacement[i];
            (c.thermal, c.mechanical, c.combined)
        }),
        make("strain", "microstrain", 1e6, &|i| {
            let c = profile.strain[i];
            (c.thermal, c.mechanical, c.combined)
        }),
        make("stress", "MPa", 1e-6, &|i| {
            let c = profile.stress[i];
            (c.thermal, c.mechanical, c.combined)
        }),
    ];
    svg::render(title, &panels)
}

fn load_title(name: &str, load: &LoadCase, variant: Variant) -> String {
    format!(
        "{name}: {} pile, F = {} MN, dT = {} degC (scenario {})",
        variant.label(),
        load.axial_force() / 1e6,
        load.delta_t(),
        load.scenario()
    )
}

/// Writes one profile per load case. Returns the files written.
pub fn cmd_solve(spec: &RunSpec) -> Result<Vec<PathBuf>, CliError> {
    if spec.loads.is_empty() {
        return Err(CliError::Validation("solve needs at least one [load] section".into()));
    }
    let system = spec.system()?;
    let (dir, formats) = (&spec.output.dir, spec.output.formats);
    let mut written = Vec::new();
    for block in &spec.loads {
        let load = block.load_case(&system)?;
        let profile = sample_profile(&system, &load, spec.options.grid, spec.options.variant)?;
        let stem = format!("profile-{}", file_stem(&block.name));
        if formats.csv {
            write_file(dir, &format!("{stem}.csv"), &profile_csv(&profile, spec.options.depth_from), &mut written)?;
        }
        if formats.json {
            write_file(dir, &format!("{stem}.json"), &to_json(&profile), &mut written)?;
        }
        if formats.svg {
            let title = load_title(&block.name, &load, spec.options.variant);
            write_file(dir, &format!("{stem}.svg"), &profile_svg(&title, &profile, spec.options.depth_from), &mut written)?;
        }
    }
    Ok(written)
}

#[derive(Debug, Clone, Serialize)]
pub struct NamedReport {
    pub name: String,
    pub report: NullPointReport,
}

/// Null-point reports for every load case.
pub fn null_point_reports(spec: &RunSpec) -> Result<Vec<NamedReport>, CliError> {
    let system = spec.system()?;
    spec.loads
        .iter()
        .map(|block| {
            let load = block.load_case(&system)?;
            Ok(NamedReport { name: block.name.clone(), report: build_null_point_report(&system, &load, spec.options.grid)? })
        })
        .collect()
}

fn fmt_opt(v: Option<f64>, digits: usize) -> String {
    v.map(|v| format!("{v:.digits$}")).unwrap_or_else(|| "-".into())
}

pub fn null_point_table(reports: &[NamedReport], length: f64, depth_from: DepthFrom) -> String {
    let c = |x: f64| coordinate(x, length, depth_from);
    let cname = coordinate_name(depth_from);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<20} {:<15} {:>8} {:>12} {:>13} {:<15} {:>10} {:>10} {:>13} {:>12}",
        "case",
        "scenario",
        "eta",
        format!("thermal {cname}"),
        format!("combined {cname}"),
        "existence",
        "eta_print",
        "eta_pile",
        "max|sig| MPa",
        format!("at {cname} (m)")
    );
    for r in reports {
        let rep = &r.report;
        let combined = rep.combined_null.map(|x| format!("{:.4}", c(x))).unwrap_or_else(|| "ABSENT".into());
        let _ = writeln!(
            s,
            "{:<20} {:<15} {:>8} {:>12.4} {:>13} {:<15} {:>10} {:>10} {:>13.4} {:>12.4}",
            r.name,
            rep.scenario.label(),
            fmt_opt(rep.eta, 3),
            c(rep.thermal_null),
            combined,
            rep.existence.label(),
            fmt_opt(rep.eta_threshold_printed, 4),
            fmt_opt(rep.eta_threshold_in_pile, 4),
            rep.max_stress.value / 1e6,
            c(rep.max_stress.location)
        );
    }
    s
}

fn null_point_csv(reports: &[NamedReport], length: f64, depth_from: DepthFrom) -> String {
    let c = |x: f64| coordinate(x, length, depth_from);
    let n = coordinate_name(depth_from);
    let mut s = format!(
        "case,scenario,eta,thermal_null_{n}_m,combined_null_{n}_m,exists_flag,existence,eta_threshold_printed,eta_threshold_in_pile,max_sigma_Pa,max_sigma_{n}_m\n"
    );
    for r in reports {
        let rep = &r.report;
        let _ = writeln!(
            s,
            "{},{},{},{:e},{},{},{},{},{},{:e},{:e}",
            r.name,
            rep.scenario.label(),
            optional(rep.eta),
            z(c(rep.thermal_null)),
            optional(rep.combined_null.map(c)),
            u8::from(rep.existence.exists()),
            rep.existence.label(),
            optional(rep.eta_threshold_printed),
            optional(rep.eta_threshold_in_pile),
            z(rep.max_stress.value),
            z(c(rep.max_stress.location))
        );
    }
    s
}

/// Writes the null-point table and machine-readable reports. Returns the table
/// and the files written.
pub fn cmd_nullpoint(spec: &RunSpec) -> Result<(String, Vec<PathBuf>), CliError> {
    if spec.loads.is_empty() {
        return Err(CliError::Validation("nullpoint needs at least one [load] section".into()));
    }
    let length = spec.system()?.length();
    let reports = null_point_reports(spec)?;
    let table = null_point_table(&reports, length, spec.options.depth_from);
    let (dir, formats) = (&spec.output.dir, spec.output.formats);
    let mut written = Vec::new();
    write_file(dir, "nullpoint.txt", &table, &mut written)?;
    if formats.json {
        write_file(dir, "nullpoint.json", &to_json(&reports), &mut written)?;
    }
    if formats.csv {
        write_file(dir, "nullpoint.csv", &null_point_csv(&reports, length, spec.options.depth_from), &mut written)?;
    }
    Ok((table, written))
}

/// CSV of one sweep branch; absent null points leave the location empty.
pub fn sweep_csv(result: &SweepResult, length: f64, depth_from: DepthFrom) -> String {
    let c = |x: f64| coordinate(x, length, depth_from);
    let mut s = String::from(match depth_from {
        DepthFrom::Tip => "eta,x0_combined_m,exists_flag,max_sigma_Pa,max_sigma_location_m\n",
        DepthFrom::Head => "eta,x0_combined_depth_m,exists_flag,max_sigma_Pa,max_sigma_depth_m\n",
    });
    for r in &result.records {
        let _ = writeln!(
            s,
            "{:e},{},{},{:e},{:e}",
            r.eta,
            optional(r.combined_null.map(c)),
            u8::from(r.existence.exists()),
            z(r.max_stress.value),
            z(c(r.max_stress.location))
        );
    }
    s
}

/// Null-point location against `η` for all branches on one axis.
pub fn sweep_svg(title: &str, results: &[SweepResult], length: f64, depth_from: DepthFrom, log_eta: bool) -> String {
    let mut panel = Panel::new(
        "combined null point",
        "eta = |dT| / |dT_eq| (-)",
        match depth_from {
            DepthFrom::Tip => "null point height above tip (m)",
            DepthFrom::Head => "null point depth below head (m)",
        },
    );
    panel.x_log = log_eta;
    panel.y_down = depth_from == DepthFrom::Head;
    panel.guides = vec![
        (coordinate(0.0, length, depth_from), "tip".into()),
        (0.5 * length, "mid-length".into()),
        (coordinate(length, length, depth_from), "head".into()),
    ];
    for r in results {
        let (label, color) = match r.pair {
            ScenarioPair::SameSign => ("scenarios I / IV (same sign)", "#2ca02c"),
            ScenarioPair::OppositeSign => ("scenarios II / III (opposite sign)", "#9467bd"),
        };
        panel.series.push(Series {
            label: label.into(),
            color,
            dashed: r.pair == ScenarioPair::OppositeSign,
            points: r
                .records
                .iter()
                .map(|rec| (rec.eta, rec.combined_null.map_or(f64::NAN, |x| coordinate(x, length, depth_from))))
                .collect(),
        });
    }
    svg::render(title, &[panel])
}

/// Results of one `[sweep]` block, one entry per branch.
pub type NamedSweep = (String, Vec<SweepResult>);

/// Runs every sweep block. Returns the results (per block, per branch) and the
/// files written.
pub fn cmd_sweep(spec: &RunSpec) -> Result<(Vec<NamedSweep>, Vec<PathBuf>), CliError> {
    if spec.sweeps.is_empty() {
        return Err(CliError::Validation("sweep needs at least one [sweep] section".into()));
    }
    let system = spec.system()?;
    let length = system.length();
    let depth_from = spec.options.depth_from;
    let (dir, formats) = (&spec.output.dir, spec.output.formats);
    let mut written = Vec::new();
    let mut all = Vec::new();
    for block in &spec.sweeps {
        let etas = block.etas.values()?;
        let results = block
            .pairs
            .iter()
            .map(|pair| sweep(&system, *pair, &etas, block.anchor.anchor(), spec.options.grid))
            .collect::<Result<Vec<_>, _>>()?;
        let stem = format!("sweep-{}", file_stem(&block.name));
        if formats.csv {
            for r in &results {
                write_file(dir, &format!("{stem}-{}.csv", r.pair.label()), &sweep_csv(r, length, depth_from), &mut written)?;
            }
        }
        if formats.json {
            write_file(dir, &format!("{stem}.json"), &to_json(&results), &mut written)?;
        }
        if formats.svg {
            let log_eta = match &block.etas {
                EtaSpec::Range { spacing, .. } => *spacing == Spacing::Log,
                EtaSpec::List(v) => v[v.len() - 1] / v[0] >= 100.0,
            };
            let svg = sweep_svg(&format!("{}: combined null point vs eta", block.name), &results, length, depth_from, log_eta);
            write_file(dir, &format!("{stem}.svg"), &svg, &mut written)?;
        }
        all.push((block.name.clone(), results));
    }
    Ok((all, written))
}

/// One verification check of `oracle-check`.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub limit: f64,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn below(name: String, value: f64, limit: f64, detail: String) -> Self {
        Self { name, value, limit, passed: value < limit, detail }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub checks: Vec<Check>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = writeln!(
                s,
                "{} {:<32} {:.3e} (limit {:.3e})  {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.value,
                c.limit,
                c.detail
            );
        }
        s
    }
}

fn closed_form_null(system: &PileSystem, load: &LoadCase) -> Result<Option<f64>, CliError> {
    Ok(match load.scenario() {
        Scenario::ThermalOnly => Some(thermal_null_point(system)),
        Scenario::MechanicalOnly | Scenario::NullLoad => None,
        s => combined_null(system, s.pair().expect("combined"), load.eta().expect("combined"))?,
    })
}

fn null_agreement(name: String, fd: Result<Option<f64>, pile_core::PileError>, closed: Option<f64>, cell: f64) -> Check {
    match (fd, closed) {
        (Ok(Some(a)), Some(b)) => Check::below(name, (a - b).abs(), cell, format!("fd {a:.6} m vs closed form {b:.6} m")),
        (Ok(None), None) => Check { name, value: 0.0, limit: cell, passed: true, detail: "absent in both".into() },
        (Ok(a), b) => Check {
            name,
            value: f64::INFINITY,
            limit: cell,
            passed: false,
            detail: format!("fd {a:?} vs closed form {b:?}"),
        },
        (Err(e), _) => Check { name, value: f64::INFINITY, limit: cell, passed: false, detail: e.to_string() },
    }
}

/// Cross-checks closed forms against the finite-difference oracle.
///
/// `psi_factor` scales the `ψ` seen by the closed forms only (the oracle reads
/// the physical inputs), to verify that a corrupted system is caught.
pub fn oracle_check(spec: &RunSpec, fd_nodes: Option<usize>, psi_factor: Option<f64>) -> Result<OracleReport, CliError> {
    let mut system = spec.system()?;
    if let Some(f) = psi_factor {
        system = system.with_psi_override(system.psi() * f);
    }
    let variant = spec.options.variant;
    if variant == Variant::FullyFloating {
        system = system.fully_floating();
    }
    let n = fd_nodes.unwrap_or(ORACLE_NODES);
    let length = system.length();
    let cell = length / (n - 1) as f64;

    let mut cases: Vec<(String, LoadCase)> = spec
        .loads
        .iter()
        .map(|b| Ok((b.name.clone(), b.load_case(&system)?)))
        .collect::<Result<_, CliError>>()?;
    if cases.is_empty() {
        cases.push(("thermal-10degC".into(), LoadCase::new(0.0, 10.0, &system)?));
    }

    let mut checks = Vec::new();
    for (name, load) in &cases {
        let sol = solve_bvp(&system, load, n)?;
        let err = field_errors(&sol, &system, load, variant)?;
        checks.push(Check::below(
            format!("fields[{name}]"),
            err.max(),
            FIELD_TOLERANCE,
            format!("n = {n}; u {:.2e}, eps {:.2e}, sig {:.2e}", err.displacement, err.strain, err.stress),
        ));
        checks.push(Check::below(
            format!("residual[{name}]"),
            sol.residual_norm,
            RESIDUAL_TOLERANCE,
            "interior stencil residual / max|u|".into(),
        ));
        match variant {
            Variant::FullyFloating => {
                let closed = closed_form_null(&system, load)?;
                checks.push(null_agreement(format!("null-point[{name}]"), find_displacement_zero(&sol), closed, cell));
                let bis = displacement_zero_by_bisection(&system, load);
                checks.push(null_agreement(format!("bisection[{name}]"), bis, closed, 1e-9 * length));
            }
            Variant::SemiFloating if load.delta_t() != 0.0 => {
                let thermal = load.thermal_part(&system);
                let sol = solve_bvp(&system, &thermal, n)?;
                let x0 = thermal_null_point(&system);
                checks.push(null_agreement(format!("thermal-null[{name}]"), find_displacement_zero(&sol), Some(x0), cell));
            }
            Variant::SemiFloating => {}
        }
    }

    let (name, load) = &cases[0];
    let study = convergence_study(&system, load, &CONVERGENCE_NODES)?;
    let rows: Vec<String> = study.rows.iter().map(|(n, e)| format!("{n}:{e:.3e}")).collect();
    let worst_order = study
        .orders
        .iter()
        .map(|p| if p < &ORDER_RANGE.0 { ORDER_RANGE.0 - p } else if p > &ORDER_RANGE.1 { p - ORDER_RANGE.1 } else { 0.0 })
        .fold(0.0f64, f64::max);
    let orders: Vec<String> = study.orders.iter().map(|p| format!("{p:.3}")).collect();
    checks.push(Check {
        name: format!("convergence-order[{name}]"),
        value: study.orders.iter().copied().fold(f64::NAN, f64::min),
        limit: ORDER_RANGE.0,
        passed: worst_order == 0.0 && study.orders.iter().all(|p| p.is_finite()),
        detail: format!("orders [{}] must lie in [{}, {}]; errors {}", orders.join(", "), ORDER_RANGE.0, ORDER_RANGE.1, rows.join(" ")),
    });
    let min_ratio = study.ratios().into_iter().fold(f64::INFINITY, f64::min);
    checks.push(Check {
        name: format!("error-reduction[{name}]"),
        value: min_ratio,
        limit: MIN_REDUCTION,
        passed: min_ratio >= MIN_REDUCTION,
        detail: "smallest error ratio per doubling of n".into(),
    });
    Ok(OracleReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SPEC: &str = "[pile]\nlength = 26 m\ndiameter = 1 m\nelastic_modulus = 29.2 GPa\nthermal_expansion = 1e-5 1/degC\nshaft_stiffness = 16.7 MPa/m\n\n[options]\ngrid = 11\n\n[load]\nname = a/b c\nforce = -0.5 MN\ndelta_t = 0 degC\n";

    #[test]
    fn file_stems_are_sanitized() {
        assert_eq!(file_stem("a/b c"), "a_b_c");
        assert_eq!(file_stem("case-1.x"), "case-1.x");
    }

    #[test]
    fn csv_layout() {
        let spec = RunSpec::parse(SPEC).unwrap();
        let sys = spec.system().unwrap();
        let lc = spec.loads[0].load_case(&sys).unwrap();
        let p = sample_profile(&sys, &lc, 11, Variant::FullyFloating).unwrap();
        let csv = profile_csv(&p, DepthFrom::Tip);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 12);
        assert_eq!(lines[0].split(',').count(), 10);
        assert!(lines[1].starts_with("0,0e0,"), "{}", lines[1]);
        assert!(!csv.contains("-0e0"));
        assert!(lines[11].starts_with("26,"));
        assert!(!csv.contains('\r'));
        let head = profile_csv(&p, DepthFrom::Head);
        assert!(head.starts_with("depth_m,"));
        assert!(head.lines().nth(1).unwrap().starts_with("0,"));
        assert!(head.lines().last().unwrap().starts_with("26,"));
    }

    #[test]
    fn table_marks_absent() {
        let spec = RunSpec::parse(SPEC).unwrap();
        let reports = null_point_reports(&spec).unwrap();
        let t = null_point_table(&reports, 26.0, DepthFrom::Tip);
        assert!(t.contains("ABSENT") && t.contains("MECHANICAL_ONLY"));
    }
}
