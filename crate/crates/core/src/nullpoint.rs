//! Combined null point of fully floating piles.
//!
//! Under combined loading the displacement of a fully floating pile vanishes at
//!
//! ```text
//! x̄_0 = (1/ψ)·atanh[tanh(ψL/2) ∓ 1/(η·sinh ψL)]
//! ```
//!
//! with the minus sign when `ΔT` and `F` share a sign (scenarios I and IV) and
//! the plus sign otherwise (II and III). Because `dσ/dx = Eψ²u`, the stress is
//! stationary exactly where the displacement vanishes.
//!
//! A null point is reported only if it lies on the pile, `0 ≤ x̄_0 ≤ L`. For
//! scenarios II/III this is stricter than the bound `η > 1/(sinh ψL·(1 − tanh(ψL/2)))`,
//! which only guarantees that the atanh argument is below one; both numbers are
//! reported.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::{fully_floating_fields, sample_profile, thermal_null_point, ResponseProfile, Variant};
use crate::error::{PileError, Result};
use crate::hyperbolic::{atanh_from_log_parts, ln_1p_checked};
use crate::model::{LoadAnchor, LoadCase, PileSystem, Scenario, ScenarioPair};
use crate::roots::bisect;

/// Relative (to `L`) distance within which a null point counts as sitting on the
/// tip or head.
pub const POSITION_TOLERANCE: f64 = 1e-9;

/// Relative (to `L`) bracket width at which the bisection oracle stops.
pub const BISECTION_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Existence {
    ExistsInterior,
    AtTip,
    AtHead,
    Absent,
}

impl Existence {
    pub fn exists(self) -> bool {
        self != Existence::Absent
    }

    pub fn label(self) -> &'static str {
        match self {
            Existence::ExistsInterior => "EXISTS_INTERIOR",
            Existence::AtTip => "AT_TIP",
            Existence::AtHead => "AT_HEAD",
            Existence::Absent => "ABSENT",
        }
    }

    fn classify(location: Option<f64>, length: f64) -> Self {
        match location {
            None => Existence::Absent,
            Some(x) if x <= POSITION_TOLERANCE * length => Existence::AtTip,
            Some(x) if x >= length - POSITION_TOLERANCE * length => Existence::AtHead,
            Some(_) => Existence::ExistsInterior,
        }
    }
}

fn check_eta(eta: f64) -> Result<()> {
    if eta.is_finite() && eta > 0.0 {
        Ok(())
    } else {
        Err(PileError::Argument(format!("eta must be positive and finite, got {eta}")))
    }
}

/// `(t, m) = (e^{−ψL}, 1 − e^{−ψL})`.
fn decay_terms(system: &PileSystem) -> (f64, f64) {
    let pl = system.psi_l();
    ((-pl).exp(), -(-pl).exp_m1())
}

/// Combined null point for scenarios I and IV, or `None` if it falls below the tip.
///
/// Always at or below mid-length. Points within [`POSITION_TOLERANCE`] of the tip
/// are returned as exactly `0`.
pub fn combined_null_same_sign(system: &PileSystem, eta: f64) -> Result<Option<f64>> {
    check_eta(eta)?;
    let (t, m) = decay_terms(system);
    let q = 1.0 / (eta * m);
    // With a = tanh(ψL/2) − 1/(η sinh ψL):
    //   1 + a ∝ 1 − t·q,   1 − a ∝ t·(1 + q),   q = 1/(η(1 − t)).
    let ln_plus = ln_1p_checked(-t * q);
    let ln_minus = ln_1p_checked(q).map(|v| v - system.psi_l());
    let Some(arg) = atanh_from_log_parts(ln_plus, ln_minus) else {
        return Ok(None);
    };
    let x = arg / system.psi();
    let tol = POSITION_TOLERANCE * system.length();
    Ok((x >= -tol).then_some(if x <= tol { 0.0 } else { x }))
}

/// Combined null point for scenarios II and III, or `None` if it falls above the head.
///
/// Always at or above mid-length. Points within [`POSITION_TOLERANCE`] of the head
/// are returned as exactly `L`.
pub fn combined_null_opposite_sign(system: &PileSystem, eta: f64) -> Result<Option<f64>> {
    check_eta(eta)?;
    let (t, m) = decay_terms(system);
    let q = 1.0 / (eta * m);
    // With a = tanh(ψL/2) + 1/(η sinh ψL):
    //   1 + a ∝ 1 + t·q,   1 − a ∝ t·(1 − q).
    let ln_plus = ln_1p_checked(t * q);
    let ln_minus = ln_1p_checked(-q).map(|v| v - system.psi_l());
    let Some(arg) = atanh_from_log_parts(ln_plus, ln_minus) else {
        return Ok(None);
    };
    let x = arg / system.psi();
    let length = system.length();
    let tol = POSITION_TOLERANCE * length;
    Ok((x <= length + tol).then_some(if x >= length - tol { length } else { x }))
}

/// Combined null point for the branch `pair`.
pub fn combined_null(system: &PileSystem, pair: ScenarioPair, eta: f64) -> Result<Option<f64>> {
    match pair {
        ScenarioPair::SameSign => combined_null_same_sign(system, eta),
        ScenarioPair::OppositeSign => combined_null_opposite_sign(system, eta),
    }
}

/// Lower bounds on `η` for a combined null point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// The closed-form limitation accompanying the null-point solution.
    pub printed: f64,
    /// The bound that places the null point on the pile, `0 ≤ x̄_0 ≤ L`.
    pub in_pile: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdTable {
    pub same_sign: Thresholds,
    pub opposite_sign: Thresholds,
}

/// Thresholds on `η` for the branch `pair`.
///
/// Same sign: `1/(sinh ψL·tanh(ψL/2))` for both.
/// Opposite sign: printed `1/(sinh ψL·(1 − tanh(ψL/2)))`,
/// in-pile `1/(sinh ψL·(tanh ψL − tanh(ψL/2)))`.
pub fn existence_thresholds(system: &PileSystem, pair: ScenarioPair) -> Thresholds {
    // In terms of t = e^{−ψL} and m = 1 − t the hyperbolic products reduce to
    //   sinh ψL·tanh(ψL/2)               = m²/(2t)
    //   sinh ψL·(1 − tanh(ψL/2))         = m
    //   sinh ψL·(tanh ψL − tanh(ψL/2))   = m²/(1 + t²)
    let (t, m) = decay_terms(system);
    match pair {
        ScenarioPair::SameSign => {
            let v = 2.0 * t / (m * m);
            Thresholds { printed: v, in_pile: v }
        }
        ScenarioPair::OppositeSign => Thresholds {
            printed: 1.0 / m,
            in_pile: (1.0 + t * t) / (m * m),
        },
    }
}

pub fn threshold_table(system: &PileSystem) -> ThresholdTable {
    ThresholdTable {
        same_sign: existence_thresholds(system, ScenarioPair::SameSign),
        opposite_sign: existence_thresholds(system, ScenarioPair::OppositeSign),
    }
}

/// A stress value and where it occurs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StressPeak {
    /// Height above the tip, m.
    pub location: f64,
    /// Combined stress, Pa (tension positive).
    pub value: f64,
}

/// Grid point of largest `|σ|` along a fully floating pile (first one on ties).
pub fn locate_max_stress_magnitude(system: &PileSystem, load: &LoadCase, n_points: usize) -> Result<StressPeak> {
    let profile = sample_profile(system, load, n_points, Variant::FullyFloating)?;
    Ok(max_stress_magnitude(&profile))
}

pub fn max_stress_magnitude(profile: &ResponseProfile) -> StressPeak {
    let mut best = StressPeak { location: profile.x[0], value: profile.stress[0].combined };
    for (x, s) in profile.x.iter().zip(&profile.stress) {
        if s.combined.abs() > best.value.abs() {
            best = StressPeak { location: *x, value: s.combined };
        }
    }
    best
}

/// Largest-magnitude interior local extremum of the combined stress on a fully
/// floating pile, if the sampled stress has one.
pub fn locate_stress_extremum(system: &PileSystem, load: &LoadCase, n_points: usize) -> Result<Option<StressPeak>> {
    let profile = sample_profile(system, load, n_points, Variant::FullyFloating)?;
    Ok(stress_extremum(&profile))
}

pub fn stress_extremum(profile: &ResponseProfile) -> Option<StressPeak> {
    let s = profile.combined_stress();
    let mut best: Option<StressPeak> = None;
    for i in 1..s.len().saturating_sub(1) {
        let left = s[i] - s[i - 1];
        let right = s[i + 1] - s[i];
        let turning = (left > 0.0 && right <= 0.0) || (left < 0.0 && right >= 0.0);
        if turning && best.is_none_or(|b| s[i].abs() > b.value.abs()) {
            best = Some(StressPeak { location: profile.x[i], value: s[i] });
        }
    }
    best
}

/// Zero of the fully floating closed-form displacement, found by bisection over
/// the whole pile. `None` when the displacement keeps one sign.
pub fn displacement_zero_by_bisection(system: &PileSystem, load: &LoadCase) -> Result<Option<f64>> {
    let length = system.length();
    let u = |x: f64| {
        fully_floating_fields(x, system, load)
            .map(|r| r.displacement.combined)
            .unwrap_or(f64::NAN)
    };
    let (u0, ul) = (u(0.0), u(length));
    if u0 == 0.0 && ul == 0.0 {
        return Ok(None);
    }
    if u0 != 0.0 && ul != 0.0 && u0.signum() == ul.signum() {
        return Ok(None);
    }
    bisect(u, 0.0, length, BISECTION_TOLERANCE * length).map(Some)
}

/// Extent of tensile combined stress along a profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TensionZone {
    /// Total length with `σ > 0`, zero crossings interpolated linearly.
    pub length: f64,
    pub peak: StressPeak,
}

pub fn tension_zone(profile: &ResponseProfile) -> Option<TensionZone> {
    let s = profile.combined_stress();
    let x = &profile.x;
    let mut length = 0.0;
    let mut peak: Option<StressPeak> = None;
    for i in 0..s.len() {
        if s[i] > 0.0 && peak.is_none_or(|p| s[i] > p.value) {
            peak = Some(StressPeak { location: x[i], value: s[i] });
        }
        if i + 1 == s.len() {
            break;
        }
        let (a, b) = (s[i], s[i + 1]);
        let h = x[i + 1] - x[i];
        length += match (a > 0.0, b > 0.0) {
            (true, true) => h,
            (true, false) => h * a / (a - b),
            (false, true) => h * b / (b - a),
            (false, false) => 0.0,
        };
    }
    peak.map(|peak| TensionZone { length, peak })
}

/// Everything known about the null points of one fully floating load case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NullPointReport {
    pub scenario: Scenario,
    pub axial_force: f64,
    pub delta_t: f64,
    pub eta: Option<f64>,
    /// Null point under the thermal load alone.
    pub thermal_null: f64,
    pub combined_null: Option<f64>,
    pub existence: Existence,
    /// Thresholds of this case's branch; `None` without a branch.
    pub eta_threshold_printed: Option<f64>,
    pub eta_threshold_in_pile: Option<f64>,
    pub thresholds: ThresholdTable,
    /// Largest `|σ|` anywhere on the pile, including the loaded head.
    pub max_stress: StressPeak,
    /// Largest interior turning point of `σ`.
    pub stress_extremum: Option<StressPeak>,
}

/// Builds the null-point report of `load` on the fully floating version of
/// `system`, sampling stresses on `n_points`.
pub fn build_null_point_report(system: &PileSystem, load: &LoadCase, n_points: usize) -> Result<NullPointReport> {
    let system = system.fully_floating();
    let length = system.length();
    let thermal_null = thermal_null_point(&system);
    let pair = load.scenario().pair();
    let combined_null = match load.scenario() {
        Scenario::ThermalOnly => Some(thermal_null),
        Scenario::MechanicalOnly | Scenario::NullLoad => None,
        _ => {
            let eta = load.eta().expect("combined scenarios define eta");
            combined_null(&system, pair.expect("combined scenario"), eta)?
        }
    };
    let thresholds = threshold_table(&system);
    let active = pair.map(|p| existence_thresholds(&system, p));
    let profile = sample_profile(&system, load, n_points, Variant::FullyFloating)?;
    Ok(NullPointReport {
        scenario: load.scenario(),
        axial_force: load.axial_force(),
        delta_t: load.delta_t(),
        eta: load.eta(),
        thermal_null,
        combined_null,
        existence: Existence::classify(combined_null, length),
        eta_threshold_printed: active.map(|t| t.printed),
        eta_threshold_in_pile: active.map(|t| t.in_pile),
        thresholds,
        max_stress: max_stress_magnitude(&profile),
        stress_extremum: stress_extremum(&profile),
    })
}

/// How to space a generated list of `η` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

/// `count` values from `min` to `max` inclusive.
pub fn eta_grid(min: f64, max: f64, count: usize, spacing: Spacing) -> Result<Vec<f64>> {
    if !(min.is_finite() && max.is_finite() && min > 0.0 && max >= min) {
        return Err(PileError::Argument(format!("invalid eta range [{min}, {max}]")));
    }
    if count == 0 || (count == 1 && max != min) {
        return Err(PileError::Argument(format!("eta count {count} cannot span [{min}, {max}]")));
    }
    if count == 1 {
        return Ok(vec![min]);
    }
    let last = (count - 1) as f64;
    let mut v: Vec<f64> = (0..count)
        .map(|i| {
            let f = i as f64 / last;
            match spacing {
                Spacing::Linear => min + (max - min) * f,
                Spacing::Log => (min.ln() + (max.ln() - min.ln()) * f).exp(),
            }
        })
        .collect();
    v[0] = min;
    v[count - 1] = max;
    Ok(v)
}

/// One `η` sample of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub eta: f64,
    pub scenario: Scenario,
    pub axial_force: f64,
    pub delta_t: f64,
    pub combined_null: Option<f64>,
    pub existence: Existence,
    pub max_stress: StressPeak,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub pair: ScenarioPair,
    pub anchor: LoadAnchor,
    pub thresholds: Thresholds,
    pub records: Vec<SweepRecord>,
}

/// Combined null point and peak stress along one branch for each `η` in `etas`.
///
/// `etas` must be positive and strictly increasing. Points are evaluated in
/// parallel; records come back in the order of `etas`.
pub fn sweep(
    system: &PileSystem,
    pair: ScenarioPair,
    etas: &[f64],
    anchor: LoadAnchor,
    n_points: usize,
) -> Result<SweepResult> {
    if etas.is_empty() {
        return Err(PileError::Argument("empty eta list".into()));
    }
    if etas.iter().any(|e| !(e.is_finite() && *e > 0.0)) {
        return Err(PileError::Argument("eta values must be positive and finite".into()));
    }
    if etas.windows(2).any(|w| w[1] <= w[0]) {
        return Err(PileError::Argument("eta values must be strictly increasing".into()));
    }
    let system = system.fully_floating();
    let scenario = LoadCase::scenario_for(pair, anchor);
    let records = etas
        .par_iter()
        .map(|&eta| {
            let load = LoadCase::from_eta(scenario, eta, anchor, &system)?;
            let combined_null = combined_null(&system, pair, eta)?;
            let max_stress = locate_max_stress_magnitude(&system, &load, n_points)?;
            Ok(SweepRecord {
                eta,
                scenario,
                axial_force: load.axial_force(),
                delta_t: load.delta_t(),
                combined_null,
                existence: Existence::classify(combined_null, system.length()),
                max_stress,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { pair, anchor, thresholds: existence_thresholds(&system, pair), records })
}
