//! Closed-form axial response of semi-floating and fully floating piles.
//!
//! Every field is the sum of a thermal part (proportional to `ΔT`) and a
//! mechanical part (proportional to `F`); both are reported along with their sum.

use serde::{Deserialize, Serialize};

use crate::error::{PileError, Result};
use crate::hyperbolic::{
    atanh_from_log_parts, cosh_over_cosh, cosh_over_sinh, mixed_ratio, sinh_over_cosh,
    sinh_over_sinh,
};
use crate::model::{LoadCase, PileSystem};

/// Grid size used when the caller does not choose one.
pub const DEFAULT_GRID_POINTS: usize = 1001;

/// Which closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Finite tip spring `k_b ≥ 0`; the thermal null point follows from `k_b`.
    SemiFloating,
    /// No tip restraint; the thermal null point sits at mid-length.
    FullyFloating,
}

impl Variant {
    pub fn label(self) -> &'static str {
        match self {
            Variant::SemiFloating => "semi-floating",
            Variant::FullyFloating => "fully-floating",
        }
    }
}

/// Thermal and mechanical contributions to one field value.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FieldComponents {
    pub thermal: f64,
    pub mechanical: f64,
    pub combined: f64,
}

impl FieldComponents {
    fn new(thermal: f64, mechanical: f64) -> Self {
        Self { thermal, mechanical, combined: thermal + mechanical }
    }
}

/// Displacement (m), strain (-) and stress (Pa) at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointResponse {
    pub displacement: FieldComponents,
    pub strain: FieldComponents,
    pub stress: FieldComponents,
}

fn check_domain(x: f64, system: &PileSystem) -> Result<()> {
    let length = system.length();
    if !(0.0..=length).contains(&x) {
        return Err(PileError::Domain { x, length });
    }
    Ok(())
}

/// Location of zero displacement under thermal load alone, measured from the tip.
///
/// `x_0 = (1/ψ)·atanh[(cosh ψL − 1)/(sinh ψL + k_b/(Eψ))]`, which lies in
/// `(0, L/2]` and equals `L/2` exactly when `k_b = 0`.
pub fn thermal_null_point(system: &PileSystem) -> f64 {
    let psi = system.psi();
    let psi_l = system.psi_l();
    let kappa = system.relative_tip_stiffness();
    // With a = N/D the atanh argument: D + N = e^{ψL}(m + κt), D − N = m + κ,
    // where t = e^{−ψL} and m = 1 − t.
    let t = (-psi_l).exp();
    let m = -(-psi_l).exp_m1();
    let ln_plus = (m + kappa * t).ln() + psi_l;
    let ln_minus = (m + kappa).ln();
    let arg = atanh_from_log_parts(Some(ln_plus), Some(ln_minus))
        .expect("atanh argument lies in (0, 1) for k_b >= 0");
    arg / psi
}

/// Response of a pile with tip spring `k_b` at height `x` above the tip.
pub fn semi_floating_fields(x: f64, system: &PileSystem, load: &LoadCase) -> Result<PointResponse> {
    check_domain(x, system)?;
    let psi = system.psi();
    let e = system.elastic_modulus();
    let alpha_dt = system.thermal_expansion() * load.delta_t();
    let f = load.axial_force();
    let ae = system.axial_rigidity();

    let x0 = thermal_null_point(system);
    let a = psi * (x - x0);
    let b = psi * (system.length() - x0);
    let cosh_ratio = cosh_over_cosh(a, b);

    let kappa = system.relative_tip_stiffness();
    let px = psi * x;
    let pl = system.psi_l();
    let disp_ratio = mixed_ratio(px, pl, (1.0, kappa), (1.0, kappa));
    let strain_ratio = mixed_ratio(px, pl, (kappa, 1.0), (1.0, kappa));

    Ok(PointResponse {
        displacement: FieldComponents::new(
            alpha_dt * sinh_over_cosh(a, b) / psi,
            f * disp_ratio / (ae * psi),
        ),
        strain: FieldComponents::new(alpha_dt * cosh_ratio, f * strain_ratio / ae),
        stress: FieldComponents::new(
            e * alpha_dt * (cosh_ratio - 1.0),
            f * strain_ratio / system.area(),
        ),
    })
}

/// Response of a pile without tip restraint at height `x` above the tip.
///
/// The tip stiffness stored in `system` is ignored.
pub fn fully_floating_fields(x: f64, system: &PileSystem, load: &LoadCase) -> Result<PointResponse> {
    check_domain(x, system)?;
    let psi = system.psi();
    let e = system.elastic_modulus();
    let alpha_dt = system.thermal_expansion() * load.delta_t();
    let f = load.axial_force();
    let ae = system.axial_rigidity();

    let half = 0.5 * system.psi_l();
    let a = psi * x - half;
    let cosh_ratio = cosh_over_cosh(a, half);
    let px = psi * x;
    let pl = system.psi_l();
    let strain_ratio = sinh_over_sinh(px, pl);

    Ok(PointResponse {
        displacement: FieldComponents::new(
            alpha_dt * sinh_over_cosh(a, half) / psi,
            f * cosh_over_sinh(px, pl) / (ae * psi),
        ),
        strain: FieldComponents::new(alpha_dt * cosh_ratio, f * strain_ratio / ae),
        stress: FieldComponents::new(
            e * alpha_dt * (cosh_ratio - 1.0),
            f * strain_ratio / system.area(),
        ),
    })
}

/// Dispatches to the closed form of `variant`.
pub fn fields(variant: Variant, x: f64, system: &PileSystem, load: &LoadCase) -> Result<PointResponse> {
    match variant {
        Variant::SemiFloating => semi_floating_fields(x, system, load),
        Variant::FullyFloating => fully_floating_fields(x, system, load),
    }
}

/// `n` equally spaced points on `[0, length]`, both ends included exactly.
pub fn uniform_grid(length: f64, n: usize) -> Vec<f64> {
    let last = n - 1;
    (0..n)
        .map(|i| if i == last { length } else { length * i as f64 / last as f64 })
        .collect()
}

/// Fields sampled along the pile.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResponseProfile {
    pub x: Vec<f64>,
    pub displacement: Vec<FieldComponents>,
    pub strain: Vec<FieldComponents>,
    pub stress: Vec<FieldComponents>,
    pub variant: Variant,
    pub system: PileSystem,
    pub load: LoadCase,
}

impl ResponseProfile {
    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn combined_displacement(&self) -> Vec<f64> {
        self.displacement.iter().map(|c| c.combined).collect()
    }

    pub fn combined_strain(&self) -> Vec<f64> {
        self.strain.iter().map(|c| c.combined).collect()
    }

    pub fn combined_stress(&self) -> Vec<f64> {
        self.stress.iter().map(|c| c.combined).collect()
    }
}

/// Evaluates the closed form of `variant` on a uniform grid of `n_points`.
pub fn sample_profile(
    system: &PileSystem,
    load: &LoadCase,
    n_points: usize,
    variant: Variant,
) -> Result<ResponseProfile> {
    if n_points < 2 {
        return Err(PileError::Argument(format!("n_points must be at least 2, got {n_points}")));
    }
    let x = uniform_grid(system.length(), n_points);
    let mut displacement = Vec::with_capacity(n_points);
    let mut strain = Vec::with_capacity(n_points);
    let mut stress = Vec::with_capacity(n_points);
    for &xi in &x {
        let r = fields(variant, xi, system, load)?;
        displacement.push(r.displacement);
        strain.push(r.strain);
        stress.push(r.stress);
    }
    Ok(ResponseProfile { x, displacement, strain, stress, variant, system: *system, load: *load })
}
