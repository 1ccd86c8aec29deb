//! Physical data model: pile geometry, material, soil springs, and load cases.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PileError, Result};

fn require_positive(field: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(PileError::Validation { field, reason: "must be finite", value });
    }
    if value <= 0.0 {
        return Err(PileError::Validation { field, reason: "must be positive", value });
    }
    Ok(value)
}

/// Circular pile geometry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PileGeometry {
    length: f64,
    diameter: f64,
}

impl PileGeometry {
    pub fn new(length: f64, diameter: f64) -> Result<Self> {
        Ok(Self {
            length: require_positive("length", length)?,
            diameter: require_positive("diameter", diameter)?,
        })
    }

    /// Pile length `L` in m.
    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Shaft perimeter `p = πD`.
    pub fn perimeter(&self) -> f64 {
        PI * self.diameter
    }

    /// Cross-sectional area `A = πD²/4`.
    pub fn area(&self) -> f64 {
        0.25 * PI * self.diameter * self.diameter
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PileMaterial {
    elastic_modulus: f64,
    thermal_expansion: f64,
}

impl PileMaterial {
    /// `elastic_modulus` in Pa, `thermal_expansion` in 1/°C.
    pub fn new(elastic_modulus: f64, thermal_expansion: f64) -> Result<Self> {
        Ok(Self {
            elastic_modulus: require_positive("elastic_modulus", elastic_modulus)?,
            thermal_expansion: require_positive("thermal_expansion", thermal_expansion)?,
        })
    }

    pub fn elastic_modulus(&self) -> f64 {
        self.elastic_modulus
    }

    pub fn thermal_expansion(&self) -> f64 {
        self.thermal_expansion
    }
}

/// Elastic soil restraint, both stiffnesses in Pa/m (stress per unit displacement).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SoilSprings {
    shaft_stiffness: f64,
    tip_stiffness: f64,
}

impl SoilSprings {
    /// `tip_stiffness = 0` is the fully floating limit.
    pub fn new(shaft_stiffness: f64, tip_stiffness: f64) -> Result<Self> {
        let shaft_stiffness = require_positive("shaft_stiffness", shaft_stiffness)?;
        if !tip_stiffness.is_finite() {
            return Err(PileError::Validation {
                field: "tip_stiffness",
                reason: "must be finite",
                value: tip_stiffness,
            });
        }
        if tip_stiffness < 0.0 {
            return Err(PileError::Validation {
                field: "tip_stiffness",
                reason: "must be non-negative",
                value: tip_stiffness,
            });
        }
        Ok(Self { shaft_stiffness, tip_stiffness })
    }

    pub fn shaft_stiffness(&self) -> f64 {
        self.shaft_stiffness
    }

    pub fn tip_stiffness(&self) -> f64 {
        self.tip_stiffness
    }
}

/// A validated pile embedded in a homogeneous soil layer.
///
/// Carries the characteristic inverse length `ψ = sqrt((p/A)(k_s/E))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PileSystem {
    geometry: PileGeometry,
    material: PileMaterial,
    springs: SoilSprings,
    psi: f64,
}

impl PileSystem {
    pub fn new(geometry: PileGeometry, material: PileMaterial, springs: SoilSprings) -> Result<Self> {
        let psi = ((geometry.perimeter() / geometry.area())
            * (springs.shaft_stiffness() / material.elastic_modulus()))
        .sqrt();
        let psi_l = psi * geometry.length();
        if !(psi.is_finite() && psi > 0.0 && psi_l.is_finite() && psi_l > 0.0) {
            return Err(PileError::Validation {
                field: "psi",
                reason: "psi and psi*L must be finite and positive",
                value: psi,
            });
        }
        Ok(Self { geometry, material, springs, psi })
    }

    /// Same pile and soil with the tip spring removed.
    pub fn fully_floating(&self) -> Self {
        Self {
            springs: SoilSprings { tip_stiffness: 0.0, ..self.springs },
            ..*self
        }
    }

    /// Same pile and soil with a different tip spring.
    pub fn with_tip_stiffness(&self, tip_stiffness: f64) -> Result<Self> {
        let springs = SoilSprings::new(self.springs.shaft_stiffness, tip_stiffness)?;
        Ok(Self { springs, ..*self })
    }

    /// Replaces `ψ` without touching the physical inputs. Only used to inject a
    /// deliberately inconsistent system into verification runs.
    #[doc(hidden)]
    pub fn with_psi_override(&self, psi: f64) -> Self {
        Self { psi, ..*self }
    }

    pub fn geometry(&self) -> &PileGeometry {
        &self.geometry
    }

    pub fn material(&self) -> &PileMaterial {
        &self.material
    }

    pub fn springs(&self) -> &SoilSprings {
        &self.springs
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }

    pub fn psi_l(&self) -> f64 {
        self.psi * self.geometry.length
    }

    pub fn length(&self) -> f64 {
        self.geometry.length
    }

    pub fn area(&self) -> f64 {
        self.geometry.area()
    }

    pub fn elastic_modulus(&self) -> f64 {
        self.material.elastic_modulus
    }

    pub fn thermal_expansion(&self) -> f64 {
        self.material.thermal_expansion
    }

    /// Axial rigidity `A·E` in N.
    pub fn axial_rigidity(&self) -> f64 {
        self.area() * self.material.elastic_modulus
    }

    /// Dimensionless tip stiffness `k_b / (Eψ)`.
    pub fn relative_tip_stiffness(&self) -> f64 {
        self.springs.tip_stiffness / (self.material.elastic_modulus * self.psi)
    }

    /// Magnitude of the temperature change equivalent to the axial force `force`:
    /// `|F| / (A·E·α)`, in °C.
    pub fn equivalent_thermal_load(&self, force: f64) -> f64 {
        force.abs() / (self.axial_rigidity() * self.material.thermal_expansion)
    }

    /// Axial force whose equivalent thermal load magnitude is `|delta_t|`, in N
    /// (magnitude only).
    pub fn equivalent_force(&self, delta_t: f64) -> f64 {
        delta_t.abs() * self.axial_rigidity() * self.material.thermal_expansion
    }
}

/// Ratio `η = |ΔT| / ΔT_eq` of the thermal load to the thermal equivalent of the
/// mechanical load.
pub fn eta_ratio(delta_t: f64, force: f64, system: &PileSystem) -> Result<f64> {
    if force == 0.0 {
        return Err(PileError::EtaUndefined("thermal-only case"));
    }
    if delta_t == 0.0 {
        return Err(PileError::EtaUndefined("mechanical-only case"));
    }
    Ok(delta_t.abs() / system.equivalent_thermal_load(force))
}

/// Loading scenario by sign of head force and temperature change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scenario {
    /// Compression and cooling.
    I,
    /// Compression and heating.
    II,
    /// Tension and cooling.
    III,
    /// Tension and heating.
    IV,
    ThermalOnly,
    MechanicalOnly,
    NullLoad,
}

impl Scenario {
    pub fn classify(force: f64, delta_t: f64) -> Self {
        use std::cmp::Ordering::*;
        let sign = |v: f64| v.partial_cmp(&0.0).unwrap_or(Equal);
        match (sign(force), sign(delta_t)) {
            (Less, Less) => Scenario::I,
            (Less, Greater) => Scenario::II,
            (Greater, Less) => Scenario::III,
            (Greater, Greater) => Scenario::IV,
            (Equal, Equal) => Scenario::NullLoad,
            (Equal, _) => Scenario::ThermalOnly,
            (_, Equal) => Scenario::MechanicalOnly,
        }
    }

    /// Which branch of the combined null-point solution applies.
    pub fn pair(self) -> Option<ScenarioPair> {
        match self {
            Scenario::I | Scenario::IV => Some(ScenarioPair::SameSign),
            Scenario::II | Scenario::III => Some(ScenarioPair::OppositeSign),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Scenario::I => "I",
            Scenario::II => "II",
            Scenario::III => "III",
            Scenario::IV => "IV",
            Scenario::ThermalOnly => "THERMAL_ONLY",
            Scenario::MechanicalOnly => "MECHANICAL_ONLY",
            Scenario::NullLoad => "NULL_LOAD",
        }
    }

    /// Parses roman numerals (any case) and the degenerate labels.
    pub fn parse(text: &str) -> Option<Self> {
        Some(match text.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Scenario::I,
            "II" | "2" => Scenario::II,
            "III" | "3" => Scenario::III,
            "IV" | "4" => Scenario::IV,
            "THERMAL_ONLY" | "THERMAL-ONLY" => Scenario::ThermalOnly,
            "MECHANICAL_ONLY" | "MECHANICAL-ONLY" => Scenario::MechanicalOnly,
            "NULL_LOAD" | "NULL-LOAD" => Scenario::NullLoad,
            _ => return None,
        })
    }

    /// Sign of `(F, ΔT)` for the four combined scenarios.
    fn signs(self) -> Option<(f64, f64)> {
        match self {
            Scenario::I => Some((-1.0, -1.0)),
            Scenario::II => Some((-1.0, 1.0)),
            Scenario::III => Some((1.0, -1.0)),
            Scenario::IV => Some((1.0, 1.0)),
            _ => None,
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Whether `ΔT` and `F` share a sign (scenarios I, IV) or not (II, III).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioPair {
    SameSign,
    OppositeSign,
}

impl ScenarioPair {
    pub fn label(self) -> &'static str {
        match self {
            ScenarioPair::SameSign => "same-sign",
            ScenarioPair::OppositeSign => "opposite-sign",
        }
    }
}

impl fmt::Display for ScenarioPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The fixed load used to turn an `η` value into absolute loads.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LoadAnchor {
    /// Head force held fixed, N.
    Force(f64),
    /// Temperature change held fixed, °C.
    DeltaT(f64),
}

/// A head force and a uniform temperature change, with derived quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LoadCase {
    axial_force: f64,
    delta_t: f64,
    delta_t_eq: f64,
    eta: Option<f64>,
    scenario: Scenario,
}

impl LoadCase {
    /// `axial_force` in N (tension positive), `delta_t` in °C (heating positive).
    pub fn new(axial_force: f64, delta_t: f64, system: &PileSystem) -> Result<Self> {
        for (field, v) in [("axial_force", axial_force), ("delta_t", delta_t)] {
            if !v.is_finite() {
                return Err(PileError::Validation { field, reason: "must be finite", value: v });
            }
        }
        let eta = eta_ratio(delta_t, axial_force, system).ok();
        Ok(Self {
            axial_force,
            delta_t,
            delta_t_eq: system.equivalent_thermal_load(axial_force),
            eta,
            scenario: Scenario::classify(axial_force, delta_t),
        })
    }

    /// Builds the loads of `scenario` whose ratio is `eta`, holding `anchor` fixed.
    ///
    /// The anchor's sign must agree with the scenario (e.g. a compressive force
    /// for scenario I); only its magnitude is used otherwise.
    pub fn from_eta(scenario: Scenario, eta: f64, anchor: LoadAnchor, system: &PileSystem) -> Result<Self> {
        let (f_sign, t_sign) = scenario.signs().ok_or_else(|| {
            PileError::Argument(format!("scenario {scenario} has no eta parameterization"))
        })?;
        if !(eta.is_finite() && eta > 0.0) {
            return Err(PileError::Argument(format!("eta must be positive and finite, got {eta}")));
        }
        let (force, delta_t) = match anchor {
            LoadAnchor::Force(f) => {
                if f == 0.0 || !f.is_finite() || f.signum() != f_sign {
                    return Err(PileError::Argument(format!(
                        "anchor force {f} N does not match scenario {scenario}"
                    )));
                }
                (f, t_sign * eta * system.equivalent_thermal_load(f))
            }
            LoadAnchor::DeltaT(t) => {
                if t == 0.0 || !t.is_finite() || t.signum() != t_sign {
                    return Err(PileError::Argument(format!(
                        "anchor temperature change {t} degC does not match scenario {scenario}"
                    )));
                }
                (f_sign * system.equivalent_force(t) / eta, t)
            }
        };
        Self::new(force, delta_t, system)
    }

    /// The scenario of `pair` consistent with the sign of `anchor`.
    pub fn scenario_for(pair: ScenarioPair, anchor: LoadAnchor) -> Scenario {
        match (pair, anchor) {
            (ScenarioPair::SameSign, LoadAnchor::Force(f)) if f > 0.0 => Scenario::IV,
            (ScenarioPair::SameSign, LoadAnchor::DeltaT(t)) if t > 0.0 => Scenario::IV,
            (ScenarioPair::SameSign, _) => Scenario::I,
            (ScenarioPair::OppositeSign, LoadAnchor::Force(f)) if f > 0.0 => Scenario::III,
            (ScenarioPair::OppositeSign, LoadAnchor::DeltaT(t)) if t < 0.0 => Scenario::III,
            (ScenarioPair::OppositeSign, _) => Scenario::II,
        }
    }

    /// A copy with the temperature change removed.
    pub fn mechanical_part(&self, system: &PileSystem) -> Self {
        Self::new(self.axial_force, 0.0, system).expect("finite inputs")
    }

    /// A copy with the head force removed.
    pub fn thermal_part(&self, system: &PileSystem) -> Self {
        Self::new(0.0, self.delta_t, system).expect("finite inputs")
    }

    pub fn axial_force(&self) -> f64 {
        self.axial_force
    }

    pub fn delta_t(&self) -> f64 {
        self.delta_t
    }

    /// `|ΔT_eq|` for this case's head force, °C.
    pub fn delta_t_eq(&self) -> f64 {
        self.delta_t_eq
    }

    /// `None` for thermal-only, mechanical-only and null loads.
    pub fn eta(&self) -> Option<f64> {
        self.eta
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Homogeneous layer and pile used throughout the tests.
    pub fn table1_with_tip(k_b: f64) -> PileSystem {
        PileSystem::new(
            PileGeometry::new(26.0, 1.0).unwrap(),
            PileMaterial::new(29.2e9, 1e-5).unwrap(),
            SoilSprings::new(16.7e6, k_b).unwrap(),
        )
        .unwrap()
    }

    pub fn table1() -> PileSystem {
        table1_with_tip(0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::table1;
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn table1_psi() {
        let sys = table1();
        // sqrt(4 * 16.7e6 / 29.2e9), evaluated independently
        assert_relative_eq!(sys.psi(), 0.047_829_606_237_943_38, max_relative = 1e-12);
        assert_relative_eq!(sys.psi_l(), 1.243_569_762_186_528, max_relative = 1e-12);
        assert!((sys.psi() - 0.047830).abs() < 5e-7);
    }

    #[test]
    fn unit_diameter_perimeter_over_area_is_four() {
        let g = PileGeometry::new(10.0, 1.0).unwrap();
        assert_relative_eq!(g.perimeter() / g.area(), 4.0, max_relative = 1e-15);
        assert_relative_eq!(g.perimeter(), PI * 1.0, max_relative = 1e-12);
    }

    #[test]
    fn psi_doubles_when_shaft_stiffness_quadruples() {
        let a = table1();
        let b = PileSystem::new(
            *a.geometry(),
            *a.material(),
            SoilSprings::new(4.0 * 16.7e6, 0.0).unwrap(),
        )
        .unwrap();
        assert_relative_eq!(b.psi(), 2.0 * a.psi(), max_relative = 1e-14);
    }

    #[test]
    fn validation_names_the_field() {
        let err = PileGeometry::new(-1.0, 1.0).unwrap_err();
        assert!(matches!(err, PileError::Validation { field: "length", .. }));
        let err = PileGeometry::new(1.0, 0.0).unwrap_err();
        assert!(err.to_string().contains("diameter"));
        assert!(PileMaterial::new(0.0, 1e-5).is_err());
        assert!(PileMaterial::new(1e9, -1e-5).is_err());
        assert!(SoilSprings::new(0.0, 0.0).is_err());
        let err = SoilSprings::new(1e6, -1.0).unwrap_err();
        assert!(matches!(err, PileError::Validation { field: "tip_stiffness", .. }));
        assert!(PileGeometry::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn overflowing_psi_l_is_rejected() {
        let r = PileSystem::new(
            PileGeometry::new(1e300, 1.0).unwrap(),
            PileMaterial::new(1.0, 1e-5).unwrap(),
            SoilSprings::new(1e300, 0.0).unwrap(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn equivalent_thermal_load_values() {
        let sys = table1();
        assert!((sys.equivalent_thermal_load(1e6) - 4.36).abs() < 0.005);
        assert!((sys.equivalent_thermal_load(-0.5e6) - 2.18).abs() < 0.005);
        assert_eq!(sys.equivalent_thermal_load(0.0), 0.0);
    }

    #[test]
    fn eta_values() {
        let sys = table1();
        let e1 = eta_ratio(10.0, -1e6, &sys).unwrap();
        let e2 = eta_ratio(-10.0, -0.5e6, &sys).unwrap();
        assert!((e1 / 2.29 - 1.0).abs() < 5e-3, "{e1}");
        assert!((e2 / 4.58 - 1.0).abs() < 5e-3, "{e2}");
        let teq = sys.equivalent_thermal_load(3e5);
        assert_relative_eq!(eta_ratio(teq, 3e5, &sys).unwrap(), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn eta_undefined_cases() {
        let sys = table1();
        assert_eq!(eta_ratio(10.0, 0.0, &sys), Err(PileError::EtaUndefined("thermal-only case")));
        assert_eq!(eta_ratio(0.0, 1e6, &sys), Err(PileError::EtaUndefined("mechanical-only case")));
        let lc = LoadCase::new(0.0, 10.0, &sys).unwrap();
        assert_eq!(lc.eta(), None);
        assert_eq!(lc.scenario(), Scenario::ThermalOnly);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(Scenario::classify(-1e6, -10.0), Scenario::I);
        assert_eq!(Scenario::classify(-1e6, 10.0), Scenario::II);
        assert_eq!(Scenario::classify(1e6, -10.0), Scenario::III);
        assert_eq!(Scenario::classify(1e6, 10.0), Scenario::IV);
        assert_eq!(Scenario::classify(0.0, 10.0), Scenario::ThermalOnly);
        assert_eq!(Scenario::classify(5.0, 0.0), Scenario::MechanicalOnly);
        assert_eq!(Scenario::classify(0.0, 0.0), Scenario::NullLoad);
        assert_eq!(Scenario::classify(-0.0, 0.0), Scenario::NullLoad);
    }

    #[test]
    fn from_eta_round_trips() {
        let sys = table1();
        let lc = LoadCase::from_eta(Scenario::I, 4.58, LoadAnchor::Force(-0.5e6), &sys).unwrap();
        assert_eq!(lc.scenario(), Scenario::I);
        assert_relative_eq!(lc.eta().unwrap(), 4.58, max_relative = 1e-14);
        let lc = LoadCase::from_eta(Scenario::II, 2.0, LoadAnchor::DeltaT(10.0), &sys).unwrap();
        assert_eq!(lc.scenario(), Scenario::II);
        assert!(lc.axial_force() < 0.0);
        assert_relative_eq!(lc.eta().unwrap(), 2.0, max_relative = 1e-14);
        assert!(LoadCase::from_eta(Scenario::I, 2.0, LoadAnchor::Force(1e6), &sys).is_err());
        assert!(LoadCase::from_eta(Scenario::ThermalOnly, 2.0, LoadAnchor::Force(1e6), &sys).is_err());
        assert!(LoadCase::from_eta(Scenario::IV, -1.0, LoadAnchor::Force(1e6), &sys).is_err());
    }

    #[test]
    fn scenario_for_anchor() {
        use LoadAnchor::*;
        use ScenarioPair::*;
        assert_eq!(LoadCase::scenario_for(SameSign, Force(-1.0)), Scenario::I);
        assert_eq!(LoadCase::scenario_for(SameSign, Force(1.0)), Scenario::IV);
        assert_eq!(LoadCase::scenario_for(OppositeSign, Force(-1.0)), Scenario::II);
        assert_eq!(LoadCase::scenario_for(OppositeSign, DeltaT(-1.0)), Scenario::III);
        assert_eq!(LoadCase::scenario_for(SameSign, DeltaT(-1.0)), Scenario::I);
    }

    #[test]
    fn scenario_parse() {
        assert_eq!(Scenario::parse("iii"), Some(Scenario::III));
        assert_eq!(Scenario::parse(" IV "), Some(Scenario::IV));
        assert_eq!(Scenario::parse("thermal_only"), Some(Scenario::ThermalOnly));
        assert_eq!(Scenario::parse("V"), None);
    }

    proptest! {
        #[test]
        fn psi_restates_shaft_equilibrium(
            l in 1.0f64..200.0,
            d in 0.1f64..5.0,
            e in 1e9f64..1e11,
            ks in 1e5f64..1e9,
        ) {
            let sys = PileSystem::new(
                PileGeometry::new(l, d).unwrap(),
                PileMaterial::new(e, 1e-5).unwrap(),
                SoilSprings::new(ks, 0.0).unwrap(),
            ).unwrap();
            let lhs = sys.psi() * sys.psi() * sys.axial_rigidity();
            let rhs = sys.geometry().perimeter() * ks;
            prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs);
            let g = sys.geometry();
            prop_assert!((g.area() - PI * d * d / 4.0).abs() <= 1e-12 * g.area());
        }

        #[test]
        fn classification_is_exhaustive_and_exclusive(fs in -1i32..=1, ts in -1i32..=1, fm in 1e-3f64..1e7, tm in 1e-3f64..100.0) {
            let f = fs as f64 * fm;
            let t = ts as f64 * tm;
            let s = Scenario::classify(f, t);
            let matches = [
                f < 0.0 && t < 0.0,
                f < 0.0 && t > 0.0,
                f > 0.0 && t < 0.0,
                f > 0.0 && t > 0.0,
                f == 0.0 && t != 0.0,
                f != 0.0 && t == 0.0,
                f == 0.0 && t == 0.0,
            ];
            prop_assert_eq!(matches.iter().filter(|m| **m).count(), 1);
            let idx = matches.iter().position(|m| *m).unwrap();
            let expected = [Scenario::I, Scenario::II, Scenario::III, Scenario::IV,
                Scenario::ThermalOnly, Scenario::MechanicalOnly, Scenario::NullLoad][idx];
            prop_assert_eq!(s, expected);
            if let Some(pair) = s.pair() {
                let same = (f > 0.0) == (t > 0.0);
                prop_assert_eq!(pair == ScenarioPair::SameSign, same);
            }
        }

        #[test]
        fn eta_is_scale_invariant_and_positive(t in -50.0f64..50.0, f in -5e6f64..5e6, c in 1e-3f64..1e3) {
            prop_assume!(t.abs() > 1e-6 && f.abs() > 1e-3);
            let sys = table1();
            let a = eta_ratio(t, f, &sys).unwrap();
            let b = eta_ratio(c * t, c * f, &sys).unwrap();
            prop_assert!(a > 0.0);
            prop_assert!((a - b).abs() <= 1e-12 * a);
        }
    }
}
