//! Thermo-mechanical response of single energy piles.
//!
//! The pile is a thermo-elastic bar of length `L` restrained along its shaft by a
//! continuous shear spring `k_s` and at its tip by a normal spring `k_b`. Under a
//! head force `F` and a uniform temperature change `ΔT` the axial displacement
//! satisfies `u'' = ψ² u` with `ψ² = (p/A)(k_s/E)`.
//!
//! Modules:
//!
//! - [`model`]: validated pile system, load cases, scenario classification, `ΔT_eq` and `η`.
//! - [`analytic`]: closed-form displacement, strain and stress for semi-floating and
//!   fully floating piles, and the thermal null point.
//! - [`nullpoint`]: combined null point of fully floating piles, existence thresholds,
//!   stress extrema, reports and `η` sweeps.
//! - [`fd`]: finite-difference solver of the same boundary value problem, used to
//!   cross-check the closed forms.
//!
//! ## Sign conventions
//!
//! - `x` runs upward from the pile tip (`x = 0`) to the head (`x = L`).
//! - Displacement is positive upward, stress is positive in tension.
//! - `ΔT > 0` is heating, `F > 0` is a tensile head force.
//!
//! All quantities are SI: m, Pa, N, °C.

pub mod analytic;
pub mod error;
pub mod fd;
mod hyperbolic;
pub mod model;
pub mod nullpoint;
pub mod roots;

pub use analytic::{FieldComponents, PointResponse, ResponseProfile, Variant};
pub use error::{PileError, Result};
pub use model::{
    LoadAnchor, LoadCase, PileGeometry, PileMaterial, PileSystem, Scenario, ScenarioPair,
    SoilSprings,
};
pub use nullpoint::{Existence, NullPointReport, StressPeak, SweepRecord, SweepResult};
