//! Command-line front end for energy pile analysis.
//!
//! Reads a declarative run spec (see [`runspec`]) and writes CSV, JSON and SVG
//! results for closed-form profiles, null-point reports and `η` sweeps, or
//! cross-checks the closed forms against the finite-difference oracle.

pub mod commands;
pub mod error;
pub mod runspec;
pub mod svg;
pub mod units;

pub use error::CliError;
pub use runspec::RunSpec;
