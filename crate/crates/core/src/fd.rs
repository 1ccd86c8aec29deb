//! Finite-difference solution of the pile boundary value problem.
//!
//! Solves `u'' = (p·k_s/(A·E))·u` on `[0, L]` with the Robin conditions
//!
//! ```text
//! E·(u'(0) − αΔT) = k_b·u(0)        (tip spring)
//! E·(u'(L) − αΔT) = F/A             (head traction)
//! ```
//!
//! on a uniform grid. Interior nodes use the three-point stencil and both
//! boundary conditions are imposed through ghost nodes, so the scheme is second
//! order everywhere. The solver reads only the physical inputs of the pile; it
//! never evaluates a closed-form solution.

use crate::analytic::{fields, uniform_grid, Variant};
use crate::error::{PileError, Result};
use crate::model::{LoadCase, PileSystem};

#[derive(Debug, Clone, PartialEq)]
pub struct FdSolution {
    pub x: Vec<f64>,
    pub displacement: Vec<f64>,
    /// Second-order differences of the displacement (one-sided at the ends).
    pub strain: Vec<f64>,
    /// `E·(strain − αΔT)`.
    pub stress: Vec<f64>,
    pub node_count: usize,
    /// Largest interior stencil residual divided by `max|u|`.
    pub residual_norm: f64,
}

/// Solves a tridiagonal system by forward elimination and back substitution.
///
/// `lower[i]` multiplies `x[i]` in row `i + 1`; `upper[i]` multiplies `x[i + 1]`
/// in row `i`. No pivoting: intended for diagonally dominant systems.
pub fn solve_tridiagonal(lower: &[f64], diag: &[f64], upper: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 || lower.len() + 1 != n || upper.len() + 1 != n || rhs.len() != n {
        return Err(PileError::Argument("inconsistent tridiagonal dimensions".into()));
    }
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut pivot = diag[0];
    for i in 0..n {
        if i > 0 {
            pivot = diag[i] - lower[i - 1] * c[i - 1];
        }
        if pivot == 0.0 || !pivot.is_finite() {
            return Err(PileError::Numeric(format!("singular tridiagonal system at row {i}")));
        }
        if i + 1 < n {
            c[i] = upper[i] / pivot;
        }
        d[i] = if i == 0 { rhs[0] / pivot } else { (rhs[i] - lower[i - 1] * d[i - 1]) / pivot };
    }
    let mut x = d;
    for i in (0..n - 1).rev() {
        x[i] -= c[i] * x[i + 1];
    }
    Ok(x)
}

/// Solves the pile problem on `n_nodes` uniformly spaced nodes.
pub fn solve_bvp(system: &PileSystem, load: &LoadCase, n_nodes: usize) -> Result<FdSolution> {
    if n_nodes < 3 {
        return Err(PileError::Argument(format!("n_nodes must be at least 3, got {n_nodes}")));
    }
    let length = system.length();
    let geometry = system.geometry();
    let e = system.elastic_modulus();
    let ae = system.axial_rigidity();
    let alpha_dt = system.thermal_expansion() * load.delta_t();
    let k_b = system.springs().tip_stiffness();
    let shear = geometry.perimeter() * system.springs().shaft_stiffness() / ae;

    let n = n_nodes;
    let h = length / (n - 1) as f64;
    let c = h * h * shear;

    let mut lower = vec![1.0; n - 1];
    let mut diag = vec![-(2.0 + c); n];
    let mut upper = vec![1.0; n - 1];
    let mut rhs = vec![0.0; n];

    // Tip ghost node: u_{-1} = u_1 − 2h(αΔT + k_b·u_0/E).
    upper[0] = 2.0;
    diag[0] = -(2.0 + c + 2.0 * h * k_b / e);
    rhs[0] = 2.0 * h * alpha_dt;
    // Head ghost node: u_n = u_{n−2} + 2h(αΔT + F/(AE)).
    lower[n - 2] = 2.0;
    rhs[n - 1] = -2.0 * h * (alpha_dt + load.axial_force() / ae);

    let u = solve_tridiagonal(&lower, &diag, &upper, &rhs)?;

    let u_max = u.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let residual = (1..n - 1)
        .map(|i| (u[i - 1] - 2.0 * u[i] + u[i + 1] - c * u[i]).abs())
        .fold(0.0f64, f64::max);
    let residual_norm = if u_max > 0.0 { residual / u_max } else { residual };

    let strain = differentiate(&u, h);
    let stress = strain.iter().map(|eps| e * (eps - alpha_dt)).collect();

    Ok(FdSolution {
        x: uniform_grid(length, n),
        displacement: u,
        strain,
        stress,
        node_count: n,
        residual_norm,
    })
}

/// Second-order first derivative on a uniform grid, `values.len() ≥ 3`.
fn differentiate(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    let mut d = vec![0.0; n];
    d[0] = (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h);
    for i in 1..n - 1 {
        d[i] = (values[i + 1] - values[i - 1]) / (2.0 * h);
    }
    d[n - 1] = (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h);
    d
}

/// Interpolated zero of the displacement, `None` if it keeps one sign.
///
/// A node where the displacement is exactly zero counts as a zero. More than one
/// zero is reported as [`PileError::NonMonotone`].
pub fn find_displacement_zero(solution: &FdSolution) -> Result<Option<f64>> {
    let u = &solution.displacement;
    let x = &solution.x;
    if u.iter().all(|v| *v == 0.0) {
        return Ok(None);
    }
    let mut zeros = Vec::new();
    for i in 0..u.len() {
        if u[i] == 0.0 {
            zeros.push(x[i]);
        } else if i + 1 < u.len() && u[i + 1] != 0.0 && u[i].signum() != u[i + 1].signum() {
            zeros.push(x[i] + (x[i + 1] - x[i]) * u[i] / (u[i] - u[i + 1]));
        }
    }
    match zeros.len() {
        0 => Ok(None),
        1 => Ok(Some(zeros[0])),
        k => Err(PileError::NonMonotone(k)),
    }
}

/// Closed form matching the tip condition of `system`.
pub fn reference_variant(system: &PileSystem) -> Variant {
    if system.springs().tip_stiffness() == 0.0 {
        Variant::FullyFloating
    } else {
        Variant::SemiFloating
    }
}

/// Largest absolute difference between `displacement` sampled at `x` and the
/// closed-form displacement of `variant`.
pub fn displacement_error(
    x: &[f64],
    displacement: &[f64],
    system: &PileSystem,
    load: &LoadCase,
    variant: Variant,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for (xi, ui) in x.iter().zip(displacement) {
        let exact = fields(variant, *xi, system, load)?.displacement.combined;
        worst = worst.max((ui - exact).abs());
    }
    Ok(worst)
}

/// Largest relative errors of an FD solution against a closed form, each field
/// normalized by the largest magnitude of its closed-form counterpart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldErrors {
    pub displacement: f64,
    pub strain: f64,
    pub stress: f64,
}

impl FieldErrors {
    pub fn max(&self) -> f64 {
        self.displacement.max(self.strain).max(self.stress)
    }
}

pub fn field_errors(
    solution: &FdSolution,
    system: &PileSystem,
    load: &LoadCase,
    variant: Variant,
) -> Result<FieldErrors> {
    let mut diff = [0.0f64; 3];
    let mut scale = [0.0f64; 3];
    for i in 0..solution.node_count {
        let r = fields(variant, solution.x[i], system, load)?;
        let exact = [r.displacement.combined, r.strain.combined, r.stress.combined];
        let approx = [solution.displacement[i], solution.strain[i], solution.stress[i]];
        for k in 0..3 {
            diff[k] = diff[k].max((approx[k] - exact[k]).abs());
            scale[k] = scale[k].max(exact[k].abs());
        }
    }
    let rel = |k: usize| if scale[k] > 0.0 { diff[k] / scale[k] } else { diff[k] };
    Ok(FieldErrors { displacement: rel(0), strain: rel(1), stress: rel(2) })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    /// `(node count, max |u_fd − u_exact|)`.
    pub rows: Vec<(usize, f64)>,
    /// `log2(e(n_k) / e(n_{k+1}))` for consecutive rows.
    pub orders: Vec<f64>,
}

impl ConvergenceStudy {
    /// Error reduction factors between consecutive rows.
    pub fn ratios(&self) -> Vec<f64> {
        self.rows.windows(2).map(|w| w[0].1 / w[1].1).collect()
    }
}

/// Displacement error of [`solve_bvp`] for each node count in `n_list`.
pub fn convergence_study(system: &PileSystem, load: &LoadCase, n_list: &[usize]) -> Result<ConvergenceStudy> {
    if n_list.iter().any(|n| *n < 3) || n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(PileError::Argument(
            "node counts must be at least 3 and strictly increasing".into(),
        ));
    }
    let variant = reference_variant(system);
    let rows = n_list
        .iter()
        .map(|&n| {
            let sol = solve_bvp(system, load, n)?;
            Ok((n, displacement_error(&sol.x, &sol.displacement, system, load, variant)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let orders = rows.windows(2).map(|w| (w[0].1 / w[1].1).log2()).collect();
    Ok(ConvergenceStudy { rows, orders })
}
