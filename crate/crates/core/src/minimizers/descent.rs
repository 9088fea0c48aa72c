//! Discretized projected-gradient cross-check of profile minimality.
//!
//! Heights live on a uniform radial grid with piecewise-linear
//! interpolation, so mass and energy are linear functionals of the height
//! vector. Each gradient step is followed by a projection pass:
//! pool-adjacent-violators for the nonincreasing constraint, clamping for
//! slope and cap, and an exact mass repair (scaling down, or blending
//! toward the constant-cap profile). Every iterate is feasible, so its
//! energy upper-bounds nothing and lower-bounds the continuum minimum up
//! to rounding — the witness the tests rely on.

use super::profile::RadialProfile;
use crate::{Error, Result};

/// Constrained minimization instance.
#[derive(Debug, Clone, Copy)]
pub struct DescentProblem {
    /// Height cap (`V/4pi^2`, or the corrected cap).
    pub cap: f64,
    /// Required mass `2 pi int phi r dr`.
    pub mass: f64,
    /// Slope limit `L` (`|phi'| <= L`), if any.
    pub max_slope: Option<f64>,
    /// Grid extent; must exceed the support of the candidate minimizer.
    pub radius: f64,
    /// Number of grid cells.
    pub cells: usize,
}

/// Feasible outcome with its energy.
#[derive(Debug, Clone)]
pub struct DescentOutcome {
    pub energy: f64,
    pub profile: RadialProfile,
}

struct Grid {
    delta: f64,
    /// Mass weights: `mass = sum_i w[i] phi[i]`.
    w: Vec<f64>,
    /// Energy weights: `energy = sum_i e[i] phi[i]`.
    e: Vec<f64>,
}

impl Grid {
    fn new(radius: f64, cells: usize) -> Self {
        let delta = radius / cells as f64;
        let n = cells + 1;
        let mut w = vec![0.0; n];
        let mut e = vec![0.0; n];
        let two_pi = 2.0 * std::f64::consts::PI;
        for i in 0..cells {
            let a = i as f64 * delta;
            let b = a + delta;
            // int over [a,b] of the two hat pieces against r and r^3.
            let ia1 = b * (b * b - a * a) / 2.0 - (b.powi(3) - a.powi(3)) / 3.0;
            let ib1 = (b.powi(3) - a.powi(3)) / 3.0 - a * (b * b - a * a) / 2.0;
            let ia3 = b * (b.powi(4) - a.powi(4)) / 4.0 - (b.powi(5) - a.powi(5)) / 5.0;
            let ib3 = (b.powi(5) - a.powi(5)) / 5.0 - a * (b.powi(4) - a.powi(4)) / 4.0;
            w[i] += two_pi * ia1 / delta;
            w[i + 1] += two_pi * ib1 / delta;
            e[i] += two_pi * ia3 / delta;
            e[i + 1] += two_pi * ib3 / delta;
        }
        Grid { delta, w, e }
    }

    fn mass(&self, phi: &[f64]) -> f64 {
        self.w.iter().zip(phi).map(|(w, p)| w * p).sum()
    }

    fn energy(&self, phi: &[f64]) -> f64 {
        self.e.iter().zip(phi).map(|(e, p)| e * p).sum()
    }
}

/// Weighted pool-adjacent-violators projection onto nonincreasing
/// sequences.
fn pav_nonincreasing(phi: &mut [f64], weights: &[f64]) {
    let n = phi.len();
    // Pools of (weight sum, weighted value sum, count).
    let mut pools: Vec<(f64, f64, usize)> = Vec::with_capacity(n);
    for i in 0..n {
        // Zero-weight nodes (the r = 0 hat has w > 0; guard anyway).
        let wi = weights[i].max(1e-300);
        pools.push((wi, wi * phi[i], 1));
        while pools.len() >= 2 {
            let last = pools[pools.len() - 1];
            let prev = pools[pools.len() - 2];
            if last.1 / last.0 > prev.1 / prev.0 {
                pools.pop();
                let merged = (prev.0 + last.0, prev.1 + last.1, prev.2 + last.2);
                let top = pools.len() - 1;
                pools[top] = merged;
            } else {
                break;
            }
        }
    }
    let mut idx = 0;
    for (wsum, vsum, count) in pools {
        let value = vsum / wsum;
        for _ in 0..count {
            phi[idx] = value;
            idx += 1;
        }
    }
}

fn project(phi: &mut [f64], grid: &Grid, problem: &DescentProblem) -> Result<()> {
    pav_nonincreasing(phi, &grid.w);
    if let Some(slope) = problem.max_slope {
        let step = slope * grid.delta;
        for i in 1..phi.len() {
            phi[i] = phi[i].clamp(phi[i - 1] - step, phi[i - 1]);
        }
    }
    for v in phi.iter_mut() {
        *v = v.clamp(0.0, problem.cap);
    }
    let m = grid.mass(phi);
    if m >= problem.mass {
        if m > 0.0 {
            let scale = problem.mass / m;
            for v in phi.iter_mut() {
                *v *= scale;
            }
        }
    } else {
        // Blend toward the constant-cap profile; keeps every constraint
        // and makes the mass exact.
        let cap_mass: f64 = grid.w.iter().sum::<f64>() * problem.cap;
        if cap_mass <= problem.mass {
            return Err(Error::InvalidInput(format!(
                "grid radius too small: max representable mass {cap_mass} < {}",
                problem.mass
            )));
        }
        let t = (problem.mass - m) / (cap_mass - m);
        for (i, v) in phi.iter_mut().enumerate() {
            let _ = i;
            *v = (1.0 - t) * *v + t * problem.cap;
        }
    }
    Ok(())
}

fn outcome(phi: &[f64], grid: &Grid, problem: &DescentProblem) -> Result<DescentOutcome> {
    let knots: Vec<(f64, f64)> = phi
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as f64 * grid.delta, v))
        .collect();
    // Tiny negative or above-cap residue from rounding: snap.
    let knots: Vec<(f64, f64)> = {
        let mut prev = f64::INFINITY;
        knots
            .into_iter()
            .map(|(r, v)| {
                let v = v.clamp(0.0, problem.cap).min(prev);
                prev = v;
                (r, v)
            })
            .collect()
    };
    let profile = RadialProfile::new(knots, problem.cap)?;
    Ok(DescentOutcome {
        energy: grid.energy(phi),
        profile,
    })
}

/// Projects an analytic profile onto the grid (sampling plus feasibility
/// repair); quantifies the grid-resolution error of the discretization.
pub fn discretize_feasible(profile: &RadialProfile, problem: &DescentProblem) -> Result<DescentOutcome> {
    let grid = Grid::new(problem.radius, problem.cells);
    let mut phi: Vec<f64> = (0..=problem.cells)
        .map(|i| profile.value_at(i as f64 * grid.delta))
        .collect();
    project(&mut phi, &grid, problem)?;
    outcome(&phi, &grid, problem)
}

/// Projected-gradient minimization of the energy over capped,
/// nonincreasing, mass-constrained (optionally slope-limited) grid
/// profiles. Returns the best feasible iterate.
pub fn minimize_energy(problem: &DescentProblem, iterations: usize) -> Result<DescentOutcome> {
    if problem.cells < 8 {
        return Err(Error::InvalidInput("need at least 8 grid cells".into()));
    }
    let grid = Grid::new(problem.radius, problem.cells);
    let mut phi = vec![problem.cap; problem.cells + 1];
    project(&mut phi, &grid, problem)?;

    let e_max = grid.e.iter().cloned().fold(0.0f64, f64::max);
    let eta0 = problem.cap / e_max;
    let decay = (1e-8f64).powf(1.0 / iterations.max(2) as f64);
    let mut eta = eta0;
    let mut best: Option<(f64, Vec<f64>)> = None;
    for _ in 0..iterations {
        for i in 0..phi.len() {
            phi[i] -= eta * grid.e[i];
        }
        project(&mut phi, &grid, problem)?;
        let energy = grid.energy(&phi);
        if best.as_ref().map_or(true, |(b, _)| energy < *b) {
            best = Some((energy, phi.clone()));
        }
        eta *= decay;
    }
    let (_, phi) = best.unwrap();
    outcome(&phi, &grid, problem)
}
