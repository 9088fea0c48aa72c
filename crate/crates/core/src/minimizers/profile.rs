use crate::{Error, Result};
use std::f64::consts::PI;

/// Piecewise-linear nonincreasing radial profile `Phi(|xi|)`.
///
/// Knots are `(r, value)` pairs with nondecreasing radii; a repeated
/// radius encodes a jump. The profile vanishes beyond the last knot.
/// Mass `2 pi int Phi r dr` and energy `2 pi int Phi r^3 dr` integrate
/// each linear piece in closed form (the integrands are polynomials of
/// degree at most four).
#[derive(Debug, Clone)]
pub struct RadialProfile {
    knots: Vec<(f64, f64)>,
    cap: f64,
}

impl RadialProfile {
    pub fn new(knots: Vec<(f64, f64)>, cap: f64) -> Result<Self> {
        if knots.is_empty() {
            return Err(Error::InvalidInput("profile needs at least one knot".into()));
        }
        if knots[0].0 != 0.0 {
            return Err(Error::InvalidInput("first knot must sit at r = 0".into()));
        }
        if !(cap > 0.0) {
            return Err(Error::InvalidInput("cap must be positive".into()));
        }
        let tol = 1e-12 * cap;
        for w in knots.windows(2) {
            if w[1].0 < w[0].0 {
                return Err(Error::InvalidInput("knot radii must be nondecreasing".into()));
            }
            if w[1].1 > w[0].1 + tol {
                return Err(Error::InvalidInput("profile must be nonincreasing".into()));
            }
        }
        for &(_, v) in &knots {
            if v < -tol || v > cap + tol {
                return Err(Error::InvalidInput(format!(
                    "profile value {v} outside [0, cap = {cap}]"
                )));
            }
        }
        Ok(RadialProfile { knots, cap })
    }

    pub fn zero() -> Self {
        RadialProfile {
            knots: vec![(0.0, 0.0)],
            cap: 1.0,
        }
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    pub fn cap(&self) -> f64 {
        self.cap
    }

    /// Radius beyond which the profile vanishes.
    pub fn support_radius(&self) -> f64 {
        self.knots.last().unwrap().0
    }

    /// Value at radius `r`; at a jump radius the right limit is returned.
    pub fn value_at(&self, r: f64) -> f64 {
        if r < 0.0 {
            return self.knots[0].1;
        }
        let idx = self.knots.partition_point(|&(kr, _)| kr <= r);
        if idx == self.knots.len() {
            let last = self.knots[idx - 1];
            return if r > last.0 { 0.0 } else { last.1 };
        }
        if idx == 0 {
            return self.knots[0].1;
        }
        let (r0, v0) = self.knots[idx - 1];
        let (r1, v1) = self.knots[idx];
        if r1 == r0 {
            return v1;
        }
        v0 + (v1 - v0) * (r - r0) / (r1 - r0)
    }

    fn integrate(&self, moment: u32) -> f64 {
        let mut acc = 0.0;
        for w in self.knots.windows(2) {
            let (r0, v0) = w[0];
            let (r1, v1) = w[1];
            if r1 <= r0 {
                continue;
            }
            // Phi(r) = c + m r on the piece.
            let m = (v1 - v0) / (r1 - r0);
            let c = v0 - m * r0;
            acc += match moment {
                1 => c * (r1.powi(2) - r0.powi(2)) / 2.0 + m * (r1.powi(3) - r0.powi(3)) / 3.0,
                3 => c * (r1.powi(4) - r0.powi(4)) / 4.0 + m * (r1.powi(5) - r0.powi(5)) / 5.0,
                _ => unreachable!(),
            };
        }
        2.0 * PI * acc
    }

    /// `2 pi int Phi(r) r dr`.
    pub fn mass(&self) -> f64 {
        self.integrate(1)
    }

    /// `2 pi int Phi(r) r^3 dr`.
    pub fn energy(&self) -> f64 {
        self.integrate(3)
    }
}
