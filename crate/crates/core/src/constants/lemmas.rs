//! Numerical property checks of the one-dimensional interpolation
//! inequalities on the interval `[0, l]` with `l = lambda^(-1/2)/2`.
//!
//! Test functions are trigonometric polynomials, so every derivative is
//! available in closed form; maxima are located on a dense grid and then
//! sharpened by bisection on the analytic derivative, and L2 norms use
//! composite Simpson quadrature. Dichotomies ("at least one of the two
//! inequalities holds") are checked with a relative slack of `1e-9` to
//! absorb the residual quadrature error.

use crate::{Error, Result};

const SLACK: f64 = 1e-9;

/// `f(t) = sum_m a_m cos(m w t) + b_m sin(m w t)`.
#[derive(Debug, Clone)]
pub struct TrigPoly {
    omega: f64,
    cos_coeffs: Vec<f64>,
    sin_coeffs: Vec<f64>,
}

impl TrigPoly {
    pub fn new(omega: f64, cos_coeffs: Vec<f64>, sin_coeffs: Vec<f64>) -> Self {
        assert!(omega > 0.0, "base frequency must be positive");
        assert_eq!(cos_coeffs.len(), sin_coeffs.len());
        TrigPoly {
            omega,
            cos_coeffs,
            sin_coeffs,
        }
    }

    pub fn constant(c: f64) -> Self {
        TrigPoly {
            omega: 1.0,
            cos_coeffs: vec![c],
            sin_coeffs: vec![0.0],
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for (m, (&a, &b)) in self.cos_coeffs.iter().zip(&self.sin_coeffs).enumerate() {
            let phase = m as f64 * self.omega * t;
            acc += a * phase.cos() + b * phase.sin();
        }
        acc
    }

    /// Term-by-term analytic derivative.
    pub fn derivative(&self) -> TrigPoly {
        let n = self.cos_coeffs.len();
        let mut cos_coeffs = vec![0.0; n];
        let mut sin_coeffs = vec![0.0; n];
        for m in 0..n {
            let w = m as f64 * self.omega;
            cos_coeffs[m] = w * self.sin_coeffs[m];
            sin_coeffs[m] = -w * self.cos_coeffs[m];
        }
        TrigPoly {
            omega: self.omega,
            cos_coeffs,
            sin_coeffs,
        }
    }

    /// Highest angular frequency present.
    pub fn max_frequency(&self) -> f64 {
        (self.cos_coeffs.len().saturating_sub(1)) as f64 * self.omega
    }

    /// `f - c`.
    pub fn shifted(&self, c: f64) -> TrigPoly {
        let mut out = self.clone();
        out.cos_coeffs[0] -= c;
        out
    }
}

fn simpson(values: &[f64], h: f64) -> f64 {
    debug_assert!(values.len() >= 3 && values.len() % 2 == 1);
    let mut acc = values[0] + values[values.len() - 1];
    for (i, v) in values.iter().enumerate().skip(1).take(values.len() - 2) {
        acc += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
    }
    acc * h / 3.0
}

/// Grid size resolving the highest frequency with ~512 points per period.
fn grid_points(max_freq: f64, l: f64) -> Result<usize> {
    let periods = max_freq * l / (2.0 * std::f64::consts::PI);
    let n = (512.0 * periods).ceil() as usize + 2048;
    let n = if n % 2 == 0 { n + 1 } else { n };
    if n > 4_000_000 {
        return Err(Error::Resolution(format!(
            "lemma suite needs {n} quadrature points; input oscillates too fast"
        )));
    }
    Ok(n)
}

fn sample(poly: &TrigPoly, l: f64, n: usize) -> Vec<f64> {
    let h = l / (n - 1) as f64;
    (0..n).map(|i| poly.eval(i as f64 * h)).collect()
}

/// Maximum of `|g|` on `[0, l]`: dense scan plus bisection on `g'` around
/// every interior candidate.
fn max_abs(g: &TrigPoly, l: f64, n: usize) -> f64 {
    let gp = g.derivative();
    let h = l / (n - 1) as f64;
    let vals = sample(g, l, n);
    let mut best = vals[0].abs().max(vals[n - 1].abs());
    for i in 1..n - 1 {
        let v = vals[i].abs();
        if v >= vals[i - 1].abs() && v >= vals[i + 1].abs() {
            best = best.max(v);
            // Interior extremum of a smooth g has g' = 0; bisect for it.
            let (mut lo, mut hi) = ((i - 1) as f64 * h, (i + 1) as f64 * h);
            let (mut slo, mut shi) = (gp.eval(lo), gp.eval(hi));
            if slo == 0.0 {
                best = best.max(g.eval(lo).abs());
                continue;
            }
            if slo.signum() == shi.signum() {
                continue;
            }
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                let smid = gp.eval(mid);
                if smid == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if smid.signum() == slo.signum() {
                    lo = mid;
                    slo = smid;
                } else {
                    hi = mid;
                    shi = smid;
                }
            }
            let _ = (slo, shi);
            best = best.max(g.eval(0.5 * (lo + hi)).abs());
        }
    }
    best
}

fn l2_norm_sq(g: &TrigPoly, l: f64, n: usize) -> f64 {
    let vals: Vec<f64> = sample(g, l, n).iter().map(|v| v * v).collect();
    simpson(&vals, l / (n - 1) as f64)
}

/// One inequality `lhs <= rhs` with slack applied.
#[derive(Debug, Clone, Copy)]
pub struct InequalityCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
}

fn check_le(lhs: f64, rhs: f64) -> InequalityCheck {
    InequalityCheck {
        lhs,
        rhs,
        ok: lhs <= rhs * (1.0 + SLACK) + 1e-300,
    }
}

/// "At least one of the two inequalities holds."
#[derive(Debug, Clone, Copy)]
pub struct DichotomyCheck {
    pub first: InequalityCheck,
    pub second: InequalityCheck,
    pub ok: bool,
}

/// Phase-family distance bound: infimum over phases vs. the stated floor.
#[derive(Debug, Clone, Copy)]
pub struct PhaseMinimization {
    /// Refined estimate of `inf over phases` of the squared distance.
    pub infimum: f64,
    /// Coarse 256x256 grid minimum (upper estimate of the infimum).
    pub grid_minimum: f64,
    pub rhs: f64,
    pub ok: bool,
}

/// All per-function checks in one record.
#[derive(Debug, Clone, Copy)]
pub struct LemmaSuiteReport {
    pub lambda: f64,
    pub p: u32,
    /// Interval length `lambda^(-1/2)/2`.
    pub interval: f64,
    /// `max|f^(p)|^2 <= 3/2 ((1/l)||f^(p)||^2 + l ||f^(p+1)||^2)`.
    pub derivative_cap: InequalityCheck,
    /// `max|f| max|f''| <= max|f'|^2/4` or `max|f'| <= 32 sqrt(lambda) max|f|`.
    pub second_derivative_dichotomy: DichotomyCheck,
    /// `max|f'| <= 4^(p+1/2) sqrt(lambda) max|f|` or
    /// `max|f'| <= (max|f^(p)|/max|f|)^(1/p) 4^(p-1/2) max|f|`.
    pub order_p_dichotomy: DichotomyCheck,
    /// Distance of `f - f(0)` to the family `e^(i(phi1 t + phi0))`.
    pub phase_distance: PhaseMinimization,
}

impl LemmaSuiteReport {
    pub fn all_ok(&self) -> bool {
        self.derivative_cap.ok
            && self.second_derivative_dichotomy.ok
            && self.order_p_dichotomy.ok
            && self.phase_distance.ok
    }
}

/// Runs every check against a single real trig polynomial on
/// `[0, lambda^(-1/2)/2]` with derivative order `p`.
pub fn one_d_lemma_suite(f: &TrigPoly, lambda: f64, p: u32) -> Result<LemmaSuiteReport> {
    if !(lambda > 0.0) {
        return Err(Error::InvalidInput("lambda must be positive".into()));
    }
    if p == 0 {
        return Err(Error::InvalidInput("derivative order p must be >= 1".into()));
    }
    let l = 0.5 / lambda.sqrt();

    // Derivative chain f, f', ..., f^(p+1).
    let mut chain = vec![f.clone()];
    for _ in 0..p + 1 {
        chain.push(chain.last().unwrap().derivative());
    }
    let n = grid_points(f.max_frequency(), l)?;
    let maxima: Vec<f64> = chain.iter().map(|g| max_abs(g, l, n)).collect();

    // max |f^(p)|^2 <= 3/2 ((1/l) ||f^(p)||^2 + l ||f^(p+1)||^2).
    let derivative_cap = check_le(
        maxima[p as usize].powi(2),
        1.5 * (l2_norm_sq(&chain[p as usize], l, n) / l
            + l * l2_norm_sq(&chain[p as usize + 1], l, n)),
    );

    // Dichotomy on [0, l] for C^2 functions.
    let first = check_le(maxima[0] * maxima[2], 0.25 * maxima[1].powi(2));
    let second = check_le(maxima[1], 32.0 * lambda.sqrt() * maxima[0]);
    let second_derivative_dichotomy = DichotomyCheck {
        first,
        second,
        ok: first.ok || second.ok,
    };

    // Order-p dichotomy.
    let first = check_le(maxima[1], 4f64.powf(p as f64 + 0.5) * lambda.sqrt() * maxima[0]);
    let second = if maxima[0] == 0.0 {
        // Identically zero function: both sides vanish.
        check_le(maxima[1], 0.0)
    } else {
        check_le(
            maxima[1],
            (maxima[p as usize] / maxima[0]).powf(1.0 / p as f64)
                * 4f64.powf(p as f64 - 0.5)
                * maxima[0],
        )
    };
    let order_p_dichotomy = DichotomyCheck {
        first,
        second,
        ok: first.ok || second.ok,
    };

    let phase_distance = phase_distance_check(f, lambda, p, l, n)?;

    Ok(LemmaSuiteReport {
        lambda,
        p,
        interval: l,
        derivative_cap,
        second_derivative_dichotomy,
        order_p_dichotomy,
        phase_distance,
    })
}

/// Checks the phase-family lower bound for `u = f - f(0)` (so `u(0) = 0`)
/// with the certified derivative cap `C(p) = max|u^(p)| lambda^(-p/2-1)`.
fn phase_distance_check(
    f: &TrigPoly,
    lambda: f64,
    p: u32,
    l: f64,
    n: usize,
) -> Result<PhaseMinimization> {
    let u = f.shifted(f.eval(0.0));
    let mut du = u.clone();
    for _ in 0..p {
        du = du.derivative();
    }
    let max_dp = max_abs(&du, l, n);
    let cp = max_dp / lambda.powf(p as f64 / 2.0 + 1.0);

    let second_entry = if cp == 0.0 {
        f64::INFINITY
    } else {
        4f64.powf(-((p as f64) + 3.0) / 2.0)
            * 6f64.powf(1.0 / p as f64)
            * cp.powf(-1.0 / p as f64)
            * lambda.powf(-1.0 / p as f64)
    };
    let rhs = lambda.sqrt().recip() / 9.0 * 4f64.powf(-(p as f64) - 2.5).min(second_entry);

    // ||u - e^(i(phi1 t + phi0))||^2 = ||u||^2 + l - 2(cos(phi0) C - sin(phi0) S)
    // with C(phi1) = int u cos(phi1 t), S(phi1) = int u sin(phi1 t).
    let norm_sq = l2_norm_sq(&u, l, n);
    let h = l / (n - 1) as f64;
    let samples = sample(&u, l, n);
    let fourier = |phi1: f64| -> (f64, f64) {
        let cos_vals: Vec<f64> = (0..n)
            .map(|i| samples[i] * (phi1 * i as f64 * h).cos())
            .collect();
        let sin_vals: Vec<f64> = (0..n)
            .map(|i| samples[i] * (phi1 * i as f64 * h).sin())
            .collect();
        (simpson(&cos_vals, h), simpson(&sin_vals, h))
    };

    let width = 4.0 * u.max_frequency() + 16.0 / l;

    // Explicit 256x256 phase grid.
    let mut grid_minimum = f64::INFINITY;
    let mut best_phi1 = 0.0;
    for i in 0..256 {
        let phi1 = -width + 2.0 * width * i as f64 / 255.0;
        let (c, s) = fourier(phi1);
        for j in 0..256 {
            let phi0 = 2.0 * std::f64::consts::PI * j as f64 / 256.0;
            let dist = norm_sq + l - 2.0 * (phi0.cos() * c - phi0.sin() * s);
            if dist < grid_minimum {
                grid_minimum = dist;
                best_phi1 = phi1;
            }
        }
    }

    // Local refinement: the phi0 dimension minimizes in closed form to
    // ||u||^2 + l - 2 sqrt(C^2+S^2); zoom the phi1 window around the best
    // grid cell.
    let mut infimum = grid_minimum;
    let mut center = best_phi1;
    let mut half = 2.0 * width / 255.0;
    for _ in 0..4 {
        let mut local_best = f64::INFINITY;
        let mut local_arg = center;
        for i in 0..=64 {
            let phi1 = center - half + 2.0 * half * i as f64 / 64.0;
            let (c, s) = fourier(phi1);
            let val = norm_sq + l - 2.0 * c.hypot(s);
            if val < local_best {
                local_best = val;
                local_arg = phi1;
            }
        }
        infimum = infimum.min(local_best);
        center = local_arg;
        half /= 16.0;
    }

    Ok(PhaseMinimization {
        infimum,
        grid_minimum,
        rhs,
        ok: infimum >= rhs * (1.0 - SLACK),
    })
}
