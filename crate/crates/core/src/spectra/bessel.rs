//! Bessel functions of the first kind at integer order, and their zeros.
//!
//! Three evaluation regimes: the ascending power series for small
//! arguments, the large-argument Hankel asymptotic expansion for low
//! orders, and Miller's downward three-term recurrence (normalized by
//! `J_0 + 2 J_2 + 2 J_4 + ... = 1`) everywhere else. Zeros are isolated
//! by a sign-change scan (zero spacing exceeds the scan step for every
//! order) and resolved by bisection.

use std::f64::consts::PI;

/// Crossover below which the ascending series is used for every order.
const SERIES_MAX_X: f64 = 10.0;

fn series(m: u32, x: f64) -> f64 {
    // t_0 = (x/2)^m / m!, computed incrementally to dodge overflow.
    let half = x / 2.0;
    let mut term = 1.0;
    for i in 1..=m as u64 {
        term *= half / i as f64;
    }
    let mut sum = term;
    let quarter_sq = half * half;
    let mut l = 0u64;
    while term.abs() > 1e-18 * sum.abs().max(1e-300) && l < 400 {
        l += 1;
        term *= -quarter_sq / (l as f64 * (m as u64 + l) as f64);
        sum += term;
    }
    sum
}

fn hankel(m: u32, x: f64) -> f64 {
    let mu = 4.0 * (m as f64) * (m as f64);
    let omega = x - m as f64 * PI / 2.0 - PI / 4.0;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut u = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..40u32 {
        let odd = (2 * k - 1) as f64;
        u *= (mu - odd * odd) / (8.0 * k as f64 * x);
        if u.abs() >= prev {
            break;
        }
        prev = u.abs();
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * u;
        } else {
            q += sign * u;
        }
        if u.abs() < 1e-18 {
            break;
        }
    }
    (2.0 / (PI * x)).sqrt() * (omega.cos() * p - omega.sin() * q)
}

fn miller(m: u32, x: f64) -> f64 {
    let base = (m as f64).max(x).ceil() as u32;
    let start = (base + 62) & !1; // even
    let mut jp = 0.0f64; // J_{l+1}
    let mut jc = 1e-300f64; // J_l (arbitrary seed)
    let mut norm = 0.0f64;
    let mut result = 0.0f64;
    let mut captured = false;
    for l in (1..=start).rev() {
        let jm = 2.0 * l as f64 / x * jc - jp;
        jp = jc;
        jc = jm;
        let idx = l - 1;
        if idx == m {
            result = jc;
            captured = true;
        }
        if idx % 2 == 0 && idx > 0 {
            norm += 2.0 * jc;
        }
        if jc.abs() > 1e250 {
            jp /= 1e250;
            jc /= 1e250;
            norm /= 1e250;
            result /= 1e250;
        }
    }
    norm += jc; // J_0 term
    debug_assert!(captured || m > start);
    if !captured {
        return 0.0;
    }
    result / norm
}

/// `J_m(x)` for integer order `m >= 0` and `x >= 0`.
pub fn bessel_j(m: u32, x: f64) -> f64 {
    assert!(x >= 0.0, "argument must be nonnegative");
    if x == 0.0 {
        return if m == 0 { 1.0 } else { 0.0 };
    }
    if x <= SERIES_MAX_X {
        series(m, x)
    } else if x >= 25.0 && x >= 2.0 * (m as f64) * (m as f64) {
        hankel(m, x)
    } else {
        miller(m, x)
    }
}

/// Residual of the three-term recurrence
/// `J_{m-1}(x) + J_{m+1}(x) - (2m/x) J_m(x)`; a consistency check across
/// the evaluation regimes.
pub fn recurrence_residual(m: u32, x: f64) -> f64 {
    assert!(m >= 1 && x > 0.0);
    bessel_j(m - 1, x) + bessel_j(m + 1, x) - 2.0 * m as f64 / x * bessel_j(m, x)
}

/// All positive zeros of `J_m` up to `x_max`, each resolved by bisection
/// to ~1e-14 relative.
pub fn bessel_zeros_upto(m: u32, x_max: f64) -> Vec<f64> {
    let mut zeros = Vec::new();
    // J_m is positive on (0, j_{m,1}) and j_{m,1} > m; consecutive zeros
    // are at least ~3.1 apart, so a 0.5 scan step cannot skip a pair.
    let mut x0 = if m == 0 { 0.5 } else { m as f64 };
    let mut f0 = bessel_j(m, x0);
    let step = 0.5;
    while x0 < x_max {
        let x1 = x0 + step;
        let f1 = bessel_j(m, x1);
        if f0 != 0.0 && f1 != 0.0 && f0.signum() != f1.signum() {
            let (mut lo, mut hi, mut flo) = (x0, x1, f0);
            while hi - lo > 1e-15 * hi {
                let mid = 0.5 * (lo + hi);
                let fm = bessel_j(m, mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            let zero = 0.5 * (lo + hi);
            if zero <= x_max {
                zeros.push(zero);
            }
        }
        x0 = x1;
        f0 = f1;
    }
    zeros
}
