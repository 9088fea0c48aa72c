use super::bessel::bessel_zeros_upto;
use super::{Spectrum, SpectrumSource};
use crate::{Error, Result};

/// The `kmax` smallest Dirichlet eigenvalues of the disk of radius `R`:
/// `j_{m,i}^2 / R^2` with multiplicity 2 for angular order `m >= 1`.
pub fn disk_spectrum(radius: f64, kmax: usize) -> Result<Spectrum> {
    if !(radius > 0.0) {
        return Err(Error::InvalidInput(format!(
            "disk radius must be positive, got {radius}"
        )));
    }
    let source = SpectrumSource::ExactDisk { radius };
    if kmax == 0 {
        return Spectrum::new(Vec::new(), None, source);
    }
    // Weyl-guided initial window, enlarged until enough zeros are found.
    let mut x_max = (4.0 * (kmax as f64 + 8.0)).sqrt() + 8.0;
    loop {
        let mut values: Vec<f64> = Vec::new();
        let mut m = 0u32;
        while (m as f64) < x_max {
            let zeros = bessel_zeros_upto(m, x_max);
            if m > 0 && zeros.is_empty() {
                break;
            }
            for z in zeros {
                let lambda = z * z / (radius * radius);
                values.push(lambda);
                if m >= 1 {
                    values.push(lambda);
                }
            }
            m += 1;
        }
        if values.len() >= kmax {
            values.sort_by(f64::total_cmp);
            values.truncate(kmax);
            return Spectrum::new(values, None, source);
        }
        x_max *= 1.25;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn lowest_disk_modes() {
        let s = disk_spectrum(1.0, 6).unwrap();
        let ev = s.eigenvalues();
        // j_{0,1}^2, double j_{1,1}^2, double j_{2,1}^2, j_{0,2}^2.
        assert!((ev[0] - 2.404825557695773f64.powi(2)).abs() < 1e-9);
        assert!((ev[1] - 3.831705970207512f64.powi(2)).abs() < 1e-9);
        assert!((ev[2] - ev[1]).abs() < 1e-12, "double multiplicity");
        assert!((ev[3] - 5.135622301840683f64.powi(2)).abs() < 1e-9);
        assert!((ev[4] - ev[3]).abs() < 1e-12);
        assert!((ev[5] - 5.520078110286311f64.powi(2)).abs() < 1e-9);
    }

    #[test]
    fn radius_scaling() {
        let unit = disk_spectrum(1.0, 30).unwrap();
        let double = disk_spectrum(2.0, 30).unwrap();
        for (u, d) in unit.eigenvalues().iter().zip(double.eigenvalues()) {
            assert!((d - u / 4.0).abs() < 1e-10 * u);
        }
    }

    #[test]
    fn counting_bound_on_disk() {
        // N_lambda <= V lambda / (4 pi) = lambda/4 for the unit disk.
        let s = disk_spectrum(1.0, 300).unwrap();
        for &t in &[10.0, 50.0, 200.0, 800.0, *s.eigenvalues().last().unwrap()] {
            if t <= *s.eigenvalues().last().unwrap() {
                let n = s.counting(t) as f64;
                assert!(n <= PI * t / (4.0 * PI), "N_{t} = {n}");
            }
        }
    }
}
