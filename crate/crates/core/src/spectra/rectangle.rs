use super::{Spectrum, SpectrumSource};
use crate::{Error, Result};
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

#[derive(PartialEq)]
struct MaxF64(f64);

impl Eq for MaxF64 {}

impl Ord for MaxF64 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl PartialOrd for MaxF64 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The `kmax` smallest values of `pi^2 (m^2/a^2 + n^2/b^2)`, `m, n >= 1`,
/// by bounded enumeration with a max-heap cutoff.
pub fn rectangle_spectrum(a: f64, b: f64, kmax: usize) -> Result<Spectrum> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::InvalidInput(format!(
            "rectangle sides must be positive, got {a} x {b}"
        )));
    }
    let source = SpectrumSource::ExactRectangle { a, b };
    if kmax == 0 {
        return Spectrum::new(Vec::new(), None, source);
    }
    let (ia, ib) = (PI * PI / (a * a), PI * PI / (b * b));
    let mut heap: BinaryHeap<MaxF64> = BinaryHeap::with_capacity(kmax + 1);
    let mut m = 1u64;
    loop {
        let row_base = ia * (m * m) as f64;
        let row_min = row_base + ib;
        if heap.len() == kmax && row_min >= heap.peek().unwrap().0 {
            break;
        }
        let mut n = 1u64;
        loop {
            let value = row_base + ib * (n * n) as f64;
            if heap.len() == kmax {
                if value >= heap.peek().unwrap().0 {
                    break;
                }
                heap.push(MaxF64(value));
                heap.pop();
            } else {
                heap.push(MaxF64(value));
            }
            n += 1;
        }
        m += 1;
    }
    let mut values: Vec<f64> = heap.into_iter().map(|v| v.0).collect();
    values.sort_by(f64::total_cmp);
    Spectrum::new(values, None, source)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_lowest_modes() {
        let s = rectangle_spectrum(1.0, 1.0, 4).unwrap();
        let expect = [2.0, 5.0, 5.0, 8.0].map(|v| v * PI * PI);
        for (got, want) in s.eigenvalues().iter().zip(expect) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
        assert!((s.partial_sum(4).unwrap() - 20.0 * PI * PI).abs() < 1e-11);
    }

    #[test]
    fn scaling_law() {
        let unit = rectangle_spectrum(1.0, 1.0, 50).unwrap();
        let scaled = rectangle_spectrum(2.0, 2.0, 50).unwrap();
        for (u, s) in unit.eigenvalues().iter().zip(scaled.eigenvalues()) {
            assert!((s - u / 4.0).abs() < 1e-12 * u);
        }
    }

    #[test]
    fn sum_matches_brute_force_double_loop() {
        let s = rectangle_spectrum(1.0, 1.0, 100).unwrap();
        // Independent oracle: enumerate m, n <= 50 and sort.
        let mut all: Vec<f64> = Vec::new();
        for m in 1..=50u64 {
            for n in 1..=50u64 {
                all.push(PI * PI * (m * m + n * n) as f64);
            }
        }
        all.sort_by(f64::total_cmp);
        let brute: f64 = all[..100].iter().sum();
        assert!((s.partial_sum(100).unwrap() - brute).abs() < 1e-9);
    }

    #[test]
    fn empty_and_invalid() {
        assert_eq!(rectangle_spectrum(1.0, 1.0, 0).unwrap().len(), 0);
        assert!(rectangle_spectrum(0.0, 1.0, 5).is_err());
    }
}
