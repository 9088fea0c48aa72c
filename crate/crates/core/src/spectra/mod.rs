//! Independent eigenvalue oracles: exact Dirichlet spectra for rectangles
//! and disks, and a finite-difference solver for general polygons.

mod bessel;
mod disk;
mod fd;
mod rectangle;

pub use bessel::{bessel_j, bessel_zeros_upto, recurrence_residual};
pub use disk::disk_spectrum;
pub use fd::fd_spectrum;
pub use rectangle::rectangle_spectrum;

use crate::{Error, Result};

/// Where a spectrum came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectrumSource {
    ExactRectangle { a: f64, b: f64 },
    ExactDisk { radius: f64 },
    FiniteDifference { h: f64, extrapolated: bool },
}

/// Sorted list of Dirichlet eigenvalues with optional per-value error
/// estimates.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    error_bars: Option<Vec<f64>>,
    source: SpectrumSource,
}

impl Spectrum {
    pub fn new(
        eigenvalues: Vec<f64>,
        error_bars: Option<Vec<f64>>,
        source: SpectrumSource,
    ) -> Result<Self> {
        for w in eigenvalues.windows(2) {
            if w[1] < w[0] {
                return Err(Error::InvalidInput("eigenvalues must be sorted".into()));
            }
        }
        if eigenvalues.iter().any(|&v| !(v > 0.0)) {
            return Err(Error::InvalidInput("eigenvalues must be positive".into()));
        }
        if let Some(bars) = &error_bars {
            if bars.len() != eigenvalues.len() {
                return Err(Error::InvalidInput(
                    "error bars must match eigenvalue count".into(),
                ));
            }
        }
        Ok(Spectrum {
            eigenvalues,
            error_bars,
            source,
        })
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn error_bars(&self) -> Option<&[f64]> {
        self.error_bars.as_deref()
    }

    pub fn source(&self) -> SpectrumSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Sum of the first `k` eigenvalues; `k = 0` gives `0`.
    pub fn partial_sum(&self, k: usize) -> Result<f64> {
        if k > self.eigenvalues.len() {
            return Err(Error::OutOfRange(format!(
                "partial sum of {k} terms from a spectrum of {}",
                self.eigenvalues.len()
            )));
        }
        Ok(self.eigenvalues[..k].iter().sum())
    }

    /// Counting function `N_t`: eigenvalues less than or equal to `t`.
    pub fn counting(&self, t: f64) -> usize {
        self.eigenvalues.partition_point(|&v| v <= t)
    }
}
