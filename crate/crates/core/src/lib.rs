//! Lower bounds for sums of Dirichlet-Laplacian eigenvalues on planar domains.
//!
//! The crate evaluates the classical Berezin-Li-Yau and Melas bounds together
//! with boundary-corrected variants for polygons and for domains with
//! C²-smooth boundary pieces, plus everything needed to check the
//! inequalities numerically at desk scale:
//!
//! * [`geometry`] — polygon metrics, middle-third gap distances, moments of
//!   inertia, smooth-arc partitions, boundary tilings and extended-volume
//!   certificates;
//! * [`constants`] — the explicit constant table, the `A_n(p)` integer
//!   recurrence with its growth check, and numerical property tests of the
//!   one-dimensional interpolation lemmas;
//! * [`minimizers`] — radial rearrangement profiles with exact mass/energy
//!   functionals and a discretized projected-gradient cross-check;
//! * [`spectra`] — exact rectangle and disk spectra and a finite-difference
//!   eigensolver serving as an independent oracle;
//! * [`bounds`] — the bound evaluations themselves and per-`k` reports.

pub mod bounds;
pub mod constants;
pub mod domain;
pub mod geometry;
pub mod minimizers;
pub mod spectra;

mod error;

pub use error::{Error, Result};
