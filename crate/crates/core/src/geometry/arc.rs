use super::point::Point;
use crate::{Error, Result};

/// One sample of an arclength-parametrized boundary piece.
#[derive(Debug, Clone, Copy)]
pub struct ArcSample {
    /// Arclength from the start of the piece.
    pub s: f64,
    pub point: Point,
    /// Signed curvature at `s` (positive = turning left).
    pub curvature: f64,
}

/// C²-smooth boundary piece represented by dense arclength samples.
///
/// The domain is assumed to lie on the left of the direction of travel
/// (counterclockwise boundary convention); use
/// [`SmoothArc::with_interior_right`] to flip.
#[derive(Debug, Clone)]
pub struct SmoothArc {
    samples: Vec<ArcSample>,
    interior_left: bool,
}

impl SmoothArc {
    /// Validates and wraps user-supplied samples.
    pub fn from_samples(samples: Vec<ArcSample>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidInput(
                "smooth arc needs at least 2 samples".into(),
            ));
        }
        if samples[0].s != 0.0 {
            return Err(Error::InvalidInput(format!(
                "arclength must start at 0, got {}",
                samples[0].s
            )));
        }
        for w in samples.windows(2) {
            let ds = w[1].s - w[0].s;
            if !(ds > 0.0) {
                return Err(Error::InvalidInput(
                    "arclength samples must be strictly increasing".into(),
                ));
            }
            let chord = w[0].point.distance(w[1].point);
            if chord > ds * (1.0 + 1e-9) {
                return Err(Error::InvalidInput(format!(
                    "chord {chord} exceeds arclength step {ds}"
                )));
            }
        }
        if samples.iter().any(|s| !s.curvature.is_finite()) {
            return Err(Error::InvalidInput("curvature must be finite".into()));
        }
        Ok(SmoothArc {
            samples,
            interior_left: true,
        })
    }

    /// Builds an arc from `(s, point)` pairs, estimating curvature by the
    /// three-point circumradius (Menger) formula.
    pub fn from_points_estimated(points: Vec<(f64, Point)>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidInput(
                "curvature estimation needs at least 3 points".into(),
            ));
        }
        let n = points.len();
        let mut samples = Vec::with_capacity(n);
        for i in 0..n {
            let (a, b, c) = if i == 0 {
                (points[0].1, points[1].1, points[2].1)
            } else if i == n - 1 {
                (points[n - 3].1, points[n - 2].1, points[n - 1].1)
            } else {
                (points[i - 1].1, points[i].1, points[i + 1].1)
            };
            let u = b - a;
            let v = c - b;
            let w = c - a;
            let denom = u.norm() * v.norm() * w.norm();
            let curvature = if denom == 0.0 { 0.0 } else { 2.0 * u.cross(v) / denom };
            samples.push(ArcSample {
                s: points[i].0,
                point: points[i].1,
                curvature,
            });
        }
        SmoothArc::from_samples(samples)
    }

    /// Circular arc of the given radius between two angles, traversed
    /// counterclockwise (interior = disk on the left).
    pub fn circle(radius: f64, start_angle: f64, end_angle: f64, n: usize) -> Self {
        assert!(radius > 0.0 && end_angle > start_angle && n >= 2);
        let total = radius * (end_angle - start_angle);
        let samples = (0..n)
            .map(|i| {
                let s = total * i as f64 / (n - 1) as f64;
                let theta = start_angle + s / radius;
                ArcSample {
                    s,
                    point: Point::new(radius * theta.cos(), radius * theta.sin()),
                    curvature: 1.0 / radius,
                }
            })
            .collect();
        SmoothArc {
            samples,
            interior_left: true,
        }
    }

    /// Elliptic arc `(a cos t, b sin t)` for `t` in `[t0, t1]`, resampled
    /// uniformly in arclength.
    pub fn ellipse(a: f64, b: f64, t0: f64, t1: f64, n: usize) -> Self {
        assert!(a > 0.0 && b > 0.0 && t1 > t0 && n >= 2);
        // Dense cumulative arclength table.
        let m = (64 * n).max(8192);
        let speed = |t: f64| ((a * t.sin()).powi(2) + (b * t.cos()).powi(2)).sqrt();
        let dt = (t1 - t0) / m as f64;
        let mut cum = Vec::with_capacity(m + 1);
        cum.push(0.0);
        let mut acc = 0.0;
        for i in 0..m {
            let ta = t0 + i as f64 * dt;
            // Simpson on each slice.
            acc += dt / 6.0 * (speed(ta) + 4.0 * speed(ta + dt / 2.0) + speed(ta + dt));
            cum.push(acc);
        }
        let total = acc;
        let mut samples = Vec::with_capacity(n);
        let mut hint = 0usize;
        for i in 0..n {
            let target = total * i as f64 / (n - 1) as f64;
            while hint + 1 < cum.len() && cum[hint + 1] < target {
                hint += 1;
            }
            let t = if i == 0 {
                t0
            } else if i == n - 1 {
                t1
            } else {
                let frac = (target - cum[hint]) / (cum[hint + 1] - cum[hint]);
                t0 + (hint as f64 + frac) * dt
            };
            let denom = (a * t.sin()).powi(2) + (b * t.cos()).powi(2);
            samples.push(ArcSample {
                s: target,
                point: Point::new(a * t.cos(), b * t.sin()),
                curvature: a * b / denom.powf(1.5),
            });
        }
        SmoothArc {
            samples,
            interior_left: true,
        }
    }

    /// Straight segment with zero curvature.
    pub fn line(from: Point, to: Point, n: usize) -> Self {
        assert!(n >= 2);
        let total = from.distance(to);
        assert!(total > 0.0);
        let samples = (0..n)
            .map(|i| {
                let f = i as f64 / (n - 1) as f64;
                ArcSample {
                    s: total * f,
                    point: from + (to - from) * f,
                    curvature: 0.0,
                }
            })
            .collect();
        SmoothArc {
            samples,
            interior_left: true,
        }
    }

    pub fn with_interior_right(mut self) -> Self {
        self.interior_left = false;
        self
    }

    pub fn interior_left(&self) -> bool {
        self.interior_left
    }

    pub fn samples(&self) -> &[ArcSample] {
        &self.samples
    }

    pub fn length(&self) -> f64 {
        self.samples.last().unwrap().s
    }

    /// `kappa_j = max_s |kappa(s)|` over the samples.
    pub fn max_curvature(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.curvature.abs())
            .fold(0.0, f64::max)
    }

    pub fn endpoints(&self) -> (Point, Point) {
        (
            self.samples.first().unwrap().point,
            self.samples.last().unwrap().point,
        )
    }

    fn segment_index(&self, s: f64) -> usize {
        match self
            .samples
            .binary_search_by(|probe| probe.s.partial_cmp(&s).unwrap())
        {
            Ok(i) => i.min(self.samples.len() - 2),
            Err(i) => i.saturating_sub(1).min(self.samples.len() - 2),
        }
    }

    /// Point at arclength `s` (linear interpolation between samples).
    pub fn point_at(&self, s: f64) -> Point {
        let i = self.segment_index(s);
        let (a, b) = (&self.samples[i], &self.samples[i + 1]);
        let f = ((s - a.s) / (b.s - a.s)).clamp(0.0, 1.0);
        a.point + (b.point - a.point) * f
    }

    /// Polyline covering `[s0, s1]`: interpolated endpoints plus all
    /// interior samples.
    pub fn polyline_between(&self, s0: f64, s1: f64) -> Vec<Point> {
        let mut pts = vec![self.point_at(s0)];
        for sample in &self.samples {
            if sample.s > s0 && sample.s < s1 {
                pts.push(sample.point);
            }
        }
        pts.push(self.point_at(s1));
        pts
    }
}
