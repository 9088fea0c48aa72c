use super::point::{orient, point_segment_distance, segment_segment_distance, segments_intersect, Point};
use crate::{Error, Result};
use std::f64::consts::PI;

/// Simple counterclockwise polygon with cached metric data.
#[derive(Debug, Clone)]
pub struct Polygon {
    vertices: Vec<Point>,
    area: f64,
    side_lengths: Vec<f64>,
    perimeter: f64,
    centroid: Point,
}

/// Bundle returned by [`Polygon::metrics`].
#[derive(Debug, Clone)]
pub struct PolygonMetrics {
    pub area: f64,
    pub side_lengths: Vec<f64>,
    pub perimeter: f64,
    pub centroid: Point,
}

/// Second moment `min_a int |x-a|^2 dx` together with its minimizer.
#[derive(Debug, Clone, Copy)]
pub struct MomentOfInertia {
    pub value: f64,
    /// The minimizing center; always the area centroid.
    pub center: Point,
}

impl Polygon {
    /// Builds a polygon, validating simplicity, counterclockwise
    /// orientation and positive area.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidInput(format!(
                "polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let n = vertices.len();
        for i in 0..n {
            let next = vertices[(i + 1) % n];
            if vertices[i] == next {
                return Err(Error::InvalidInput(format!("repeated vertex at index {i}")));
            }
        }
        let twice_area: f64 = (0..n)
            .map(|i| vertices[i].cross(vertices[(i + 1) % n]))
            .sum();
        if twice_area == 0.0 {
            return Err(Error::InvalidInput("degenerate polygon: zero area".into()));
        }
        if twice_area < 0.0 {
            return Err(Error::InvalidInput(
                "polygon must be counterclockwise".into(),
            ));
        }
        // Simplicity: no two non-adjacent sides intersect, and adjacent
        // sides only share their common vertex.
        for i in 0..n {
            let (a0, a1) = (vertices[i], vertices[(i + 1) % n]);
            for j in i + 1..n {
                let (b0, b1) = (vertices[j], vertices[(j + 1) % n]);
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // Shared vertex allowed; any other contact means a
                    // collinear backtrack.
                    let shared = if j == i + 1 { a1 } else { a0 };
                    let (c, d) = if j == i + 1 { (a0, b1) } else { (b0, a1) };
                    if orient(c, shared, d) == 0.0 && (c - shared).dot(d - shared) > 0.0 {
                        return Err(Error::InvalidInput(format!(
                            "sides {i} and {j} overlap (collinear backtrack)"
                        )));
                    }
                } else if segments_intersect(a0, a1, b0, b1) {
                    return Err(Error::InvalidInput(format!(
                        "polygon is not simple: sides {i} and {j} intersect"
                    )));
                }
            }
        }

        let area = twice_area / 2.0;
        let side_lengths: Vec<f64> = (0..n)
            .map(|i| vertices[i].distance(vertices[(i + 1) % n]))
            .collect();
        let perimeter = side_lengths.iter().sum();
        let mut cx = 0.0;
        let mut cy = 0.0;
        for i in 0..n {
            let (p, q) = (vertices[i], vertices[(i + 1) % n]);
            let w = p.cross(q);
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
        }
        let centroid = Point::new(cx / (6.0 * area), cy / (6.0 * area));

        Ok(Polygon {
            vertices,
            area,
            side_lengths,
            perimeter,
            centroid,
        })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn num_sides(&self) -> usize {
        self.vertices.len()
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn side_lengths(&self) -> &[f64] {
        &self.side_lengths
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn centroid(&self) -> Point {
        self.centroid
    }

    /// Side `j` as an endpoint pair.
    pub fn side(&self, j: usize) -> Result<(Point, Point)> {
        if j >= self.vertices.len() {
            return Err(Error::OutOfRange(format!(
                "side index {j} out of range for {}-gon",
                self.vertices.len()
            )));
        }
        Ok((self.vertices[j], self.vertices[(j + 1) % self.vertices.len()]))
    }

    pub fn metrics(&self) -> PolygonMetrics {
        PolygonMetrics {
            area: self.area,
            side_lengths: self.side_lengths.clone(),
            perimeter: self.perimeter,
            centroid: self.centroid,
        }
    }

    /// Raw boundary integrals: `(int x, int y, int x^2 + y^2)` over the
    /// polygon area.
    fn raw_moments(&self) -> (f64, f64, f64) {
        let n = self.vertices.len();
        let mut mx = 0.0;
        let mut my = 0.0;
        let mut ixx = 0.0;
        let mut iyy = 0.0;
        for i in 0..n {
            let (p, q) = (self.vertices[i], self.vertices[(i + 1) % n]);
            let w = p.cross(q);
            mx += (p.x + q.x) * w;
            my += (p.y + q.y) * w;
            ixx += (p.x * p.x + p.x * q.x + q.x * q.x) * w;
            iyy += (p.y * p.y + p.y * q.y + q.y * q.y) * w;
        }
        (mx / 6.0, my / 6.0, (ixx + iyy) / 12.0)
    }

    /// `int_Omega |x - a|^2 dx` for an arbitrary center `a`.
    pub fn second_moment_about(&self, a: Point) -> f64 {
        let (mx, my, i_origin) = self.raw_moments();
        i_origin - 2.0 * (a.x * mx + a.y * my) + a.dot(a) * self.area
    }

    /// Minimal second moment `I = min_a int |x-a|^2 dx`; the minimizer of
    /// the quadratic functional is the centroid.
    pub fn moment_of_inertia(&self) -> MomentOfInertia {
        MomentOfInertia {
            value: self.second_moment_about(self.centroid),
            center: self.centroid,
        }
    }

    /// Distance from the closed middle third of side `j` to the union of
    /// all other closed sides. Returns `0.0` for degenerate touching.
    pub fn middle_third_distance(&self, j: usize) -> Result<f64> {
        let (a, b) = self.side(j)?;
        let third = (b - a) * (1.0 / 3.0);
        let (p, q) = (a + third, a + third * 2.0);
        let n = self.vertices.len();
        let mut best = f64::INFINITY;
        for i in 0..n {
            if i == j {
                continue;
            }
            let (c, d) = self.side(i)?;
            best = best.min(segment_segment_distance(p, q, c, d));
        }
        Ok(best)
    }

    /// Activation threshold `9 V / (2 pi d_j^2)` for side `j`; infinity
    /// when the gap distance degenerates to zero.
    pub fn side_threshold(&self, j: usize) -> Result<f64> {
        let d = self.middle_third_distance(j)?;
        if d == 0.0 {
            return Ok(f64::INFINITY);
        }
        Ok(9.0 * self.area / (2.0 * PI * d * d))
    }

    /// Strict interior test; points on the boundary report `false`.
    pub fn contains_strict(&self, p: Point) -> bool {
        let n = self.vertices.len();
        let scale = self.perimeter.max(1.0);
        for i in 0..n {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
            if point_segment_distance(p, a, b) <= 1e-12 * scale {
                return false;
            }
        }
        let mut inside = false;
        for i in 0..n {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
            if (a.y > p.y) != (b.y > p.y) {
                let x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
                if p.x < x_int {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }

    /// Convenience constructor for an axis-aligned rectangle `[0,a]x[0,b]`.
    pub fn rectangle(a: f64, b: f64) -> Result<Self> {
        Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(a, 0.0),
            Point::new(a, b),
            Point::new(0.0, b),
        ])
    }

    /// Regular `n`-gon scaled to the given area, centered at the origin.
    pub fn regular(n: usize, area: f64) -> Result<Self> {
        // Area of a regular n-gon with circumradius r: n r^2 sin(2 pi/n)/2.
        let r = (2.0 * area / (n as f64 * (2.0 * PI / n as f64).sin())).sqrt();
        Polygon::new(
            (0..n)
                .map(|i| {
                    let t = 2.0 * PI * i as f64 / n as f64;
                    Point::new(r * t.cos(), r * t.sin())
                })
                .collect(),
        )
    }
}
