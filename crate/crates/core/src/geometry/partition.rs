use super::arc::SmoothArc;
use super::point::{point_segment_distance, segment_segment_distance, Point};
use crate::constants::ConstantsTable;
use crate::{Error, Result};
use std::f64::consts::PI;

/// How a boundary piece was subdivided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionCase {
    /// `L <= 3 pi / (8 kappa)` (or straight piece): three equal parts.
    ThreeParts,
    /// `L > 3 pi / (8 kappa)`: `[8 L kappa / pi]` equal parts.
    NParts(usize),
}

/// Equal-length subdivision of a smooth piece with its gap distances.
#[derive(Debug, Clone)]
pub struct ArcPartition {
    pub case: PartitionCase,
    /// Arclength breakpoints `a_0 = 0, ..., a_n = L`.
    pub breakpoints: Vec<f64>,
    /// Per-piece gap `delta_i`; `None` for the end pieces, which have only
    /// one neighbor.
    pub piece_gaps: Vec<Option<f64>>,
    /// `d_j`: minimum interior gap (three-part case: gap of the middle
    /// piece). Infinite when there is nothing to measure against.
    pub gap_distance: f64,
}

impl ArcPartition {
    pub fn num_pieces(&self) -> usize {
        self.breakpoints.len() - 1
    }

    pub fn piece(&self, i: usize) -> (f64, f64) {
        (self.breakpoints[i], self.breakpoints[i + 1])
    }
}

/// Point/segment cloud standing in for "the rest of the boundary".
#[derive(Debug, Clone, Default)]
pub struct BoundaryCloud {
    pub segments: Vec<(Point, Point)>,
    pub points: Vec<Point>,
}

impl BoundaryCloud {
    pub fn empty() -> Self {
        BoundaryCloud::default()
    }

    /// All sides of a polyline.
    pub fn from_polyline(points: &[Point]) -> Self {
        BoundaryCloud {
            segments: points.windows(2).map(|w| (w[0], w[1])).collect(),
            points: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty() && self.points.is_empty()
    }

    /// Minimum distance from the polyline to the cloud; infinite for an
    /// empty cloud.
    pub fn distance_to_polyline(&self, polyline: &[Point]) -> f64 {
        let mut best = f64::INFINITY;
        for w in polyline.windows(2) {
            for &(a, b) in &self.segments {
                best = best.min(segment_segment_distance(w[0], w[1], a, b));
            }
            for &p in &self.points {
                best = best.min(point_segment_distance(p, w[0], w[1]));
            }
        }
        if polyline.len() == 1 {
            for &(a, b) in &self.segments {
                best = best.min(point_segment_distance(polyline[0], a, b));
            }
            for &p in &self.points {
                best = best.min(polyline[0].distance(p));
            }
        }
        best
    }
}

fn polyline_distance(a: &[Point], b: &[Point]) -> f64 {
    let mut best = f64::INFINITY;
    for u in a.windows(2) {
        for v in b.windows(2) {
            best = best.min(segment_segment_distance(u[0], u[1], v[0], v[1]));
        }
    }
    best
}

/// Divides the piece per the curvature rule and computes the gap
/// distances `delta_i` and `d_j`.
///
/// `boundary_rest` is the geometry of the boundary minus this piece. In
/// the multi-part case the gap of piece `i` is measured against
/// `boundary_rest` plus every piece of the arc other than `i-1, i, i+1`;
/// the minimum runs over interior pieces only.
pub fn arc_partition(arc: &SmoothArc, boundary_rest: &BoundaryCloud) -> Result<ArcPartition> {
    let total = arc.length();
    let kappa = arc.max_curvature();
    let three_parts = kappa == 0.0 || total <= 3.0 * PI / (8.0 * kappa);
    let n = if three_parts {
        3
    } else {
        (8.0 * total * kappa / PI).floor() as usize
    };
    debug_assert!(n >= 3);
    let breakpoints: Vec<f64> = (0..=n).map(|i| total * i as f64 / n as f64).collect();
    let pieces: Vec<Vec<Point>> = (0..n)
        .map(|i| arc.polyline_between(breakpoints[i], breakpoints[i + 1]))
        .collect();

    let mut piece_gaps = vec![None; n];
    let gap_distance;
    if three_parts {
        let d = boundary_rest.distance_to_polyline(&pieces[1]);
        piece_gaps[1] = Some(d);
        gap_distance = d;
    } else {
        let mut min_gap = f64::INFINITY;
        for i in 1..n - 1 {
            let mut delta = boundary_rest.distance_to_polyline(&pieces[i]);
            for (m, other) in pieces.iter().enumerate() {
                if m + 1 >= i && m <= i + 1 {
                    continue;
                }
                delta = delta.min(polyline_distance(&pieces[i], other));
            }
            piece_gaps[i] = Some(delta);
            min_gap = min_gap.min(delta);
        }
        gap_distance = min_gap;
    }

    Ok(ArcPartition {
        case: if three_parts {
            PartitionCase::ThreeParts
        } else {
            PartitionCase::NParts(n)
        },
        breakpoints,
        piece_gaps,
        gap_distance,
    })
}

/// Activation threshold `k_j` for a smooth piece:
/// `(V / 2 pi) * max{Lambda_3, 9/d^2, 128 kappa^2/pi^2, 6 kappa/d}` with
/// `Lambda_3 = max{9*2^10 max_j kappa_j^2, 2^64 c1 / V, 2^22 6^8 kappa^4 V / c1}`.
///
/// `global_max_curvature` is the maximum of `kappa_j` over all pieces of
/// the same domain description. A degenerate `d_j = 0` yields the
/// infinite sentinel (the piece never activates).
pub fn kj_threshold(
    arc: &SmoothArc,
    partition: &ArcPartition,
    v: f64,
    global_max_curvature: f64,
    table: &ConstantsTable,
) -> f64 {
    let d = partition.gap_distance;
    if d == 0.0 {
        return f64::INFINITY;
    }
    let kappa = arc.max_curvature();
    let lambda3 = (9.0 * 1024.0 * global_max_curvature.powi(2))
        .max(2f64.powi(64) * table.c1 / v)
        .max(2f64.powi(22) * 6f64.powi(8) * kappa.powi(4) * v / table.c1);
    let gap_terms = if d.is_finite() {
        (9.0 / (d * d)).max(6.0 * kappa / d)
    } else {
        0.0
    };
    v / (2.0 * PI) * lambda3.max(gap_terms).max(128.0 * kappa * kappa / (PI * PI))
}

/// Outcome of the chord/graph certificate.
#[derive(Debug, Clone, Copy)]
pub enum ChordCheck {
    /// `kappa_0 |s' - s''| > pi/4`: the certificate makes no claim.
    PreconditionViolated { product: f64 },
    Checked(ChordGraph),
}

/// Chord length, sagitta and the verified inequalities for a sub-arc.
#[derive(Debug, Clone, Copy)]
pub struct ChordGraph {
    /// `u_0 = |AB|`.
    pub chord: f64,
    /// Maximum |normal offset| of the arc over the chord.
    pub max_sagitta: f64,
    pub ok: bool,
    pub diagnostic: Option<&'static str>,
}

/// Verifies that the sub-arc `[s1, s2]` is a graph over its chord with
/// `|s1-s2|/sqrt(2) <= |AB| <= |s1-s2|` and sagitta at most
/// `sqrt(2) kappa_0 |AB|^2`, provided `kappa_0 |s1-s2| <= pi/4`.
pub fn chord_graph_check(arc: &SmoothArc, s1: f64, s2: f64) -> Result<ChordCheck> {
    let total = arc.length();
    let (s1, s2) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
    if s1 < 0.0 || s2 > total * (1.0 + 1e-12) || s1 == s2 {
        return Err(Error::OutOfRange(format!(
            "sub-arc [{s1}, {s2}] outside [0, {total}]"
        )));
    }
    let kappa0 = arc.max_curvature();
    let span = s2 - s1;
    if kappa0 * span > PI / 4.0 {
        return Ok(ChordCheck::PreconditionViolated {
            product: kappa0 * span,
        });
    }
    let a = arc.point_at(s1);
    let b = arc.point_at(s2);
    let chord = a.distance(b);
    let tol = 1e-9;
    let chord_ok = chord >= span / 2f64.sqrt() * (1.0 - tol) && chord <= span * (1.0 + tol);

    let tangent = (b - a) * (1.0 / chord);
    let normal = tangent.perp();
    let mut max_sagitta = 0.0f64;
    let mut prev_u = 0.0;
    let mut graph_ok = true;
    for p in arc.polyline_between(s1, s2).iter().skip(1) {
        let rel = *p - a;
        let u = rel.dot(tangent);
        if u < prev_u - 1e-12 * chord {
            graph_ok = false;
        }
        prev_u = u;
        max_sagitta = max_sagitta.max(rel.dot(normal).abs());
    }
    let sagitta_ok = max_sagitta <= 2f64.sqrt() * kappa0 * chord * chord * (1.0 + tol);

    let diagnostic = if !graph_ok {
        Some("arc is not a graph over its chord in the samples")
    } else if !chord_ok {
        Some("chord length outside [|s|/sqrt(2), |s|]")
    } else if !sagitta_ok {
        Some("sagitta exceeds sqrt(2) kappa_0 u_0^2")
    } else {
        None
    };
    Ok(ChordCheck::Checked(ChordGraph {
        chord,
        max_sagitta,
        ok: chord_ok && sagitta_ok && graph_ok,
        diagnostic,
    }))
}
