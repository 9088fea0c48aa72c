use super::arc::SmoothArc;
use super::partition::{ArcPartition, PartitionCase};
use super::point::Point;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Square of side `lambda^(-1/2)/2` attached to a boundary chord, given in
/// its local frame.
#[derive(Debug, Clone, Copy)]
pub struct TileSquare {
    /// Chord midpoint; one side of the square lies on the chord.
    pub origin: Point,
    /// Unit vector along the chord.
    pub tangent: Point,
    /// Unit normal pointing to the interior side.
    pub normal: Point,
    pub side: f64,
}

impl TileSquare {
    pub fn corners(&self) -> [Point; 4] {
        let half = self.tangent * (self.side / 2.0);
        let depth = self.normal * self.side;
        [
            self.origin - half,
            self.origin + half,
            self.origin + half + depth,
            self.origin - half + depth,
        ]
    }
}

/// Boundary tiling at energy scale `lambda`: chord arcs of arclength
/// `sqrt(2) lambda^(-1/2)` and one square per arc.
#[derive(Debug, Clone)]
pub struct Tiling {
    pub lambda: f64,
    /// `(b_l, b_l')` arclength pairs.
    pub arcs: Vec<(f64, f64)>,
    pub squares: Vec<TileSquare>,
}

impl Tiling {
    /// Pairwise-disjointness certificate (separating-axis test on every
    /// pair; shared edges count as disjoint).
    pub fn squares_disjoint(&self) -> bool {
        for i in 0..self.squares.len() {
            for j in i + 1..self.squares.len() {
                if squares_overlap(&self.squares[i], &self.squares[j]) {
                    return false;
                }
            }
        }
        true
    }
}

fn squares_overlap(a: &TileSquare, b: &TileSquare) -> bool {
    let ca = a.corners();
    let cb = b.corners();
    let axes = [a.tangent, a.normal, b.tangent, b.normal];
    let tol = 1e-12 * a.side.max(b.side);
    for axis in axes {
        let pa: Vec<f64> = ca.iter().map(|p| p.dot(axis)).collect();
        let pb: Vec<f64> = cb.iter().map(|p| p.dot(axis)).collect();
        let (min_a, max_a) = (pa.iter().cloned().fold(f64::INFINITY, f64::min), pa.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
        let (min_b, max_b) = (pb.iter().cloned().fold(f64::INFINITY, f64::min), pb.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
        if min_a >= max_b - tol || min_b >= max_a - tol {
            return false;
        }
    }
    true
}

/// Builds the tiling of the interior pieces of a partitioned arc.
///
/// Requires `lambda` large enough for the partition case
/// (`lambda^(-1/2) <= d_j/3` and either `pi/(8 sqrt(2) kappa)` or
/// `L/(3 sqrt(2))`) and `lambda > 6 kappa_j / d_j`; violations report the
/// failing inequality. Per interior piece the arcs are packed from the
/// start, so they cover at least a third of the piece and leave a
/// remainder below one arc length.
pub fn tile_arc(arc: &SmoothArc, partition: &ArcPartition, lambda: f64) -> Result<Tiling> {
    if !(lambda > 0.0) {
        return Err(Error::InvalidInput("lambda must be positive".into()));
    }
    let kappa = arc.max_curvature();
    let total = arc.length();
    let d = partition.gap_distance;
    let inv_sqrt = lambda.sqrt().recip();

    if inv_sqrt > d / 3.0 {
        return Err(Error::Threshold {
            name: "lambda^(-1/2) <= d_j/3",
            required: d / 3.0,
            actual: inv_sqrt,
        });
    }
    match partition.case {
        PartitionCase::NParts(_) => {
            let cap = PI / (8.0 * 2f64.sqrt() * kappa);
            if inv_sqrt > cap {
                return Err(Error::Threshold {
                    name: "lambda^(-1/2) <= pi/(8 sqrt(2) kappa_j)",
                    required: cap,
                    actual: inv_sqrt,
                });
            }
        }
        PartitionCase::ThreeParts => {
            let cap = total / (3.0 * 2f64.sqrt());
            if inv_sqrt > cap {
                return Err(Error::Threshold {
                    name: "lambda^(-1/2) <= L/(3 sqrt(2))",
                    required: cap,
                    actual: inv_sqrt,
                });
            }
        }
    }
    let spread = if kappa == 0.0 { 0.0 } else { 6.0 * kappa / d };
    if !(lambda > spread) {
        return Err(Error::Threshold {
            name: "lambda > 6 kappa_j / d_j",
            required: spread,
            actual: lambda,
        });
    }

    let arc_len = 2f64.sqrt() * inv_sqrt;
    let n = partition.num_pieces();
    let mut arcs = Vec::new();
    let mut squares = Vec::new();
    for i in 1..n - 1 {
        let (lo, hi) = partition.piece(i);
        let piece_len = hi - lo;
        let count = (piece_len / arc_len * (1.0 + 1e-12)).floor() as usize;
        debug_assert!(count >= 1, "preconditions guarantee one arc per piece");
        let covered = count as f64 * arc_len;
        debug_assert!(covered >= piece_len / 3.0 - 1e-12);
        debug_assert!(piece_len - covered <= arc_len * (1.0 + 1e-12));
        for l in 0..count {
            let b = lo + l as f64 * arc_len;
            let b_prime = b + arc_len;
            let pa = arc.point_at(b);
            let pb = arc.point_at(b_prime);
            let chord = pb - pa;
            let tangent = chord.normalized();
            let left = tangent.perp();
            let normal = if arc.interior_left() { left } else { -left };
            arcs.push((b, b_prime));
            squares.push(TileSquare {
                origin: pa + chord * 0.5,
                tangent,
                normal,
                side: inv_sqrt / 2.0,
            });
        }
    }
    Ok(Tiling {
        lambda,
        arcs,
        squares,
    })
}

/// Lower bound on the number of boundary squares:
/// `[l sqrt(lambda) / (3 sqrt(2))]` along a polygon side,
/// `[L sqrt(lambda) / (9 sqrt(2))]` along a smooth piece.
pub fn square_count_lower(length: f64, lambda: f64, polygon_case: bool) -> u64 {
    let denom_sq = if polygon_case { 18.0 } else { 162.0 };
    (length * length * lambda / denom_sq).sqrt().floor() as u64
}

/// Upper bound on the extended-domain volume.
#[derive(Debug, Clone, Copy)]
pub struct ExtendedVolume {
    /// `V + 2^(3/2) lambda^(-1) sum_j kappa_j L(Gamma_j)`.
    pub upper: f64,
    /// Whether `lambda >= Lambda_1 = 9*2^10 max_j kappa_j^2`, in which
    /// case the bump volume stays below `V` and the bound is at most `2V`.
    pub doubled_ok: bool,
}

pub fn extended_volume_bound<'a>(
    arcs: impl IntoIterator<Item = &'a SmoothArc>,
    v: f64,
    lambda: f64,
) -> ExtendedVolume {
    let mut sum = 0.0;
    let mut max_kappa = 0.0f64;
    for arc in arcs {
        let kappa = arc.max_curvature();
        sum += kappa * arc.length();
        max_kappa = max_kappa.max(kappa);
    }
    ExtendedVolume {
        upper: v + 2f64.powf(1.5) / lambda * sum,
        doubled_ok: lambda >= 9.0 * 1024.0 * max_kappa * max_kappa,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::partition::{arc_partition, BoundaryCloud};

    #[test]
    fn straight_piece_arc_count() {
        let arc = SmoothArc::line(Point::new(0.0, 0.0), Point::new(1.0, 0.0), 512);
        let part = arc_partition(&arc, &BoundaryCloud::empty()).unwrap();
        let tiling = tile_arc(&arc, &part, 1e4).unwrap();
        // Middle piece of length 1/3, arcs of length sqrt(2)/100:
        // floor(33.33/1.4142) = 23.
        assert_eq!(tiling.arcs.len(), 23);
        assert_eq!(tiling.squares.len(), 23);
        assert!(tiling.squares_disjoint());
    }

    #[test]
    fn quarter_circle_disjoint_certificate() {
        let arc = SmoothArc::circle(1.0, 0.0, PI / 2.0, 8193);
        let part = arc_partition(&arc, &BoundaryCloud::empty()).unwrap();
        let tiling = tile_arc(&arc, &part, 1e6).unwrap();
        assert!(tiling.squares.len() > 500, "{} squares", tiling.squares.len());
        assert!(tiling.squares_disjoint());
        // All squares on the interior (disk) side.
        for sq in &tiling.squares {
            let probe = sq.origin + sq.normal * (sq.side / 2.0);
            assert!(probe.norm() < 1.0, "square leaked outside the disk");
        }
    }

    #[test]
    fn threshold_errors_name_the_inequality() {
        let arc = SmoothArc::circle(1.0, 0.0, PI / 2.0, 1025);
        let part = arc_partition(&arc, &BoundaryCloud::empty()).unwrap();
        // lambda^(-1/2) = 1 violates every scale condition.
        match tile_arc(&arc, &part, 1.0) {
            Err(Error::Threshold { name, .. }) => {
                assert!(name.contains("lambda^(-1/2)"), "{name}");
            }
            other => panic!("expected threshold error, got {other:?}"),
        }
    }

    #[test]
    fn square_counts() {
        // Polygon case: l = 1, lambda = 1800 -> sqrt(1800/18) = 10.
        assert_eq!(square_count_lower(1.0, 1800.0, true), 10);
        // Smooth case: L = 9 sqrt(2), lambda = 1 -> exactly 1.
        assert_eq!(square_count_lower(9.0 * 2f64.sqrt(), 1.0, false), 1);
        assert_eq!(square_count_lower(1.0, 0.0, true), 0);
    }

    #[test]
    fn extended_volume_examples() {
        // Single arc with kappa = 1, L = 1: quarter circle segment of
        // radius 1 and arclength 1.
        let arc = SmoothArc::circle(1.0, 0.0, 1.0, 257);
        assert!((arc.length() - 1.0).abs() < 1e-12);
        let ev = extended_volume_bound(std::iter::once(&arc), 1.0, 2f64.powf(1.5));
        assert!((ev.upper - 2.0).abs() < 1e-12);
        assert!(!ev.doubled_ok);

        // lambda >= Lambda_1 = 9216 kappa^2: doubled flag set and the
        // bound stays below 2V.
        let ev = extended_volume_bound(std::iter::once(&arc), 1.0, 9216.0);
        assert!(ev.doubled_ok);
        assert!(ev.upper <= 2.0);

        // Straight pieces: no bumps at all.
        let line = SmoothArc::line(Point::new(0.0, 0.0), Point::new(3.0, 0.0), 16);
        let ev = extended_volume_bound(std::iter::once(&line), 1.0, 10.0);
        assert_eq!(ev.upper, 1.0);
        assert!(ev.doubled_ok);
    }
}
