//! Computational geometry feeding the bounds: polygon metrics, smooth-arc
//! partitions, chord/graph certificates, boundary tilings and the extended
//! volume bound.
//!
//! All operations are pure functions of immutable inputs. Distances are
//! brute-force over segments and samples; inputs are desk scale by design.

mod arc;
mod partition;
mod point;
mod polygon;
mod tiling;

pub use arc::{ArcSample, SmoothArc};
pub use partition::{
    arc_partition, chord_graph_check, kj_threshold, ArcPartition, BoundaryCloud, ChordCheck,
    ChordGraph, PartitionCase,
};
pub use point::{point_segment_distance, segment_segment_distance, Point};
pub use polygon::{MomentOfInertia, Polygon, PolygonMetrics};
pub use tiling::{
    extended_volume_bound, square_count_lower, tile_arc, ExtendedVolume, TileSquare, Tiling,
};
