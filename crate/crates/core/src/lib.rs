//! Twist decompositions of link diagrams, planar separators, low-width
//! vertex orderings and the numeric bounds derived from them.

pub mod bounds;
pub mod cheeger;
pub mod error;
pub mod generate;
pub mod graph;
pub mod map;
pub mod pd;
pub mod separator;
pub mod twist;
pub mod width;

pub use bounds::{
    alternating_volume_interval, bridge_bound, buser_lambda1, cheeger_bound, corollary_constants,
    crossing_lower_bound, full_report, full_report_with, heegaard_width_bound,
    highly_twisted_volume_interval, max_width_bound, BoundConstants, BoundsReport, ClassFlags,
    CorollaryConstants, LinkClass, VolumeInterval,
};
pub use cheeger::{graph_cheeger, CheegerConstant};
pub use error::{Error, Result};
pub use generate::{map_to_pd, random_diagram, random_triangulation};
pub use graph::Graph;
pub use map::{build_map, CombinatorialMap, FaceSet};
pub use pd::{parse_pd, PdCode, RationalSlope};
pub use separator::{separate, triangulate, SeparatorResult, Triangulation};
pub use twist::{
    twist_decomposition, twist_graph, BlockKind, TwistBlock, TwistDecomposition, TwistGraph,
};
pub use width::{
    compare_lex, exact_width, lift_ordering, ordering_width, permutation_width, separator_ordering,
    separator_width_bound, sweep_profile, ExactWidth, SweepEvent, SweepProfile, VertexOrdering,
    WidthProfile,
};
