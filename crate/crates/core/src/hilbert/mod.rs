//! Degree-zero DT theory of `A^3`: plane partitions, tangent spaces of
//! `Hilb^n(A^3)` at its torus-fixed points, and the refined generating
//! series from the product formula and from the fixed-point sum.

mod partition;
mod series;
mod tangent;

pub use partition::{
    enumerate_plane_partitions, macmahon_counts, size_bound, Exponent, MonomialIdeal, PlanePartition,
    DEFAULT_SIZE_BOUND, SIZE_BOUND_ENV,
};
pub use series::{
    bbs_series, compare, conjecture_series, CompareReport, CompareRow, CompareStatus, PartitionRecord, RowStatus,
};
pub use tangent::{index_of, tangent_character, TangentCharacter, Weight, WeightSplit};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbertError {
    #[error("partition size {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("box {0:?} is present but a box below it is missing")]
    NotDownwardClosed(Exponent),
    #[error("non-generic action at {partition}: zero pairing with tangent weight(s) {weights:?}")]
    NonGenericAction { partition: String, weights: Vec<Weight> },
}
