//! Torus fixed points as tuples of partitions.

mod enumerate;
mod matching;
mod tuple;

pub use enumerate::{enumerate_fixed_points, enumerate_fixed_points_with_limit, DEFAULT_BOX_LIMIT};
pub use matching::{box_inclusion, match_fixed_point};
pub use tuple::{gamma, Partition, VWTuple, YoungBox};
