//! Partitions, boundary strings, permutations and the duality maps between them.

mod ops;
mod partition;
mod permutation;
mod strings;

pub use ops::{
    add_horizontal_strip, conjugate, hat_map, rect_dual, remove_columns,
    remove_horizontal_strip, skew_component_stats, strict_dual, SkewStats,
};
pub use partition::{partitions_in_box, partitions_of, strict_partitions, Partition};
pub use permutation::Permutation;
pub use strings::{
    from_01_string, from_01_string_in, grassmann_permutation, jd_string,
    string012_to_permutation, to_01_string, Alphabet, LabelString,
};
