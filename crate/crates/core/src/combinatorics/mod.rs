//! Subset and permutation combinatorics behind the fixed-point indexing.

mod numbers;
mod permutation;
mod subset;

pub use numbers::{binomial, factorial, stirling2};
pub use permutation::{fixed_point_permutation, v_permutation, Permutation};
pub use subset::{
    all_subsets, parse_members, parse_subset, subsets_of_size, SubsetIndex, Substring, MAX_RANK,
};
