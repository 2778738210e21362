//! Branching engines: finite deletion, clique extension and degree
//! reduction with small-side candidate enumeration.

pub mod clique_extension;
pub mod degree_reduction;
pub mod finite_deletion;

pub use clique_extension::{max_clique_extension, non_red_sets};
pub use degree_reduction::{
    degree_reduction_branch, enumerate_small_side_candidates, for_each_small_side_candidate, heavy_threshold,
    BranchPair, SigmaConstants,
};
pub use finite_deletion::finite_deletion_solve;
