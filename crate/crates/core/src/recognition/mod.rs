//! Chordal and interval recognition, clique trees and paths, balanced clique
//! separators, end-bag tests and bounded forbidden-subgraph search.

pub mod chordal;
pub mod forbidden;
pub mod interval;
pub mod separator;
pub mod tree;

pub use chordal::{check_chordal, is_chordal, maximal_cliques, shortest_hole, Chordality};
pub use forbidden::{find_forbidden_chordal, find_forbidden_interval};
pub use interval::{clique_path, is_interval, separator_test_chordal, separator_test_interval};
pub use separator::{balanced_clique_separator, SeparatorSplit};
pub use tree::{clique_tree, CliqueTree};
