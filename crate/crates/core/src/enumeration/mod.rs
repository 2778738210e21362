//! Bounded connected-set enumeration and the two-table matcher.

pub mod connected;
pub mod two_table;

pub use connected::{binomial, enumerate_connected_sets, enumerate_connected_supersets};
pub use two_table::{two_table_solve, two_table_solve_counted, TableInstance, TwoTableRun};
