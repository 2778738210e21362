//! Exact maximum induced subgraphs for hereditary subclasses of chordal
//! graphs: chordal and interval graphs, optionally with a finite family of
//! extra forbidden induced subgraphs.
//!
//! [`solver::solve`] is the entry point; [`oracle`] holds the brute-force
//! references used to check it.

pub mod branching;
pub mod classes;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognition;
pub mod solver;
pub mod vertex_set;

pub use classes::{BaseClass, PiClass};
pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
