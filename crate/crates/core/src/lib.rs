pub mod budget;
pub mod error;
pub mod exact;

pub use budget::{Budget, Meter};
pub use error::{Error, Result};
pub mod combinatorics;
pub mod polyhedra;
pub mod rounding;
pub mod canonical;
pub mod graph_algebra;
pub mod cli;
