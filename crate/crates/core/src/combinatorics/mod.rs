//! Graphs, clutters, incidence matrices and graph predicates.

mod clutter;
pub mod families;
mod graph;

pub use clutter::Clutter;
pub use graph::{Graph, GraphPredicates, OddCycleCondition, MAX_VERTICES};
pub(crate) use graph::bits;
