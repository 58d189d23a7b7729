//! Exact arithmetic substrate: rationals, dense linear algebra, integer
//! lattices and linear/integer programming.

pub mod integer;
pub mod linalg;
pub mod lp;
pub mod rational;

pub use linalg::{rank, solve_linear, LinearSolution, RatMatrix, RatVector};
pub use lp::{ilp_solve, lp_solve, Constraint, LinearProgram, LpOutcome, Relation, Sense};
pub use rational::Rational;
