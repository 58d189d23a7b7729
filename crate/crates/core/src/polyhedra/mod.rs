//! Rational cones, their Hilbert bases and lattice points, and vertices of
//! set-packing polytopes.

mod cone;
mod hilbert;
mod lattice;
mod vertices;

pub use cone::{cone_member, Cone, ConeGens};
pub use hilbert::{hilbert_basis, is_normal_semigroup, semigroup_member, HilbertBasis, Normality};
pub use lattice::{dilation_lattice_points, BoxSearch};
pub use vertices::{polytope_vertices, VertexSet};
pub(crate) use hilbert::SemigroupSearch;
