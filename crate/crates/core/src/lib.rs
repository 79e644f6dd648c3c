//! Complementary edge ideals of graphs: generators, Alexander duals,
//! Stanley–Reisner complexes, Betti tables and ring-theoretic properties.

pub mod betti;
pub mod classify;
pub mod complexes;
pub mod graphs;
pub mod homology;
pub mod ideals;
pub mod linalg;
pub mod vertex_set;

pub use complexes::SimplicialComplex;
pub use graphs::{Graph, GraphError, GraphFormat};
pub use homology::{FieldSpec, HomologyDims};
pub use ideals::{IdealError, SqfIdeal, SqfMonomial};
pub use vertex_set::VertexSet;
