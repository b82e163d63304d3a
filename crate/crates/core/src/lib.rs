//! Exact Hermitian lattices over the Eisenstein and Gauss integers, their
//! complex reflection representations, and the hyperbolic Coxeter polytopes
//! built from bipartite Coxeter diagrams.

pub mod definite;
pub mod diagram;
pub mod herm;
pub mod linalg;
pub mod polygon;
pub mod polytope;
pub mod reflect;
pub mod scalar;

pub use diagram::CoxeterDiagram;
pub use herm::HermitianLattice;
pub use scalar::{Eisenstein, EisensteinRing, Gaussian, GaussRing, QuadInt, QuadraticRing, Sqrt3};
