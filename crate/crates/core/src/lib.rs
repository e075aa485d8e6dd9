//! Exact homological algebra for quiver representations and point counts of
//! quiver Grassmannians.

pub mod ar;
pub mod classify;
pub mod cluster;
pub mod error;
pub mod field;
pub mod grassmannian;
pub mod matrix;
pub mod poly;
pub mod quiver;
pub mod rep;
pub mod subspace;

pub use ar::{ArCoordinate, CatalogEntry, ExtensionData, Reflections, TubeChain};
pub use classify::{classify, defect, AffineType, DynkinType, QuiverClass};
pub use cluster::{LaurentCharacter, MultiplicationCheck};
pub use error::{Error, ErrorKind, Result};
pub use field::{ExactField, Scalar};
pub use grassmannian::{
    CountOptions, CountResult, ModuleSource, ModuleSpec, Planner, ReductionPlan,
};
pub use matrix::ExactMatrix;
pub use poly::{fit_polynomial, IntPolynomial};
pub use quiver::{DimVector, EulerMatrix, Quiver, VertexId};
pub use rep::{Morphism, Representation, SubrepWitness};
