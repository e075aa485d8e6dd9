//! Auslander-Reiten theory for path algebras of acyclic quivers.

pub mod basic;
pub mod extension;
pub mod knit;
pub mod reflection;
pub mod tau;
pub mod tube;

pub use basic::{injective, left_multiplication, projective, regular_module, simple};
pub use extension::{
    almost_split_sequence, extension_module, generating_extension, is_split, ExtensionData,
};
pub use knit::{
    catalog, coordinate_module, indecomposable_of_root, knit_preinjective, knit_preprojective,
    ArCoordinate, CatalogEntry,
};
pub use reflection::{ringel_reflections, Reflections};
pub use tau::{
    coxeter_dim, has_injective_summand, has_projective_summand, tau, tau_dropping_projectives,
    tau_minus, tau_minus_dropping_injectives, tau_power,
};
pub use tube::{quasi_simple_period, tube_chain, TubeChain};
