//! Modules over a split basic algebra: Hom, kernels and cokernels,
//! projectives and covers, Ext^1 and Ext^2, decompositions and lattices.

mod decompose;
mod ext;
mod hom;
mod lattice;
mod module;
mod projective;
pub mod random;

pub use decompose::{decompose, is_indecomposable, is_isomorphic, isotypic_multiplicities, Summand};
pub use ext::{
    yoneda_product, yoneda_push, Ext2Space, ExtClass, ExtSpace, ExtensionRealization, SecondSyzygy, Syzygy,
};
pub use hom::{hom_basis, HomSpace};
pub use lattice::{
    composition_series, enumerate_quotients, length, random_composition_series, submodule_lattice,
    SubmoduleLattice,
};
pub use module::{Factorization, Module, ModuleMorphism, Quotient, Subspaces};
pub(crate) use module::same_algebra;
pub use projective::{projective, projective_cover, simples, ProjectiveCover, ProjectiveSum};
