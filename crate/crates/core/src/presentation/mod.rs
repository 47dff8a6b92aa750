//! From covers back to an algebra: the projective generator, its
//! endomorphism algebra, the quiver presentation and the Ext-quiver.

mod endo;
mod extquiver;
mod recover;

pub use endo::{
    endomorphism_algebra, gabriel_presentation, projective_generator, EndomorphismAlgebra, GeneratorSummand,
    HomBasisVector, ProjectiveGenerator,
};
pub use extquiver::{ext_quiver_with_quadratic_relations, ArrowPair, ExtQuiver, QuadraticBlock};
pub use recover::{endomorphisms_in_algebra, recover, Recovery};
