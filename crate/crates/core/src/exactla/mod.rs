//! Exact linear algebra over prime fields and the rationals.
//!
//! Everything here is dense and deterministic: elimination always picks
//! the leftmost pivot column and the first nonzero row, so the reduced
//! forms (and every basis derived from them) are reproducible.

mod field;
mod mat;
mod subspace;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals};
pub use mat::{canonical_span, Mat, Rref, Solution};
pub use subspace::{QuotientSpace, SpanCoords};
