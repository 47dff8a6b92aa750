//! Exact projective covers, recollement functors and quiver presentations
//! for module categories of split basic finite-dimensional algebras.

pub mod algebra;
mod error;
pub mod exactla;
pub mod modcat;

pub use error::{Error, Result};
pub mod cli;
pub mod covers;
pub mod presentation;
pub mod recollement;
