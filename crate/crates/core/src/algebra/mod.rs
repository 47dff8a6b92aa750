//! Split basic algebras presented by quivers with relations.

mod quiver;
mod realize;
mod structure;

pub use quiver::{AlgebraPresentation, Arrow, Path, Quiver, Relation};
pub use realize::{realize, MAX_REALIZED_DIM};
pub use structure::{Algebra, BasisElement, Corner, QuotientAlgebra};

use crate::exactla::Field;

/// A split basic algebra with an ordered partition of its vertices into
/// strata, listed from the most closed to the most open.
#[derive(Clone, Debug, PartialEq)]
pub struct StratifiedAlgebra<F: Field> {
    pub algebra: std::sync::Arc<Algebra<F>>,
    pub strata: Vec<Vec<usize>>,
}

impl<F: Field> StratifiedAlgebra<F> {
    pub fn new(algebra: std::sync::Arc<Algebra<F>>, strata: Vec<Vec<usize>>) -> crate::Result<Self> {
        let n = algebra.num_vertices();
        let mut seen = vec![false; n];
        for s in &strata {
            if s.is_empty() {
                return Err(crate::Error::MalformedQuiver("empty stratum".into()));
            }
            for &v in s {
                if v >= n || seen[v] {
                    return Err(crate::Error::MalformedQuiver(format!(
                        "vertex {v} is out of range or listed in two strata"
                    )));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|x| !x) {
            return Err(crate::Error::MalformedQuiver(format!(
                "vertex '{}' belongs to no stratum",
                algebra.vertex_label(v)
            )));
        }
        Ok(StratifiedAlgebra { algebra, strata })
    }

    /// Vertex sets of the open parts: entry `i` is the union of the strata
    /// after the first `i`, so entry 0 is everything and the last is empty.
    pub fn open_chain(&self) -> Vec<Vec<usize>> {
        (0..=self.strata.len())
            .map(|i| {
                let mut v: Vec<usize> = self.strata[i..].iter().flatten().copied().collect();
                v.sort_unstable();
                v
            })
            .collect()
    }
}
