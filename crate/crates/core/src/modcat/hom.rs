//! Hom spaces as solution spaces of the commuting-square system.

use crate::error::Result;
use crate::exactla::{Field, Mat, SpanCoords};

use super::module::{check_same, Module, ModuleMorphism};

/// A basis of `Hom(M, N)` together with a coordinate map.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub source: Module<F>,
    pub target: Module<F>,
    pub basis: Vec<ModuleMorphism<F>>,
    coords: SpanCoords<F>,
}

/// Index of entry `(r, c)` of `f_v` in the unknown vector.
fn unknown_offsets<F: Field>(m: &Module<F>, n: &Module<F>) -> Vec<usize> {
    let mut offs = Vec::with_capacity(m.dims().len() + 1);
    let mut acc = 0;
    for v in 0..m.dims().len() {
        offs.push(acc);
        acc += m.dims()[v] * n.dims()[v];
    }
    offs.push(acc);
    offs
}

/// Morphism from a vector in the unknown ordering (row-major per vertex).
pub(crate) fn morphism_from_vector<F: Field>(m: &Module<F>, n: &Module<F>, x: &[F::Elem]) -> ModuleMorphism<F> {
    let f = m.field();
    let offs = unknown_offsets(m, n);
    let maps = (0..m.dims().len())
        .map(|v| {
            let (rows, cols) = (n.dims()[v], m.dims()[v]);
            Mat::from_vec(f, rows, cols, x[offs[v]..offs[v] + rows * cols].to_vec())
        })
        .collect();
    ModuleMorphism { source: m.clone(), target: n.clone(), maps }
}

pub fn hom_basis<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<Vec<ModuleMorphism<F>>> {
    Ok(HomSpace::new(m, n)?.basis)
}

impl<F: Field> HomSpace<F> {
    pub fn new(m: &Module<F>, n: &Module<F>) -> Result<Self> {
        check_same(m, n)?;
        let f = m.field();
        let q = m.algebra().quiver();
        let offs = unknown_offsets(m, n);
        let unknowns = *offs.last().expect("nonempty");
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for (ai, a) in q.arrows.iter().enumerate() {
            let (u, w) = (a.source, a.target);
            let ma = m.arrow_map(ai);
            let na = n.arrow_map(ai);
            // (f_w M_a - N_a f_u)[r][c] = 0
            for r in 0..n.dims()[w] {
                for c in 0..m.dims()[u] {
                    let mut row = vec![f.zero(); unknowns];
                    for k in 0..m.dims()[w] {
                        let idx = offs[w] + r * m.dims()[w] + k;
                        row[idx] = f.add(&row[idx], ma.at(k, c));
                    }
                    for k in 0..n.dims()[u] {
                        let idx = offs[u] + k * m.dims()[u] + c;
                        row[idx] = f.sub(&row[idx], na.at(r, k));
                    }
                    rows.push(row);
                }
            }
        }
        let system = Mat::from_fn(f, rows.len(), unknowns, |r, c| rows[r][c].clone());
        let kernel = system.kernel_basis();
        let basis = kernel.columns().iter().map(|x| morphism_from_vector(m, n, x)).collect();
        Ok(HomSpace { source: m.clone(), target: n.clone(), basis, coords: SpanCoords::new(kernel) })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homomorphism `M -> N` in the basis.
    pub fn coordinates(&self, f: &ModuleMorphism<F>) -> Vec<F::Elem> {
        self.coords.coords(&f.to_vector()).expect("argument is a homomorphism")
    }

    pub fn combination(&self, coeffs: &[F::Elem]) -> ModuleMorphism<F> {
        let x = self.coords.basis().mul_vec(coeffs);
        morphism_from_vector(&self.source, &self.target, &x)
    }
}
