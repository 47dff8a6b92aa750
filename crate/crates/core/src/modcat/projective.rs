//! Indecomposable projectives, sums of them, and projective covers.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};

use super::module::{Module, ModuleMorphism};

/// `P(v_1) + .. + P(v_k)` with its generators remembered, so that maps out
/// of it are determined by the images of the generators.
#[derive(Clone, Debug)]
pub struct ProjectiveSum<F: Field> {
    pub module: Module<F>,
    pub tops: Vec<usize>,
    /// `positions[i][w]`: first coordinate of summand `i` inside `M_w`.
    positions: Vec<Vec<usize>>,
}

/// The indecomposable projective `A e_v`, spanned by the basis vectors with
/// source `v`; its coordinates at `w` follow the block `e_w A e_v`.
pub fn projective<F: Field>(algebra: &Arc<Algebra<F>>, v: usize) -> Module<F> {
    ProjectiveSum::new(algebra, &[v]).module
}

impl<F: Field> ProjectiveSum<F> {
    pub fn new(algebra: &Arc<Algebra<F>>, tops: &[usize]) -> Self {
        let f = algebra.field();
        let n = algebra.num_vertices();
        let q = algebra.quiver();
        let mut dims = vec![0; n];
        let mut positions = Vec::with_capacity(tops.len());
        for &v in tops {
            positions.push(dims.clone());
            for w in 0..n {
                dims[w] += algebra.block(v, w).len();
            }
        }
        let mut maps: Vec<Mat<F>> =
            q.arrows.iter().map(|a| Mat::zeros(f, dims[a.target], dims[a.source])).collect();
        for (i, &v) in tops.iter().enumerate() {
            for (ai, a) in q.arrows.iter().enumerate() {
                let src = algebra.block(v, a.source);
                let tgt = algebra.block(v, a.target);
                let arrow = algebra.arrow_basis(ai);
                for (c, &b) in src.iter().enumerate() {
                    for (k, coef) in algebra.mul_basis(arrow, b) {
                        let r = tgt.iter().position(|x| x == k).expect("product stays in the block");
                        maps[ai].set(positions[i][a.target] + r, positions[i][a.source] + c, coef.clone());
                    }
                }
            }
        }
        let module = Module::new_unchecked(algebra.clone(), dims, maps);
        ProjectiveSum { module, tops: tops.to_vec(), positions }
    }

    /// The generator `e_v` of summand `i`, as a vector at its top vertex.
    pub fn generator(&self, i: usize) -> Vec<F::Elem> {
        let f = self.module.field();
        let v = self.tops[i];
        let mut x = vec![f.zero(); self.module.dims()[v]];
        x[self.positions[i][v]] = f.one();
        x
    }

    /// The element `b * g_i` for basis vector `b` of the algebra with source
    /// `tops[i]`; it lives at vertex `target(b)`.
    pub fn basis_element(&self, i: usize, b: usize) -> Vec<F::Elem> {
        let alg = self.module.algebra();
        let f = alg.field();
        let be = &alg.basis()[b];
        assert_eq!(be.source, self.tops[i], "basis vector does not start at the summand's top");
        let k = alg.block(be.source, be.target).iter().position(|&x| x == b).expect("in block");
        let mut x = vec![f.zero(); self.module.dims()[be.target]];
        x[self.positions[i][be.target] + k] = f.one();
        x
    }

    /// The map sending generator `i` to `images[i]` (an element of
    /// `target` at vertex `tops[i]`).
    pub fn map_from_generators(&self, target: &Module<F>, images: &[Vec<F::Elem>]) -> ModuleMorphism<F> {
        let actions = target.all_actions();
        self.map_with_actions(target, &actions, images)
    }

    pub(crate) fn map_with_actions(
        &self,
        target: &Module<F>,
        actions: &[Mat<F>],
        images: &[Vec<F::Elem>],
    ) -> ModuleMorphism<F> {
        let alg = self.module.algebra();
        let f = alg.field();
        let n = alg.num_vertices();
        let mut maps: Vec<Mat<F>> =
            (0..n).map(|w| Mat::zeros(f, target.dims()[w], self.module.dims()[w])).collect();
        for (i, &v) in self.tops.iter().enumerate() {
            for w in 0..n {
                for (c, &b) in alg.block(v, w).iter().enumerate() {
                    let y = actions[b].mul_vec(&images[i]);
                    for (r, val) in y.into_iter().enumerate() {
                        maps[w].set(r, self.positions[i][w] + c, val);
                    }
                }
            }
        }
        ModuleMorphism { source: self.module.clone(), target: target.clone(), maps }
    }
}

/// A projective cover `P -> M` built on a basis of the top of `M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F: Field> {
    pub projective: ProjectiveSum<F>,
    pub epi: ModuleMorphism<F>,
}

/// Top generators: for each vertex, standard vectors completing a basis of
/// the radical. Empty for the zero module.
pub(crate) fn cover_of<F: Field>(m: &Module<F>) -> ProjectiveCover<F> {
    let f = m.field();
    let rad = m.radical();
    let mut tops = Vec::new();
    let mut images = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let qs = crate::exactla::QuotientSpace::new(f, m.dims()[v], &r.columns());
        for &c in &qs.complement {
            let mut x = vec![f.zero(); m.dims()[v]];
            x[c] = f.one();
            tops.push(v);
            images.push(x);
        }
    }
    let projective = ProjectiveSum::new(m.algebra(), &tops);
    let epi = projective.map_from_generators(m, &images);
    ProjectiveCover { projective, epi }
}

pub fn projective_cover<F: Field>(m: &Module<F>) -> Result<ProjectiveCover<F>> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    Ok(cover_of(m))
}

pub fn simples<F: Field>(algebra: &Arc<Algebra<F>>) -> Vec<Module<F>> {
    (0..algebra.num_vertices()).map(|v| Module::simple(algebra, v)).collect()
}
