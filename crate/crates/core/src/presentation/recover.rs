//! Recovering `A` from its covers: `realize(gabriel(End(G)))` mapped onto `A`.

use std::sync::Arc;

use crate::algebra::{realize, Algebra, AlgebraPresentation};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::modcat::{is_isomorphic, ProjectiveSum};

use super::endo::{gabriel_presentation, EndomorphismAlgebra, ProjectiveGenerator};

#[derive(Clone, Debug)]
pub struct Recovery<F: Field> {
    pub gabriel: AlgebraPresentation<F>,
    pub realized: Arc<Algebra<F>>,
    /// Column `r` is the image in `A` of basis vector `r` of `realized`.
    pub isomorphism: Mat<F>,
}

/// Column `k`: the element `x` of `A` with `theta_j f_k theta_i^{-1}` equal to
/// right multiplication by `x`, where `theta` identifies each summand with
/// the projective `A e_v`.
pub fn endomorphisms_in_algebra<F: Field>(g: &ProjectiveGenerator<F>, end: &EndomorphismAlgebra<F>) -> Result<Mat<F>> {
    let alg = g.module.algebra();
    let f = alg.field();
    let mut thetas = Vec::new();
    let mut standard = Vec::new();
    for s in &g.summands {
        let p = ProjectiveSum::new(alg, &[s.vertex]);
        let theta = is_isomorphic(&s.module, &p.module)?
            .ok_or_else(|| Error::Verification(format!("the cover of {} is not the projective at its vertex", s.label)))?;
        thetas.push(theta);
        standard.push(p);
    }
    let mut cols = Vec::new();
    for m in &end.maps {
        let (i, j) = (m.from, m.to);
        let src = &g.summands[i];
        let inv = thetas[i].inverse().expect("isomorphism");
        let pre = inv.maps[i].mul_vec(&standard[i].generator(0));
        let f_k = src.map_to(&g.summands[j].module, &m.image);
        let out = thetas[j].maps[i].mul_vec(&f_k.maps[i].mul_vec(&pre));
        let mut x = vec![f.zero(); alg.dim()];
        for &b in &alg.block(j, i) {
            let e = standard[j].basis_element(0, b);
            let c = e.iter().position(|t| !f.is_zero(t)).expect("standard vector");
            x[b] = out[c].clone();
        }
        cols.push(x);
    }
    Ok(Mat::from_columns(f, alg.dim(), &cols))
}

/// Builds the recovered algebra and checks that the composite map onto `A`
/// is bijective, unital on vertices and multiplicative.
pub fn recover<F: Field>(g: &ProjectiveGenerator<F>, end: &EndomorphismAlgebra<F>) -> Result<Recovery<F>> {
    let a = g.module.algebra();
    let e = &end.algebra;
    let f = a.field();
    let gabriel = gabriel_presentation(e);
    let realized = Arc::new(realize(&gabriel)?);
    let into_end: Vec<Vec<F::Elem>> = (0..realized.dim())
        .map(|r| {
            let mut v = vec![f.zero(); e.dim()];
            for (c, p) in realized.words(r) {
                let w = e.eval_path(p);
                for (x, y) in v.iter_mut().zip(w) {
                    *x = f.add(x, &f.mul(c, &y));
                }
            }
            v
        })
        .collect();
    let psi = Mat::from_columns(f, e.dim(), &into_end);
    let phi = endomorphisms_in_algebra(g, end)?;
    let iso = phi.mul(&psi);
    if !iso.is_square() || iso.rank() != a.dim() {
        return Err(Error::Verification(format!(
            "recovered algebra has dimension {} against {}",
            realized.dim(),
            a.dim()
        )));
    }
    for v in 0..a.num_vertices() {
        if iso.column(v) != a.unit_vector(v) {
            return Err(Error::Verification(format!("vertex {} is not sent to its idempotent", a.vertex_label(v))));
        }
    }
    let images = iso.columns();
    for x in 0..realized.dim() {
        for y in 0..realized.dim() {
            let lhs = iso.mul_vec(&realized.mul(&realized.unit_vector(x), &realized.unit_vector(y)));
            if lhs != a.mul(&images[x], &images[y]) {
                return Err(Error::Verification(format!(
                    "recovered product of '{}' and '{}' differs",
                    realized.basis()[x].label,
                    realized.basis()[y].label
                )));
            }
        }
    }
    Ok(Recovery { gabriel, realized, isomorphism: iso })
}
