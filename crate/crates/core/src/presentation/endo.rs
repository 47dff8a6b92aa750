//! The projective generator built from covers and its endomorphism algebra.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraPresentation, BasisElement};
use crate::covers::CoverCertificate;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::modcat::{Module, ModuleMorphism};

/// One indecomposable projective `P_L` with a chosen generator `g` at its
/// top vertex. Every element of `P_L` is uniquely `sum c_b b g`.
#[derive(Clone, Debug)]
pub struct GeneratorSummand<F: Field> {
    pub label: String,
    pub vertex: usize,
    pub module: Module<F>,
    pub generator: Vec<F::Elem>,
    /// Per vertex `w`: inverse of the matrix whose columns are `b g` for
    /// `b` in the block from `vertex` to `w`.
    spans: Vec<Mat<F>>,
}

impl<F: Field> GeneratorSummand<F> {
    pub fn new(cert: &CoverCertificate<F>) -> Result<Self> {
        let m = &cert.module;
        let v = cert.vertex;
        let alg = m.algebra();
        let f = alg.field();
        let top = &cert.epi.maps[v];
        let k = (0..m.dims()[v])
            .find(|&c| !f.is_zero(top.at(0, c)))
            .ok_or_else(|| Error::CertificateInvalid(format!("cover of {} does not reach its simple", cert.label)))?;
        let mut generator = vec![f.zero(); m.dims()[v]];
        generator[k] = f.one();
        let actions = m.all_actions();
        let mut spans = Vec::new();
        for w in 0..alg.num_vertices() {
            let cols: Vec<Vec<F::Elem>> = alg.block(v, w).iter().map(|&b| actions[b].mul_vec(&generator)).collect();
            let s = Mat::from_columns(f, m.dims()[w], &cols);
            let inv = if s.is_square() { s.inverse() } else { None };
            spans.push(inv.ok_or_else(|| {
                Error::Verification(format!("cover of {} is not free on one generator at vertex {w}", cert.label))
            })?);
        }
        Ok(GeneratorSummand { label: cert.label.clone(), vertex: v, module: m.clone(), generator, spans })
    }

    /// Coordinates of `x` at vertex `w` in the basis `b g`.
    pub fn coords(&self, w: usize, x: &[F::Elem]) -> Vec<F::Elem> {
        self.spans[w].mul_vec(x)
    }

    /// The map `P_L -> target` sending `g` to `x` (a vector at the top vertex).
    pub fn map_to(&self, target: &Module<F>, x: &[F::Elem]) -> ModuleMorphism<F> {
        let alg = self.module.algebra();
        let f = alg.field();
        let actions = target.all_actions();
        let maps = (0..alg.num_vertices())
            .map(|w| {
                let cols: Vec<Vec<F::Elem>> = alg.block(self.vertex, w).iter().map(|&b| actions[b].mul_vec(x)).collect();
                Mat::from_columns(f, target.dims()[w], &cols).mul(&self.spans[w])
            })
            .collect();
        ModuleMorphism { source: self.module.clone(), target: target.clone(), maps }
    }
}

/// `G = sum_L P_L`, one summand per simple, in vertex order.
#[derive(Clone, Debug)]
pub struct ProjectiveGenerator<F: Field> {
    pub module: Module<F>,
    pub summands: Vec<GeneratorSummand<F>>,
    /// Labels of covers dropped because their simple already had one.
    pub repeated: Vec<String>,
}

pub fn projective_generator<F: Field>(covers: &[CoverCertificate<F>]) -> Result<ProjectiveGenerator<F>> {
    let alg = match covers.first() {
        Some(c) => c.module.algebra().clone(),
        None => return Err(Error::MissingCover("(no covers given)".into())),
    };
    let n = alg.num_vertices();
    let mut chosen: Vec<Option<&CoverCertificate<F>>> = vec![None; n];
    let mut repeated = Vec::new();
    for c in covers {
        if c.vertex >= n || !crate::modcat::same_algebra(c.module.algebra(), &alg) {
            return Err(Error::AlgebraMismatch(format!("cover of {} lives over another algebra", c.label)));
        }
        match chosen[c.vertex] {
            Some(_) => repeated.push(c.label.clone()),
            None => chosen[c.vertex] = Some(c),
        }
    }
    let mut summands = Vec::new();
    for (v, c) in chosen.iter().enumerate() {
        let c = c.ok_or_else(|| Error::MissingCover(alg.vertex_label(v).to_string()))?;
        summands.push(GeneratorSummand::new(c)?);
    }
    let parts: Vec<Module<F>> = summands.iter().map(|s| s.module.clone()).collect();
    let module = Module::direct_sum_all(&alg, &parts)?;
    Ok(ProjectiveGenerator { module, summands, repeated })
}

/// A basis vector of `End(G)`: the map `P_i -> P_j` with `g_i -> image`.
#[derive(Clone, Debug)]
pub struct HomBasisVector<F: Field> {
    pub from: usize,
    pub to: usize,
    pub image: Vec<F::Elem>,
}

/// `End(G)` with composition read left to right, so that `f * g` is
/// "first `f`, then `g`". A map `P_i -> P_j` then sits in the block with
/// source `j` and target `i`, exactly where `e_i A e_j` sits in `A`.
#[derive(Clone, Debug)]
pub struct EndomorphismAlgebra<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub maps: Vec<HomBasisVector<F>>,
}

/// Basis of `(P_j)_i`: the generator first when `i = j`, then the radical.
fn block_basis<F: Field>(s: &GeneratorSummand<F>, i: usize, rad: &Mat<F>) -> Vec<Vec<F::Elem>> {
    let mut out = Vec::new();
    if i == s.vertex {
        out.push(s.generator.clone());
    }
    out.extend(rad.columns());
    out
}

pub fn endomorphism_algebra<F: Field>(g: &ProjectiveGenerator<F>) -> Result<EndomorphismAlgebra<F>> {
    let n = g.summands.len();
    if n == 0 {
        return Err(Error::ZeroModule);
    }
    let field = g.module.field().clone();
    let f = &field;
    let rads: Vec<Vec<Mat<F>>> = g.summands.iter().map(|s| s.module.radical()).collect();
    let mut maps: Vec<HomBasisVector<F>> = Vec::new();
    let mut labels = Vec::new();
    for (i, s) in g.summands.iter().enumerate() {
        maps.push(HomBasisVector { from: i, to: i, image: s.generator.clone() });
        labels.push(format!("e_{}", s.label));
    }
    // summand `j` has top vertex `j`; `bases[i][j]` turns a vector of
    // `(P_j)_i` into coordinates over the maps `P_i -> P_j`
    let mut bases: Vec<Vec<SpanOf<F>>> = Vec::new();
    for i in 0..n {
        let mut row = Vec::new();
        for (j, t) in g.summands.iter().enumerate() {
            let vecs = block_basis(t, i, &rads[j][i]);
            let first = maps.len();
            for (k, x) in vecs.iter().enumerate() {
                if i == j && k == 0 {
                    continue;
                }
                maps.push(HomBasisVector { from: i, to: j, image: x.clone() });
                labels.push(format!("{}>{}:{}", t.label, g.summands[i].label, k));
            }
            let mut indices: Vec<usize> = Vec::new();
            if i == j {
                indices.push(i);
            }
            indices.extend(first..maps.len());
            let mat = Mat::from_columns(f, t.module.dims()[i], &vecs);
            let inv = mat.inverse().ok_or_else(|| Error::Verification("block basis is not a basis".into()))?;
            row.push(SpanOf { inverse: inv, indices });
        }
        bases.push(row);
    }
    let d = maps.len();
    let basis: Vec<BasisElement> = maps
        .iter()
        .zip(&labels)
        .map(|(m, l)| BasisElement { label: l.clone(), source: m.to, target: m.from })
        .collect();
    let alg = g.module.algebra();
    let actions: Vec<Vec<Mat<F>>> = g.summands.iter().map(|s| s.module.all_actions()).collect();
    let mut table = vec![Vec::new(); d * d];
    for (a, x) in maps.iter().enumerate() {
        for (b, y) in maps.iter().enumerate() {
            if x.to != y.from {
                continue;
            }
            // (first x, then y) sends g_i to y applied to x
            let (i, j, l) = (x.from, x.to, y.to);
            let c = g.summands[j].coords(i, &x.image);
            let mut z = vec![f.zero(); g.summands[l].module.dims()[i]];
            for (&bb, cb) in alg.block(j, i).iter().zip(&c) {
                if !f.is_zero(cb) {
                    let v = actions[l][bb].mul_vec(&y.image);
                    for (zz, vv) in z.iter_mut().zip(v) {
                        *zz = f.add(zz, &f.mul(cb, &vv));
                    }
                }
            }
            let span = &bases[i][l];
            let coords = span.inverse.mul_vec(&z);
            table[a * d + b] =
                coords.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(k, c)| (span.indices[k], c)).collect();
        }
    }
    let vertices = g.summands.iter().map(|s| s.label.clone()).collect();
    let algebra = Algebra::from_structure(f, vertices, basis, table)?;
    Ok(EndomorphismAlgebra { algebra: Arc::new(algebra), maps })
}

struct SpanOf<F: Field> {
    inverse: Mat<F>,
    indices: Vec<usize>,
}

/// The quiver and relations read off from `rad A / rad^2 A` and the kernel
/// of the path algebra, degree by degree.
pub fn gabriel_presentation<F: Field>(a: &Algebra<F>) -> AlgebraPresentation<F> {
    a.presentation()
}
