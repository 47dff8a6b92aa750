//! Ext^1 and Ext^2 from minimal projective presentations, extension
//! realization and Yoneda composition.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, QuotientSpace};

use super::hom::HomSpace;
use super::module::{check_same, Module, ModuleMorphism};
use super::projective::{cover_of, ProjectiveCover, ProjectiveSum};

/// `0 -> Omega -> P0 -> B -> 0` with `P0 -> B` a projective cover.
#[derive(Clone, Debug)]
pub struct Syzygy<F: Field> {
    pub module: Module<F>,
    pub cover: ProjectiveCover<F>,
    pub omega: Module<F>,
    pub inclusion: ModuleMorphism<F>,
}

impl<F: Field> Syzygy<F> {
    pub fn new(b: &Module<F>) -> Self {
        let cover = cover_of(b);
        let fac = cover.epi.factorization();
        Syzygy { module: b.clone(), cover, omega: fac.kernel, inclusion: fac.kernel_inclusion }
    }

    pub fn projective(&self) -> &ProjectiveSum<F> {
        &self.cover.projective
    }
}

/// Lifts `g: P -> C` through the surjection `e: X -> C`, returning
/// `h: P -> X` with `e h = g`, determined on the generators of `P`.
pub(crate) fn lift_through<F: Field>(
    p: &ProjectiveSum<F>,
    g: &ModuleMorphism<F>,
    e: &ModuleMorphism<F>,
) -> Result<ModuleMorphism<F>> {
    let mut images = Vec::with_capacity(p.tops.len());
    for (i, &v) in p.tops.iter().enumerate() {
        let y = g.maps[v].mul_vec(&p.generator(i));
        let x = e.maps[v]
            .solve_vec(&y)
            .ok_or_else(|| Error::Verification("lift through a map that is not surjective".into()))?;
        images.push(x);
    }
    Ok(p.map_from_generators(&e.source, &images))
}

/// Factors `g: X -> Y` through the injection `i: Z -> Y` (image of `g`
/// must lie in the image of `i`).
pub(crate) fn factor_through_mono<F: Field>(
    g: &ModuleMorphism<F>,
    i: &ModuleMorphism<F>,
) -> Result<ModuleMorphism<F>> {
    let f = g.field();
    let maps = (0..g.maps.len())
        .map(|v| {
            if i.maps[v].cols() == 0 {
                if !g.maps[v].is_zero() {
                    return Err(Error::Verification("map does not factor through the injection".into()));
                }
                return Ok(Mat::zeros(f, 0, g.maps[v].cols()));
            }
            i.maps[v]
                .solve(&g.maps[v])
                .particular
                .ok_or_else(|| Error::Verification("map does not factor through the injection".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ModuleMorphism { source: g.source.clone(), target: i.source.clone(), maps })
}

/// `Hom(Omega, N)` modulo restrictions of maps `P -> N`, for a projective
/// `P` containing `Omega` via `inclusion`.
#[derive(Clone, Debug)]
struct CocycleQuotient<F: Field> {
    hom: HomSpace<F>,
    quotient: QuotientSpace<F>,
}

impl<F: Field> CocycleQuotient<F> {
    fn new(p: &ProjectiveSum<F>, inclusion: &ModuleMorphism<F>, omega: &Module<F>, n: &Module<F>) -> Result<Self> {
        let f = n.field();
        let hom = HomSpace::new(omega, n)?;
        let actions = n.all_actions();
        let mut restrictions = Vec::new();
        for (i, &v) in p.tops.iter().enumerate() {
            for k in 0..n.dims()[v] {
                let mut images: Vec<Vec<F::Elem>> =
                    p.tops.iter().map(|&w| vec![f.zero(); n.dims()[w]]).collect();
                images[i][k] = f.one();
                let g = p.map_with_actions(n, &actions, &images);
                restrictions.push(hom.coordinates(&g.after(inclusion)?));
            }
        }
        let quotient = QuotientSpace::new(f, hom.dim(), &restrictions);
        Ok(CocycleQuotient { hom, quotient })
    }

    fn dim(&self) -> usize {
        self.quotient.quotient_dim()
    }

    fn class_of(&self, cocycle: &ModuleMorphism<F>) -> Vec<F::Elem> {
        self.quotient.projection.mul_vec(&self.hom.coordinates(cocycle))
    }

    fn cocycle(&self, coords: &[F::Elem]) -> ModuleMorphism<F> {
        let f = self.hom.source.field();
        let mut full = vec![f.zero(); self.hom.dim()];
        for (c, &k) in coords.iter().zip(&self.quotient.complement) {
            full[k] = c.clone();
        }
        self.hom.combination(&full)
    }
}

/// `Ext^1(B, N)` computed on the stored syzygy of `B`.
#[derive(Clone, Debug)]
pub struct ExtSpace<F: Field> {
    pub syzygy: Arc<Syzygy<F>>,
    pub target: Module<F>,
    cocycles: CocycleQuotient<F>,
}

/// An element of `Ext^1(B, N)`: coordinates and a representing cocycle
/// `Omega B -> N`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtClass<F: Field> {
    pub coords: Vec<F::Elem>,
    pub cocycle: ModuleMorphism<F>,
}

/// `0 -> N -> E -> B -> 0`.
#[derive(Clone, Debug)]
pub struct ExtensionRealization<F: Field> {
    pub middle: Module<F>,
    pub inclusion: ModuleMorphism<F>,
    pub projection: ModuleMorphism<F>,
}

impl<F: Field> ExtensionRealization<F> {
    /// Injective, surjective and exact in the middle.
    pub fn is_short_exact(&self) -> bool {
        if !self.inclusion.is_injective() || !self.projection.is_surjective() {
            return false;
        }
        let Ok(comp) = self.projection.after(&self.inclusion) else { return false };
        comp.is_zero()
            && self.inclusion.maps.iter().zip(&self.middle.dims().to_vec()).enumerate().all(|(v, (m, &d))| {
                m.rank() + self.projection.maps[v].rank() == d
            })
    }
}

impl<F: Field> ExtSpace<F> {
    pub fn new(b: &Module<F>, n: &Module<F>) -> Result<Self> {
        check_same(b, n)?;
        Self::with_syzygy(Arc::new(Syzygy::new(b)), n)
    }

    /// Reuses a syzygy so that classes of different spaces over the same
    /// `B` share their cocycle domain.
    pub fn with_syzygy(syzygy: Arc<Syzygy<F>>, n: &Module<F>) -> Result<Self> {
        check_same(&syzygy.module, n)?;
        let cocycles = CocycleQuotient::new(syzygy.projective(), &syzygy.inclusion, &syzygy.omega, n)?;
        Ok(ExtSpace { syzygy, target: n.clone(), cocycles })
    }

    pub fn dim(&self) -> usize {
        self.cocycles.dim()
    }

    pub fn source(&self) -> &Module<F> {
        &self.syzygy.module
    }

    pub fn class(&self, coords: &[F::Elem]) -> ExtClass<F> {
        ExtClass { coords: coords.to_vec(), cocycle: self.cocycles.cocycle(coords) }
    }

    pub fn zero_class(&self) -> ExtClass<F> {
        let f = self.target.field();
        self.class(&vec![f.zero(); self.dim()])
    }

    pub fn basis(&self) -> Vec<ExtClass<F>> {
        let f = self.target.field();
        (0..self.dim())
            .map(|i| {
                let mut c = vec![f.zero(); self.dim()];
                c[i] = f.one();
                self.class(&c)
            })
            .collect()
    }

    /// Coordinates of the class of a cocycle `Omega B -> N`.
    pub fn class_of_cocycle(&self, cocycle: &ModuleMorphism<F>) -> Vec<F::Elem> {
        self.cocycles.class_of(cocycle)
    }

    /// The pushout of `0 -> Omega -> P0 -> B -> 0` along the cocycle.
    pub fn realize(&self, class: &ExtClass<F>) -> Result<ExtensionRealization<F>> {
        let syz = &self.syzygy;
        let n = &self.target;
        let p0 = &syz.projective().module;
        let sum = n.direct_sum(p0)?;
        let f = n.field();
        let minus_one = f.neg(&f.one());
        let nv = n.dims().len();
        // Image of x -> (phi x, -iota x).
        let sub: Vec<Mat<F>> = (0..nv)
            .map(|v| {
                let stacked = class.cocycle.maps[v].vstack(&syz.inclusion.maps[v].scale(&minus_one));
                sum.canonical_columns(v, &stacked.columns())
            })
            .collect();
        let quot = sum.quotient(&sub);
        let middle = quot.module.clone();
        let embed_n: Vec<Mat<F>> = (0..nv)
            .map(|v| Mat::identity(f, n.dims()[v]).vstack(&Mat::zeros(f, p0.dims()[v], n.dims()[v])))
            .collect();
        let inclusion = ModuleMorphism {
            source: n.clone(),
            target: middle.clone(),
            maps: (0..nv).map(|v| quot.projection.maps[v].mul(&embed_n[v])).collect(),
        };
        let on_sum: Vec<Mat<F>> = (0..nv)
            .map(|v| Mat::zeros(f, syz.module.dims()[v], n.dims()[v]).hstack(&syz.cover.epi.maps[v]))
            .collect();
        let projection = ModuleMorphism {
            source: middle.clone(),
            target: syz.module.clone(),
            maps: (0..nv).map(|v| on_sum[v].mul(&quot.section[v])).collect(),
        };
        Ok(ExtensionRealization { middle, inclusion, projection })
    }

    /// Class of a short exact sequence `0 -> N -> E -> B -> 0`.
    pub fn class_of_sequence(&self, seq: &ExtensionRealization<F>) -> Result<Vec<F::Elem>> {
        let syz = &self.syzygy;
        let h = lift_through(syz.projective(), &syz.cover.epi, &seq.projection)?;
        let restricted = h.after(&syz.inclusion)?;
        let cocycle = factor_through_mono(&restricted, &seq.inclusion)?;
        Ok(self.class_of_cocycle(&cocycle))
    }

    /// Pushes a class of `Ext^1(B, Q)` (computed on the same syzygy) along
    /// `phi: Q -> N`, where `self` is `Ext^1(B, N)`.
    pub fn push(&self, phi: &ModuleMorphism<F>, class: &ExtClass<F>) -> Result<Vec<F::Elem>> {
        if class.cocycle.source.dims() != self.syzygy.omega.dims() || phi.target.dims() != self.target.dims() {
            return Err(Error::ShapeMismatch("pushout along a map with mismatched modules".into()));
        }
        let pushed = phi.after(&class.cocycle)?;
        Ok(self.class_of_cocycle(&pushed))
    }
}

/// Class of the pushout of `class` (in `from = Ext^1(B, Q)`) along
/// `phi: Q -> N`, as an element of `to = Ext^1(B, N)`.
pub fn yoneda_push<F: Field>(
    phi: &ModuleMorphism<F>,
    class: &ExtClass<F>,
    from: &ExtSpace<F>,
    to: &ExtSpace<F>,
) -> Result<ExtClass<F>> {
    if phi.source.dims() != from.target.dims() || !Arc::ptr_eq(&from.syzygy, &to.syzygy) {
        return Err(Error::ShapeMismatch("pushout needs Ext spaces over one syzygy and a matching map".into()));
    }
    Ok(to.class(&to.push(phi, class)?))
}

/// The second syzygy: `0 -> Omega^2 -> P1 -> Omega -> 0`.
#[derive(Clone, Debug)]
pub struct SecondSyzygy<F: Field> {
    pub first: Arc<Syzygy<F>>,
    pub second: Syzygy<F>,
}

impl<F: Field> SecondSyzygy<F> {
    pub fn new(first: Arc<Syzygy<F>>) -> Self {
        let second = Syzygy::new(&first.omega);
        SecondSyzygy { first, second }
    }
}

/// `Ext^2(B, N) = Hom(Omega^2 B, N)` modulo restrictions from `Hom(P1, N)`.
#[derive(Clone, Debug)]
pub struct Ext2Space<F: Field> {
    pub syzygy: Arc<SecondSyzygy<F>>,
    pub target: Module<F>,
    cocycles: CocycleQuotient<F>,
}

impl<F: Field> Ext2Space<F> {
    pub fn new(b: &Module<F>, n: &Module<F>) -> Result<Self> {
        let first = Arc::new(Syzygy::new(b));
        Self::with_syzygy(Arc::new(SecondSyzygy::new(first)), n)
    }

    pub fn with_syzygy(syzygy: Arc<SecondSyzygy<F>>, n: &Module<F>) -> Result<Self> {
        let s = &syzygy.second;
        check_same(&s.module, n)?;
        let cocycles = CocycleQuotient::new(s.projective(), &s.inclusion, &s.omega, n)?;
        Ok(Ext2Space { syzygy, target: n.clone(), cocycles })
    }

    pub fn dim(&self) -> usize {
        self.cocycles.dim()
    }

    pub fn class_of_cocycle(&self, cocycle: &ModuleMorphism<F>) -> Vec<F::Elem> {
        self.cocycles.class_of(cocycle)
    }
}

/// Yoneda product `Ext^1(C, N) x Ext^1(B, C) -> Ext^2(B, N)`: `outer` is a
/// class of `Ext^1(C, N)`, `inner` of `Ext^1(B, C)`; `target` must be built
/// on the second syzygy extending `inner_space`'s syzygy.
pub fn yoneda_product<F: Field>(
    outer: &ExtClass<F>,
    outer_space: &ExtSpace<F>,
    inner: &ExtClass<F>,
    inner_space: &ExtSpace<F>,
    target: &Ext2Space<F>,
) -> Result<Vec<F::Elem>> {
    if !Arc::ptr_eq(&target.syzygy.first, &inner_space.syzygy) {
        return Err(Error::ShapeMismatch("Ext^2 space is not built on the inner syzygy".into()));
    }
    let second = &target.syzygy.second;
    let c_syz = &outer_space.syzygy;
    // inner cocycle Omega B -> C, precomposed with P1 -> Omega B, lifted to P0(C)
    let along = inner.cocycle.after(&second.cover.epi)?;
    let lifted = lift_through(second.projective(), &along, &c_syz.cover.epi)?;
    let on_omega2 = lifted.after(&second.inclusion)?;
    let into_omega_c = factor_through_mono(&on_omega2, &c_syz.inclusion)?;
    let cocycle = outer.cocycle.after(&into_omega_c)?;
    Ok(target.class_of_cocycle(&cocycle))
}
