//! The recollement attached to an idempotent `e` of an algebra `A`: the
//! open part is modules over the corner `eAe`, the closed part modules over
//! `A / AeA`, and six functors relate them to `A`-modules.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::covers::CoverCertificate;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};
use crate::modcat::{same_algebra, HomSpace, Module, ModuleMorphism, ProjectiveSum, Quotient};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Functor {
    /// `j^*`: restriction to the open vertices.
    OpenRestrict,
    /// `j_!`: `Ae (x)_{eAe} -`.
    OpenExtendByZero,
    /// `j_*`: `Hom_{eAe}(eA, -)`.
    OpenPushForward,
    /// `i_*`: inflation from `A/AeA`.
    ClosedInclude,
    /// `i^*`: largest quotient supported on the closed vertices.
    ClosedRestrict,
    /// `i^!`: largest submodule supported on the closed vertices.
    ClosedRestrictSub,
}

/// `(A, e)` with the corner and quotient algebras and their translations.
#[derive(Clone, Debug)]
pub struct RecollementDatum<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    /// Open vertices of `A`, sorted.
    pub open: Vec<usize>,
    /// Closed vertices of `A`, sorted.
    pub closed: Vec<usize>,
    pub corner: Arc<Algebra<F>>,
    /// Corner basis index -> basis index of `A`.
    corner_basis: Vec<usize>,
    corner_index: HashMap<usize, usize>,
    pub quotient: Arc<Algebra<F>>,
    /// Quotient basis index -> representative basis index of `A`.
    quotient_lift: Vec<usize>,
    quotient_projection: Mat<F>,
}

/// Where a simple of `A` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// `i_* T` for the simple `T` at this quotient vertex.
    Closed(usize),
    /// `j_!* E` for the simple `E` at this corner vertex.
    Open(usize),
}

#[derive(Clone, Debug)]
pub struct ClassifiedSimple<F: Field> {
    /// The vertex of `A` whose simple this is.
    pub vertex: usize,
    pub origin: Origin,
    pub module: Module<F>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transport {
    /// A cover of a corner simple becomes a cover over `A` under `j_!`.
    OpenExtend,
    /// `j^*` of a cover of an open simple of `A`.
    OpenRestrict,
    /// `i^*` of a cover of a closed simple of `A`.
    ClosedRestrict,
}

impl<F: Field> RecollementDatum<F> {
    /// `open` lists the vertices whose idempotents sum to `e`. Either part
    /// may be empty, giving the zero algebra on that side.
    pub fn new(algebra: Arc<Algebra<F>>, open: &[usize]) -> Result<Self> {
        let field = algebra.field().clone();
        let n = algebra.num_vertices();
        let mut open: Vec<usize> = open.to_vec();
        open.sort_unstable();
        open.dedup();
        if open.iter().any(|&v| v >= n) {
            return Err(Error::AlgebraMismatch("open vertex out of range".into()));
        }
        let closed: Vec<usize> = (0..n).filter(|v| !open.contains(v)).collect();
        let (corner, corner_basis) = if open.is_empty() {
            (Algebra::zero(&field), Vec::new())
        } else {
            let c = algebra.corner(&open)?;
            (c.algebra, c.basis_map)
        };
        let (quotient, quotient_lift, quotient_projection) = if closed.is_empty() {
            (Algebra::zero(&field), Vec::new(), Mat::zeros(&field, 0, algebra.dim()))
        } else {
            let q = algebra.quotient_by_idempotent_ideal(&open)?;
            (q.algebra, q.lift, q.projection)
        };
        let corner_index = corner_basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        Ok(RecollementDatum {
            algebra,
            open,
            closed,
            corner: Arc::new(corner),
            corner_basis,
            corner_index,
            quotient: Arc::new(quotient),
            quotient_lift,
            quotient_projection,
        })
    }

    fn expect_over(&self, m: &Module<F>, alg: &Arc<Algebra<F>>, what: &str) -> Result<()> {
        if same_algebra(m.algebra(), alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(format!("{what} expects a module over the {}", self.side_name(alg))))
        }
    }

    fn side_name(&self, alg: &Arc<Algebra<F>>) -> &'static str {
        if Arc::ptr_eq(alg, &self.corner) {
            "corner algebra"
        } else if Arc::ptr_eq(alg, &self.quotient) {
            "quotient algebra"
        } else {
            "ambient algebra"
        }
    }

    pub fn apply(&self, which: Functor, m: &Module<F>) -> Result<Module<F>> {
        match which {
            Functor::OpenRestrict => self.j_upper_star(m),
            Functor::OpenExtendByZero => Ok(self.j_lower_shriek(m)?.0),
            Functor::OpenPushForward => self.j_lower_star(m),
            Functor::ClosedInclude => self.i_lower_star(m),
            Functor::ClosedRestrict => Ok(self.i_upper_star(m)?.0),
            Functor::ClosedRestrictSub => Ok(self.i_upper_shriek(m)?.0),
        }
    }

    /// `eM` as a corner module; corner arrows act through their images in `A`.
    pub fn j_upper_star(&self, m: &Module<F>) -> Result<Module<F>> {
        self.expect_over(m, &self.algebra, "j^*")?;
        let dims: Vec<usize> = self.open.iter().map(|&v| m.dims()[v]).collect();
        let maps = (0..self.corner.quiver().arrows.len())
            .map(|a| m.basis_action(self.corner_basis[self.corner.arrow_basis(a)]))
            .collect();
        Ok(Module::new_unchecked(self.corner.clone(), dims, maps))
    }

    /// A module over `A` supported on the closed vertices, seen over `A/AeA`.
    fn descend(&self, m: &Module<F>) -> Module<F> {
        let dims: Vec<usize> = self.closed.iter().map(|&v| m.dims()[v]).collect();
        let maps = (0..self.quotient.quiver().arrows.len())
            .map(|a| m.basis_action(self.quotient_lift[self.quotient.arrow_basis(a)]))
            .collect();
        Module::new_unchecked(self.quotient.clone(), dims, maps)
    }

    /// Inflation of a quotient-algebra module.
    pub fn i_lower_star(&self, t: &Module<F>) -> Result<Module<F>> {
        self.expect_over(t, &self.quotient, "i_*")?;
        let f = self.algebra.field();
        let position: HashMap<usize, usize> = self.closed.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dims = vec![0; self.algebra.num_vertices()];
        for (i, &v) in self.closed.iter().enumerate() {
            dims[v] = t.dims()[i];
        }
        let actions = t.all_actions();
        let maps = self
            .algebra
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Mat::zeros(f, dims[a.target], dims[a.source]);
                if position.contains_key(&a.source) && position.contains_key(&a.target) {
                    let image = self.quotient_projection.column(self.algebra.arrow_basis(ai));
                    for (k, c) in image.iter().enumerate() {
                        if !f.is_zero(c) {
                            m.add_scaled(c, &actions[k]);
                        }
                    }
                }
                m
            })
            .collect();
        Ok(Module::new_unchecked(self.algebra.clone(), dims, maps))
    }

    /// `M / AeAM` over the quotient algebra, with the projection
    /// `M -> i_* i^* M`.
    pub fn i_upper_star(&self, m: &Module<F>) -> Result<(Module<F>, ModuleMorphism<F>)> {
        self.expect_over(m, &self.algebra, "i^*")?;
        let f = m.field();
        let mut gens = Vec::new();
        for &u in &self.open {
            for k in 0..m.dims()[u] {
                let mut x = vec![f.zero(); m.dims()[u]];
                x[k] = f.one();
                gens.push((u, x));
            }
        }
        let sub = m.spin(&gens);
        let q = m.quotient(&sub);
        Ok((self.descend(&q.module), q.projection))
    }

    /// Elements killed by `eA`, over the quotient algebra, with the
    /// inclusion `i_* i^! M -> M`.
    pub fn i_upper_shriek(&self, m: &Module<F>) -> Result<(Module<F>, ModuleMorphism<F>)> {
        self.expect_over(m, &self.algebra, "i^!")?;
        let f = m.field();
        let alg = &self.algebra;
        let sub: Vec<Mat<F>> = (0..alg.num_vertices())
            .map(|w| {
                if self.open.contains(&w) {
                    return Mat::zeros(f, m.dims()[w], 0);
                }
                let mut stacked = Mat::zeros(f, 0, m.dims()[w]);
                for &u in &self.open {
                    for b in alg.block(w, u) {
                        stacked = stacked.vstack(&m.basis_action(b));
                    }
                }
                m.canonical_columns(w, &stacked.kernel_basis().columns())
            })
            .collect();
        let (s, inc) = m.submodule(&sub)?;
        Ok((self.descend(&s), inc))
    }

    /// `Ae (x)_{eAe} N` with the unit `N -> j^* j_! N`.
    pub fn j_lower_shriek(&self, n: &Module<F>) -> Result<(Module<F>, ModuleMorphism<F>)> {
        self.expect_over(n, &self.corner, "j_!")?;
        let f = n.field();
        let (free, gens, q) = self.shriek_quotient(n);
        let restricted = self.j_upper_star(&q.module)?;
        let unit_maps = (0..self.open.len())
            .map(|cu| {
                let u = self.open[cu];
                let cols: Vec<Vec<F::Elem>> =
                    (0..n.dims()[cu]).map(|k| q.projection.maps[u].mul_vec(&free.generator(gens[cu] + k))).collect();
                Mat::from_columns(f, q.module.dims()[u], &cols)
            })
            .collect();
        let unit = ModuleMorphism { source: n.clone(), target: restricted, maps: unit_maps };
        Ok((q.module, unit))
    }

    fn corner_vertex(&self, v: usize) -> usize {
        self.open.iter().position(|&u| u == v).expect("open vertex")
    }

    /// `sum_u P(u)^{dim N_u}` with the index of the first generator per
    /// corner vertex.
    fn free_over_open(&self, n: &Module<F>) -> (ProjectiveSum<F>, Vec<usize>) {
        let mut tops = Vec::new();
        let mut first = Vec::new();
        for (cu, &u) in self.open.iter().enumerate() {
            first.push(tops.len());
            tops.extend(std::iter::repeat(u).take(n.dims()[cu]));
        }
        (ProjectiveSum::new(&self.algebra, &tops), first)
    }

    /// `eAe_w` as a left corner module.
    fn corner_column(&self, w: usize) -> Module<F> {
        let f = self.algebra.field();
        let alg = &self.algebra;
        let blocks: Vec<Vec<usize>> = self.open.iter().map(|&u| alg.block(w, u)).collect();
        let dims: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
        let maps = self
            .corner
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(ca, arrow)| {
                let g = self.corner_basis[self.corner.arrow_basis(ca)];
                let (src, tgt) = (&blocks[arrow.source], &blocks[arrow.target]);
                let mut m = Mat::zeros(f, tgt.len(), src.len());
                for (c, &x) in src.iter().enumerate() {
                    for (k, val) in alg.mul_basis(g, x) {
                        let r = tgt.iter().position(|y| y == k).expect("product stays in the block");
                        m.set(r, c, val.clone());
                    }
                }
                m
            })
            .collect();
        Module::new_unchecked(self.corner.clone(), dims, maps)
    }

    /// Right multiplication by basis vector `b` (block `w -> w2`), as a map
    /// `eAe_{w2} -> eAe_w`.
    fn right_mult(&self, b: usize, from: &Module<F>, to: &Module<F>) -> ModuleMorphism<F> {
        let f = self.algebra.field();
        let alg = &self.algebra;
        let be = &alg.basis()[b];
        let maps = self
            .open
            .iter()
            .map(|&u| {
                let src = alg.block(be.target, u);
                let tgt = alg.block(be.source, u);
                let mut m = Mat::zeros(f, tgt.len(), src.len());
                for (c, &y) in src.iter().enumerate() {
                    for (k, val) in alg.mul_basis(y, b) {
                        let r = tgt.iter().position(|x| x == k).expect("product stays in the block");
                        m.set(r, c, val.clone());
                    }
                }
                m
            })
            .collect();
        ModuleMorphism { source: from.clone(), target: to.clone(), maps }
    }

    fn pushforward_parts(&self, n: &Module<F>) -> (Vec<Module<F>>, Vec<HomSpace<F>>) {
        let columns: Vec<Module<F>> = (0..self.algebra.num_vertices()).map(|w| self.corner_column(w)).collect();
        let homs = columns.iter().map(|x| HomSpace::new(x, n).expect("corner modules")).collect();
        (columns, homs)
    }

    /// `Hom_{eAe}(eA, N)`; arrow `a: w -> w2` sends `f` to `f(- a)`.
    pub fn j_lower_star(&self, n: &Module<F>) -> Result<Module<F>> {
        self.expect_over(n, &self.corner, "j_*")?;
        let f = n.field();
        let (columns, homs) = self.pushforward_parts(n);
        let dims: Vec<usize> = homs.iter().map(|h| h.dim()).collect();
        let maps = self
            .algebra
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let r = self.right_mult(self.algebra.arrow_basis(ai), &columns[a.target], &columns[a.source]);
                let cols: Vec<Vec<F::Elem>> = homs[a.source]
                    .basis
                    .iter()
                    .map(|h| homs[a.target].coordinates(&h.after(&r).expect("composable")))
                    .collect();
                Mat::from_columns(f, dims[a.target], &cols)
            })
            .collect();
        Ok(Module::new_unchecked(self.algebra.clone(), dims, maps))
    }

    /// The canonical map `j_! N -> j_* N`.
    pub fn canonical_map(&self, n: &Module<F>) -> Result<ModuleMorphism<F>> {
        self.expect_over(n, &self.corner, "j_!*")?;
        let f = n.field();
        let star = self.j_lower_star(n)?;
        let (columns, homs) = self.pushforward_parts(n);
        let (free, _, shriek) = self.shriek_quotient(n);
        let actions = n.all_actions();
        let mut images = Vec::new();
        for (cu, &u) in self.open.iter().enumerate() {
            for k in 0..n.dims()[cu] {
                let mut nk = vec![f.zero(); n.dims()[cu]];
                nk[k] = f.one();
                // y -> y . n_k on eAe_u
                let maps = self
                    .open
                    .iter()
                    .enumerate()
                    .map(|(cu2, &u2)| {
                        let cols: Vec<Vec<F::Elem>> = self
                            .algebra
                            .block(u, u2)
                            .iter()
                            .map(|b| actions[self.corner_index[b]].mul_vec(&nk))
                            .collect();
                        Mat::from_columns(f, n.dims()[cu2], &cols)
                    })
                    .collect();
                let h = ModuleMorphism { source: columns[u].clone(), target: n.clone(), maps };
                images.push(homs[u].coordinates(&h));
            }
        }
        let on_free = free.map_from_generators(&star, &images);
        // factors through the quotient j_! N of the free module
        let maps = (0..self.algebra.num_vertices()).map(|w| on_free.maps[w].mul(&shriek.section[w])).collect();
        Ok(ModuleMorphism { source: shriek.module, target: star, maps })
    }

    /// The free module over the open projectives modulo the tensor
    /// relations `g (x) n = e (x) g n` for radical corner basis vectors `g`.
    fn shriek_quotient(&self, n: &Module<F>) -> (ProjectiveSum<F>, Vec<usize>, Quotient<F>) {
        let f = n.field();
        let (free, gens) = self.free_over_open(n);
        let corner_actions = n.all_actions();
        let mut relations = Vec::new();
        for (g, &b) in self.corner_basis.iter().enumerate() {
            if g < self.corner.num_vertices() {
                continue;
            }
            let be = &self.algebra.basis()[b];
            let (cu, cu2) = (self.corner_vertex(be.source), self.corner_vertex(be.target));
            for k in 0..n.dims()[cu] {
                let mut r = free.basis_element(gens[cu] + k, b);
                for (j, c) in corner_actions[g].column(k).iter().enumerate() {
                    if !f.is_zero(c) {
                        let e = free.generator(gens[cu2] + j);
                        for (slot, val) in r.iter_mut().zip(e) {
                            *slot = f.sub(slot, &f.mul(c, &val));
                        }
                    }
                }
                relations.push((be.target, r));
            }
        }
        let sub = free.module.spin(&relations);
        let q = free.module.quotient(&sub);
        (free, gens, q)
    }

    /// Whether `Ae (x)_{eAe} eA -> AeA` is injective, tested on every
    /// indecomposable projective: `j_! j^* P(v)` against `AeA P(v)`. This is
    /// the degree-zero part of the condition under which the algebra models
    /// a glued derived recollement.
    pub fn is_stratifying(&self) -> Result<bool> {
        for v in 0..self.algebra.num_vertices() {
            let p = crate::modcat::projective(&self.algebra, v);
            let (shriek, _) = self.j_lower_shriek(&self.j_upper_star(&p)?)?;
            let (top, _) = self.i_upper_star(&p)?;
            if shriek.dim() + top.dim() != p.dim() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The image of `j_! N -> j_* N`.
    pub fn intermediate_extension(&self, n: &Module<F>) -> Result<Module<F>> {
        Ok(self.canonical_map(n)?.factorization().image)
    }

    /// The simples of `A`, each identified as `i_* T` or `j_!* E`.
    pub fn classify_simples(&self) -> Result<Vec<ClassifiedSimple<F>>> {
        let mut out = Vec::new();
        for t in 0..self.quotient.num_vertices() {
            let m = self.i_lower_star(&Module::simple(&self.quotient, t))?;
            out.push(ClassifiedSimple { vertex: self.closed[t], origin: Origin::Closed(t), module: m });
        }
        for e in 0..self.corner.num_vertices() {
            let m = self.intermediate_extension(&Module::simple(&self.corner, e))?;
            out.push(ClassifiedSimple { vertex: self.open[e], origin: Origin::Open(e), module: m });
        }
        for c in &out {
            if c.module != Module::simple(&self.algebra, c.vertex) {
                return Err(Error::Verification(format!(
                    "simple at '{}' is not recovered from the glueing",
                    self.algebra.vertex_label(c.vertex)
                )));
            }
        }
        out.sort_by_key(|c| c.vertex);
        Ok(out)
    }

    /// Moves a cover certificate across the recollement and re-verifies it.
    pub fn transport_cover(&self, case: Transport, cert: &CoverCertificate<F>) -> Result<CoverCertificate<F>> {
        let invalid = |why: &str| Error::CertificateInvalid(format!("{why}: {}", cert.to_json()));
        match case {
            Transport::OpenExtend => {
                self.expect_over(&cert.module, &self.corner, "open-extend")?;
                let (p, _) = self.j_lower_shriek(&cert.module)?;
                CoverCertificate::new(p, self.open[cert.vertex])
            }
            Transport::OpenRestrict => {
                let cv = self.open.iter().position(|&u| u == cert.vertex).ok_or_else(|| invalid("simple is not open"))?;
                CoverCertificate::new(self.j_upper_star(&cert.module)?, cv)
            }
            Transport::ClosedRestrict => {
                let qv =
                    self.closed.iter().position(|&u| u == cert.vertex).ok_or_else(|| invalid("simple is not closed"))?;
                CoverCertificate::new(self.i_upper_star(&cert.module)?.0, qv)
            }
        }
    }
}
