//! Finite-dimensional modules as quiver representations, and morphisms.

use std::sync::Arc;

use crate::algebra::{Algebra, Path};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, QuotientSpace};

/// A representation of the quiver of `algebra` satisfying its relations.
/// `maps[a]` has shape `dims[target(a)] x dims[source(a)]`.
#[derive(Clone, Debug)]
pub struct Module<F: Field> {
    algebra: Arc<Algebra<F>>,
    dims: Vec<usize>,
    maps: Vec<Mat<F>>,
}

impl<F: Field> PartialEq for Module<F> {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

pub(crate) fn same_algebra<F: Field>(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Per-vertex column bases of a submodule.
pub type Subspaces<F> = Vec<Mat<F>>;

impl<F: Field> Module<F> {
    /// Validates shapes and that every relation acts as zero.
    pub fn new(algebra: Arc<Algebra<F>>, dims: Vec<usize>, maps: Vec<Mat<F>>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.arrows.len() {
            return Err(Error::InvalidModule(format!(
                "expected {} dimensions and {} arrow maps, got {} and {}",
                q.num_vertices(),
                q.arrows.len(),
                dims.len(),
                maps.len()
            )));
        }
        for (a, m) in q.arrows.iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidModule(format!(
                    "map of arrow '{}' is {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        let module = Module { algebra, dims, maps };
        for (ri, rel) in module.algebra.relations().iter().enumerate() {
            let Some((s, t)) = rel.endpoints() else { continue };
            let f = module.field();
            let mut acc = Mat::zeros(f, module.dims[t], module.dims[s]);
            for (c, p) in &rel.terms {
                acc.add_scaled(c, &module.path_matrix(p));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidModule(format!(
                    "relation {ri} ({}) does not act as zero",
                    rel.format(f, module.algebra.quiver())
                )));
            }
        }
        Ok(module)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra<F>>, dims: Vec<usize>, maps: Vec<Mat<F>>) -> Self {
        Module { algebra, dims, maps }
    }

    pub fn zero(algebra: &Arc<Algebra<F>>) -> Self {
        let f = algebra.field();
        let maps = algebra.quiver().arrows.iter().map(|_| Mat::zeros(f, 0, 0)).collect();
        Module { algebra: algebra.clone(), dims: vec![0; algebra.num_vertices()], maps }
    }

    pub fn simple(algebra: &Arc<Algebra<F>>, v: usize) -> Self {
        let f = algebra.field();
        let mut dims = vec![0; algebra.num_vertices()];
        dims[v] = 1;
        let maps = algebra
            .quiver()
            .arrows
            .iter()
            .map(|a| Mat::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Module { algebra: algebra.clone(), dims, maps }
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn arrow_map(&self, a: usize) -> &Mat<F> {
        &self.maps[a]
    }

    pub fn arrow_maps(&self) -> &[Mat<F>] {
        &self.maps
    }

    /// Offset of vertex `v` in the concatenated coordinate vector.
    pub fn offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }

    /// The linear map of a path, `dims[target] x dims[source]`.
    pub fn path_matrix(&self, p: &Path) -> Mat<F> {
        let f = self.field();
        let mut m = Mat::identity(f, self.dims[p.source]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of basis element `i` of the algebra, as a map from its source
    /// vertex space to its target vertex space.
    pub fn basis_action(&self, i: usize) -> Mat<F> {
        let f = self.field();
        let b = &self.algebra.basis()[i];
        let mut acc = Mat::zeros(f, self.dims[b.target], self.dims[b.source]);
        for (c, p) in self.algebra.words(i) {
            acc.add_scaled(c, &self.path_matrix(p));
        }
        acc
    }

    pub fn all_actions(&self) -> Vec<Mat<F>> {
        (0..self.algebra.dim()).map(|i| self.basis_action(i)).collect()
    }

    pub fn direct_sum(&self, other: &Module<F>) -> Result<Module<F>> {
        check_same(self, other)?;
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(Module { algebra: self.algebra.clone(), dims, maps })
    }

    pub fn direct_sum_all(algebra: &Arc<Algebra<F>>, parts: &[Module<F>]) -> Result<Module<F>> {
        let mut acc = Module::zero(algebra);
        for p in parts {
            acc = acc.direct_sum(p)?;
        }
        Ok(acc)
    }

    /// The submodule generated by homogeneous elements `(vertex, vector)`,
    /// as canonical per-vertex column bases.
    pub fn spin(&self, gens: &[(usize, Vec<F::Elem>)]) -> Subspaces<F> {
        let actions = self.all_actions();
        self.spin_with(&actions, gens)
    }

    pub(crate) fn spin_with(&self, actions: &[Mat<F>], gens: &[(usize, Vec<F::Elem>)]) -> Subspaces<F> {
        let n = self.algebra.num_vertices();
        let mut vecs: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new(); n];
        for (v, x) in gens {
            for i in self.algebra.with_source(*v) {
                let t = self.algebra.basis()[i].target;
                vecs[t].push(actions[i].mul_vec(x));
            }
        }
        (0..n).map(|v| self.canonical_columns(v, &vecs[v])).collect()
    }

    pub(crate) fn canonical_columns(&self, v: usize, vecs: &[Vec<F::Elem>]) -> Mat<F> {
        let f = self.field();
        let rows = crate::exactla::canonical_span(f, self.dims[v], vecs);
        Mat::from_columns(f, self.dims[v], &rows)
    }

    /// Sum of submodules.
    pub fn sum_subspaces(&self, a: &Subspaces<F>, b: &Subspaces<F>) -> Subspaces<F> {
        (0..self.dims.len())
            .map(|v| {
                let mut vecs = a[v].columns();
                vecs.extend(b[v].columns());
                self.canonical_columns(v, &vecs)
            })
            .collect()
    }

    /// The submodule with the given per-vertex column bases (assumed
    /// independent and closed under the arrows) and its inclusion.
    pub fn submodule(&self, sub: &Subspaces<F>) -> Result<(Module<F>, ModuleMorphism<F>)> {
        let f = self.field();
        let q = self.algebra.quiver();
        let dims: Vec<usize> = sub.iter().map(|m| m.cols()).collect();
        let mut maps = Vec::with_capacity(q.arrows.len());
        for (ai, a) in q.arrows.iter().enumerate() {
            let image = self.maps[ai].mul(&sub[a.source]);
            let sol = sub[a.target].solve(&image);
            let m = sol.particular.ok_or_else(|| {
                Error::InvalidModule(format!("subspace is not closed under arrow '{}'", a.name))
            })?;
            maps.push(if dims[a.source] == 0 || dims[a.target] == 0 {
                Mat::zeros(f, dims[a.target], dims[a.source])
            } else {
                m
            });
        }
        let module = Module { algebra: self.algebra.clone(), dims, maps };
        let inclusion = ModuleMorphism { source: module.clone(), target: self.clone(), maps: sub.clone() };
        Ok((module, inclusion))
    }

    /// `M / U` with the projection and a linear section, given `U` by
    /// per-vertex column bases.
    pub fn quotient(&self, sub: &Subspaces<F>) -> Quotient<F> {
        let f = self.field();
        let q = self.algebra.quiver();
        let spaces: Vec<QuotientSpace<F>> =
            (0..self.dims.len()).map(|v| QuotientSpace::new(f, self.dims[v], &sub[v].columns())).collect();
        let dims: Vec<usize> = spaces.iter().map(|s| s.quotient_dim()).collect();
        let sections: Vec<Mat<F>> = spaces.iter().zip(&self.dims).map(|(s, &d)| s.section(f, d)).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| spaces[a.target].projection.mul(&self.maps[ai]).mul(&sections[a.source]))
            .collect();
        let module = Module { algebra: self.algebra.clone(), dims, maps };
        let projection = ModuleMorphism {
            source: self.clone(),
            target: module.clone(),
            maps: spaces.into_iter().map(|s| s.projection).collect(),
        };
        Quotient { module, projection, section: sections }
    }

    /// The radical `rad M = sum of the images of the arrows`, per vertex.
    pub fn radical(&self) -> Subspaces<F> {
        let q = self.algebra.quiver();
        let mut vecs: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new(); self.dims.len()];
        for (ai, a) in q.arrows.iter().enumerate() {
            vecs[a.target].extend(self.maps[ai].columns());
        }
        (0..self.dims.len()).map(|v| self.canonical_columns(v, &vecs[v])).collect()
    }

    /// The socle: joint kernel of all arrows leaving each vertex.
    pub fn socle(&self) -> Subspaces<F> {
        let f = self.field();
        let q = self.algebra.quiver();
        (0..self.dims.len())
            .map(|v| {
                let outgoing: Vec<usize> = (0..q.arrows.len()).filter(|&a| q.arrows[a].source == v).collect();
                let mut stacked = Mat::zeros(f, 0, self.dims[v]);
                for a in outgoing {
                    stacked = stacked.vstack(&self.maps[a]);
                }
                stacked.kernel_basis()
            })
            .collect()
    }

    /// `dim top(M)_v` for every vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical();
        self.dims.iter().zip(&rad).map(|(d, r)| d - r.cols()).collect()
    }

    /// The whole module as a subspace family.
    pub fn full_subspaces(&self) -> Subspaces<F> {
        self.dims.iter().map(|&d| Mat::identity(self.field(), d)).collect()
    }

    pub fn zero_subspaces(&self) -> Subspaces<F> {
        self.dims.iter().map(|&d| Mat::zeros(self.field(), d, 0)).collect()
    }
}

/// A quotient module with its projection and a vertexwise linear section.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub module: Module<F>,
    pub projection: ModuleMorphism<F>,
    pub section: Vec<Mat<F>>,
}

pub(crate) fn check_same<F: Field>(a: &Module<F>, b: &Module<F>) -> Result<()> {
    if same_algebra(&a.algebra, &b.algebra) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch("modules over different algebras".into()))
    }
}

/// A homomorphism given by one matrix per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMorphism<F: Field> {
    pub source: Module<F>,
    pub target: Module<F>,
    pub maps: Vec<Mat<F>>,
}

impl<F: Field> ModuleMorphism<F> {
    /// Validates shapes and commutativity with every arrow.
    pub fn new(source: Module<F>, target: Module<F>, maps: Vec<Mat<F>>) -> Result<Self> {
        check_same(&source, &target)?;
        let n = source.dims.len();
        if maps.len() != n {
            return Err(Error::ShapeMismatch(format!("expected {n} vertex maps, got {}", maps.len())));
        }
        for v in 0..n {
            if maps[v].rows() != target.dims[v] || maps[v].cols() != source.dims[v] {
                return Err(Error::ShapeMismatch(format!(
                    "map at vertex '{}' has the wrong shape",
                    source.algebra.vertex_label(v)
                )));
            }
        }
        let m = ModuleMorphism { source, target, maps };
        if let Some(a) = m.failing_arrow() {
            return Err(Error::InvalidModule(format!("maps do not commute with arrow '{a}'")));
        }
        Ok(m)
    }

    fn failing_arrow(&self) -> Option<String> {
        let q = self.source.algebra.quiver();
        q.arrows.iter().enumerate().find_map(|(ai, a)| {
            let left = self.maps[a.target].mul(&self.source.maps[ai]);
            let right = self.target.maps[ai].mul(&self.maps[a.source]);
            (left != right).then(|| a.name.clone())
        })
    }

    pub fn is_homomorphism(&self) -> bool {
        self.failing_arrow().is_none()
    }

    pub fn identity(m: &Module<F>) -> Self {
        let maps = m.dims.iter().map(|&d| Mat::identity(m.field(), d)).collect();
        ModuleMorphism { source: m.clone(), target: m.clone(), maps }
    }

    pub fn zero(source: &Module<F>, target: &Module<F>) -> Self {
        let f = source.field();
        let maps = source.dims.iter().zip(&target.dims).map(|(&s, &t)| Mat::zeros(f, t, s)).collect();
        ModuleMorphism { source: source.clone(), target: target.clone(), maps }
    }

    pub fn field(&self) -> &F {
        self.source.field()
    }

    /// `self` after `first`.
    pub fn after(&self, first: &ModuleMorphism<F>) -> Result<Self> {
        if first.target.dims != self.source.dims {
            return Err(Error::ShapeMismatch("composition of morphisms with mismatched modules".into()));
        }
        let maps = self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f)).collect();
        Ok(ModuleMorphism { source: first.source.clone(), target: self.target.clone(), maps })
    }

    pub fn add(&self, other: &ModuleMorphism<F>) -> Self {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect();
        ModuleMorphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let maps = self.maps.iter().map(|a| a.scale(c)).collect();
        ModuleMorphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn sub(&self, other: &ModuleMorphism<F>) -> Self {
        self.add(&other.scale(&self.field().neg(&self.field().one())))
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims == self.target.dims && self.is_injective()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_isomorphism() {
            return None;
        }
        let maps = self.maps.iter().map(|m| m.inverse()).collect::<Option<Vec<_>>>()?;
        Some(ModuleMorphism { source: self.target.clone(), target: self.source.clone(), maps })
    }

    /// Is some power of this endomorphism zero?
    pub fn is_nilpotent(&self) -> bool {
        let n = self.source.dim().max(1);
        self.maps.iter().all(|m| m.pow(n).is_zero())
    }

    /// Concatenated vertex maps, row-major per vertex.
    pub fn to_vector(&self) -> Vec<F::Elem> {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// Kernel, image and cokernel.
    pub fn factorization(&self) -> Factorization<F> {
        let f = self.field();
        let ker_spaces: Subspaces<F> = (0..self.maps.len())
            .map(|v| {
                let k = self.maps[v].kernel_basis();
                self.source.canonical_columns(v, &k.columns())
            })
            .collect();
        let (kernel, kernel_inclusion) = self.source.submodule(&ker_spaces).expect("kernel is a submodule");
        let im_spaces: Subspaces<F> =
            (0..self.maps.len()).map(|v| self.target.canonical_columns(v, &self.maps[v].columns())).collect();
        let (image, image_inclusion) = self.target.submodule(&im_spaces).expect("image is a submodule");
        let corestriction_maps = (0..self.maps.len())
            .map(|v| {
                if image.dims[v] == 0 {
                    Mat::zeros(f, 0, self.source.dims[v])
                } else {
                    im_spaces[v].solve(&self.maps[v]).particular.expect("columns lie in the image")
                }
            })
            .collect();
        let coimage = ModuleMorphism { source: self.source.clone(), target: image.clone(), maps: corestriction_maps };
        let coker = self.target.quotient(&im_spaces);
        Factorization {
            kernel,
            kernel_inclusion,
            image,
            coimage,
            image_inclusion,
            cokernel: coker.module,
            cokernel_projection: coker.projection,
        }
    }
}

/// `0 -> ker -> M -> im -> 0` and `0 -> im -> N -> coker -> 0`.
#[derive(Clone, Debug)]
pub struct Factorization<F: Field> {
    pub kernel: Module<F>,
    pub kernel_inclusion: ModuleMorphism<F>,
    pub image: Module<F>,
    pub coimage: ModuleMorphism<F>,
    pub image_inclusion: ModuleMorphism<F>,
    pub cokernel: Module<F>,
    pub cokernel_projection: ModuleMorphism<F>,
}
