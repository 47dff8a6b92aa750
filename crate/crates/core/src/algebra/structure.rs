//! Split basic algebras given by structure constants, together with the
//! quiver presentation read off from their radical layers.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::quiver::{Arrow, Path, Quiver, Relation};
use super::AlgebraPresentation;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};

/// One basis vector of an algebra. It lies in the block `e_target A e_source`,
/// i.e. it behaves like a path from `source` to `target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BasisElement {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A split basic finite-dimensional algebra.
///
/// Basis invariant: the first `n` basis vectors are the vertex idempotents
/// `e_0, .., e_{n-1}`; the remaining ones span the radical and each lies in
/// a single block `e_t A e_s`. Every arrow of `quiver` is one of the basis
/// vectors, and `words[i]` expresses basis vector `i` as a combination of
/// paths in `quiver`.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<F: Field> {
    field: F,
    quiver: Quiver,
    relations: Vec<Relation<F>>,
    basis: Vec<BasisElement>,
    table: Vec<Vec<(usize, F::Elem)>>,
    arrow_basis: Vec<usize>,
    words: Vec<Vec<(F::Elem, Path)>>,
    loewy_length: usize,
}

impl<F: Field> Algebra<F> {
    /// The zero ring: no vertices, dimension zero.
    pub fn zero(field: &F) -> Self {
        Algebra {
            field: field.clone(),
            quiver: Quiver { vertices: Vec::new(), arrows: Vec::new() },
            relations: Vec::new(),
            basis: Vec::new(),
            table: Vec::new(),
            arrow_basis: Vec::new(),
            words: Vec::new(),
            loewy_length: 0,
        }
    }

    pub(crate) fn from_parts(
        field: F,
        quiver: Quiver,
        relations: Vec<Relation<F>>,
        basis: Vec<BasisElement>,
        table: Vec<Vec<(usize, F::Elem)>>,
        arrow_basis: Vec<usize>,
        words: Vec<Vec<(F::Elem, Path)>>,
        loewy_length: usize,
    ) -> Self {
        Algebra { field, quiver, relations, basis, table, arrow_basis, words, loewy_length }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }
    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }
    pub fn vertex_label(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }
    /// Basis index of the arrow `a`.
    pub fn arrow_basis(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }
    pub fn words(&self, i: usize) -> &[(F::Elem, Path)] {
        &self.words[i]
    }
    /// Smallest `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    pub fn presentation(&self) -> AlgebraPresentation<F> {
        AlgebraPresentation {
            field: self.field.clone(),
            quiver: self.quiver.clone(),
            relations: self.relations.clone(),
        }
    }

    /// Sparse expansion of `b_i * b_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i * self.dim() + j]
    }

    pub fn unit_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&ab, c));
                }
            }
        }
        out
    }

    /// Basis indices lying in `e_target A e_source`.
    pub fn block(&self, source: usize, target: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source == source && self.basis[i].target == target).collect()
    }

    /// Basis indices with the given source, i.e. a basis of `A e_source`.
    pub fn with_source(&self, source: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source == source).collect()
    }

    pub fn is_radical(&self, i: usize) -> bool {
        i >= self.num_vertices()
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on every basis triple.
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        let f = &self.field;
        let combine = |terms: &mut dyn Iterator<Item = (&F::Elem, &[(usize, F::Elem)])>| {
            let mut acc = vec![f.zero(); d];
            for (c, expansion) in terms {
                for (m, e) in expansion {
                    acc[*m] = f.add(&acc[*m], &f.mul(c, e));
                }
            }
            acc
        };
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for k in 0..d {
                    let jk = self.mul_basis(j, k);
                    let left = combine(&mut ij.iter().map(|(m, c)| (c, self.mul_basis(*m, k))));
                    let right = combine(&mut jk.iter().map(|(m, c)| (c, self.mul_basis(i, *m))));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Evaluates a path of the quiver as an algebra element.
    pub fn eval_path(&self, p: &Path) -> Vec<F::Elem> {
        if p.is_trivial() {
            return self.unit_vector(p.source);
        }
        let mut x = self.unit_vector(self.arrow_basis[p.arrows[0]]);
        for &a in &p.arrows[1..] {
            x = self.mul(&self.unit_vector(self.arrow_basis[a]), &x);
        }
        x
    }

    /// Builds an algebra from structure constants and derives its quiver,
    /// path words and a minimal set of relations.
    ///
    /// `basis` must list the vertex idempotents first (in vertex order)
    /// followed by a block-adapted basis of the radical.
    pub fn from_structure(
        field: &F,
        vertices: Vec<String>,
        basis: Vec<BasisElement>,
        table: Vec<Vec<(usize, F::Elem)>>,
    ) -> Result<Self> {
        let n = vertices.len();
        let d = basis.len();
        if table.len() != d * d {
            return Err(Error::ShapeMismatch("structure table must have dim^2 entries".into()));
        }
        if d < n {
            return Err(Error::NotSplitBasic("fewer basis vectors than vertices".into()));
        }
        for (v, b) in basis.iter().enumerate().take(n) {
            if b.source != v || b.target != v {
                return Err(Error::NotSplitBasic(format!("basis vector {v} is not the idempotent of vertex {v}")));
            }
        }
        let raw = Algebra {
            field: field.clone(),
            quiver: Quiver { vertices: vertices.clone(), arrows: Vec::new() },
            relations: Vec::new(),
            basis: basis.clone(),
            table,
            arrow_basis: Vec::new(),
            words: Vec::new(),
            loewy_length: 0,
        };
        raw.check_idempotents()?;

        // rad^2 and the arrows as a basis-vector complement of it.
        let rad: Vec<usize> = (n..d).collect();
        let mut rad2 = Vec::new();
        for &i in &rad {
            for &j in &rad {
                let p = dense(field, d, raw.mul_basis(i, j));
                if p.iter().any(|x| !field.is_zero(x)) {
                    rad2.push(p);
                }
            }
        }
        let pivots = reversed_pivots(field, d, &rad2);
        let arrow_basis: Vec<usize> = rad.iter().copied().filter(|i| !pivots.contains(i)).collect();
        let arrows: Vec<Arrow> = arrow_basis
            .iter()
            .map(|&i| Arrow { name: basis[i].label.clone(), source: basis[i].source, target: basis[i].target })
            .collect();
        let quiver = Quiver::new(vertices, arrows)?;

        // Loewy length: smallest L with rad^L = 0.
        let mut layer: Vec<Vec<F::Elem>> = rad.iter().map(|&i| raw.unit_vector(i)).collect();
        let mut loewy = 1;
        while !layer.is_empty() {
            if loewy > d + 1 {
                return Err(Error::NotSplitBasic("radical is not nilpotent".into()));
            }
            let mut next = Vec::new();
            for x in &layer {
                for &j in &rad {
                    next.push(raw.mul(x, &raw.unit_vector(j)));
                }
            }
            layer = crate::exactla::canonical_span(field, d, &next);
            loewy += 1;
        }
        if n == d {
            loewy = 1;
        }
        if d == 0 {
            loewy = 0;
        }

        let mut alg = Algebra {
            quiver,
            arrow_basis,
            loewy_length: loewy,
            ..raw
        };

        // Evaluate every path of length <= L.
        let paths = alg.quiver.paths_below(loewy + 1);
        let values: Vec<Vec<F::Elem>> = paths.iter().map(|p| alg.eval_path(p)).collect();
        let phi = Mat::from_columns(field, d, &values);

        let mut words = Vec::with_capacity(d);
        for i in 0..d {
            let x = phi
                .solve_vec(&alg.unit_vector(i))
                .ok_or_else(|| Error::NotSplitBasic(format!("basis vector '{}' is not generated by arrows", basis[i].label)))?;
            words.push(
                x.iter()
                    .enumerate()
                    .filter(|(_, c)| !field.is_zero(c))
                    .map(|(k, c)| (c.clone(), paths[k].clone()))
                    .collect(),
            );
        }
        alg.words = words;
        alg.relations = minimal_relations(field, &alg.quiver, &paths, &phi);
        if !alg.is_associative() {
            return Err(Error::NotSplitBasic("multiplication is not associative".into()));
        }
        Ok(alg)
    }

    fn check_idempotents(&self) -> Result<()> {
        let n = self.num_vertices();
        let f = &self.field;
        for i in 0..n {
            for j in 0..n {
                let expected: Vec<(usize, F::Elem)> = if i == j { vec![(i, f.one())] } else { Vec::new() };
                if self.mul_basis(i, j) != expected.as_slice() {
                    return Err(Error::NotSplitBasic(format!("e_{i} e_{j} has the wrong product")));
                }
            }
        }
        for (k, b) in self.basis.iter().enumerate() {
            for v in 0..n {
                let left: Vec<(usize, F::Elem)> = if v == b.target { vec![(k, f.one())] } else { Vec::new() };
                let right: Vec<(usize, F::Elem)> = if v == b.source { vec![(k, f.one())] } else { Vec::new() };
                if self.mul_basis(v, k) != left.as_slice() || self.mul_basis(k, v) != right.as_slice() {
                    return Err(Error::NotSplitBasic(format!("basis vector '{}' is not block homogeneous", b.label)));
                }
            }
        }
        Ok(())
    }

    /// The corner algebra `e A e` for `e` the sum of the idempotents of
    /// `vertices`. Its basis is the subset of basis vectors in those blocks.
    pub fn corner(&self, vertices: &[usize]) -> Result<Corner<F>> {
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if vs.is_empty() {
            return Err(Error::EmptyCorner);
        }
        if vs.iter().any(|&v| v >= self.num_vertices()) {
            return Err(Error::AlgebraMismatch("corner vertex out of range".into()));
        }
        let new_index: HashMap<usize, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let basis_map: Vec<usize> = (0..self.dim())
            .filter(|&i| new_index.contains_key(&self.basis[i].source) && new_index.contains_key(&self.basis[i].target))
            .collect();
        let position: HashMap<usize, usize> = basis_map.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let basis = basis_map
            .iter()
            .map(|&b| BasisElement {
                label: self.basis[b].label.clone(),
                source: new_index[&self.basis[b].source],
                target: new_index[&self.basis[b].target],
            })
            .collect();
        let mut table = Vec::with_capacity(basis_map.len().pow(2));
        for &i in &basis_map {
            for &j in &basis_map {
                table.push(self.mul_basis(i, j).iter().map(|(k, c)| (position[k], c.clone())).collect());
            }
        }
        let labels = vs.iter().map(|&v| self.quiver.vertices[v].clone()).collect();
        let algebra = Algebra::from_structure(&self.field, labels, basis, table)?;
        Ok(Corner { algebra, vertex_map: vs, basis_map })
    }

    /// `A / A e A` for `e` the sum of the idempotents of `vertices`.
    pub fn quotient_by_idempotent_ideal(&self, vertices: &[usize]) -> Result<QuotientAlgebra<F>> {
        let f = &self.field;
        let d = self.dim();
        let in_e: Vec<bool> = (0..self.num_vertices()).map(|v| vertices.contains(&v)).collect();
        if in_e.iter().all(|&x| x) {
            return Err(Error::ZeroAlgebra);
        }
        let mut gens = Vec::new();
        for i in 0..d {
            if !in_e[self.basis[i].source] {
                continue;
            }
            for j in 0..d {
                if self.basis[j].target != self.basis[i].source {
                    continue;
                }
                let p = dense(f, d, self.mul_basis(i, j));
                if p.iter().any(|x| !f.is_zero(x)) {
                    gens.push(p);
                }
            }
        }
        // Reversed column order: pivots land on the largest basis indices.
        let rev: Vec<Vec<F::Elem>> = gens.iter().map(|g| g.iter().rev().cloned().collect()).collect();
        let (ech, piv) = if rev.is_empty() {
            (Mat::zeros(f, 0, d), Vec::new())
        } else {
            Mat::from_fn(f, rev.len(), d, |r, c| rev[r][c].clone()).echelon()
        };
        let pivot_orig: Vec<usize> = piv.iter().map(|&c| d - 1 - c).collect();
        let lift: Vec<usize> = (0..d).filter(|i| !pivot_orig.contains(i)).collect();
        let mut projection = Mat::zeros(f, lift.len(), d);
        for (q, &b) in lift.iter().enumerate() {
            projection.set(q, b, f.one());
        }
        for (r, &p) in pivot_orig.iter().enumerate() {
            for (q, &b) in lift.iter().enumerate() {
                let c = ech.at(r, d - 1 - b);
                if !f.is_zero(c) {
                    projection.set(q, p, f.neg(c));
                }
            }
        }
        let keep: Vec<usize> = (0..self.num_vertices()).filter(|&v| !in_e[v]).collect();
        let vindex: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let basis: Vec<BasisElement> = lift
            .iter()
            .map(|&b| BasisElement {
                label: self.basis[b].label.clone(),
                source: vindex[&self.basis[b].source],
                target: vindex[&self.basis[b].target],
            })
            .collect();
        let mut table = Vec::with_capacity(lift.len().pow(2));
        for &i in &lift {
            for &j in &lift {
                let prod = dense(f, d, self.mul_basis(i, j));
                let img = projection.mul_vec(&prod);
                table.push(sparse(f, &img));
            }
        }
        let labels = keep.iter().map(|&v| self.quiver.vertices[v].clone()).collect();
        let algebra = Algebra::from_structure(f, labels, basis, table)?;
        Ok(QuotientAlgebra { algebra, vertex_map: keep, lift, projection })
    }

    /// The opposite algebra: same basis, reversed multiplication.
    pub fn opposite(&self) -> Result<Algebra<F>> {
        let d = self.dim();
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElement { label: b.label.clone(), source: b.target, target: b.source })
            .collect();
        let mut table = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                table.push(self.mul_basis(j, i).to_vec());
            }
        }
        Algebra::from_structure(&self.field, self.quiver.vertices.clone(), basis, table)
    }

    /// `dim e_t A e_s` for all pairs, indexed `[s][t]`.
    pub fn block_dims(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut out = vec![vec![0; n]; n];
        for b in &self.basis {
            out[b.source][b.target] += 1;
        }
        out
    }
}

/// `e A e` with the embedding of its basis into `A`.
#[derive(Clone, Debug)]
pub struct Corner<F: Field> {
    pub algebra: Algebra<F>,
    /// Corner vertex index -> vertex of the ambient algebra.
    pub vertex_map: Vec<usize>,
    /// Corner basis index -> ambient basis index.
    pub basis_map: Vec<usize>,
}

/// `A / A e A` with its projection.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra<F: Field> {
    pub algebra: Algebra<F>,
    /// Quotient vertex index -> vertex of the ambient algebra.
    pub vertex_map: Vec<usize>,
    /// Quotient basis index -> the ambient basis vector it is the class of.
    pub lift: Vec<usize>,
    /// `dim(quotient) x dim(A)` matrix of the projection.
    pub projection: Mat<F>,
}

pub(crate) fn dense<F: Field>(field: &F, d: usize, s: &[(usize, F::Elem)]) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); d];
    for (k, c) in s {
        v[*k] = field.add(&v[*k], c);
    }
    v
}

pub(crate) fn sparse<F: Field>(field: &F, v: &[F::Elem]) -> Vec<(usize, F::Elem)> {
    v.iter().enumerate().filter(|(_, c)| !field.is_zero(c)).map(|(k, c)| (k, c.clone())).collect()
}

/// Pivot positions (in original coordinates) of the span of `vectors` when
/// eliminating with the coordinate order reversed.
fn reversed_pivots<F: Field>(field: &F, d: usize, vectors: &[Vec<F::Elem>]) -> Vec<usize> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Mat::from_fn(field, vectors.len(), d, |r, c| vectors[r][d - 1 - c].clone());
    m.echelon().1.into_iter().map(|c| d - 1 - c).collect()
}

/// Minimal generators of the kernel of the path evaluation map, block by
/// block: kernel vectors not in the span of one-arrow multiples of the
/// kernel.
fn minimal_relations<F: Field>(field: &F, quiver: &Quiver, paths: &[Path], phi: &Mat<F>) -> Vec<Relation<F>> {
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut blocks: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, p) in paths.iter().enumerate() {
        if p.len() >= 2 {
            blocks.entry((p.source, p.target)).or_default().push(i);
        }
    }
    let np = paths.len();
    let mut kernel: Vec<Vec<F::Elem>> = Vec::new();
    let mut kernel_block: Vec<(usize, usize)> = Vec::new();
    for (&st, cols) in &blocks {
        let sub = phi.select_columns(cols);
        let k = sub.kernel_basis();
        for c in 0..k.cols() {
            let mut v = vec![field.zero(); np];
            for (r, &pc) in cols.iter().enumerate() {
                v[pc] = k.at(r, c).clone();
            }
            kernel.push(v);
            kernel_block.push(st);
        }
    }
    // One-arrow multiples on either side, truncated to the enumerated paths.
    let mut multiples: BTreeMap<(usize, usize), Vec<Vec<F::Elem>>> = BTreeMap::new();
    for v in &kernel {
        for (ai, a) in quiver.arrows.iter().enumerate() {
            let arrow = Path { source: a.source, target: a.target, arrows: vec![ai] };
            for side in 0..2 {
                let mut out = vec![field.zero(); np];
                let mut any = false;
                let mut st = None;
                for (k, c) in v.iter().enumerate() {
                    if field.is_zero(c) {
                        continue;
                    }
                    let ext = if side == 0 { paths[k].then(&arrow) } else { arrow.then(&paths[k]) };
                    if let Some(e) = ext {
                        st = Some((e.source, e.target));
                        if let Some(&pi) = index.get(&e) {
                            out[pi] = field.add(&out[pi], c);
                            any = true;
                        }
                    }
                }
                if let (true, Some(st)) = (any, st) {
                    multiples.entry(st).or_default().push(out);
                }
            }
        }
    }
    let mut relations = Vec::new();
    for (&st, _) in &blocks {
        let mut span: Vec<Vec<F::Elem>> = multiples.get(&st).cloned().unwrap_or_default();
        let mut rank = rank_of(field, np, &span);
        for (v, b) in kernel.iter().zip(&kernel_block) {
            if *b != st {
                continue;
            }
            span.push(v.clone());
            let r = rank_of(field, np, &span);
            if r > rank {
                rank = r;
                let terms = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !field.is_zero(c))
                    .map(|(k, c)| (c.clone(), paths[k].clone()))
                    .collect();
                relations.push(Relation { terms });
            } else {
                span.pop();
            }
        }
    }
    relations
}

fn rank_of<F: Field>(field: &F, n: usize, vectors: &[Vec<F::Elem>]) -> usize {
    crate::exactla::canonical_span(field, n, vectors).len()
}
