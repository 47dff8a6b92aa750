//! The Ext-quiver of the simples and the quadratic relations seen by the
//! Yoneda product `Ext^1 x Ext^1 -> Ext^2`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, Arrow, Path, Quiver};
use crate::error::Result;
use crate::exactla::{Field, Mat};
use crate::modcat::{simples, yoneda_product, Ext2Space, ExtSpace, SecondSyzygy, Syzygy};

/// A composable pair of Ext-quiver arrows `i -> j -> k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrowPair {
    /// Arrow `i -> j`, applied first.
    pub first: usize,
    /// Arrow `j -> k`.
    pub second: usize,
}

/// The degree-two picture between simples `i` and `k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadraticBlock {
    pub source: usize,
    pub target: usize,
    pub pairs: Vec<ArrowPair>,
    pub ext2_dim: usize,
    /// Basis of the kernel of the Yoneda map, as coefficient vectors on `pairs`.
    pub yoneda_kernel: Vec<Vec<String>>,
    /// Basis of the annihilator of that kernel under the pairing of paths
    /// with tensors: the quadratic relations of the algebra itself.
    pub relations: Vec<Vec<String>>,
    /// The same relations written as sums of paths.
    pub relation_text: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ExtQuiver<F: Field> {
    pub quiver: Quiver,
    pub blocks: Vec<QuadraticBlock>,
    kernels: Vec<Mat<F>>,
    annihilators: Vec<Mat<F>>,
}

impl<F: Field> ExtQuiver<F> {
    /// Kernel basis of block `b`, one column per vector.
    pub fn kernel(&self, b: usize) -> &Mat<F> {
        &self.kernels[b]
    }
    pub fn annihilator(&self, b: usize) -> &Mat<F> {
        &self.annihilators[b]
    }
}

/// Arrows `i -> j` named by the simples, with a counter when there are several.
fn arrow_name(q: &Quiver, i: usize, j: usize, m: usize, mult: usize) -> String {
    if mult == 1 {
        format!("{}>{}", q.vertices[i], q.vertices[j])
    } else {
        format!("{}>{}#{}", q.vertices[i], q.vertices[j], m)
    }
}

pub fn ext_quiver_with_quadratic_relations<F: Field>(a: &Arc<Algebra<F>>) -> Result<ExtQuiver<F>> {
    let f = a.field();
    let n = a.num_vertices();
    let s = simples(a);
    let first: Vec<Arc<Syzygy<F>>> = s.iter().map(|m| Arc::new(Syzygy::new(m))).collect();
    let second: Vec<Arc<SecondSyzygy<F>>> = first.iter().map(|z| Arc::new(SecondSyzygy::new(z.clone()))).collect();
    let mut ext1: Vec<Vec<ExtSpace<F>>> = Vec::new();
    for z in &first {
        ext1.push(s.iter().map(|t| ExtSpace::with_syzygy(z.clone(), t)).collect::<Result<_>>()?);
    }
    // arrows[i][j] = index of the first arrow i -> j
    let mut arrows = Vec::new();
    let mut first_arrow = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            first_arrow[i][j] = arrows.len();
            let mult = ext1[i][j].dim();
            for m in 0..mult {
                arrows.push(Arrow { name: arrow_name(a.quiver(), i, j, m, mult), source: i, target: j });
            }
        }
    }
    let quiver = Quiver::new(a.quiver().vertices.clone(), arrows)?;

    let mut blocks = Vec::new();
    let mut kernels = Vec::new();
    let mut annihilators = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let target = Ext2Space::with_syzygy(second[i].clone(), &s[k])?;
            let mut pairs = Vec::new();
            let mut cols = Vec::new();
            for j in 0..n {
                let inner = ext1[i][j].basis();
                let outer = ext1[j][k].basis();
                for (bi, ib) in inner.iter().enumerate() {
                    for (bo, ob) in outer.iter().enumerate() {
                        cols.push(yoneda_product(ob, &ext1[j][k], ib, &ext1[i][j], &target)?);
                        pairs.push(ArrowPair { first: first_arrow[i][j] + bi, second: first_arrow[j][k] + bo });
                    }
                }
            }
            if pairs.is_empty() {
                continue;
            }
            let y = Mat::from_columns(f, target.dim(), &cols);
            let kernel = y.kernel_basis();
            // annihilator of the kernel = row space of the Yoneda matrix
            let ann = y.transpose().column_space();
            let fmt = |m: &Mat<F>| m.columns().iter().map(|c| c.iter().map(|x| f.format(x)).collect()).collect();
            let relation_text = ann
                .columns()
                .iter()
                .map(|c| {
                    let terms: Vec<(F::Elem, Path)> = c
                        .iter()
                        .zip(&pairs)
                        .filter(|(x, _)| !f.is_zero(x))
                        .map(|(x, p)| {
                            (x.clone(), Path { source: i, target: k, arrows: vec![p.first, p.second] })
                        })
                        .collect();
                    crate::algebra::Relation::<F> { terms }.format(f, &quiver)
                })
                .collect();
            blocks.push(QuadraticBlock {
                source: i,
                target: k,
                pairs,
                ext2_dim: target.dim(),
                yoneda_kernel: fmt(&kernel),
                relations: fmt(&ann),
                relation_text,
            });
            kernels.push(kernel);
            annihilators.push(ann);
        }
    }
    Ok(ExtQuiver { quiver, blocks, kernels, annihilators })
}
