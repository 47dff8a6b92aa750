//! Realizing a presentation as a basis of path residues with structure
//! constants.
//!
//! For a bound `N` the truncated algebra `kQ / (I + J^N)` is computed by
//! row-reducing the ideal generators (all `q * r * q'` with short enough
//! outer paths) against the paths of length `< N`. Columns are ordered
//! largest path first, so leading terms are the largest paths and the
//! normal words are the smallest ones in degree-lexicographic order. The
//! bound grows until every path of length `N - 1` reduces to zero; from
//! then on the arrow ideal is nilpotent modulo the relations.

use std::collections::HashMap;

use super::quiver::{AlgebraPresentation, Path};
use super::structure::{Algebra, BasisElement};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};

/// Realized dimension cap; presentations beyond it are treated as not
/// finite-dimensional.
pub const MAX_REALIZED_DIM: usize = 4096;
const MAX_DEGREE: usize = 64;

struct Truncation<F: Field> {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    /// Reduced rows in reversed column order and their pivot (original index).
    echelon: Mat<F>,
    pivot_row: HashMap<usize, usize>,
    normal: Vec<usize>,
}

impl<F: Field> Truncation<F> {
    fn compute(pres: &AlgebraPresentation<F>, bound: usize) -> Self {
        let f = &pres.field;
        let q = &pres.quiver;
        let paths = q.paths_below(bound);
        let np = paths.len();
        let index: HashMap<Path, usize> = paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let by_target = |t: usize, max: usize| -> Vec<&Path> {
            paths.iter().filter(|p| p.target == t && p.len() <= max).collect()
        };
        let by_source = |s: usize, max: usize| -> Vec<&Path> {
            paths.iter().filter(|p| p.source == s && p.len() <= max).collect()
        };
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for rel in &pres.relations {
            let Some((s, t)) = rel.endpoints() else { continue };
            let m = rel.min_len();
            if m >= bound {
                continue;
            }
            let room = bound - 1 - m;
            for pre in by_target(s, room) {
                for post in by_source(t, room - pre.len()) {
                    let mut row = vec![f.zero(); np];
                    let mut any = false;
                    for (c, p) in &rel.terms {
                        let full = pre.then(p).and_then(|x| x.then(post)).expect("endpoints match");
                        if let Some(&i) = index.get(&full) {
                            let col = np - 1 - i;
                            row[col] = f.add(&row[col], c);
                            any = true;
                        }
                    }
                    if any {
                        rows.push(row);
                    }
                }
            }
        }
        let (echelon, pivots) = if rows.is_empty() {
            (Mat::zeros(f, 0, np), Vec::new())
        } else {
            Mat::from_fn(f, rows.len(), np, |r, c| rows[r][c].clone()).echelon()
        };
        let mut pivot_row = HashMap::new();
        for (r, &c) in pivots.iter().enumerate() {
            pivot_row.insert(np - 1 - c, r);
        }
        let normal = (0..np).filter(|i| !pivot_row.contains_key(i)).collect();
        Truncation { paths, index, echelon, pivot_row, normal }
    }

    /// Coordinates of a path residue in the normal-word basis.
    fn normal_form(&self, f: &F, p: &Path) -> Vec<F::Elem> {
        let mut out = vec![f.zero(); self.normal.len()];
        let Some(&i) = self.index.get(p) else { return out };
        let np = self.paths.len();
        match self.pivot_row.get(&i) {
            None => {
                let k = self.normal.iter().position(|&x| x == i).expect("normal word");
                out[k] = f.one();
            }
            Some(&r) => {
                for (k, &w) in self.normal.iter().enumerate() {
                    let c = self.echelon.at(r, np - 1 - w);
                    if !f.is_zero(c) {
                        out[k] = f.neg(c);
                    }
                }
            }
        }
        out
    }

    fn kills_length(&self, f: &F, len: usize) -> bool {
        self.paths.iter().filter(|p| p.len() == len).all(|p| self.normal_form(f, p).iter().all(|c| f.is_zero(c)))
    }
}

/// Realizes `pres` as an algebra whose basis is the set of normal path
/// residues. Fails if the arrow ideal is not nilpotent modulo the relations.
pub fn realize<F: Field>(pres: &AlgebraPresentation<F>) -> Result<Algebra<F>> {
    pres.validate()?;
    let f = &pres.field;
    let q = &pres.quiver;
    let mut bound = 1;
    let trunc = loop {
        let t = Truncation::compute(pres, bound);
        if t.normal.len() > MAX_REALIZED_DIM {
            return Err(Error::InfiniteDimensional(format!(
                "more than {MAX_REALIZED_DIM} path residues survive below length {bound}"
            )));
        }
        if bound >= 2 && t.kills_length(f, bound - 1) {
            break t;
        }
        if bound == 1 && q.arrows.is_empty() {
            break t;
        }
        bound += 1;
        if bound > MAX_DEGREE {
            return Err(Error::InfiniteDimensional(format!(
                "paths of length {MAX_DEGREE} do not vanish modulo the relations"
            )));
        }
    };
    let basis_paths: Vec<Path> = trunc.normal.iter().map(|&i| trunc.paths[i].clone()).collect();
    let d = basis_paths.len();
    let basis: Vec<BasisElement> = basis_paths
        .iter()
        .map(|p| BasisElement { label: q.path_label(p), source: p.source, target: p.target })
        .collect();
    let mut table = Vec::with_capacity(d * d);
    for bi in &basis_paths {
        for bj in &basis_paths {
            // b_i * b_j = traverse b_j, then b_i
            let entry = match bj.then(bi) {
                Some(p) => trunc
                    .normal_form(f, &p)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !f.is_zero(c))
                    .collect(),
                None => Vec::new(),
            };
            table.push(entry);
        }
    }
    let position: HashMap<&Path, usize> = basis_paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let arrow_basis = (0..q.arrows.len())
        .map(|a| {
            let p = Path { source: q.arrows[a].source, target: q.arrows[a].target, arrows: vec![a] };
            position[&p]
        })
        .collect();
    let words = basis_paths.iter().map(|p| vec![(f.one(), p.clone())]).collect();
    let loewy = basis_paths.iter().map(|p| p.len()).max().map_or(0, |m| m + 1);
    let alg = Algebra::from_parts(f.clone(), q.clone(), pres.relations.clone(), basis, table, arrow_basis, words, loewy);
    if !alg.is_associative() {
        return Err(Error::MalformedRelation("realized multiplication is not associative".into()));
    }
    Ok(alg)
}
