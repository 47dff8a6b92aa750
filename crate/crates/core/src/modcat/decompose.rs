//! Krull-Schmidt decomposition through the endomorphism algebra, and
//! isomorphism testing.
//!
//! A module splits exactly when its endomorphism algebra contains an element
//! that is neither nilpotent nor invertible; for such `f` the Fitting
//! decomposition `M = im f^n + ker f^n` is nontrivial. Indecomposability is
//! certified by exhibiting `End(M) = k.1 + I` with `I` a nilpotent ideal, or
//! by exhausting a small endomorphism algebra.

use crate::error::Result;
use crate::exactla::{Field, Mat};

use super::hom::HomSpace;
use super::module::{check_same, Module, ModuleMorphism, Subspaces};

/// Exhaustive search bound on `|End(M)|` when no certificate is found.
const EXHAUSTIVE_LIMIT: u64 = 1 << 14;
/// Largest finite field whose elements are all tried as eigenvalues.
const EIGEN_SCAN_LIMIT: u64 = 1024;

/// An indecomposable summand with its inclusion and the matching projection.
#[derive(Clone, Debug)]
pub struct Summand<F: Field> {
    pub module: Module<F>,
    pub inclusion: ModuleMorphism<F>,
    pub projection: ModuleMorphism<F>,
}

fn eigenvalue_candidates<F: Field>(f: &ModuleMorphism<F>) -> Vec<F::Elem> {
    let field = f.field();
    let mut out = Vec::new();
    match field.size() {
        Some(q) if q <= EIGEN_SCAN_LIMIT => {
            for i in 0..q {
                let l = field.element(i);
                let singular = f.maps.iter().any(|m| {
                    m.rows() > 0 && m.sub(&Mat::identity(field, m.rows()).scale(&l)).rank() < m.rows()
                });
                if singular {
                    out.push(l);
                }
            }
        }
        _ => {
            out.push(field.zero());
            for m in &f.maps {
                for i in 0..m.rows() {
                    if !out.contains(m.at(i, i)) {
                        out.push(m.at(i, i).clone());
                    }
                }
            }
        }
    }
    out
}

fn shifted<F: Field>(f: &ModuleMorphism<F>, l: &F::Elem) -> ModuleMorphism<F> {
    let id = ModuleMorphism::identity(&f.source);
    f.sub(&id.scale(l))
}

/// Fitting splitting of `M` along `f`, if `f` is neither nilpotent nor
/// invertible.
fn fitting<F: Field>(m: &Module<F>, f: &ModuleMorphism<F>) -> Option<(Subspaces<F>, Subspaces<F>)> {
    let n = m.dim();
    let powers: Vec<Mat<F>> = f.maps.iter().map(|x| x.pow(n)).collect();
    let im_dim: usize = powers.iter().map(|p| p.rank()).sum();
    if im_dim == 0 || im_dim == n {
        return None;
    }
    let image = (0..powers.len()).map(|v| m.canonical_columns(v, &powers[v].columns())).collect();
    let kernel = (0..powers.len()).map(|v| m.canonical_columns(v, &powers[v].kernel_basis().columns())).collect();
    Some((image, kernel))
}

/// The scalar `l` with `f - l` nilpotent, if there is one.
fn single_eigenvalue<F: Field>(f: &ModuleMorphism<F>) -> Option<F::Elem> {
    let field = f.field();
    let n = f.source.dim();
    let mut cands = eigenvalue_candidates(f);
    let trace = f.maps.iter().fold(field.zero(), |acc, m| {
        (0..m.rows()).fold(acc, |a, i| field.add(&a, m.at(i, i)))
    });
    if let Some(inv) = field.inv(&field.from_int(n as i64)) {
        cands.insert(0, field.mul(&trace, &inv));
    }
    cands.into_iter().find(|l| shifted(f, l).is_nilpotent())
}

/// Checks `End(M) = k.1 + I` with `I` spanned by the shifted basis elements
/// and nilpotent. Such an algebra is local.
fn local_certificate<F: Field>(m: &Module<F>, end: &HomSpace<F>) -> bool {
    let field = m.field();
    let mut radical = Vec::new();
    for b in &end.basis {
        let Some(l) = single_eigenvalue(b) else { return false };
        let r = shifted(b, &l);
        if !r.is_zero() {
            radical.push(r);
        }
    }
    let span = |ms: &[ModuleMorphism<F>]| -> Vec<ModuleMorphism<F>> {
        let vecs: Vec<Vec<F::Elem>> = ms.iter().map(|x| end.coordinates(x)).collect();
        crate::exactla::canonical_span(field, end.dim(), &vecs).iter().map(|c| end.combination(c)).collect()
    };
    let ideal = span(&radical);
    if ideal.len() + 1 != end.dim() {
        return false;
    }
    // I*I inside I, and I^k = 0 for some k <= dim M + 1
    let ideal_coords: Vec<Vec<F::Elem>> = ideal.iter().map(|x| end.coordinates(x)).collect();
    let mut power = ideal.clone();
    for step in 0..=m.dim() {
        if power.is_empty() {
            return true;
        }
        let mut prods = Vec::new();
        for a in &power {
            for b in &ideal {
                prods.push(a.after(b).expect("endomorphisms compose"));
            }
        }
        if step == 0 {
            let mut all = ideal_coords.clone();
            let before = all.len();
            all.extend(prods.iter().map(|x| end.coordinates(x)));
            if crate::exactla::canonical_span(field, end.dim(), &all).len() != before {
                return false;
            }
        }
        power = span(&prods);
    }
    power.is_empty()
}

fn find_split<F: Field>(m: &Module<F>) -> Option<(Subspaces<F>, Subspaces<F>)> {
    if m.dim() <= 1 {
        return None;
    }
    let end = HomSpace::new(m, m).expect("same algebra");
    if end.dim() <= 1 {
        return None;
    }
    let try_element = |f: &ModuleMorphism<F>| -> Option<(Subspaces<F>, Subspaces<F>)> {
        eigenvalue_candidates(f).iter().find_map(|l| fitting(m, &shifted(f, l)))
    };
    for b in &end.basis {
        if let Some(s) = try_element(b) {
            return Some(s);
        }
    }
    if local_certificate(m, &end) {
        return None;
    }
    for i in 0..end.dim() {
        for j in i + 1..end.dim() {
            if let Some(s) = try_element(&end.basis[i].add(&end.basis[j])) {
                return Some(s);
            }
        }
    }
    let field = m.field();
    if let Some(q) = field.size() {
        let d = end.dim() as u32;
        if q.checked_pow(d).is_some_and(|total| total <= EXHAUSTIVE_LIMIT) {
            let total = q.pow(d);
            for idx in 0..total {
                let mut rest = idx;
                let coeffs: Vec<F::Elem> = (0..d)
                    .map(|_| {
                        let c = field.element(rest % q);
                        rest /= q;
                        c
                    })
                    .collect();
                if let Some(s) = fitting(m, &end.combination(&coeffs)) {
                    return Some(s);
                }
            }
        }
    }
    None
}

fn split_recursive<F: Field>(m: &Module<F>, out: &mut Vec<(Module<F>, ModuleMorphism<F>)>, into: ModuleMorphism<F>) {
    match find_split(m) {
        None => out.push((m.clone(), into)),
        Some((image, kernel)) => {
            for part in [image, kernel] {
                let (sub, inc) = m.submodule(&part).expect("Fitting parts are submodules");
                let composed = into.after(&inc).expect("inclusions compose");
                split_recursive(&sub, out, composed);
            }
        }
    }
}

/// Indecomposable summands of `m` with inclusions and projections.
pub fn decompose<F: Field>(m: &Module<F>) -> Vec<Summand<F>> {
    if m.is_zero() {
        return Vec::new();
    }
    let mut parts = Vec::new();
    split_recursive(m, &mut parts, ModuleMorphism::identity(m));
    let field = m.field();
    let nv = m.dims().len();
    let inverses: Vec<Mat<F>> = (0..nv)
        .map(|v| {
            let mut block = Mat::zeros(field, m.dims()[v], 0);
            for (_, inc) in &parts {
                block = block.hstack(&inc.maps[v]);
            }
            block.inverse().expect("summands span the module")
        })
        .collect();
    let mut offsets = vec![0; nv];
    parts
        .into_iter()
        .map(|(module, inclusion)| {
            let maps = (0..nv)
                .map(|v| {
                    let rows: Vec<usize> = (offsets[v]..offsets[v] + module.dims()[v]).collect();
                    offsets[v] += module.dims()[v];
                    inverses[v].select_rows(&rows)
                })
                .collect();
            let projection = ModuleMorphism { source: m.clone(), target: module.clone(), maps };
            Summand { module, inclusion, projection }
        })
        .collect()
}

pub fn is_indecomposable<F: Field>(m: &Module<F>) -> bool {
    !m.is_zero() && find_split(m).is_none()
}

/// An isomorphism between indecomposables, if any. Some basis element of
/// `Hom(x, y)` is invertible whenever `x` and `y` are isomorphic, because
/// the endomorphism ring of `x` is local.
fn indecomposable_iso<F: Field>(x: &Module<F>, y: &Module<F>) -> Option<ModuleMorphism<F>> {
    if x.dims() != y.dims() {
        return None;
    }
    let hom = HomSpace::new(x, y).ok()?;
    hom.basis.into_iter().find(|f| f.is_isomorphism())
}

/// Decides `m ~ n`; on success returns an isomorphism `m -> n`.
pub fn is_isomorphic<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<Option<ModuleMorphism<F>>> {
    check_same(m, n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m == n {
        return Ok(Some(ModuleMorphism::identity(m)));
    }
    let ms = decompose(m);
    let ns = decompose(n);
    if ms.len() != ns.len() {
        return Ok(None);
    }
    let mut used = vec![false; ns.len()];
    let mut witness = ModuleMorphism::zero(m, n);
    for x in &ms {
        let found = ns.iter().enumerate().find_map(|(j, y)| {
            if used[j] {
                return None;
            }
            indecomposable_iso(&x.module, &y.module).map(|f| (j, f))
        });
        let Some((j, f)) = found else { return Ok(None) };
        used[j] = true;
        let piece = ns[j].inclusion.after(&f)?.after(&x.projection)?;
        witness = witness.add(&piece);
    }
    debug_assert!(witness.is_isomorphism() && witness.is_homomorphism());
    Ok(Some(witness))
}

/// Groups summands into isomorphism classes; returns one representative
/// per class with its multiplicity, in order of first appearance.
pub fn isotypic_multiplicities<F: Field>(summands: &[Module<F>]) -> Vec<(Module<F>, usize)> {
    let mut classes: Vec<(Module<F>, usize)> = Vec::new();
    for s in summands {
        match classes.iter_mut().find(|(r, _)| indecomposable_iso(r, s).is_some()) {
            Some(entry) => entry.1 += 1,
            None => classes.push((s.clone(), 1)),
        }
    }
    classes
}
