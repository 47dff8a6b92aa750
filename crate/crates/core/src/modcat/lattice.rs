//! Submodule lattices over finite fields, quotients, composition series.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};

use super::module::{Module, Quotient, Subspaces};

type Key<E> = Vec<(usize, Vec<E>)>;

fn key_of<F: Field>(sub: &Subspaces<F>) -> Key<F::Elem> {
    sub.iter().map(|m| (m.cols(), m.entries().to_vec())).collect()
}

/// Nonzero vectors of `F_q^d` whose first nonzero coordinate is one.
fn projective_points<F: Field>(field: &F, d: usize) -> Vec<Vec<F::Elem>> {
    let q = field.size().expect("finite field");
    let mut out = Vec::new();
    for lead in 0..d {
        let free = d - lead - 1;
        let count = q.pow(free as u32);
        for idx in 0..count {
            let mut v = vec![field.zero(); d];
            v[lead] = field.one();
            let mut rest = idx;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = field.element(rest % q);
                rest /= q;
            }
            out.push(v);
        }
    }
    out
}

/// All submodules of a module over a finite field, sorted by increasing
/// dimension (so the quotients come by decreasing length), ties broken by
/// the canonical bases.
#[derive(Clone, Debug)]
pub struct SubmoduleLattice<F: Field> {
    pub module: Module<F>,
    pub submodules: Vec<Subspaces<F>>,
    /// Work units spent.
    pub work: u64,
}

impl<F: Field> SubmoduleLattice<F> {
    pub fn len(&self) -> usize {
        self.submodules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.submodules.is_empty()
    }

    /// Quotients `M / U` in lattice order. Restartable.
    pub fn quotients(&self) -> impl Iterator<Item = Quotient<F>> + '_ {
        self.submodules.iter().map(|u| self.module.quotient(u))
    }
}

/// Enumerates every submodule as a sum of cyclic submodules. A work unit is
/// one generated point or one sum formed; exceeding `budget` is an error.
pub fn submodule_lattice<F: Field>(m: &Module<F>, budget: u64) -> Result<SubmoduleLattice<F>> {
    let field = m.field();
    let q = field.size().ok_or(Error::EnumerationUnsupported)?;
    let over = |what: &str| Error::BudgetExceeded { what: what.into(), budget };
    let mut work: u64 = 0;
    let mut points: u64 = 0;
    for &d in m.dims() {
        let n = (0..d as u32).try_fold(0u64, |acc, i| acc.checked_add(q.checked_pow(i)?));
        points = n.and_then(|n| points.checked_add(n)).ok_or_else(|| over("submodule enumeration"))?;
    }
    if points > budget {
        return Err(over("submodule enumeration"));
    }
    let actions = m.all_actions();
    let mut cyclic: BTreeMap<Key<F::Elem>, Subspaces<F>> = BTreeMap::new();
    for (v, &d) in m.dims().iter().enumerate() {
        for p in projective_points(field, d) {
            work += 1;
            let s = m.spin_with(&actions, &[(v, p)]);
            cyclic.entry(key_of(&s)).or_insert(s);
        }
    }
    let cyclic: Vec<Subspaces<F>> = cyclic.into_values().collect();
    let zero = m.zero_subspaces();
    let mut all: BTreeMap<Key<F::Elem>, Subspaces<F>> = BTreeMap::new();
    all.insert(key_of(&zero), zero.clone());
    let mut frontier = vec![zero];
    while let Some(u) = frontier.pop() {
        for c in &cyclic {
            work += 1;
            if work > budget {
                return Err(over("submodule enumeration"));
            }
            let s = m.sum_subspaces(&u, c);
            let k = key_of(&s);
            if !all.contains_key(&k) {
                all.insert(k, s.clone());
                frontier.push(s);
            }
        }
    }
    let mut submodules: Vec<(usize, Key<F::Elem>, Subspaces<F>)> = all
        .into_iter()
        .map(|(k, s)| (s.iter().map(|x| x.cols()).sum(), k, s))
        .collect();
    submodules.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    Ok(SubmoduleLattice { module: m.clone(), submodules: submodules.into_iter().map(|x| x.2).collect(), work })
}

/// Quotients of `m` by decreasing length, each exactly once.
pub fn enumerate_quotients<F: Field>(m: &Module<F>, budget: u64) -> Result<SubmoduleLattice<F>> {
    submodule_lattice(m, budget)
}

/// Simple factors of the radical series, top layer first, as vertex indices.
pub fn composition_series<F: Field>(m: &Module<F>) -> Vec<usize> {
    let mut out = Vec::new();
    let mut current = m.clone();
    while !current.is_zero() {
        for (v, &t) in current.top_dims().iter().enumerate() {
            out.extend(std::iter::repeat(v).take(t));
        }
        let rad = current.radical();
        current = current.submodule(&rad).expect("radical is a submodule").0;
    }
    out
}

/// Composition length. Simple modules of a split basic algebra are
/// one-dimensional, so this is the total dimension.
pub fn length<F: Field>(m: &Module<F>) -> usize {
    m.dim()
}

/// A composition series built from the bottom by repeatedly factoring out
/// a random simple submodule of the socle. Returns the factors in order.
pub fn random_composition_series<F: Field, R: Rng + ?Sized>(m: &Module<F>, rng: &mut R) -> Vec<usize> {
    let field = m.field().clone();
    let mut out = Vec::new();
    let mut current = m.clone();
    while !current.is_zero() {
        let soc = current.socle();
        let choices: Vec<usize> = (0..soc.len()).filter(|&v| soc[v].cols() > 0).collect();
        let v = choices[rng.gen_range(0..choices.len())];
        let x = loop {
            let coeffs: Vec<F::Elem> = (0..soc[v].cols()).map(|_| field.random(rng)).collect();
            let x = soc[v].mul_vec(&coeffs);
            if x.iter().any(|c| !field.is_zero(c)) {
                break x;
            }
        };
        out.push(v);
        let mut sub: Subspaces<F> = current.zero_subspaces();
        sub[v] = Mat::from_columns(&field, current.dims()[v], &[x]);
        current = current.quotient(&sub).module;
    }
    out
}
