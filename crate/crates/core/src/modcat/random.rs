//! Seeded random modules for property tests and the check command.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::Algebra;
use crate::exactla::Field;

use super::module::Module;
use super::projective::ProjectiveSum;

fn random_element<F: Field, R: Rng + ?Sized>(m: &Module<F>, rng: &mut R) -> Option<(usize, Vec<F::Elem>)> {
    let f = m.field();
    let support: Vec<usize> = (0..m.dims().len()).filter(|&v| m.dims()[v] > 0).collect();
    if support.is_empty() {
        return None;
    }
    let v = support[rng.gen_range(0..support.len())];
    Some((v, (0..m.dims()[v]).map(|_| f.random(rng)).collect()))
}

/// A random quotient or submodule of a sum of one or two indecomposable
/// projectives, of total dimension at most `max_dim` (possibly zero).
pub fn random_module<F: Field, R: Rng + ?Sized>(algebra: &Arc<Algebra<F>>, rng: &mut R, max_dim: usize) -> Module<F> {
    let n = algebra.num_vertices();
    if n == 0 {
        return Module::zero(algebra);
    }
    let k = rng.gen_range(1..=2);
    let tops: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
    let p = ProjectiveSum::new(algebra, &tops).module;
    let mut gens = Vec::new();
    if rng.gen_bool(0.3) {
        for _ in 0..rng.gen_range(1..=2) {
            gens.extend(random_element(&p, rng));
        }
        let sub = p.spin(&gens);
        let (m, _) = p.submodule(&sub).expect("spun subspaces are submodules");
        if m.dim() <= max_dim {
            return m;
        }
        gens.clear();
    }
    for _ in 0..rng.gen_range(0..=2) {
        gens.extend(random_element(&p, rng));
    }
    loop {
        let sub = p.spin(&gens);
        let q = p.quotient(&sub).module;
        if q.dim() <= max_dim {
            return q;
        }
        gens.extend(random_element(&p, rng));
    }
}
