use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use strata_forge::algebra::Algebra;
use strata_forge::cli::corpus;
use strata_forge::exactla::{Field, PrimeField};
use strata_forge::modcat::*;

fn load(name: &str, p: u64) -> Arc<Algebra<PrimeField>> {
    let f = PrimeField::new(p).unwrap();
    let fx = corpus::get(name).unwrap();
    let fx = fx.with_field(f.spec());
    fx.build(&f).unwrap().0
}

fn v(alg: &Algebra<PrimeField>, label: &str) -> usize {
    alg.quiver().vertex_index(label).unwrap()
}

#[test]
fn a2_homs_and_kernels() {
    let a = load("F2", 5);
    let (s1, s2) = (Module::simple(&a, 0), Module::simple(&a, 1));
    let p1 = projective(&a, 0);
    assert_eq!(p1.dims(), &[1, 1]);
    assert_eq!(hom_basis(&s1, &s1).unwrap().len(), 1);
    assert_eq!(hom_basis(&p1, &s2).unwrap().len(), 0);
    let cover = projective_cover(&s1).unwrap();
    assert!(cover.epi.is_surjective());
    assert_eq!(cover.projective.module, p1);
    let fac = cover.epi.factorization();
    assert!(is_isomorphic(&fac.kernel, &s2).unwrap().is_some());
    assert_eq!(projective_cover(&s2).unwrap().projective.module.dims(), &[0, 1]);
    assert!(projective_cover(&Module::zero(&a)).is_err());
    assert_eq!(composition_series(&p1), vec![0, 1]);
}

#[test]
fn factorization_of_identity_and_zero() {
    let a = load("F3", 2);
    let p = projective(&a, v(&a, "c"));
    let id = ModuleMorphism::identity(&p).factorization();
    assert!(id.kernel.is_zero() && id.cokernel.is_zero() && id.image.dims() == p.dims());
    let z = ModuleMorphism::zero(&p, &p).factorization();
    assert!(z.image.is_zero() && z.kernel.dims() == p.dims() && z.cokernel.dims() == p.dims());
}

#[test]
fn cp1_projectives() {
    let a = load("F3", 2);
    let (o, c) = (v(&a, "o"), v(&a, "c"));
    let pc = projective(&a, c);
    assert_eq!(pc.dims()[o], 1);
    assert_eq!(pc.dims()[c], 2);
    assert_eq!(composition_series(&pc), vec![c, o, c]);
    let sc = Module::simple(&a, c);
    assert_eq!(projective_cover(&sc).unwrap().projective.module, pc);
}

#[test]
fn ext1_examples() {
    let a = load("F2", 5);
    let (s1, s2) = (Module::simple(&a, 0), Module::simple(&a, 1));
    let e12 = ExtSpace::new(&s1, &s2).unwrap();
    assert_eq!(e12.dim(), 1);
    assert_eq!(ExtSpace::new(&s2, &s1).unwrap().dim(), 0);
    let real = e12.realize(&e12.basis()[0]).unwrap();
    assert!(real.is_short_exact());
    assert!(is_isomorphic(&real.middle, &projective(&a, 0)).unwrap().is_some());
    let split = e12.realize(&e12.zero_class()).unwrap();
    assert!(is_isomorphic(&split.middle, &s1.direct_sum(&s2).unwrap()).unwrap().is_some());

    let b = load("F3", 2);
    let (o, c) = (v(&b, "o"), v(&b, "c"));
    let (so, sc) = (Module::simple(&b, o), Module::simple(&b, c));
    assert_eq!(ExtSpace::new(&so, &sc).unwrap().dim(), 1);
    let eco = ExtSpace::new(&sc, &so).unwrap();
    assert_eq!(eco.dim(), 1);
    let e = eco.realize(&eco.basis()[0]).unwrap();
    assert_eq!(e.middle.dims()[o], 1);
    assert_eq!(e.middle.dims()[c], 1);
    let arrow_b = b.quiver().arrow_index("b").unwrap();
    assert!(!e.middle.arrow_map(arrow_b).is_zero());
}

#[test]
fn yoneda_push_examples() {
    let a = load("F2", 5);
    let (s1, s2) = (Module::simple(&a, 0), Module::simple(&a, 1));
    let space = ExtSpace::new(&s1, &s2).unwrap();
    let eps = &space.basis()[0];
    let id = ModuleMorphism::identity(&s2);
    assert_eq!(yoneda_push(&id, eps, &space, &space).unwrap().coords, eps.coords);
    let zero = ModuleMorphism::zero(&s2, &s2);
    assert_eq!(yoneda_push(&zero, eps, &space, &space).unwrap().coords, vec![0]);
}

#[test]
fn ext2_and_products_on_cp1() {
    let b = load("F3", 2);
    let (o, c) = (v(&b, "o"), v(&b, "c"));
    let (so, sc) = (Module::simple(&b, o), Module::simple(&b, c));
    let syz_o = Arc::new(Syzygy::new(&so));
    let syz_c = Arc::new(Syzygy::new(&sc));
    let e2_oo = Ext2Space::with_syzygy(Arc::new(SecondSyzygy::new(syz_o.clone())), &so).unwrap();
    let e2_cc = Ext2Space::with_syzygy(Arc::new(SecondSyzygy::new(syz_c.clone())), &sc).unwrap();
    assert_eq!(e2_oo.dim(), 1);
    assert_eq!(e2_cc.dim(), 0);
    // o -> c -> o composite: Ext^1(S_c, S_o) x Ext^1(S_o, S_c) -> Ext^2(S_o, S_o)
    let inner = ExtSpace::with_syzygy(syz_o, &sc).unwrap();
    let outer = ExtSpace::with_syzygy(syz_c, &so).unwrap();
    let prod = yoneda_product(&outer.basis()[0], &outer, &inner.basis()[0], &inner, &e2_oo).unwrap();
    assert_eq!(prod, vec![1]);

    let a = load("F2", 3);
    for x in simples(&a) {
        for y in simples(&a) {
            assert_eq!(Ext2Space::new(&x, &y).unwrap().dim(), 0);
        }
    }
}

#[test]
fn decomposition_examples() {
    let a = load("F2", 5);
    let (s1, s2) = (Module::simple(&a, 0), Module::simple(&a, 1));
    let p1 = projective(&a, 0);
    assert_eq!(decompose(&s1).len(), 1);
    let ss = s1.direct_sum(&s1).unwrap();
    let parts = decompose(&ss);
    assert_eq!(parts.len(), 2);
    assert!(parts.iter().all(|p| p.module.dims() == s1.dims()));
    let sum = p1.direct_sum(&s2).unwrap();
    let parts = decompose(&sum);
    let mut dims: Vec<Vec<usize>> = parts.iter().map(|p| p.module.dims().to_vec()).collect();
    dims.sort();
    assert_eq!(dims, vec![vec![0, 1], vec![1, 1]]);
    assert!(is_isomorphic(&s1, &s2).unwrap().is_none());
    let w = is_isomorphic(&p1, &p1).unwrap().unwrap();
    assert_eq!(w, ModuleMorphism::identity(&p1));
}

#[test]
fn quotient_lattices() {
    let f2 = load("F2", 5);
    let s2 = Module::simple(&f2, 1);
    let lengths: Vec<usize> = enumerate_quotients(&s2, 1000).unwrap().quotients().map(|q| q.module.dim()).collect();
    assert_eq!(lengths, vec![1, 0]);
    let b = load("F3", 2);
    let po = projective(&b, v(&b, "o"));
    let lengths: Vec<usize> = enumerate_quotients(&po, 1000).unwrap().quotients().map(|q| q.module.dim()).collect();
    assert_eq!(lengths, vec![2, 1, 0]);
    let big = projective(&b, v(&b, "c")).direct_sum(&po).unwrap();
    assert!(matches!(
        enumerate_quotients(&big, 3),
        Err(strata_forge::Error::BudgetExceeded { .. })
    ));
}

#[test]
fn random_series_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in corpus::names() {
        let a = load(name, 3);
        for _ in 0..20 {
            let m = random::random_module(&a, &mut rng, 8);
            let mut x = composition_series(&m);
            let mut y = random_composition_series(&m, &mut rng);
            x.sort();
            y.sort();
            assert_eq!(x, y);
            assert_eq!(x.len(), length(&m));
        }
    }
}

#[test]
fn projective_hom_formula_and_ext_vanishing() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in corpus::names() {
        let a = load(name, 3);
        let ps: Vec<Module<PrimeField>> = (0..a.num_vertices()).map(|v| projective(&a, v)).collect();
        for _ in 0..100 {
            let m = random::random_module(&a, &mut rng, 8);
            for (v, p) in ps.iter().enumerate() {
                assert_eq!(hom_basis(p, &m).unwrap().len(), m.dims()[v]);
            }
        }
        for p in &ps {
            for s in simples(&a) {
                assert_eq!(ExtSpace::new(p, &s).unwrap().dim(), 0);
            }
        }
    }
}

#[test]
fn extension_round_trip() {
    for name in corpus::names() {
        let a = load(name, 3);
        let ss = simples(&a);
        let mut mods: Vec<Module<PrimeField>> = ss.clone();
        mods.extend((0..a.num_vertices()).map(|v| projective(&a, v)));
        for b in &mods {
            for n in &ss {
                let space = ExtSpace::new(b, n).unwrap();
                for class in space.basis() {
                    let seq = space.realize(&class).unwrap();
                    assert!(seq.is_short_exact());
                    assert_eq!(seq.middle.dim(), b.dim() + n.dim());
                    assert_eq!(space.class_of_sequence(&seq).unwrap(), class.coords);
                }
            }
        }
    }
}

#[test]
fn cover_kernel_in_radical() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in corpus::names() {
        let a = load(name, 2);
        for _ in 0..30 {
            let m = random::random_module(&a, &mut rng, 8);
            if m.is_zero() {
                continue;
            }
            let cover = projective_cover(&m).unwrap();
            let p = &cover.projective.module;
            assert_eq!(p.top_dims(), m.top_dims());
            let k = cover.epi.factorization().kernel_inclusion;
            let rad = p.radical();
            for v in 0..p.dims().len() {
                let mut cols = rad[v].columns();
                let r = cols.len();
                cols.extend(k.maps[v].columns());
                let f = a.field();
                let span = strata_forge::exactla::canonical_span(f, p.dims()[v], &cols);
                assert_eq!(span.len(), r);
            }
        }
        for s in simples(&a) {
            let c = projective_cover(&s).unwrap();
            assert_eq!(c.projective.module.top_dims(), s.dims());
        }
    }
}

#[test]
fn planted_decompositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in corpus::names() {
        let a = load(name, 2);
        let mut pool: Vec<Module<PrimeField>> = Vec::new();
        for _ in 0..40 {
            let m = random::random_module(&a, &mut rng, 5);
            if is_indecomposable(&m) {
                pool.push(m);
            }
        }
        for _ in 0..10 {
            let k = rand::Rng::gen_range(&mut rng, 1..=3);
            let picks: Vec<Module<PrimeField>> =
                (0..k).map(|_| pool[rand::Rng::gen_range(&mut rng, 0..pool.len())].clone()).collect();
            let sum = Module::direct_sum_all(&a, &picks).unwrap();
            let found: Vec<Module<PrimeField>> = decompose(&sum).into_iter().map(|s| s.module).collect();
            assert_eq!(found.len(), picks.len());
            let mut used = vec![false; found.len()];
            for p in &picks {
                let j = (0..found.len())
                    .find(|&j| !used[j] && is_isomorphic(p, &found[j]).unwrap().is_some())
                    .expect("planted summand found");
                used[j] = true;
            }
            let w = is_isomorphic(&sum, &Module::direct_sum_all(&a, &picks).unwrap()).unwrap().unwrap();
            assert!(w.is_homomorphism() && w.is_isomorphism());
        }
    }
}

#[test]
fn rationals_enumeration_unsupported() {
    let f = strata_forge::exactla::Rationals;
    let fx = corpus::get("F2").unwrap().with_field(f.spec());
    let (a, _) = fx.build(&f).unwrap();
    let s = Module::simple(&a, 0);
    assert!(matches!(enumerate_quotients(&s, 100), Err(strata_forge::Error::EnumerationUnsupported)));
    let e = ExtSpace::new(&s, &Module::simple(&a, 1)).unwrap();
    assert_eq!(e.dim(), 1);
}
