use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use strata_forge::algebra::Algebra;
use strata_forge::cli::corpus;
use strata_forge::covers::CoverCertificate;
use strata_forge::exactla::{Field, PrimeField};
use strata_forge::modcat::{self, hom_basis, is_isomorphic, projective, random::random_module, Module, ModuleMorphism};
use strata_forge::recollement::{Origin, RecollementDatum, Transport};

fn load(name: &str, p: u64) -> Arc<Algebra<PrimeField>> {
    let f = PrimeField::new(p).unwrap();
    corpus::get(name).unwrap().with_field(f.spec()).build(&f).unwrap().0
}

fn valid(m: &Module<PrimeField>) {
    Module::new(m.algebra().clone(), m.dims().to_vec(), m.arrow_maps().to_vec()).expect("functor output is a module");
}

fn iso(a: &Module<PrimeField>, b: &Module<PrimeField>) -> bool {
    is_isomorphic(a, b).unwrap().is_some()
}

fn hom_dim(a: &Module<PrimeField>, b: &Module<PrimeField>) -> usize {
    hom_basis(a, b).unwrap().len()
}

/// Every proper nonempty open set of every fixture, plus the degenerate ones.
fn data(a: &Arc<Algebra<PrimeField>>) -> Vec<RecollementDatum<PrimeField>> {
    let n = a.num_vertices();
    (0..1u32 << n)
        .map(|mask| {
            let open: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            RecollementDatum::new(a.clone(), &open).unwrap()
        })
        .collect()
}

#[test]
fn a2_examples() {
    let a = load("F2", 5);
    let d = RecollementDatum::new(a.clone(), &[1]).unwrap();
    let k = Module::simple(&d.corner, 0);
    let (shriek, unit) = d.j_lower_shriek(&k).unwrap();
    assert_eq!(shriek, Module::simple(&a, 1));
    assert!(unit.is_isomorphism());
    assert_eq!(d.j_upper_star(&shriek).unwrap(), k);
    let (top, _) = d.i_upper_star(&projective(&a, 0)).unwrap();
    assert_eq!(d.i_lower_star(&top).unwrap(), Module::simple(&a, 0));
    let t = Module::simple(&d.quotient, 0);
    assert!(d.j_upper_star(&d.i_lower_star(&t).unwrap()).unwrap().is_zero());
    assert_eq!(d.intermediate_extension(&k).unwrap(), Module::simple(&a, 1));
    let cls = d.classify_simples().unwrap();
    assert_eq!(cls[0].origin, Origin::Closed(0));
    assert_eq!(cls[1].origin, Origin::Open(0));
}

#[test]
fn cp1_examples() {
    let a = load("F3", 2);
    let o = a.quiver().vertex_index("o").unwrap();
    let d = RecollementDatum::new(a.clone(), &[o]).unwrap();
    let k = Module::simple(&d.corner, 0);
    assert_eq!(d.j_lower_shriek(&k).unwrap().0, projective(&a, o));
    assert_eq!(d.intermediate_extension(&k).unwrap(), Module::simple(&a, o));
    let zero = Module::zero(&d.corner);
    assert!(d.intermediate_extension(&zero).unwrap().is_zero());
    let cert = CoverCertificate::new(k.clone(), 0).unwrap();
    let ext = d.transport_cover(Transport::OpenExtend, &cert).unwrap();
    assert_eq!(ext.module, projective(&a, o));
    assert_eq!(ext.vertex, o);
}

#[test]
fn degenerate_recollements() {
    let a = load("F3", 3);
    let all = RecollementDatum::new(a.clone(), &[0, 1]).unwrap();
    assert_eq!(all.quotient.dim(), 0);
    let cls = all.classify_simples().unwrap();
    assert!(cls.iter().all(|c| matches!(c.origin, Origin::Open(_))));
    let none = RecollementDatum::new(a.clone(), &[]).unwrap();
    assert_eq!(none.corner.dim(), 0);
    let p = projective(&a, 0);
    assert!(none.j_upper_star(&p).unwrap().is_zero());
    assert!(iso(&none.i_lower_star(&none.i_upper_star(&p).unwrap().0).unwrap(), &p));
}

#[test]
fn functor_identities_and_adjunctions() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for name in corpus::names() {
        let a = load(name, 3);
        for d in data(&a) {
            assert_eq!(
                modcat::simples(&a).len(),
                d.corner.num_vertices() + d.quotient.num_vertices()
            );
            d.classify_simples().unwrap();
            for _ in 0..12 {
                let n = random_module(&d.corner, &mut rng, 6);
                let t = random_module(&d.quotient, &mut rng, 6);
                let m = random_module(&a, &mut rng, 6);
                let (shriek, unit) = d.j_lower_shriek(&n).unwrap();
                let star = d.j_lower_star(&n).unwrap();
                let inc = d.i_lower_star(&t).unwrap();
                for x in [&shriek, &star, &inc] {
                    valid(x);
                }
                assert!(unit.is_isomorphism() && unit.is_homomorphism());
                assert!(iso(&d.j_upper_star(&shriek).unwrap(), &n));
                assert!(iso(&d.j_upper_star(&star).unwrap(), &n));
                assert!(iso(&d.i_upper_star(&inc).unwrap().0, &t));
                assert!(iso(&d.i_upper_shriek(&inc).unwrap().0, &t));
                assert!(d.j_upper_star(&inc).unwrap().is_zero());

                let jm = d.j_upper_star(&m).unwrap();
                let (im, _) = d.i_upper_star(&m).unwrap();
                let (sm, _) = d.i_upper_shriek(&m).unwrap();
                valid(&d.i_lower_star(&im).unwrap());
                valid(&d.i_lower_star(&sm).unwrap());
                assert_eq!(hom_dim(&shriek, &m), hom_dim(&n, &jm));
                assert_eq!(hom_dim(&im, &t), hom_dim(&m, &inc));
                assert_eq!(hom_dim(&m, &star), hom_dim(&jm, &n));
                assert_eq!(hom_dim(&inc, &m), hom_dim(&t, &sm));
            }
        }
    }
}

#[test]
fn intermediate_extensions_are_pure() {
    for name in corpus::names() {
        let a = load(name, 2);
        for d in data(&a) {
            for e in modcat::simples(&d.corner) {
                let ic = d.intermediate_extension(&e).unwrap();
                for t in modcat::simples(&d.quotient) {
                    let it = d.i_lower_star(&t).unwrap();
                    assert_eq!(hom_dim(&it, &ic), 0);
                    assert_eq!(hom_dim(&ic, &it), 0);
                }
            }
        }
    }
}

fn random_ses(
    a: &Arc<Algebra<PrimeField>>,
    rng: &mut ChaCha8Rng,
) -> (ModuleMorphism<PrimeField>, ModuleMorphism<PrimeField>) {
    let m = random_module(a, rng, 6);
    let v = (0..m.dims().len()).find(|&v| m.dims()[v] > 0);
    let sub = match v {
        Some(v) => {
            let x: Vec<u64> = (0..m.dims()[v]).map(|_| a.field().random(rng)).collect();
            m.spin(&[(v, x)])
        }
        None => m.zero_subspaces(),
    };
    let (_, inc) = m.submodule(&sub).unwrap();
    let q = m.quotient(&sub);
    (inc, q.projection)
}

fn exact_at_vertices(f: &ModuleMorphism<PrimeField>, g: &ModuleMorphism<PrimeField>) -> bool {
    g.after(f).unwrap().is_zero()
        && (0..f.maps.len()).all(|v| f.maps[v].rank() + g.maps[v].rank() == f.target.dims()[v])
}

#[test]
fn exactness_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for name in corpus::names() {
        let a = load(name, 3);
        for d in data(&a) {
            for _ in 0..6 {
                let (f, g) = random_ses(&a, &mut rng);
                // j^* is exact: restriction of vertex maps to the open part
                let restrict = |h: &ModuleMorphism<PrimeField>| ModuleMorphism {
                    source: d.j_upper_star(&h.source).unwrap(),
                    target: d.j_upper_star(&h.target).unwrap(),
                    maps: d.open.iter().map(|&u| h.maps[u].clone()).collect(),
                };
                let (rf, rg) = (restrict(&f), restrict(&g));
                assert!(rf.is_injective() && rg.is_surjective() && exact_at_vertices(&rf, &rg));
                // i^* keeps epis: the quotient of an epi's target is reached
                let (ti, _) = d.i_upper_star(&g.target).unwrap();
                let (si, _) = d.i_upper_star(&g.source).unwrap();
                assert!(si.dim() >= ti.dim());
                // i^! keeps monos
                let (ks, _) = d.i_upper_shriek(&f.source).unwrap();
                let (kt, _) = d.i_upper_shriek(&f.target).unwrap();
                assert!(ks.dim() <= kt.dim());
                // j_! on an epi of corner modules stays onto in total dimension
                let n = random_module(&d.corner, &mut rng, 5);
                if !n.is_zero() {
                    let cov = modcat::projective_cover(&n).unwrap();
                    let p = d.j_lower_shriek(&cov.projective.module).unwrap().0;
                    let q = d.j_lower_shriek(&n).unwrap().0;
                    assert!(p.dim() >= q.dim());
                    assert_eq!(q.top_dims().iter().sum::<usize>(), n.top_dims().iter().sum::<usize>());
                }
            }
        }
    }
}

#[test]
fn transport_round_trips() {
    for name in corpus::names() {
        let a = load(name, 2);
        for d in data(&a) {
            for v in 0..a.num_vertices() {
                let cert = CoverCertificate::new(projective(&a, v), v).unwrap();
                if d.open.contains(&v) {
                    let down = d.transport_cover(Transport::OpenRestrict, &cert).unwrap();
                    let up = d.transport_cover(Transport::OpenExtend, &down).unwrap();
                    assert!(iso(&up.module, &cert.module));
                } else {
                    d.transport_cover(Transport::ClosedRestrict, &cert).unwrap();
                }
            }
        }
    }
}
