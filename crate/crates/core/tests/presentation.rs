use std::sync::Arc;

use strata_forge::algebra::{realize, Algebra, StratifiedAlgebra};
use strata_forge::cli::corpus;
use strata_forge::covers::{construct_all_covers, DEFAULT_BUDGET};
use strata_forge::exactla::{Field, PrimeField};
use strata_forge::modcat::{simples, ExtSpace};
use strata_forge::presentation::{
    endomorphism_algebra, ext_quiver_with_quadratic_relations, gabriel_presentation, projective_generator, recover,
};

fn load(name: &str, p: u64) -> (Arc<Algebra<PrimeField>>, StratifiedAlgebra<PrimeField>) {
    let f = PrimeField::new(p).unwrap();
    corpus::get(name).unwrap().with_field(f.spec()).build(&f).unwrap()
}

#[test]
fn generator_dimensions() {
    let (a, sa) = load("F2", 5);
    let state = construct_all_covers(&sa, DEFAULT_BUDGET).unwrap();
    let g = projective_generator(state.covers()).unwrap();
    let dims: Vec<usize> = g.summands.iter().map(|s| s.module.dim()).collect();
    assert_eq!(dims, vec![2, 1]);
    assert_eq!(endomorphism_algebra(&g).unwrap().algebra.dim(), a.dim());

    let (_, sa) = load("F3", 2);
    let state = construct_all_covers(&sa, DEFAULT_BUDGET).unwrap();
    let g = projective_generator(state.covers()).unwrap();
    assert_eq!(g.module.dim(), 5);
    let end = endomorphism_algebra(&g).unwrap();
    assert_eq!(end.algebra.dim(), 5);
    assert_eq!(end.algebra.relations().len(), 1);
}

#[test]
fn repeated_covers_are_reduced() {
    let (_, sa) = load("F3", 3);
    let state = construct_all_covers(&sa, DEFAULT_BUDGET).unwrap();
    let mut covers = state.covers().to_vec();
    covers.push(covers[0].clone());
    let g = projective_generator(&covers).unwrap();
    assert_eq!(g.repeated, vec![covers[0].label.clone()]);
    assert!(projective_generator(&covers[..1]).is_err());
}

#[test]
fn recovery_on_every_fixture() {
    for p in [2, 3, 5] {
        for name in corpus::names() {
            let (a, sa) = load(name, p);
            let state = construct_all_covers(&sa, DEFAULT_BUDGET).unwrap();
            let g = projective_generator(state.covers()).unwrap();
            let end = endomorphism_algebra(&g).unwrap();
            let rec = recover(&g, &end).unwrap_or_else(|e| panic!("{name} F_{p}: {e}"));
            assert_eq!(rec.realized.dim(), a.dim());
        }
    }
}

#[test]
fn gabriel_round_trip_and_ext_arrows() {
    for name in corpus::names() {
        let (a, _) = load(name, 3);
        let again = realize(&gabriel_presentation(&a)).unwrap();
        assert_eq!(again.block_dims(), a.block_dims(), "{name}");
        let s = simples(&a);
        for i in 0..a.num_vertices() {
            for j in 0..a.num_vertices() {
                let arrows = a.quiver().arrows.iter().filter(|x| x.source == i && x.target == j).count();
                assert_eq!(ExtSpace::new(&s[i], &s[j]).unwrap().dim(), arrows, "{name} {i} {j}");
            }
        }
    }
}

#[test]
fn cp1_quadratic_relation() {
    let (a, _) = load("F3", 2);
    let eq = ext_quiver_with_quadratic_relations(&a).unwrap();
    assert_eq!(eq.quiver.arrows.len(), 2);
    let o = a.quiver().vertex_index("o").unwrap();
    let c = a.quiver().vertex_index("c").unwrap();
    for b in &eq.blocks {
        match (b.source, b.target) {
            (s, t) if s == o && t == o => {
                assert_eq!(b.ext2_dim, 1);
                assert!(b.yoneda_kernel.is_empty());
                assert_eq!(b.relation_text, vec!["o>c.c>o".to_string()]);
            }
            (s, t) if s == c && t == c => {
                assert_eq!(b.ext2_dim, 0);
                assert_eq!(b.yoneda_kernel.len(), 1);
                assert!(b.relations.is_empty());
            }
            _ => panic!("unexpected block"),
        }
    }
}

#[test]
fn hereditary_has_no_quadratic_relations() {
    for name in ["F1", "F2", "F2-degenerate"] {
        let (a, _) = load(name, 5);
        let eq = ext_quiver_with_quadratic_relations(&a).unwrap();
        assert!(eq.blocks.iter().all(|b| b.relations.is_empty()), "{name}");
    }
}

#[test]
fn quadratic_relations_match_degree_two_relations() {
    for name in corpus::names() {
        let (a, _) = load(name, 3);
        let eq = ext_quiver_with_quadratic_relations(&a).unwrap();
        for b in &eq.blocks {
            let quadratic = a
                .relations()
                .iter()
                .filter(|r| r.endpoints() == Some((b.source, b.target)) && r.terms.iter().all(|(_, p)| p.len() == 2))
                .count();
            assert_eq!(b.relations.len(), quadratic, "{name} {} -> {}", b.source, b.target);
        }
    }
}
