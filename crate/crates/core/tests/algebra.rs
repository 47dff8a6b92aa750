use strata_forge::algebra::{realize, AlgebraPresentation};
use strata_forge::cli::corpus;
use strata_forge::exactla::{Field, PrimeField};
use strata_forge::Error;

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn labels<F: Field>(a: &strata_forge::algebra::Algebra<F>) -> Vec<String> {
    a.basis().iter().map(|b| b.label.clone()).collect()
}

#[test]
fn field_case() {
    let (a, _) = corpus::get("F1").unwrap().build(&f(2)).unwrap();
    assert_eq!(a.dim(), 1);
    assert!(a.is_associative());
}

#[test]
fn a2_basis() {
    let (a, _) = corpus::get("F2").unwrap().build(&f(5)).unwrap();
    assert_eq!(labels(&a), vec!["e_1", "e_2", "a"]);
}

#[test]
fn cp1_model_basis() {
    let (a, _) = corpus::get("F3").unwrap().build(&f(2)).unwrap();
    assert_eq!(labels(&a), vec!["e_o", "e_c", "a", "b", "b.a"]);
    assert_eq!(a.loewy_length(), 3);
}

#[test]
fn non_admissible_is_rejected() {
    let p = AlgebraPresentation::from_labels(f(3), &["v"], &[("x", "v", "v")], &[]).unwrap();
    assert!(matches!(realize(&p), Err(Error::InfiniteDimensional(_))));
}

#[test]
fn inhomogeneous_relation_is_rejected() {
    let p = AlgebraPresentation::from_labels(
        f(3),
        &["u", "v"],
        &[("x", "u", "u"), ("y", "u", "v"), ("z", "v", "v")],
        &[vec![(1, vec!["x", "x"]), (1, vec!["y", "z"])]],
    );
    assert!(matches!(p, Err(Error::MalformedRelation(_))));
}

#[test]
fn corner_examples() {
    let (a, _) = corpus::get("F2").unwrap().build(&f(5)).unwrap();
    let c = a.corner(&[0, 1]).unwrap();
    assert_eq!(c.algebra.dim(), 3);
    assert_eq!(c.algebra.mul_basis(0, 2), a.mul_basis(0, 2));
    assert_eq!(a.corner(&[1]).unwrap().algebra.dim(), 1);
    assert!(matches!(a.corner(&[]), Err(Error::EmptyCorner)));
    let (b, _) = corpus::get("F3").unwrap().build(&f(2)).unwrap();
    assert_eq!(b.corner(&[0]).unwrap().algebra.dim(), 1);
}

#[test]
fn quotient_examples() {
    let (a, _) = corpus::get("F2").unwrap().build(&f(5)).unwrap();
    let q = a.quotient_by_idempotent_ideal(&[]).unwrap();
    assert_eq!(q.algebra.dim(), 3);
    let q = a.quotient_by_idempotent_ideal(&[1]).unwrap();
    assert_eq!(q.algebra.dim(), 1);
    assert_eq!(q.algebra.vertex_label(0), "1");
    assert!(matches!(a.quotient_by_idempotent_ideal(&[0, 1]), Err(Error::ZeroAlgebra)));
    let (b, _) = corpus::get("F3").unwrap().build(&f(2)).unwrap();
    let q = b.quotient_by_idempotent_ideal(&[0]).unwrap();
    assert_eq!(q.algebra.dim(), 1);
    assert_eq!(q.algebra.vertex_label(0), "c");
}

#[test]
fn opposite_examples() {
    let (a, _) = corpus::get("F2").unwrap().build(&f(5)).unwrap();
    let op = a.opposite().unwrap();
    assert_eq!(op.quiver().arrows.len(), 1);
    assert_eq!((op.quiver().arrows[0].source, op.quiver().arrows[0].target), (1, 0));
    let opop = op.opposite().unwrap();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            assert_eq!(opop.mul_basis(i, j), a.mul_basis(i, j));
        }
    }
    let (k, _) = corpus::get("F1").unwrap().build(&f(2)).unwrap();
    assert_eq!(k.opposite().unwrap().dim(), 1);
}

#[test]
fn corpus_invariants() {
    for name in corpus::names() {
        let fx = corpus::get(name).unwrap();
        for p in [2, 3, 5] {
            let fld = f(p);
            let fx = fx.with_field(fld.spec());
            let (a, s) = fx.build(&fld).unwrap();
            assert!(a.is_associative(), "{name} over F_{p}");
            let blocks: usize = a.block_dims().iter().flatten().sum();
            assert_eq!(blocks, a.dim());
            // corner then corner composes
            let open = s.open_chain();
            if open.len() > 2 && open[1].len() > 1 {
                let big = a.corner(&open[1]).unwrap();
                let small_in_big: Vec<usize> = open[2]
                    .iter()
                    .map(|v| big.vertex_map.iter().position(|x| x == v).unwrap())
                    .collect();
                let twice = big.algebra.corner(&small_in_big).unwrap();
                let once = a.corner(&open[2]).unwrap();
                assert_eq!(twice.algebra, once.algebra, "{name}");
            }
            println!("{name} over F_{p}: dim {}", a.dim());
        }
    }
}
