use num_rational::BigRational;
use proptest::prelude::*;
use strata_forge::exactla::{canonical_span, Field, Mat, PrimeField, QuotientSpace, Rationals};

fn fp_matrix(p: u64, max: usize) -> impl Strategy<Value = (u64, usize, usize, Vec<u64>)> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| (Just(p), Just(r), Just(c), prop::collection::vec(0..p, r * c)))
}

fn build(p: u64, r: usize, c: usize, data: &[u64]) -> (PrimeField, Mat<PrimeField>) {
    let f = PrimeField::new(p).unwrap();
    let m = Mat::from_vec(&f, r, c, data.to_vec());
    (f, m)
}

proptest! {
    #[test]
    fn rank_nullity((p, r, c, data) in prop_oneof![fp_matrix(2, 6), fp_matrix(3, 6), fp_matrix(5, 5)]) {
        let (_, m) = build(p, r, c, &data);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), c);
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn rref_transform((p, r, c, data) in prop_oneof![fp_matrix(2, 6), fp_matrix(7, 5)]) {
        let (_, m) = build(p, r, c, &data);
        let rr = m.rref();
        prop_assert_eq!(rr.transform.mul(&m), rr.echelon.clone());
        prop_assert!(rr.transform.inverse().is_some());
        prop_assert_eq!(rr.rank, m.transpose().rank());
    }

    #[test]
    fn inverse_and_solve((n, data, b) in (1usize..=5).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(0u64..3, n * n), prop::collection::vec(0u64..3, n))
    })) {
        let (f, m) = build(3, n, n, &data);
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(inv.mul(&m), Mat::identity(&f, n));
                let x = m.solve_vec(&b).unwrap();
                prop_assert_eq!(m.mul_vec(&x), b);
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn canonical_span_is_canonical((p, r, c, data) in fp_matrix(2, 6), seed in 0u64..1000) {
        let (f, m) = build(p, r, c, &data);
        let rows: Vec<Vec<u64>> = (0..r).map(|i| m.row(i).to_vec()).collect();
        let mut shuffled = rows.clone();
        shuffled.rotate_left((seed as usize) % r.max(1));
        if r > 1 {
            // add row 0 to row 1: same span
            let sum: Vec<u64> = shuffled[0].iter().zip(&shuffled[1]).map(|(a, b)| f.add(a, b)).collect();
            shuffled[1] = sum;
        }
        prop_assert_eq!(canonical_span(&f, c, &rows), canonical_span(&f, c, &shuffled));
    }

    #[test]
    fn quotient_projection_kills_subspace((p, r, c, data) in fp_matrix(3, 5)) {
        let (f, m) = build(p, r, c, &data);
        let spanning: Vec<Vec<u64>> = (0..c).map(|j| m.column(j)).collect();
        let q = QuotientSpace::new(&f, r, &spanning);
        prop_assert_eq!(q.sub_dim() + q.quotient_dim(), r);
        for v in &spanning {
            prop_assert!(q.projection.mul_vec(v).iter().all(|x| f.is_zero(x)));
        }
        let s = q.section(&f, r);
        prop_assert_eq!(q.projection.mul(&s), Mat::identity(&f, q.quotient_dim()));
    }

    #[test]
    fn rationals_rank_nullity(data in prop::collection::vec(-4i64..5, 12), den in 1i64..4) {
        let f = Rationals;
        let m = Mat::from_vec(&f, 3, 4, data.iter().map(|&x| f.from_ratio(x, den).unwrap()).collect::<Vec<BigRational>>());
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), 4);
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn field_axioms(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 101]), a in 0u64..1000, b in 0u64..1000) {
        let f = PrimeField::new(p).unwrap();
        let (x, y) = (a % p, b % p);
        prop_assert_eq!(f.add(&f.sub(&x, &y), &y), x);
        if !f.is_zero(&y) {
            let inv = f.inv(&y).unwrap();
            prop_assert!(f.is_one(&f.mul(&y, &inv)));
        }
    }
}
