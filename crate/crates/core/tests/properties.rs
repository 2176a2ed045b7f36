use proptest::prelude::*;

use superlie::catalog::{self, Rng};
use superlie::invariants::{
    check_quotient_monotonicity, epicenter, is_capable_lie, jacobi_span, jacobi_span_with, multiplier, Triples,
};
use superlie::linalg::{echelonize, TensorSpace, WedgeSpace};
use superlie::{Dims, Field, GradedSubspace, GradedVector, Scalar, SkewSuperMap};

fn f5() -> Field {
    Field::prime(5).unwrap()
}

/// A random valid object with `dim V ≤ (3|3)` and `dim W ≤ (3|3)`.
fn object(field: Field) -> impl Strategy<Value = SkewSuperMap> {
    (0usize..=3, 0usize..=3, any::<u64>())
        .prop_filter("needs a nonzero free rank", |&(m, n, _)| !catalog::free_rank(Dims::new(m, n)).is_zero())
        .prop_flat_map(|(m, n, seed)| {
            let free = catalog::free_rank(Dims::new(m, n));
            (Just((m, n, seed)), 0..=free.even.min(3), 0..=free.odd.min(3))
        })
        .prop_filter("rank must be nonzero", |&(_, r, s)| r + s > 0)
        .prop_map(move |((m, n, seed), r, s)| catalog::random_sske(m, n, r, s, seed, field).unwrap())
}

fn subspace(field: Field, ambient: Dims, seed: u64, count: usize) -> GradedSubspace {
    let mut rng = Rng::new(seed);
    let gens: Vec<GradedVector> = (0..count)
        .map(|i| rng.vector_in(field, ambient, ambient.parity_of(i % ambient.total().max(1))))
        .collect();
    GradedSubspace::from_generators(field, ambient, &gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn jacobi_span_is_scale_invariant(f in object(Field::Rational), k in prop::sample::select(vec![(2, 1), (-1, 1), (1, 3)])) {
        let lambda = Field::Rational.ratio(k.0, k.1).unwrap();
        let g = f.scaled(&lambda);
        prop_assert_eq!(jacobi_span(&f).subspace, jacobi_span(&g).subspace);
        prop_assert_eq!(epicenter(&f).subspace, epicenter(&g).subspace);
    }

    #[test]
    fn sorted_triples_span_the_same(f in object(f5())) {
        prop_assert_eq!(jacobi_span(&f).subspace, jacobi_span_with(&f, Triples::Sorted).subspace);
    }

    #[test]
    fn epicenter_is_a_graded_subspace_of_w(f in object(f5())) {
        let e = epicenter(&f);
        prop_assert_eq!(e.subspace.ambient(), f.rank());
        prop_assert!(e.subspace.basis().iter().all(GradedVector::is_homogeneous));
        prop_assert_eq!(e.capable, e.subspace.is_zero());
        prop_assert_eq!(is_capable_lie(&f.to_lie().unwrap()).unwrap(), e.capable);
    }

    #[test]
    fn multiplier_matches_the_dimension_count(f in object(f5())) {
        let m = multiplier(&f);
        let tensor = TensorSpace::new(f.source(), f.target()).dims();
        let wedge = WedgeSpace::new(f.source()).dims();
        let x = jacobi_span(&f).subspace.dims();
        prop_assert_eq!(m.total_dims, tensor - x + wedge - f.rank());
        prop_assert_eq!(m.total_dims, m.quotient_dims + m.kernel_rho_dims);
    }

    #[test]
    fn round_trip_is_exact(f in object(f5())) {
        prop_assert_eq!(SkewSuperMap::from_lie(&f.to_lie().unwrap()).unwrap(), f);
    }

    #[test]
    fn quotients_keep_the_epicenter(f in object(f5()), seed in any::<u64>()) {
        let rank = f.rank();
        let mut rng = Rng::new(seed);
        let dims = Dims::new(rng.below(rank.even as u64 + 1) as usize, rng.below(rank.odd as u64 + 1) as usize);
        prop_assume!(dims != rank);
        let ideal = catalog::random_subspace(f5(), rank, dims, &mut rng);
        prop_assert!(check_quotient_monotonicity(&f, &ideal).unwrap());
    }

    #[test]
    fn lattice_dimension_formula(seed in any::<u64>(), a in 0usize..5, b in 0usize..5, e in 0usize..4, o in 0usize..4) {
        prop_assume!(e + o > 0);
        let ambient = Dims::new(e, o);
        let x = subspace(f5(), ambient, seed, a);
        let y = subspace(f5(), ambient, seed.wrapping_add(1), b);
        let sum = x.sum(&y).unwrap();
        let meet = x.intersect(&y).unwrap();
        prop_assert_eq!(sum.dims() + meet.dims(), x.dims() + y.dims());
        prop_assert!(meet.is_subspace_of(&x).unwrap() && meet.is_subspace_of(&y).unwrap());
    }

    #[test]
    fn membership_matches_brute_force(seed in any::<u64>(), count in 0usize..3, probe in any::<u64>()) {
        // Over F_5 with a 3-dimensional even ambient space, enumerate the span.
        let field = f5();
        let ambient = Dims::new(3, 0);
        let mut rng = Rng::new(seed);
        let gens: Vec<GradedVector> = (0..count).map(|_| rng.vector_in(field, ambient, superlie::Parity::Even)).collect();
        let s = GradedSubspace::from_generators(field, ambient, &gens).unwrap();
        let mut span = vec![GradedVector::zero(field, ambient)];
        for g in &gens {
            span = span
                .iter()
                .flat_map(|v| (0..5).map(move |c| v.add(&g.scaled(&field.from_i64(c)))))
                .collect();
        }
        let v = Rng::new(probe).vector_in(field, ambient, superlie::Parity::Even);
        prop_assert_eq!(s.contains(&v).unwrap(), span.contains(&v));
    }

    #[test]
    fn echelonize_is_idempotent(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 0..6)) {
        let q = Field::Rational;
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| q.from_i64(x)).collect()).collect();
        let once = echelonize(q, 4, rows);
        let twice = echelonize(q, 4, once.rows().to_vec());
        prop_assert_eq!(once.rows(), twice.rows());
        prop_assert_eq!(once.pivots(), twice.pivots());
    }
}
