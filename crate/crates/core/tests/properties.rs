use proptest::prelude::*;
use weightmult::{
    dimension, dlm, verma_multiplicity, Algorithm, BigRational, Family, MultContext, PartitionMemo,
    Rational64, RootSystem, RootSystemQ, RootVector, Weight,
};

const TYPES: [(Family, usize); 5] = [
    (Family::A, 3),
    (Family::B, 2),
    (Family::C, 3),
    (Family::D, 4),
    (Family::G, 2),
];

fn small_type() -> impl Strategy<Value = (Family, usize)> {
    prop::sample::select(&TYPES[..])
}

/// A root system, a dominant weight with small coordinates and a root-lattice
/// offset below it.
fn query() -> impl Strategy<Value = (Family, usize, Vec<i64>, Vec<i64>)> {
    small_type().prop_flat_map(|(f, l)| {
        (
            Just(f),
            Just(l),
            prop::collection::vec(0i64..=2, l),
            prop::collection::vec(0i64..=3, l),
        )
    })
}

fn below(rs: &RootSystemQ, lam: &Weight, c: &[i64]) -> Weight {
    lam - &rs
        .root_to_weight_coords(&RootVector::new(c.to_vec()).unwrap())
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rescaling_the_form_changes_nothing((f, l, a, c) in query(), num in 1i64..6, den in 1i64..6) {
        let rs = RootSystemQ::build(f, l).unwrap();
        let scaled = rs.rescaled(BigRational::new(num.into(), den.into()));
        let lam = Weight::new(a);
        let mu = below(&rs, &lam, &c);
        prop_assert_eq!(rs.weyl_dimension(&lam).unwrap(), scaled.weyl_dimension(&lam).unwrap());
        let dom = rs.dominant_representative(&mu);
        prop_assert_eq!(rs.orbit_size(&dom).unwrap(), scaled.orbit_size(&dom).unwrap());
        for algorithm in [Algorithm::Auto, Algorithm::Classical] {
            let m1 = MultContext::new(&rs, lam.clone()).unwrap().with_algorithm(algorithm).compute(&mu).unwrap();
            let m2 = MultContext::new(&scaled, lam.clone()).unwrap().with_algorithm(algorithm).compute(&mu).unwrap();
            prop_assert_eq!(m1, m2);
        }
    }

    #[test]
    fn bounded_by_the_verma_module((f, l, a, c) in query()) {
        let rs = RootSystemQ::build(f, l).unwrap();
        let lam = Weight::new(a);
        let mu = below(&rs, &lam, &c);
        let m = MultContext::new(&rs, lam.clone()).unwrap().compute(&mu).unwrap();
        let p = verma_multiplicity(&rs, &lam, &mu, &mut PartitionMemo::new()).unwrap();
        prop_assert!(m.0 <= p);
    }

    #[test]
    fn fixed_width_scalars_agree((f, l, a, c) in query()) {
        let big = RootSystemQ::build(f, l).unwrap();
        let small: RootSystem<Rational64> = RootSystem::build(f, l).unwrap();
        let lam = Weight::new(a);
        let mu = below(&big, &lam, &c);
        for algorithm in [Algorithm::Auto, Algorithm::Classical, Algorithm::Fast] {
            let m1 = MultContext::new(&big, lam.clone()).unwrap().with_algorithm(algorithm).compute(&mu).unwrap();
            let m2 = MultContext::new(&small, lam.clone()).unwrap().with_algorithm(algorithm).compute(&mu).unwrap();
            prop_assert_eq!(m1, m2);
        }
    }

    #[test]
    fn dlm_is_positive_below_the_top((f, l, a, c) in query()) {
        let rs = RootSystemQ::build(f, l).unwrap();
        let lam = Weight::new(a);
        let mu = below(&rs, &lam, &c);
        if mu.is_dominant() && mu != lam {
            prop_assert!(dlm(&rs, &lam, &mu).unwrap() > BigRational::from_integer(0.into()));
        }
    }

    #[test]
    fn algorithms_agree_and_divisions_are_exact((f, l, a, c) in query()) {
        let rs = RootSystemQ::build(f, l).unwrap();
        let lam = Weight::new(a);
        let mu = below(&rs, &lam, &c);
        let results: Vec<_> = [Algorithm::Auto, Algorithm::Classical, Algorithm::Fast]
            .into_iter()
            .map(|alg| MultContext::new(&rs, lam.clone()).unwrap().with_algorithm(alg).compute(&mu))
            .collect();
        for r in &results {
            prop_assert!(r.is_ok(), "{:?}", r);
        }
        prop_assert_eq!(results[0].as_ref().unwrap(), results[1].as_ref().unwrap());
        prop_assert_eq!(results[1].as_ref().unwrap(), results[2].as_ref().unwrap());
    }

    #[test]
    fn counters_never_decrease((f, l, a, c) in query(), extra in prop::collection::vec(0i64..=2, 4)) {
        let rs = RootSystemQ::build(f, l).unwrap();
        let lam = Weight::new(a);
        let mut ctx = MultContext::new(&rs, lam.clone()).unwrap();
        let mut last = ctx.counters();
        let mut queries = vec![c];
        queries.extend(extra.chunks(1).map(|x| vec![x[0]; l]));
        for q in queries {
            ctx.compute(&below(&rs, &lam, &q)).unwrap();
            let now = ctx.counters();
            prop_assert!(now.classical_terms >= last.classical_terms);
            prop_assert!(now.fast_terms >= last.fast_terms);
            prop_assert!(now.inner_products >= last.inner_products);
            prop_assert!(now.cache_hits >= last.cache_hits);
            last = now;
        }
    }

    #[test]
    fn level_recursion_cost_in_type_a(l in 2usize..10) {
        let rs = RootSystemQ::build(Family::A, l).unwrap();
        prop_assert_eq!(rs.phi_j_len(0), l);
        prop_assert_eq!(rs.positive_roots().len(), l * (l + 1) / 2);
        let mut lam = Weight::zero(l);
        lam.coords_mut()[0] = 1;
        lam.coords_mut()[l - 1] = 1;
        let c = RootVector::new(vec![1; l]).unwrap();
        let mu = &lam - &rs.root_to_weight_coords(&c).unwrap();
        let mut ctx = MultContext::new(&rs, lam).unwrap().with_algorithm(Algorithm::Fast);
        ctx.fast_freudenthal(&mu, &c, 0).unwrap();
        prop_assert_eq!(ctx.counters().top_level_terms, l as u64);
    }
}

#[test]
fn f4_dimensions_match_weyl() {
    let rs = RootSystemQ::build(Family::F, 4).unwrap();
    for lam in [[0, 0, 0, 1], [1, 0, 0, 0], [0, 0, 1, 0]] {
        let lam = Weight::from(lam);
        assert_eq!(
            dimension(&rs, &lam).unwrap(),
            rs.weyl_dimension(&lam).unwrap()
        );
    }
}
