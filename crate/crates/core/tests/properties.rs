use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankweight::codes::{random_code, rank_weight, LinearCode};
use rankweight::distribution::{brute_force_distribution, dual_distribution, Budget, DualMethod};
use rankweight::gf::{find_irreducible, Field, FieldSpec, PrimeField};
use rankweight::verify::verify_code;

fn code(q: u32, n: usize, m: usize, k: usize, seed: u64) -> LinearCode {
    let g = find_irreducible(&PrimeField::new(q).unwrap(), m, seed);
    let spec = FieldSpec::prime_extension(q, &g).unwrap();
    random_code(&spec, n, k, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn shape() -> impl Strategy<Value = (u32, usize, usize, usize)> {
    (prop_oneof![Just(2u32), Just(3)], 1usize..=3, 1usize..=3)
        .prop_flat_map(|(q, n, m)| (Just(q), Just(n), Just(m), 1..=n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn battery_passes((q, n, m, k) in shape(), seed in any::<u64>()) {
        let c = code(q, n, m, k, seed);
        let report = verify_code(&c, Budget::default()).unwrap();
        let failed: Vec<_> = report.failures().collect();
        prop_assert!(failed.is_empty(), "{:?}", failed);
    }

    #[test]
    fn dual_of_dual((q, n, m, k) in shape(), seed in any::<u64>()) {
        prop_assume!(k < n);
        let c = code(q, n, m, k, seed);
        let d = c.dual().unwrap();
        prop_assert_eq!(d.dual().unwrap(), c.clone());
        prop_assert_eq!(
            dual_distribution(&d, DualMethod::Transversal, Budget::default()).unwrap(),
            brute_force_distribution(&c, None, Budget::default()).unwrap()
        );
    }

    #[test]
    fn weight_bounded_by_length_and_degree((q, n, m, k) in shape(), seed in any::<u64>(), msg in any::<u64>()) {
        let c = code(q, n, m, k, seed);
        let spec = c.spec();
        let mut idx = msg;
        let coeffs: Vec<_> = (0..k).map(|_| { let x = spec.element(idx % spec.order()); idx /= spec.order(); x }).collect();
        let word = c.encode(&coeffs);
        let w = rank_weight(spec, &word);
        prop_assert!(w <= n.min(m));
        prop_assert_eq!(w == 0, word.iter().all(|x| *x == spec.zero()));
    }
}
