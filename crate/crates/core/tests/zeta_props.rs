use novikov_core::algebra::{exp_eta, is_integral, log_series, rf_expand, TruncatedSeries};
use novikov_core::testkit::{random_int_matrix, random_prime_orbits, random_witt, rng};
use novikov_core::zeta::{
    eta_from_orbits, expand_prime_orbit, trace_lefschetz, zeta_from_homology, zeta_from_orbits, zeta_from_primes, zeta_rf_from_homology, zeta_v,
    OrbitSet,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbit_and_prime_routes_agree(seed in any::<u64>(), n in 1i64..20) {
        let primes = random_prime_orbits(&mut rng(seed), 6, 5);
        let orbits: Vec<_> = primes.iter().flat_map(|p| expand_prime_orbit(p, n)).collect();
        let z = zeta_from_orbits(&OrbitSet::new(orbits, n).unwrap(), n).unwrap();
        prop_assert_eq!(&z, &zeta_from_primes(&primes, n));
        prop_assert!(is_integral(&z));
    }

    #[test]
    fn inverse_zeta_is_an_inverse(seed in any::<u64>()) {
        let z = zeta_from_primes(&random_prime_orbits(&mut rng(seed), 6, 5), 16);
        let prod = zeta_v(&z).unwrap().try_mul(&z).unwrap();
        prop_assert_eq!(prod, TruncatedSeries::from_ints(&[1], 16));
    }

    #[test]
    fn exp_log_round_trip(seed in any::<u64>()) {
        let w = random_witt(&mut rng(seed), 24, 4);
        let log = log_series(w.series(), 24).unwrap();
        prop_assert_eq!(&exp_eta(&log, 24).unwrap(), w.series());
    }

    #[test]
    fn homology_zeta_is_exp_of_traces(seed in any::<u64>()) {
        let mut r = rng(seed);
        let h: Vec<_> = (0..3).map(|k| random_int_matrix(&mut r, [1, 2, 2][k], [1, 2, 2][k], 2)).collect();
        let n = 10;
        let l: Vec<_> = (1..n as u32).map(|k| trace_lefschetz(&h, k).unwrap()).collect();
        let eta = novikov_core::zeta::eta_from_lefschetz_numbers(&l);
        prop_assert_eq!(exp_eta(&eta, n).unwrap(), zeta_from_homology(&h, n).unwrap());
        prop_assert_eq!(rf_expand(&zeta_rf_from_homology(&h).unwrap(), n).unwrap(), zeta_from_homology(&h, n).unwrap());
    }

    #[test]
    fn eta_is_additive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_prime_orbits(&mut r, 4, 5);
        let b = random_prime_orbits(&mut r, 4, 5);
        let both: Vec<_> = a.iter().chain(&b).copied().collect();
        let eta = |p: &[_]| eta_from_orbits(&OrbitSet::from_primes(p, 12), 12).unwrap();
        prop_assert_eq!(eta(&both), eta(&a).try_add(&eta(&b)).unwrap());
    }
}
