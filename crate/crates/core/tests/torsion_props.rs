use novikov_core::algebra::{rf_expand, PivotOrder};
use novikov_core::complexes::{algebraic_mapping_torus, alternating_det_product, torsion, torsion_with, Tower, TorsionStrategy};
use novikov_core::testkit::{random_acyclic_complex, random_complex_with_self_maps, rng};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn torsion_of_known_complexes(seed in any::<u64>()) {
        let s = random_acyclic_complex(&mut rng(seed), 3, 6, 4);
        let c = s.complex.rationalize().unwrap();
        let expected = novikov_core::complexes::Torsion::normalize(s.expected.clone()).unwrap().normalized;
        for strategy in [
            TorsionStrategy::Contraction(PivotOrder::Ascending),
            TorsionStrategy::Contraction(PivotOrder::Descending),
            TorsionStrategy::MilnorBases(PivotOrder::Ascending),
            TorsionStrategy::MilnorBases(PivotOrder::Descending),
        ] {
            prop_assert_eq!(&torsion_with(&c, strategy).unwrap().normalized, &expected);
        }
    }

    #[test]
    fn mapping_torus_torsion(seed in any::<u64>()) {
        let s = random_complex_with_self_maps(&mut rng(seed), 3, 4, 1);
        let h = &s.maps[0];
        let t = algebraic_mapping_torus(&s.complex, h).unwrap();
        let tau = torsion(&t.rationalize().unwrap()).unwrap();
        let expected = alternating_det_product(h).unwrap();
        prop_assert_eq!(tau.expand(16), rf_expand(&expected, 16).unwrap());
        prop_assert_eq!(tau.normalized, expected);
    }

    #[test]
    fn towers_round_trip(seed in any::<u64>(), n in 1i64..10) {
        let s = random_acyclic_complex(&mut rng(seed), 3, 6, 4);
        let tower = Tower::of_truncations(&s.complex, n).unwrap();
        tower.check().unwrap();
        let lim = tower.inverse_limit(n).unwrap();
        let direct = s.complex.base_change(novikov_core::complexes::BaseChange::ModT(n)).unwrap();
        prop_assert_eq!(lim.boundaries(), direct.boundaries());
    }
}
