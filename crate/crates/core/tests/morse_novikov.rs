use novikov_core::algebra::LaurentPoly;
use novikov_core::complexes::ComplexRing;
use novikov_core::morse_novikov::{build_novikov_complex, novikov_tower, CriticalPoint, MNInstance, NovikovIncidence, NovikovOptions};

fn lp(c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_ints(0, c)
}

/// Torus-like instance: two index-1 points cancelling against the index-0 and
/// index-2 points up to a factor of `1 - t`.
fn instance() -> MNInstance {
    let points = vec![CriticalPoint::new("m", 0), CriticalPoint::new("a", 1), CriticalPoint::new("b", 1), CriticalPoint::new("M", 2)];
    let inc = NovikovIncidence::new().with("a", "m", lp(&[1, -1])).with("b", "m", lp(&[0])).with("M", "b", lp(&[1, -1])).with("M", "a", lp(&[0]));
    MNInstance::new("torus", 2, points, inc, 12)
}

#[test]
fn novikov_complex_over_truncations() {
    let inst = instance();
    let c = inst.novikov_complex(6).unwrap();
    assert_eq!(c.ring(), ComplexRing::PowerSeries(6));
    assert_eq!(c.ranks(), vec![1, 2, 1]);
    let tower = novikov_tower(&c, 6).unwrap();
    tower.check().unwrap();
    assert_eq!(tower.inverse_limit(6).unwrap().boundaries(), c.boundaries());
    assert_eq!(inst.novikov_homology_ranks().unwrap(), vec![0, 0, 0]);
}

#[test]
fn requests_beyond_the_data_fail() {
    let inst = instance();
    assert!(inst.novikov_complex(13).is_err());
    let opts = NovikovOptions::new(4);
    assert!(build_novikov_complex(&inst.points, &inst.incidence, 5, opts).is_err());
}

#[test]
fn structural_report() {
    let r = instance().structural_checks(8).unwrap();
    assert!(r.passed());
    assert!(r.tower_round_trip);
    assert_eq!(r.homology_agrees, None);
}
