use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::algebra::{parse_rational, rf_expand, TruncatedSeries};
use crate::complexes::ComplexRing;
use crate::error::Error;

fn lp(c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_ints(0, c)
}

fn m1(e: LaurentPoly) -> Matrix<LaurentPoly> {
    Matrix::from_rows(vec![vec![e]], 1, LaurentPoly::zero()).unwrap()
}

/// One generator per listed degree, zero boundary.
fn points(degs: &[(usize, &str)]) -> IntComplex {
    let top = degs.iter().map(|d| d.0).max().map_or(0, |m| m + 1);
    let mut bases = vec![Vec::<String>::new(); top];
    for (k, name) in degs {
        bases[*k].push(String::from(*name));
    }
    let bd = (1..top).map(|k| Matrix::zeros(bases[k - 1].len(), bases[k].len(), &LaurentPoly::zero())).collect();
    IntComplex::new(ComplexRing::Polynomials, bases, bd).unwrap()
}

fn empty() -> IntComplex {
    IntComplex::zero(ComplexRing::Polynomials)
}

fn circle_nv() -> IntComplex {
    IntComplex::new(ComplexRing::Polynomials, vec![vec![String::from("q")], vec![String::from("p")]], vec![m1(lp(&[1, -1]))]).unwrap()
}

fn series(src: &str, n: i64) -> TruncatedSeries {
    rf_expand(&parse_rational(src).unwrap(), n).unwrap()
}

#[test]
fn single_descent_class_in_degree_one() {
    let s = DescentSystem::builder(points(&[(1, "a")]), empty()).h(1, m1(lp(&[0, 1]))).build().unwrap();
    assert_eq!(torsion_closed_form(&s, 8).unwrap().series(), &series("1/(1-t)", 8));
    assert_eq!(torsion_generic(&s, 8).unwrap(), torsion_closed_form(&s, 8).unwrap());
    // E' = E when N = 0, with delta = -d^R
    let e = build_e(&s).unwrap();
    let ep = build_e_prime(&s).unwrap();
    assert_eq!(e.ranks(), ep.ranks());
    assert!(telescoping_holds(&s).unwrap());
}

#[test]
fn telescoping_pair() {
    let s = DescentSystem::builder(points(&[(0, "a"), (1, "b")]), empty()).h(0, m1(lp(&[0, 1]))).h(1, m1(lp(&[0, 1]))).build().unwrap();
    let e = build_e(&s).unwrap();
    assert_eq!(e.boundary(1).get(0, 1), &lp(&[1, -1]));
    assert!(torsion_closed_form(&s, 8).unwrap().series().coeffs() == TruncatedSeries::from_ints(&[1], 8).coeffs());
    assert_eq!(torsion_generic(&s, 8).unwrap(), torsion_closed_form(&s, 8).unwrap());
}

#[test]
fn circle_descent_is_trivial() {
    let s = DescentSystem::builder(empty(), circle_nv()).build().unwrap();
    let e = build_e(&s).unwrap();
    assert_eq!(e.basis(1), &[String::from("n/p")]);
    assert!(build_e_prime(&s).unwrap().ranks().iter().all(|&r| r == 0));
    assert!(torsion_generic_rf(&s).unwrap().normalized.is_one());
    let xi = xi_map(&s, 6).unwrap();
    assert!(xi.maps().iter().all(|m| m.rows() == 0 || *m == Matrix::identity(m.rows(), &LaurentPoly::zero())));
}

fn geometric_instance(sigma: LaurentPoly) -> DescentSystem {
    DescentSystem::builder(points(&[(0, "e")]), points(&[(1, "p")])).h(0, m1(lp(&[0, 1]))).sigma1("p", vec![sigma]).build().unwrap()
}

#[test]
fn xi_is_a_geometric_series() {
    let s = geometric_instance(LaurentPoly::one());
    let xi = xi_map(&s, 5).unwrap();
    // E_1 = N_1 ⊕ R_0
    assert_eq!(xi.map(1).get(0, 0), &LaurentPoly::one());
    assert_eq!(xi.map(1).get(1, 0), &lp(&[-1, -1, -1, -1, -1]));
    assert_eq!(torsion_generic_rf(&s).unwrap().normalized, parse_rational("1-t").unwrap());
    assert!(matches!(check_delta_p(&s, 5), Err(Error::TruncationMismatch { order: 1, .. })));
    let s = geometric_instance(lp(&[0, 1]));
    check_delta_p(&s, 16).unwrap();
    assert_eq!(delta_p(&s, "p", 3).unwrap(), vec![LaurentPoly::one(), lp(&[0, -1, -1])]);
}

#[test]
fn xi_torsion_equals_e_prime_torsion() {
    for s in [geometric_instance(lp(&[0, 1])), geometric_instance(lp(&[0, 2, -1]))] {
        assert_eq!(torsion_of_xi(&s).unwrap().normalized, torsion_generic_rf(&s).unwrap().normalized);
    }
}

#[test]
fn inconsistent_star_a_is_reported() {
    let s = DescentSystem::builder(points(&[(0, "e")]), points(&[(1, "p")]))
        .h(0, m1(lp(&[0, 1])))
        .sigma1("p", vec![lp(&[0, 1])])
        .star_a(1, m1(lp(&[0, 2])))
        .build()
        .unwrap();
    assert!(s.star_a_given());
    assert!(matches!(xi_map(&s, 4), Err(Error::NotAChainMap { .. })));
}

#[test]
fn descent_validation() {
    let bad = DescentSystem::builder(points(&[(1, "a")]), empty()).h(1, m1(lp(&[1, 1]))).build();
    assert!(matches!(bad, Err(Error::PositiveValuationRequired(_))));
    let bad = DescentSystem::builder(points(&[(0, "e")]), points(&[(1, "p")])).sigma1("x", vec![LaurentPoly::one()]).build();
    assert!(matches!(bad, Err(Error::UnknownLabel(_))));
    let s = DescentSystem::builder(points(&[(1, "a")]), empty()).h(1, m1(lp(&[0, 1]))).n_data(8).build().unwrap();
    assert!(matches!(torsion_generic(&s, 9), Err(Error::InsufficientDataOrder { requested: 9, available: 8 })));
}

#[test]
fn nonzero_square_in_e() {
    // d^R_1 = 1 from a to b, H_0 = t, H_1 = 0: the (1,3) block needs H_0 d = d H_1
    let r = IntComplex::new(ComplexRing::Polynomials, vec![vec![String::from("b")], vec![String::from("a")]], vec![m1(LaurentPoly::one())]).unwrap();
    let bad = DescentSystem::builder(r.clone(), empty()).h(0, m1(lp(&[0, 1]))).build();
    assert!(matches!(bad, Err(Error::BoundarySquareNonzero { .. })));
    let good = DescentSystem::builder(r, empty()).h(0, m1(lp(&[0, 1]))).h(1, m1(lp(&[0, 1]))).build().unwrap();
    assert_eq!(torsion_generic(&good, 10).unwrap(), torsion_closed_form(&good, 10).unwrap());
}

#[test]
fn theorem_b_on_synthetic_instance() {
    use crate::morse_novikov::MNInstance;
    use crate::zeta::{OrbitSet, PrimeOrbit};
    let s = DescentSystem::builder(points(&[(1, "a")]), empty()).h(1, m1(lp(&[0, 1]))).build().unwrap();
    let mut inst = MNInstance::new("synthetic", 2, Vec::new(), Default::default(), 16);
    inst.descent = Some(s);
    let r = verify_theorem_b(&inst, 16).unwrap();
    assert_eq!(r.zeta_source, ZetaSource::Descent);
    assert!(r.pass, "{r:?}");
    inst.orbits = Some(OrbitSet::from_primes(&[PrimeOrbit::new(1, -1, 1).unwrap()], 16));
    let r = verify_theorem_b(&inst, 16).unwrap();
    assert_eq!(r.zeta_source, ZetaSource::Orbits);
    assert!(r.pass);
    assert_eq!(r.w, series("1/(1-t)", 16));
    inst.orbits = Some(OrbitSet::from_primes(&[PrimeOrbit::new(1, -1, -1).unwrap()], 16));
    assert!(!verify_theorem_b(&inst, 16).unwrap().pass);
}
