//! Lefschetz eta and zeta functions: from closed orbits, prime-orbit
//! products, homology determinants and homological descent matrices.

mod oracle;

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{exp_eta, linalg, rf_expand, CoeffRing, LaurentPoly, Matrix, RationalFunction, TruncatedSeries};
use crate::complexes::alternating_det_product;
use crate::error::{Error, Result};

pub use oracle::{cat_map_oracle, cat_map_orbits, orbits_from_fixed_points, trace_lefschetz};

/// A closed orbit of `-v`: winding `n >= 1`, multiplicity `m >= 1`, index `eps`.
/// `count` identical orbits are described by one record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedOrbit {
    pub n: u32,
    pub m: u32,
    pub eps: i8,
    pub count: BigInt,
}

impl ClosedOrbit {
    pub fn new(n: u32, m: u32, eps: i8) -> Self {
        Self { n, m, eps, count: BigInt::one() }
    }

    pub fn with_count(mut self, count: impl Into<BigInt>) -> Self {
        self.count = count.into();
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 {
            return Err(Error::Invalid(format!("closed orbit needs winding and multiplicity >= 1, got n={} m={}", self.n, self.m)));
        }
        if self.eps != 1 && self.eps != -1 {
            return Err(Error::Invalid(format!("orbit index must be +1 or -1, got {}", self.eps)));
        }
        if self.count.is_negative() {
            return Err(Error::Invalid(format!("orbit count {} is negative", self.count)));
        }
        Ok(())
    }
}

/// A prime orbit contributing the factor `(1 + e1 t^n)^{e2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeOrbit {
    pub n: u32,
    pub e1: i8,
    pub e2: i8,
}

impl PrimeOrbit {
    pub fn new(n: u32, e1: i8, e2: i8) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("prime orbit winding must be >= 1".into()));
        }
        if e1.abs() != 1 || e2.abs() != 1 {
            return Err(Error::Invalid(format!("prime orbit signs must be +1 or -1, got ({e1}, {e2})")));
        }
        Ok(Self { n, e1, e2 })
    }
}

/// Closed orbits, complete for every winding below `complete_below`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet {
    orbits: Vec<ClosedOrbit>,
    complete_below: i64,
}

impl OrbitSet {
    pub fn new(orbits: Vec<ClosedOrbit>, complete_below: i64) -> Result<Self> {
        for o in &orbits {
            o.validate()?;
        }
        Ok(Self { orbits, complete_below })
    }

    pub fn empty(complete_below: i64) -> Self {
        Self { orbits: Vec::new(), complete_below }
    }

    pub fn orbits(&self) -> &[ClosedOrbit] {
        &self.orbits
    }

    /// Completeness order `N_orb`.
    pub fn complete_below(&self) -> i64 {
        self.complete_below
    }

    /// Orbit set generated by iterates of prime orbits.
    pub fn from_primes(primes: &[PrimeOrbit], n: i64) -> Self {
        Self { orbits: primes.iter().flat_map(|p| expand_prime_orbit(p, n)).collect(), complete_below: n }
    }
}

fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `eta = sum eps/m t^n` over orbits of winding `< n`.
pub fn eta_from_orbits(s: &OrbitSet, n: i64) -> Result<TruncatedSeries> {
    if n > s.complete_below {
        return Err(Error::InsufficientOrbitOrder { requested: n, available: s.complete_below });
    }
    let len = n.max(0) as usize;
    let mut c = alloc::vec![BigRational::zero(); len];
    for o in &s.orbits {
        let w = o.n as usize;
        if w < len {
            c[w] += rat(&o.count * BigInt::from(o.eps), o.m);
        }
    }
    TruncatedSeries::power_series(CoeffRing::Rat, c, n)
}

/// `zeta = exp(eta)`.
pub fn zeta_from_orbits(s: &OrbitSet, n: i64) -> Result<TruncatedSeries> {
    exp_eta(&eta_from_orbits(s, n)?, n)
}

/// `prod (1 + e1 t^n)^{e2}` modulo `t^n`, over `Z`.
pub fn zeta_from_primes(primes: &[PrimeOrbit], n: i64) -> TruncatedSeries {
    let len = n.max(0) as usize;
    let mut acc = alloc::vec![BigInt::zero(); len];
    if len > 0 {
        acc[0] = BigInt::one();
    }
    for p in primes {
        let w = p.n as usize;
        if w >= len {
            continue;
        }
        if p.e2 > 0 {
            // multiply by 1 + e1 t^w, high degrees first
            for d in (w..len).rev() {
                let add = &acc[d - w] * BigInt::from(p.e1);
                acc[d] += add;
            }
        } else {
            // divide by 1 + e1 t^w: a_d -= e1 a_{d-w}, low degrees first
            for d in w..len {
                let sub = &acc[d - w] * BigInt::from(p.e1);
                acc[d] -= sub;
            }
        }
    }
    TruncatedSeries::power_series(CoeffRing::Int, acc.into_iter().map(BigRational::from_integer).collect(), n).expect("integral power series")
}

/// Iterates `(n k, k, -e2 (-e1)^k)` with `n k < order`: the closed orbits whose
/// eta exponentiates to the prime factor `(1 + e1 t^n)^{e2}`.
pub fn expand_prime_orbit(p: &PrimeOrbit, order: i64) -> Vec<ClosedOrbit> {
    let mut out = Vec::new();
    let mut k: u32 = 1;
    while i64::from(p.n) * i64::from(k) < order {
        let sign = if k.is_multiple_of(2) { 1 } else { -p.e1 };
        out.push(ClosedOrbit::new(p.n * k, k, -p.e2 * sign));
        k += 1;
    }
    out
}

/// `prod_i det(I - t h_i)^{(-1)^{i+1}}` as a rational function.
pub fn zeta_rf_from_homology(h: &[Matrix<BigInt>]) -> Result<RationalFunction> {
    alternating_det_product(h)?.inv()
}

/// Expansion of [`zeta_rf_from_homology`] modulo `t^n`.
pub fn zeta_from_homology(h: &[Matrix<BigInt>], n: i64) -> Result<TruncatedSeries> {
    rf_expand(&zeta_rf_from_homology(h)?, n)
}

/// `sum_{k >= 1} L_k t^k / k` for `L = (L_1, ..., L_{N-1})`, known modulo `t^N`.
pub fn eta_from_lefschetz_numbers(l: &[BigInt]) -> TruncatedSeries {
    let mut c = alloc::vec![BigRational::zero(); l.len() + 1];
    for (i, lk) in l.iter().enumerate() {
        c[i + 1] = rat(lk.clone(), i + 1);
    }
    TruncatedSeries::power_series(CoeffRing::Rat, c, l.len() as i64 + 1).expect("power series")
}

/// Checks every `H_k` entry is a polynomial with zero constant term.
pub fn check_positive_valuation(h: &[Matrix<LaurentPoly>]) -> Result<()> {
    for (k, hk) in h.iter().enumerate() {
        if !hk.is_square() {
            return Err(Error::NotSquare { rows: hk.rows(), cols: hk.cols() });
        }
        for (i, j, e) in hk.entries() {
            if e.valuation().is_some_and(|v| v < 1) {
                return Err(Error::PositiveValuationRequired(format!("H_{k}[{i},{j}] = {e}")));
            }
        }
    }
    Ok(())
}

/// `det(1 - H)` for a square polynomial matrix, computed fraction-free.
pub fn det_one_minus(h: &Matrix<LaurentPoly>) -> LaurentPoly {
    let id = Matrix::identity(h.rows(), &LaurentPoly::zero());
    let m = id.sub(h).expect("square");
    if m.rows() == 0 {
        LaurentPoly::one()
    } else {
        linalg::bareiss_det(&m)
    }
}

/// `prod_k det(1 - H_k)^{(-1)^{k+1}}` as a rational function.
pub fn zeta_rf_from_descent(h: &[Matrix<LaurentPoly>]) -> Result<RationalFunction> {
    check_positive_valuation(h)?;
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for (k, hk) in h.iter().enumerate() {
        let d = det_one_minus(hk);
        if k % 2 == 1 {
            num = &num * &d;
        } else {
            den = &den * &d;
        }
    }
    RationalFunction::new(num, den)
}

/// Expansion of [`zeta_rf_from_descent`] modulo `t^n`.
pub fn zeta_from_descent(h: &[Matrix<LaurentPoly>], n: i64) -> Result<TruncatedSeries> {
    rf_expand(&zeta_rf_from_descent(h)?, n)
}

/// `zeta(v) = zeta_L^{-1}`; the constant term must be a unit.
pub fn zeta_v(z: &TruncatedSeries) -> Result<TruncatedSeries> {
    let c0 = if z.min_degree() == 0 { z.coeff(0) } else { BigRational::zero() };
    if z.min_degree() != 0 || !c0.is_integer() || !c0.abs().is_one() {
        return Err(Error::NotAUnit(format!("constant term of {z}")));
    }
    let inv = z.invert()?;
    Ok(match inv.to_int() {
        Some(i) => i,
        None => inv,
    })
}

/// Möbius function.
pub(crate) fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Divisors of `n` in increasing order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_rational, series::log_series};
    use alloc::vec;

    fn ints(c: &[i64], n: i64) -> TruncatedSeries {
        TruncatedSeries::from_ints(c, n)
    }

    fn im(rows: &[&[i64]]) -> Matrix<BigInt> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols, BigInt::zero()).unwrap()
    }

    #[test]
    fn eta_examples() {
        assert!(eta_from_orbits(&OrbitSet::empty(4), 4).unwrap().is_zero());
        let s = OrbitSet::new((1..=3).map(|k| ClosedOrbit::new(k, k, 1)).collect(), 4).unwrap();
        let eta = eta_from_orbits(&s, 4).unwrap();
        assert_eq!(eta.coeffs(), &[rat(1, 1), rat(1, 2), rat(1, 3)]);
        assert_eq!(eta.min_degree(), 1);
        let s = OrbitSet::new(vec![ClosedOrbit::new(2, 1, -1)], 3).unwrap();
        assert_eq!(eta_from_orbits(&s, 3).unwrap(), TruncatedSeries::from_ints(&[0, 0, -1], 3));
        assert!(matches!(eta_from_orbits(&s, 4), Err(Error::InsufficientOrbitOrder { .. })));
    }

    #[test]
    fn zeta_from_orbit_examples() {
        let n = 8;
        let s = OrbitSet::new((1..n as u32).map(|k| ClosedOrbit::new(k, k, 1)).collect(), n).unwrap();
        let z = zeta_from_orbits(&s, n).unwrap();
        assert_eq!(z, ints(&[1, -1], n).invert().unwrap());
        assert!(z.is_integral());
        assert_eq!(zeta_from_orbits(&OrbitSet::empty(4), 4).unwrap(), ints(&[1], 4));
        // dropping the second iterate breaks integrality at t^2
        let s = OrbitSet::new((1..n as u32).filter(|&k| k != 2).map(|k| ClosedOrbit::new(k, k, 1)).collect(), n).unwrap();
        let z = zeta_from_orbits(&s, n).unwrap();
        assert!(!z.is_integral());
        assert_eq!(z.coeff(2), rat(1, 2));
    }

    #[test]
    fn prime_products() {
        assert_eq!(zeta_from_primes(&[], 5), ints(&[1], 5));
        assert_eq!(zeta_from_primes(&[PrimeOrbit::new(1, -1, -1).unwrap()], 4), ints(&[1, 1, 1, 1], 4));
        assert_eq!(zeta_from_primes(&[PrimeOrbit::new(1, 1, 1).unwrap()], 4), ints(&[1, 1], 4));
        assert!(PrimeOrbit::new(1, 2, 1).is_err());
    }

    #[test]
    fn iterate_law() {
        let a = expand_prime_orbit(&PrimeOrbit::new(1, -1, -1).unwrap(), 5);
        assert!(a.iter().all(|o| o.eps == 1));
        let b = expand_prime_orbit(&PrimeOrbit::new(2, 1, 1).unwrap(), 9);
        assert_eq!(b.iter().map(|o| (o.n, o.m, o.eps)).collect::<Vec<_>>(), vec![(2, 1, 1), (4, 2, -1), (6, 3, 1), (8, 4, -1)]);
        // oracle: the logarithm of the prime factor
        let p = PrimeOrbit::new(2, 1, 1).unwrap();
        let log = log_series(&zeta_from_primes(&[p], 9).to_rat(), 9).unwrap();
        assert_eq!(log, eta_from_orbits(&OrbitSet::from_primes(&[p], 9), 9).unwrap());
    }

    #[test]
    fn homology_route() {
        assert_eq!(zeta_from_homology(&[im(&[&[1]]), im(&[&[1]])], 6).unwrap(), ints(&[1], 6));
        let cat = zeta_from_homology(&[im(&[&[1]]), im(&[&[2, 1], &[1, 1]]), im(&[&[1]])], 4).unwrap();
        assert_eq!(cat, ints(&[1, -1, -2, -3], 4));
        assert_eq!(cat, rf_expand(&parse_rational("(1-3t+t^2)/(1-t)^2").unwrap(), 4).unwrap());
        assert_eq!(zeta_from_homology(&[im(&[&[2]])], 5).unwrap(), ints(&[1, 2, 4, 8, 16], 5));
    }

    #[test]
    fn lefschetz_numbers() {
        let eta = eta_from_lefschetz_numbers(&[BigInt::from(-1), BigInt::from(-5), BigInt::from(-16)]);
        assert_eq!(eta.coeffs(), &[rat(-1, 1), rat(-5, 2), rat(-16, 3)]);
        assert_eq!(exp_eta(&eta, 4).unwrap(), ints(&[1, -1, -2, -3], 4));
        assert!(eta_from_lefschetz_numbers(&[BigInt::zero(), BigInt::zero()]).is_zero());
    }

    #[test]
    fn descent_route() {
        let tm = |c: &[i64]| Matrix::from_rows(vec![vec![LaurentPoly::from_ints(0, c)]], 1, LaurentPoly::zero()).unwrap();
        let empty = Matrix::zeros(0, 0, &LaurentPoly::zero());
        assert_eq!(zeta_from_descent(&[empty.clone(), empty.clone()], 5).unwrap(), ints(&[1], 5));
        assert_eq!(zeta_from_descent(&[empty.clone(), tm(&[0, 1])], 5).unwrap(), ints(&[1, -1], 5));
        assert_eq!(zeta_from_descent(&[tm(&[0, 1]), tm(&[0, 1])], 5).unwrap(), ints(&[1], 5));
        assert!(matches!(zeta_from_descent(&[tm(&[1, 1])], 5), Err(Error::PositiveValuationRequired(_))));
    }

    #[test]
    fn inverse_zeta() {
        assert_eq!(zeta_v(&ints(&[1], 4)).unwrap(), ints(&[1], 4));
        assert_eq!(zeta_v(&ints(&[1, 1, 1, 1], 4)).unwrap(), ints(&[1, -1], 4));
        let cat = zeta_from_homology(&[im(&[&[1]]), im(&[&[2, 1], &[1, 1]]), im(&[&[1]])], 8).unwrap();
        assert_eq!(zeta_v(&cat).unwrap(), rf_expand(&parse_rational("(1-t)^2/(1-3t+t^2)").unwrap(), 8).unwrap());
        assert!(matches!(zeta_v(&ints(&[2, 1], 4)), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn number_theory_helpers() {
        assert_eq!((1..=10).map(mobius).collect::<Vec<_>>(), vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
