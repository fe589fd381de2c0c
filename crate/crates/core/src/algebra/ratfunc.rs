//! The field `Q(t)` of rational functions, kept in a unique canonical form.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::linalg;
use super::matrix::Matrix;
use super::poly::LaurentPoly;
use super::ring::{Field, IntegralDomain, Ring};
use crate::error::{Error, Result};

/// `num / den` with integer Laurent polynomials.
///
/// Canonical form: `den` is a polynomial with nonzero, positive constant term;
/// `gcd(num, den) = 1` in `Z[t]` (contents included); any power of `t` lives
/// in `num`. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(LaurentPoly::t())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        Self::new(LaurentPoly::constant(n), LaurentPoly::constant(d))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.low();
        let den = den.shift(-shift);
        let num = num.shift(-shift);
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let mut c = num.content().gcd(&den.content());
        if den.constant_term().is_negative() {
            c = -c;
        }
        if c.is_one() {
            return Self { num, den };
        }
        let num = LaurentPoly::from_coeffs(num.low(), num.coeffs().iter().map(|x| x / &c).collect());
        let den = LaurentPoly::from_coeffs(0, den.coeffs().iter().map(|x| x / &c).collect());
        Self { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The `t`-adic valuation, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.num.valuation()
    }

    /// `Some(p)` when the denominator is 1.
    pub fn as_laurent_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// Lowest coefficient of the expansion at `t = 0` as `(numerator, denominator)`.
    pub fn leading_ratio(&self) -> Option<(BigInt, BigInt)> {
        let n = self.num.lowest_coeff()?.clone();
        let d = self.den.constant_term();
        let g = n.gcd(&d);
        Some((n / &g, d / g))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.mul_ref(&rhs.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        Ok(acc)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }
}

impl Ring for RationalFunction {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one_elem(&self) -> bool {
        self.is_one()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            if self.den.is_one() {
                return Self::from_poly(&self.num + &rhs.num);
            }
            return Self::canonical(&self.num + &rhs.num, self.den.clone());
        }
        Self::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        Self::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

impl Field for RationalFunction {
    fn inv_ref(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn pivot_cost(&self) -> u64 {
        self.num.size_hint() + self.den.size_hint()
    }

    fn matrix_rank(m: &Matrix<Self>) -> usize {
        linalg::fraction_free_echelon(&clear_row_denominators(m).0, linalg::PivotOrder::Ascending).rank
    }

    fn matrix_pivots(m: &Matrix<Self>, order: linalg::PivotOrder) -> Vec<usize> {
        linalg::fraction_free_echelon(&clear_row_denominators(m).0, order).pivot_cols
    }

    fn matrix_det(m: &Matrix<Self>) -> Self {
        let (cleared, scales) = clear_row_denominators(m);
        let det = linalg::bareiss_det(&cleared);
        let scale = scales.iter().fold(LaurentPoly::one(), |acc, s| &acc * s);
        Self::canonical(det, scale)
    }

    fn matrix_inverse(m: &Matrix<Self>) -> Option<Matrix<Self>> {
        let (cleared, scales) = clear_row_denominators(m);
        let (adj, det) = linalg::bareiss_adjugate(&cleared)?;
        // (S A)^-1 = A^-1 S^-1, so A^-1 = adj / det * S
        let n = m.rows();
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for (j, s) in scales.iter().enumerate() {
                data.push(Self::canonical(adj.get(i, j) * s, det.clone()));
            }
        }
        Some(Matrix::from_vec(n, n, data, Self::zero()).expect("square"))
    }
}

/// Multiplies each row by the lcm of its denominators, returning the
/// polynomial matrix and the per-row multipliers.
pub(crate) fn clear_row_denominators(m: &Matrix<RationalFunction>) -> (Matrix<LaurentPoly>, Vec<LaurentPoly>) {
    let mut scales = Vec::with_capacity(m.rows());
    let mut data = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        let mut l = LaurentPoly::one();
        for j in 0..m.cols() {
            let d = m.get(i, j).denom();
            if !d.is_one() {
                let g = l.gcd(d);
                l = (&l * d).div_exact(&g).expect("gcd divides");
            }
        }
        for j in 0..m.cols() {
            let e = m.get(i, j);
            let q = if e.den.is_one() { l.clone() } else { l.div_exact(&e.den).expect("lcm") };
            data.push(&e.num * &q);
        }
        scales.push(l);
    }
    (Matrix::from_vec(m.rows(), m.cols(), data, LaurentPoly::zero()).expect("shape"), scales)
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| -> String {
            if p.terms().count() > 1 {
                alloc::format!("({p})")
            } else {
                alloc::format!("{p}")
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(0, c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn canonical_form_is_unique() {
        // (t^2 + t^3) / t^2 = 1 + t
        let a = RationalFunction::new(LaurentPoly::from_ints(2, &[1, 1]), LaurentPoly::from_ints(2, &[1])).unwrap();
        assert_eq!(a, RationalFunction::from_poly(p(&[1, 1])));
        // (2 - 2t) / (-4 + 4t^2) = -1 / (2 + 2t)
        let b = rf(&[2, -2], &[-4, 0, 4]);
        assert_eq!(b.numer(), &p(&[-1]));
        assert_eq!(b.denom(), &p(&[2, 2]));
        assert_eq!(rf(&[3], &[6]), RationalFunction::from_ratio(1, 2).unwrap());
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(RationalFunction::new(p(&[1]), LaurentPoly::zero()), Err(Error::ZeroDenominator));
        assert!(RationalFunction::zero().inv().is_err());
    }

    #[test]
    fn field_arithmetic() {
        let a = rf(&[1], &[1, -1]);
        let b = rf(&[1, -1], &[1]);
        assert!(a.mul_ref(&b).is_one());
        let half = RationalFunction::from_ratio(1, 2).unwrap();
        assert!(half.add_ref(&half).is_one());
        assert!(a.sub_ref(&a).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(rf(&[1, -3, 1], &[1, -2, 1]).to_string(), "(1 - 3*t + t^2)/(1 - 2*t + t^2)");
        assert_eq!(rf(&[1], &[2]).to_string(), "1/2");
    }
}
