//! Truncated Laurent series with exact coefficients.
//!
//! One type covers `Z[[t]]`, `Q[[t]]`, the Novikov ring `Z[[t]][t^-1]`, its
//! rational version, and the quotients `Z[t]/t^n`: a value knows its
//! coefficients up to (but excluding) degree `order`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::LaurentPoly;
use super::ratfunc::RationalFunction;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Coefficient ring of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    Int,
    Rat,
}

impl CoeffRing {
    pub fn name(self) -> &'static str {
        match self {
            CoeffRing::Int => "Z",
            CoeffRing::Rat => "Q",
        }
    }
}

/// `sum_{low <= i < order} c_i t^i + O(t^order)`.
///
/// Normalized so that the first and last stored coefficients are nonzero; a series that vanishes to the
/// known precision has no coefficients and `low == order`. The `laurent` flag
/// marks the Novikov-ring variants, the only ones allowed negative degrees.
#[derive(Clone)]
pub struct TruncatedSeries {
    ring: CoeffRing,
    laurent: bool,
    low: i64,
    coeffs: Vec<BigRational>,
    order: i64,
}

/// Result of comparing two series that may carry different truncation orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesComparison {
    pub common_order: i64,
    pub equal: bool,
    pub orders_differ: bool,
}

impl TruncatedSeries {
    fn build(ring: CoeffRing, laurent: bool, low: i64, coeffs: Vec<BigRational>, order: i64) -> Self {
        let mut s = TruncatedSeries { ring, laurent, low, coeffs, order };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let keep = (self.order - self.low).max(0) as usize;
        self.coeffs.truncate(keep);
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = self.order;
        } else {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
            while self.coeffs.last().is_some_and(Zero::is_zero) {
                self.coeffs.pop();
            }
        }
    }

    fn check(self) -> Result<Self> {
        if self.ring == CoeffRing::Int {
            if let Some(c) = self.coeffs.iter().find(|c| !c.is_integer()) {
                return Err(Error::Invalid(alloc::format!("non-integral coefficient {c} in a series over Z")));
            }
        }
        if !self.laurent && !self.coeffs.is_empty() && self.low < 0 {
            return Err(Error::NegativeDegree(self.low));
        }
        Ok(self)
    }

    /// A power series (nonnegative degrees) with coefficients for degrees `0..order`.
    pub fn power_series(ring: CoeffRing, coeffs: Vec<BigRational>, order: i64) -> Result<Self> {
        Self::build(ring, false, 0, coeffs, order).check()
    }

    /// A Laurent (Novikov-ring) series starting at degree `low`.
    pub fn laurent(ring: CoeffRing, low: i64, coeffs: Vec<BigRational>, order: i64) -> Result<Self> {
        Self::build(ring, true, low, coeffs, order).check()
    }

    /// Integer power series from machine integers.
    pub fn from_ints(coeffs: &[i64], order: i64) -> Self {
        Self::build(
            CoeffRing::Int,
            false,
            0,
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            order,
        )
    }

    pub fn from_poly(p: &LaurentPoly, order: i64) -> Self {
        let coeffs = p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
        Self::build(CoeffRing::Int, !p.is_polynomial(), p.low(), coeffs, order)
    }

    pub fn zero(ring: CoeffRing, order: i64) -> Self {
        Self::build(ring, false, order, Vec::new(), order)
    }

    pub fn one(ring: CoeffRing, order: i64) -> Self {
        Self::build(ring, false, 0, vec![BigRational::one()], order)
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    /// Truncation order `N`: coefficients are known for degrees `< N`.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Lowest nonzero degree (equals `order` for a zero series).
    pub fn min_degree(&self) -> i64 {
        self.low
    }

    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^d`; `d` must be below the truncation order.
    pub fn coeff(&self, d: i64) -> BigRational {
        debug_assert!(d < self.order, "coefficient t^{d} beyond O(t^{})", self.order);
        let i = d - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigRational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Integer coefficients for degrees `from..order`, if all are integral.
    pub fn int_coeffs_from(&self, from: i64) -> Option<Vec<BigInt>> {
        (from..self.order).map(|d| self.coeff(d)).map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Reinterprets over `Q`.
    pub fn to_rat(&self) -> Self {
        TruncatedSeries { ring: CoeffRing::Rat, ..self.clone() }
    }

    /// Reinterprets over `Z` if every coefficient is an integer.
    pub fn to_int(&self) -> Option<Self> {
        self.is_integral().then(|| TruncatedSeries { ring: CoeffRing::Int, ..self.clone() })
    }

    pub fn as_laurent(&self) -> Self {
        TruncatedSeries { laurent: true, ..self.clone() }
    }

    /// Lowers the truncation order to `min(order, n)`.
    pub fn truncate(&self, n: i64) -> Self {
        Self::build(self.ring, self.laurent, self.low, self.coeffs.clone(), self.order.min(n))
    }

    /// The represented terms as an exact Laurent polynomial (over `Z` only).
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        let ints = self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect::<Option<Vec<_>>>()?;
        Some(LaurentPoly::from_coeffs(self.low, ints))
    }

    fn same_ring(&self, rhs: &Self) -> Result<()> {
        if self.ring != rhs.ring {
            return Err(Error::RingMismatch { left: self.ring.name(), right: rhs.ring.name() });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.same_ring(rhs)?;
        Ok(self.add_unchecked(rhs, false))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_ring(rhs)?;
        Ok(self.add_unchecked(rhs, true))
    }

    fn add_unchecked(&self, rhs: &Self, negate: bool) -> Self {
        let order = self.order.min(rhs.order);
        let low = self.low.min(rhs.low).min(order);
        let mut coeffs = vec![BigRational::zero(); (order - low) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let d = self.low + i as i64;
            if d < order {
                coeffs[(d - low) as usize] += c;
            }
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let d = rhs.low + i as i64;
            if d < order {
                let slot = &mut coeffs[(d - low) as usize];
                if negate {
                    *slot -= c;
                } else {
                    *slot += c;
                }
            }
        }
        Self::build(self.ring, self.laurent || rhs.laurent, low, coeffs, order)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_ring(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        // precision: relative precision of each factor shifted by the other's valuation
        let order = (self.order + rhs.low).min(rhs.order + self.low);
        let low = self.low + rhs.low;
        let len = (order - low).max(0) as usize;
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self::build(self.ring, self.laurent || rhs.laurent, low.min(order), coeffs, order)
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect(), ..self.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::build(self.ring, self.laurent, self.low, self.coeffs.iter().map(|x| x * c).collect(), self.order)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        TruncatedSeries { low: self.low + k, order: self.order + k, ..self.clone() }
    }

    /// Multiplicative inverse. Over `Z` the lowest coefficient must be `±1`;
    /// a power series with positive valuation is never a unit.
    pub fn invert(&self) -> Result<Self> {
        let Some(lead) = self.coeffs.first() else {
            return Err(Error::ZeroSeries);
        };
        let unit = match self.ring {
            CoeffRing::Int => lead.is_integer() && lead.abs().is_one(),
            CoeffRing::Rat => true,
        };
        if !unit || (!self.laurent && self.low > 0) {
            return Err(Error::NotAUnit(alloc::format!("{lead}*t^{}", self.low)));
        }
        let v = self.low;
        let prec = (self.order - v) as usize;
        let inv_lead = lead.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(prec);
        for n in 0..prec {
            if n == 0 {
                out.push(inv_lead.clone());
                continue;
            }
            let mut acc = BigRational::zero();
            for k in 1..=n.min(self.coeffs.len() - 1) {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-acc * &inv_lead);
        }
        Ok(Self::build(self.ring, self.laurent, -v, out, self.order - 2 * v))
    }

    /// Compares on the common range of known coefficients.
    pub fn compare(&self, rhs: &Self) -> SeriesComparison {
        let common = self.order.min(rhs.order);
        let equal = self.truncate(common).coeffs_eq(&rhs.truncate(common));
        SeriesComparison { common_order: common, equal, orders_differ: self.order != rhs.order }
    }

    fn coeffs_eq(&self, rhs: &Self) -> bool {
        self.order == rhs.order && self.low == rhs.low && self.coeffs == rhs.coeffs
    }

    /// Terms rendered as `c_m*t^m + ... + O(t^N)`.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + i as i64;
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if e == 0 {
                write!(out, "{mag}").unwrap();
                continue;
            }
            if !mag.is_one() {
                write!(out, "{mag}*").unwrap();
            }
            if e == 1 {
                out.push('t');
            } else {
                write!(out, "t^{e}").unwrap();
            }
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        write!(out, "O(t^{})", self.order).unwrap();
        out
    }
}

/// Equality of known coefficients and truncation order. The coefficient-ring
/// tag is not compared: an integral series over `Q` equals its copy over `Z`.
impl PartialEq for TruncatedSeries {
    fn eq(&self, rhs: &Self) -> bool {
        self.coeffs_eq(rhs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[{}]({})", self.ring.name(), self.render())
    }
}

/// Formal exponential of a series with vanishing constant term, truncated at `n`.
pub fn exp_eta(eta: &TruncatedSeries, n: i64) -> Result<TruncatedSeries> {
    if let Some(v) = eta.valuation() {
        if v < 1 {
            return Err(Error::NonzeroConstantTerm(v));
        }
    }
    let order = n.min(eta.order).max(0);
    let len = order as usize;
    // E' = eta' E  =>  k e_k = sum_{j=1}^{k} j eta_j e_{k-j}
    let eta_c: Vec<BigRational> = (0..order).map(|d| eta.coeff(d)).collect();
    let mut e: Vec<BigRational> = Vec::with_capacity(len);
    for k in 0..len {
        if k == 0 {
            e.push(BigRational::one());
            continue;
        }
        let mut acc = BigRational::zero();
        for j in 1..=k {
            if !eta_c[j].is_zero() {
                acc += &eta_c[j] * &e[k - j] * BigRational::from_integer(j.into());
            }
        }
        e.push(acc / BigRational::from_integer(k.into()));
    }
    Ok(TruncatedSeries::build(CoeffRing::Rat, false, 0, e, order))
}

/// Formal logarithm of a series with constant term 1, truncated at `n`.
pub fn log_series(w: &TruncatedSeries, n: i64) -> Result<TruncatedSeries> {
    if w.low != 0 || !w.coeffs.first().is_some_and(One::is_one) {
        return Err(Error::ConstantTermNotOne);
    }
    let order = n.min(w.order).max(0);
    let len = order as usize;
    let wc: Vec<BigRational> = (0..order).map(|d| w.coeff(d)).collect();
    // L' = W'/W  =>  k l_k = k w_k - sum_{j=1}^{k-1} j l_j w_{k-j}
    let mut l: Vec<BigRational> = vec![BigRational::zero(); len];
    for k in 1..len {
        let kk = BigRational::from_integer(k.into());
        let mut acc = &kk * &wc[k];
        for j in 1..k {
            if !l[j].is_zero() {
                acc -= BigRational::from_integer(j.into()) * &l[j] * &wc[k - j];
            }
        }
        l[k] = acc / kk;
    }
    Ok(TruncatedSeries::build(CoeffRing::Rat, false, 0, l, order))
}

/// True iff every known coefficient has denominator 1.
pub fn is_integral(s: &TruncatedSeries) -> bool {
    s.is_integral()
}

/// Laurent expansion at `t = 0`, truncated at `n`.
pub fn rf_expand(r: &RationalFunction, n: i64) -> Result<TruncatedSeries> {
    let den = r.denom();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let d0 = den.constant_term();
    let ring = if d0.abs().is_one() { CoeffRing::Int } else { CoeffRing::Rat };
    let num = r.numer();
    let low = num.valuation().unwrap_or(n);
    let laurent = low < 0;
    if num.is_zero() || low >= n {
        return Ok(TruncatedSeries::build(ring, false, n, Vec::new(), n));
    }
    let len = (n - low) as usize;
    // invert the denominator as a power series, then multiply
    let inv_d0 = BigRational::new(BigInt::one(), d0);
    let dc: Vec<BigRational> = den.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let mut inv: Vec<BigRational> = Vec::with_capacity(len);
    for k in 0..len {
        if k == 0 {
            inv.push(inv_d0.clone());
            continue;
        }
        let mut acc = BigRational::zero();
        for j in 1..=k.min(dc.len() - 1) {
            acc += &dc[j] * &inv[k - j];
        }
        inv.push(-acc * &inv_d0);
    }
    let mut out = vec![BigRational::zero(); len];
    for (i, a) in num.coeffs().iter().enumerate().take(len) {
        let a = BigRational::from_integer(a.clone());
        for j in 0..len - i {
            out[i + j] += &a * &inv[j];
        }
    }
    Ok(TruncatedSeries::build(ring, laurent, low, out, n))
}

impl Ring for TruncatedSeries {
    fn zero_like(&self) -> Self {
        TruncatedSeries::build(self.ring, self.laurent, self.order, Vec::new(), self.order)
    }
    fn one_like(&self) -> Self {
        TruncatedSeries::build(self.ring, self.laurent, 0, vec![BigRational::one()], self.order)
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("series in one matrix share a coefficient ring")
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("series in one matrix share a coefficient ring")
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("series in one matrix share a coefficient ring")
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

impl Field for TruncatedSeries {
    fn inv_ref(&self) -> Option<Self> {
        self.invert().ok()
    }

    fn pivot_cost(&self) -> u64 {
        (self.low - i64::MIN / 2) as u64
    }
}

/// Power series over `Z` with constant term exactly 1; a group under
/// multiplication.
#[derive(Clone, PartialEq, Debug)]
pub struct WittVector(TruncatedSeries);

impl WittVector {
    pub fn new(s: TruncatedSeries) -> Result<Self> {
        if !s.is_integral() {
            return Err(Error::Invalid(alloc::format!("Witt vector with non-integral coefficients: {s}")));
        }
        if s.low != 0 || !s.coeffs.first().is_some_and(One::is_one) {
            return Err(Error::ConstantTermNotOne);
        }
        Ok(WittVector(TruncatedSeries { ring: CoeffRing::Int, laurent: false, ..s }))
    }

    pub fn one(order: i64) -> Self {
        WittVector(TruncatedSeries::one(CoeffRing::Int, order))
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.0
    }

    pub fn into_series(self) -> TruncatedSeries {
        self.0
    }

    pub fn order(&self) -> i64 {
        self.0.order
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        WittVector(self.0.mul_unchecked(&rhs.0))
    }

    pub fn inverse(&self) -> Self {
        WittVector(self.0.invert().expect("constant term 1 is a unit"))
    }
}

impl fmt::Display for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(c: &[i64], n: i64) -> TruncatedSeries {
        TruncatedSeries::from_ints(c, n)
    }

    #[test]
    fn difference_of_squares_mod_t3() {
        let a = ints(&[1, 1], 3);
        let b = ints(&[1, -1], 3);
        assert_eq!(a.try_mul(&b).unwrap(), ints(&[1, 0, -1], 3));
    }

    #[test]
    fn additive_identity() {
        let a = ints(&[3, 0, -2, 5], 4);
        assert_eq!(a.try_add(&TruncatedSeries::zero(CoeffRing::Int, 4)).unwrap(), a);
    }

    #[test]
    fn laurent_product() {
        // (t^-1 + 1) * t mod t^3 = 1 + t
        let a = TruncatedSeries::from_poly(&LaurentPoly::from_ints(-1, &[1, 1]), 4);
        let b = TruncatedSeries::from_poly(&LaurentPoly::t(), 4);
        let p = a.try_mul(&b).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(p, ints(&[1, 1], 3));
    }

    #[test]
    fn ring_mismatch() {
        let a = ints(&[1], 3);
        let b = a.to_rat();
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn inversion() {
        assert_eq!(ints(&[1, -1], 5).invert().unwrap(), ints(&[1, 1, 1, 1, 1], 5));
        assert_eq!(ints(&[1], 3).invert().unwrap(), ints(&[1], 3));
        assert!(matches!(ints(&[2, -1], 4).invert(), Err(Error::NotAUnit(_))));
        assert_eq!(TruncatedSeries::zero(CoeffRing::Int, 4).invert(), Err(Error::ZeroSeries));
        // (1+t)^2 -> 1 - 2t + 3t^2 - 4t^3; oracle: multiply back
        let s = ints(&[1, 2, 1], 4);
        let inv = s.invert().unwrap();
        assert_eq!(inv, ints(&[1, -2, 3, -4], 4));
        assert_eq!(s.try_mul(&inv).unwrap(), ints(&[1], 4));
        // t is a unit only in the Laurent ring
        assert!(ints(&[0, 1], 4).invert().is_err());
        let t_inv = ints(&[0, 1], 4).as_laurent().invert().unwrap();
        assert_eq!(t_inv.min_degree(), -1);
    }

    #[test]
    fn exp_examples() {
        let zero = TruncatedSeries::zero(CoeffRing::Rat, 6);
        assert_eq!(exp_eta(&zero, 6).unwrap(), ints(&[1], 6));
        // sum t^k/k exponentiates to 1/(1-t)
        let n = 8;
        let eta = TruncatedSeries::power_series(CoeffRing::Rat, (0..n).map(|k| if k == 0 { q(0, 1) } else { q(1, k) }).collect(), n).unwrap();
        assert_eq!(exp_eta(&eta, n).unwrap(), ints(&[1, -1], n).invert().unwrap());
        // cat map: -t - 5t^2/2 - 16t^3/3
        let eta = TruncatedSeries::power_series(CoeffRing::Rat, alloc::vec![q(0, 1), q(-1, 1), q(-5, 2), q(-16, 3)], 4).unwrap();
        let expected = rf_expand(
            &RationalFunction::new(LaurentPoly::from_ints(0, &[1, -3, 1]), LaurentPoly::from_ints(0, &[1, -2, 1])).unwrap(),
            4,
        )
        .unwrap();
        assert_eq!(expected, ints(&[1, -1, -2, -3], 4));
        assert_eq!(exp_eta(&eta, 4).unwrap(), expected);
        assert_eq!(exp_eta(&ints(&[1, 1], 4), 4), Err(Error::NonzeroConstantTerm(0)));
    }

    #[test]
    fn log_examples() {
        assert!(log_series(&ints(&[1], 5), 5).unwrap().is_zero());
        let l = log_series(&ints(&[1, 1], 4), 4).unwrap();
        assert_eq!(l, TruncatedSeries::power_series(CoeffRing::Rat, alloc::vec![q(0, 1), q(1, 1), q(-1, 2), q(1, 3)], 4).unwrap());
        assert_eq!(log_series(&ints(&[2, 1], 4), 4), Err(Error::ConstantTermNotOne));
    }

    #[test]
    fn integrality() {
        assert!(ints(&[1, 1, 1], 3).is_integral());
        let e = exp_eta(&ints(&[0, 1], 4), 4).unwrap();
        assert!(!is_integral(&e));
    }

    #[test]
    fn expansions() {
        let r = |n: &[i64], d: &[i64]| RationalFunction::new(LaurentPoly::from_ints(0, n), LaurentPoly::from_ints(0, d)).unwrap();
        assert_eq!(rf_expand(&r(&[1], &[1, -1]), 4).unwrap(), ints(&[1, 1, 1, 1], 4));
        let c = RationalFunction::new(LaurentPoly::from_ints(2, &[1, 1]), LaurentPoly::from_ints(2, &[1])).unwrap();
        assert_eq!(rf_expand(&c, 3).unwrap(), ints(&[1, 1], 3));
        let half = rf_expand(&r(&[1], &[2]), 2).unwrap();
        assert_eq!(half.ring(), CoeffRing::Rat);
        assert_eq!(half.coeff(0), q(1, 2));
    }

    #[test]
    fn rendering() {
        assert_eq!(ints(&[1, 1, 0, 1], 4).render(), "1 + t + t^3 + O(t^4)");
        assert_eq!(ints(&[1], 4).render(), "1 + O(t^4)");
        assert_eq!(ints(&[0, -2], 3).render(), "-2*t + O(t^3)");
        assert_eq!(TruncatedSeries::zero(CoeffRing::Int, 2).render(), "O(t^2)");
    }

    #[test]
    fn precision_tracking() {
        // t^2 * (1 + O(t^3)) is known to O(t^5); (1 + O(t^3)) * (1 + O(t^5)) to O(t^3)
        let a = ints(&[0, 0, 1], 6);
        let b = ints(&[1], 3);
        assert_eq!(a.try_mul(&b).unwrap().order(), 5);
        assert_eq!(b.try_mul(&ints(&[1], 5)).unwrap().order(), 3);
        let cmp = ints(&[1, 1], 3).compare(&ints(&[1, 1, 0, 5], 5));
        assert!(cmp.equal && cmp.orders_differ && cmp.common_order == 3);
    }
}
