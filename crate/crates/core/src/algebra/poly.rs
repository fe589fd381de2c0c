//! Laurent polynomials over `Z`: the rings `Z[t]` and `Z[t, t^-1]`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{IntegralDomain, Ring};

/// A finitely supported integer series `sum c_i t^i`, `i` possibly negative.
///
/// Stored normalized: `coeffs[0]` and the last coefficient are nonzero, so
/// `low` is the valuation. The zero polynomial has no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(0, vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, exponent: i64) -> Self {
        Self::from_coeffs(exponent, vec![c.into()])
    }

    /// Builds `sum coeffs[i] t^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from machine integers, lowest degree first.
    pub fn from_ints(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Lowest represented exponent (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Coefficients from `low()` upwards.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        let i = exponent - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn lowest_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    /// Drops every term of degree `>= n` (reduction mod `t^n`).
    pub fn truncate(&self, n: i64) -> Self {
        if self.is_zero() || n <= self.low {
            return Self::zero();
        }
        let keep = ((n - self.low) as usize).min(self.coeffs.len());
        Self::from_coeffs(self.low, self.coeffs[..keep].to_vec())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x / c).collect())
    }

    /// Substitutes an integer for `t`; only meaningful for polynomials.
    pub fn eval_int(&self, x: &BigInt) -> Option<BigInt> {
        if !self.is_polynomial() {
            return None;
        }
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Some(acc * x.pow(self.low.max(0) as u32))
    }

    /// Greatest common divisor in `Z[t, t^-1]`: content gcd times the
    /// primitive gcd of the polynomial parts, with positive constant term and
    /// no `t` factor.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.unit_normal();
        }
        if other.is_zero() {
            return self.unit_normal();
        }
        let c = self.content().gcd(&other.content());
        let g = dense::gcd_primitive(&self.coeffs, &other.coeffs);
        let mut out = LaurentPoly::from_coeffs(0, g).scale(&c);
        if out.coeffs[0].is_negative() {
            out = -out;
        }
        out
    }

    /// `self` divided by a unit `±t^k` so that the lowest coefficient is
    /// positive and the valuation is 0.
    pub fn unit_normal(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let sign = if self.coeffs[0].is_negative() { -BigInt::one() } else { BigInt::one() };
        LaurentPoly { low: 0, coeffs: self.coeffs.iter().map(|c| c * &sign).collect() }
    }

    /// Exact quotient in `Z[t, t^-1]`, `None` if `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let q = dense::div_exact(&self.coeffs, &rhs.coeffs)?;
        Some(Self::from_coeffs(self.low - rhs.low, q))
    }

    /// Splits off the primitive part: `self = content * primitive`, with the
    /// lowest coefficient of the primitive part positive.
    pub fn primitive_part(&self) -> (BigInt, Self) {
        if self.is_zero() {
            return (BigInt::zero(), Self::zero());
        }
        let mut c = self.content();
        if self.coeffs[0].is_negative() {
            c = -c;
        }
        (c.clone(), self.div_scalar_exact(&c))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_string_in(&self, var: &str) -> String {
        fmt_terms(self.terms().map(|(e, c)| (e, c.clone())), var)
    }
}

pub(crate) fn fmt_terms(terms: impl Iterator<Item = (i64, BigInt)>, var: &str) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (e, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one();
        match e {
            0 => write!(out, "{mag}").unwrap(),
            _ => {
                if !unit {
                    write!(out, "{mag}*").unwrap();
                }
                if e == 1 {
                    out.push_str(var);
                } else {
                    write!(out, "{var}^{e}").unwrap();
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

fn add_impl(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.degree().unwrap().max(b.degree().unwrap());
    let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - low) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_coeffs(low, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_impl(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_impl(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, dense::mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn is_one_elem(&self) -> bool {
        LaurentPoly::is_one(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl IntegralDomain for LaurentPoly {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, rhs)
    }

    fn size_hint(&self) -> u64 {
        let bits: u64 = self.coeffs.iter().map(|c| c.bits()).sum();
        bits + 8 * self.coeffs.len() as u64
    }
}

/// Dense integer polynomials, index = exponent. Inputs may carry trailing
/// zeros; outputs are trimmed.
pub(crate) mod dense {
    use super::*;

    pub fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    fn content(a: &[BigInt]) -> BigInt {
        a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn primitive(a: Vec<BigInt>) -> Vec<BigInt> {
        let a = trim(a);
        let c = content(&a);
        if c.is_zero() || c.is_one() {
            return a;
        }
        a.into_iter().map(|x| x / &c).collect()
    }

    /// `lc(b)^k * a mod b` for a suitable `k`; `b` must be nonzero.
    fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lb = &b[db];
        while r.len() > db {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            let shift = dr - db;
            for x in r.iter_mut() {
                *x *= lb;
            }
            for (j, y) in b.iter().enumerate() {
                r[j + shift] -= &lr * y;
            }
            r = trim(r);
            // keep coefficient growth in check
            r = primitive(r);
        }
        r
    }

    /// Primitive gcd (positive leading coefficient) of two polynomials,
    /// ignoring their contents.
    pub fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut a = primitive(a.to_vec());
        let mut b = primitive(b.to_vec());
        if a.len() < b.len() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            if b.len() == 1 {
                return vec![BigInt::one()];
            }
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive(r);
        }
        if a.last().is_some_and(|c| c.is_negative()) {
            a = a.into_iter().map(|c| -c).collect();
        }
        a
    }

    /// Exact quotient over `Z`, `None` unless `b` divides `a` in `Z[t]`.
    pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut r = trim(a.to_vec());
        let b = trim(b.to_vec());
        if r.is_empty() {
            return Some(Vec::new());
        }
        if b.is_empty() || r.len() < b.len() {
            return None;
        }
        let db = b.len() - 1;
        let lb = &b[db];
        let mut q = vec![BigInt::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let lr = &r[i + db];
            if lr.is_zero() {
                continue;
            }
            let (qi, rem) = lr.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (j, y) in b.iter().enumerate() {
                r[i + j] -= &qi * y;
            }
            q[i] = qi;
        }
        r.iter().all(Zero::is_zero).then(|| trim(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(low, c)
    }

    #[test]
    fn normalizes_zeros() {
        let a = p(-2, &[0, 0, 3, 0, 1, 0]);
        assert_eq!(a.valuation(), Some(0));
        assert_eq!(a.degree(), Some(2));
        assert!(p(5, &[0, 0]).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let a = p(0, &[1, 1]);
        let b = p(0, &[1, -1]);
        assert_eq!(&a * &b, p(0, &[1, 0, -1]));
    }

    #[test]
    fn gcd_strips_units() {
        // (1 - t)(2 + t) and (1 - t) t^3
        let a = &p(0, &[1, -1]) * &p(0, &[2, 1]);
        let b = p(3, &[-1, 1]);
        assert_eq!(a.gcd(&b), p(0, &[1, -1]));
        assert_eq!(p(0, &[4, 6]).gcd(&p(0, &[6, 9])), p(0, &[2, 3]));
    }

    #[test]
    fn exact_division() {
        let a = &p(0, &[1, -3, 1]) * &p(-1, &[2, 5]);
        assert_eq!(a.div_exact(&p(-1, &[2, 5])), Some(p(0, &[1, -3, 1])));
        assert_eq!(p(0, &[1, 1]).div_exact(&p(0, &[2])), None);
        assert_eq!(p(0, &[1, 0, 1]).div_exact(&p(0, &[1, 1])), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(0, &[1, -3, 1]).to_string(), "1 - 3*t + t^2");
        assert_eq!(p(-1, &[-1, 0, 2]).to_string(), "-t^-1 + 2*t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
