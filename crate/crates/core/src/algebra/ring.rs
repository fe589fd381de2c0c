//! Minimal commutative-ring interfaces used by the generic matrix routines.
//!
//! Elements carry enough context to build their own zero and one, which is
//! what lets truncated series (whose `0` depends on the truncation order)
//! sit in the same matrices as integers and rational functions.

use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;

pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }
}

/// Rings with an exact-division test; `div_exact` returns `None` when `rhs`
/// does not divide `self`.
pub trait IntegralDomain: Ring {
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    /// Heuristic size used to pick small pivots.
    fn size_hint(&self) -> u64 {
        0
    }
}

pub trait Field: Ring {
    fn inv_ref(&self) -> Option<Self>;

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.inv_ref().map(|inv| self.mul_ref(&inv))
    }

    /// Lower is a better pivot. Series fields prefer the smallest valuation
    /// so elimination loses as little precision as possible.
    fn pivot_cost(&self) -> u64 {
        0
    }

    // Linear-algebra hooks. The defaults run plain Gaussian elimination;
    // fields with a cheaper fraction-free route override them.

    fn matrix_rank(m: &Matrix<Self>) -> usize {
        super::linalg::gaussian_echelon(m, super::linalg::PivotOrder::Ascending).rank
    }

    fn matrix_pivots(m: &Matrix<Self>, order: super::linalg::PivotOrder) -> alloc::vec::Vec<usize> {
        super::linalg::gaussian_echelon(m, order).pivot_cols
    }

    fn matrix_det(m: &Matrix<Self>) -> Self {
        super::linalg::gaussian_det(m)
    }

    fn matrix_inverse(m: &Matrix<Self>) -> Option<Matrix<Self>> {
        super::linalg::gaussian_inverse(m)
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
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

impl IntegralDomain for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }

    fn size_hint(&self) -> u64 {
        self.bits()
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
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

impl Field for BigRational {
    fn inv_ref(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }

    fn pivot_cost(&self) -> u64 {
        self.numer().abs().bits() + self.denom().bits()
    }
}
