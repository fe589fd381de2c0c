//! Exact elimination kernels: Gaussian elimination over fields,
//! fraction-free (Bareiss) elimination over integral domains, and the
//! division-free Berkowitz determinant for arbitrary commutative rings.

use alloc::vec;
use alloc::vec::Vec;

use super::matrix::Matrix;
use super::ring::{Field, IntegralDomain, Ring};

/// Order in which columns are scanned for pivots. Different orders give
/// different (equally valid) echelon bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotOrder {
    Ascending,
    Descending,
}

impl PivotOrder {
    fn columns(self, n: usize) -> Vec<usize> {
        match self {
            PivotOrder::Ascending => (0..n).collect(),
            PivotOrder::Descending => (0..n).rev().collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Echelon<T> {
    pub rank: usize,
    /// Pivot columns in the order they were found.
    pub pivot_cols: Vec<usize>,
    pub reduced: Matrix<T>,
    /// Product of the row-swap signs (`true` = odd permutation).
    pub odd_swaps: bool,
}

/// Row echelon form over a field.
pub fn gaussian_echelon<F: Field>(m: &Matrix<F>, order: PivotOrder) -> Echelon<F> {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut r = 0;
    let mut pivots = Vec::new();
    let mut odd = false;
    for c in order.columns(cols) {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).filter(|&i| !a.get(i, c).is_zero_elem()).min_by_key(|&i| a.get(i, c).pivot_cost()) else {
            continue;
        };
        if p != r {
            a.swap_rows(p, r);
            odd = !odd;
        }
        let inv = a.get(r, c).inv_ref().expect("nonzero pivot in a field");
        for i in r + 1..rows {
            if a.get(i, c).is_zero_elem() {
                continue;
            }
            let factor = a.get(i, c).mul_ref(&inv);
            for j in 0..cols {
                let v = a.get(r, j);
                if v.is_zero_elem() {
                    continue;
                }
                let upd = a.get(i, j).sub_ref(&factor.mul_ref(v));
                a.set(i, j, upd);
            }
            a.set(i, c, factor.zero_like());
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rank: r, pivot_cols: pivots, reduced: a, odd_swaps: odd }
}

pub fn gaussian_det<F: Field>(m: &Matrix<F>) -> F {
    let n = m.rows();
    let one = m.zero_elem().one_like();
    if n == 0 {
        return one;
    }
    let e = gaussian_echelon(m, PivotOrder::Ascending);
    if e.rank < n {
        return m.zero_elem().clone();
    }
    let mut d = one;
    for i in 0..n {
        d = d.mul_ref(e.reduced.get(i, i));
    }
    if e.odd_swaps {
        d.neg_ref()
    } else {
        d
    }
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn gaussian_inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    let n = m.rows();
    let zero = m.zero_elem().clone();
    let mut aug = Matrix::zeros(n, 2 * n, &zero);
    aug.paste(0, 0, m);
    aug.paste(0, n, &Matrix::identity(n, &zero));
    let sol = rref(&aug, n)?;
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Some(sol.submatrix(&rows, &cols))
}

/// Reduced row echelon form using only the first `pivot_cols` columns as
/// pivot candidates; `None` if fewer than `min(rows, pivot_cols)` pivots
/// exist (used for square inverses).
fn rref<F: Field>(m: &Matrix<F>, pivot_cols: usize) -> Option<Matrix<F>> {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    for c in 0..pivot_cols.min(rows) {
        let p = (c..rows).filter(|&i| !a.get(i, c).is_zero_elem()).min_by_key(|&i| a.get(i, c).pivot_cost())?;
        a.swap_rows(p, c);
        let inv = a.get(c, c).inv_ref()?;
        for j in 0..cols {
            let v = a.get(c, j).mul_ref(&inv);
            a.set(c, j, v);
        }
        for i in 0..rows {
            if i == c || a.get(i, c).is_zero_elem() {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in 0..cols {
                let v = a.get(c, j);
                if v.is_zero_elem() {
                    continue;
                }
                let upd = a.get(i, j).sub_ref(&factor.mul_ref(v));
                a.set(i, j, upd);
            }
        }
    }
    Some(a)
}

/// A particular solution of `a * x = b`, or `None` if the system is inconsistent.
pub fn gaussian_solve<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Option<Matrix<F>> {
    let (rows, n) = a.shape();
    let k = b.cols();
    let zero = a.zero_elem().clone();
    let mut aug = Matrix::zeros(rows, n + k, &zero);
    aug.paste(0, 0, a);
    aug.paste(0, n, b);
    // full reduction with column skipping
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).filter(|&i| !aug.get(i, c).is_zero_elem()).min_by_key(|&i| aug.get(i, c).pivot_cost()) else {
            continue;
        };
        aug.swap_rows(p, r);
        let inv = aug.get(r, c).inv_ref()?;
        for j in 0..n + k {
            let v = aug.get(r, j).mul_ref(&inv);
            aug.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || aug.get(i, c).is_zero_elem() {
                continue;
            }
            let factor = aug.get(i, c).clone();
            for j in 0..n + k {
                let v = aug.get(r, j);
                if v.is_zero_elem() {
                    continue;
                }
                let upd = aug.get(i, j).sub_ref(&factor.mul_ref(v));
                aug.set(i, j, upd);
            }
        }
        pivots.push(c);
        r += 1;
    }
    for i in r..rows {
        if (n..n + k).any(|j| !aug.get(i, j).is_zero_elem()) {
            return None;
        }
    }
    let mut x = Matrix::zeros(n, k, &zero);
    for (i, &c) in pivots.iter().enumerate() {
        for j in 0..k {
            x.set(c, j, aug.get(i, n + j).clone());
        }
    }
    Some(x)
}

#[derive(Debug, Clone)]
pub struct FractionFreeEchelon<D> {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    pub reduced: Matrix<D>,
    pub odd_swaps: bool,
}

/// Bareiss elimination with column skipping. Every intermediate entry is a
/// minor of the input, so all divisions are exact.
pub fn fraction_free_echelon<D: IntegralDomain>(m: &Matrix<D>, order: PivotOrder) -> FractionFreeEchelon<D> {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut remaining = order.columns(cols);
    let mut prev = a.zero_elem().one_like();
    let mut r = 0;
    let mut pivots = Vec::new();
    let mut odd = false;
    while r < rows && !remaining.is_empty() {
        let c = remaining.remove(0);
        let Some(p) = (r..rows).filter(|&i| !a.get(i, c).is_zero_elem()).min_by_key(|&i| a.get(i, c).size_hint()) else {
            continue;
        };
        if p != r {
            a.swap_rows(p, r);
            odd = !odd;
        }
        let piv = a.get(r, c).clone();
        for i in r + 1..rows {
            let lead = a.get(i, c).clone();
            for &j in &remaining {
                let v = piv.mul_ref(a.get(i, j)).sub_ref(&lead.mul_ref(a.get(r, j)));
                a.set(i, j, v.div_exact(&prev).expect("Bareiss division is exact"));
            }
            a.set(i, c, piv.zero_like());
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    FractionFreeEchelon { rank: r, pivot_cols: pivots, reduced: a, odd_swaps: odd }
}

pub fn bareiss_det<D: IntegralDomain>(m: &Matrix<D>) -> D {
    let n = m.rows();
    if n == 0 {
        return m.zero_elem().one_like();
    }
    let e = fraction_free_echelon(m, PivotOrder::Ascending);
    if e.rank < n {
        return m.zero_elem().clone();
    }
    let d = e.reduced.get(n - 1, e.pivot_cols[n - 1]).clone();
    if e.odd_swaps {
        d.neg_ref()
    } else {
        d
    }
}

/// Returns `(x, d)` with `m^-1 = x / d`, `d = ±det(m)`, computed without
/// leaving the domain; `None` when singular.
pub fn bareiss_adjugate<D: IntegralDomain>(m: &Matrix<D>) -> Option<(Matrix<D>, D)> {
    let n = m.rows();
    let zero = m.zero_elem().clone();
    let one = zero.one_like();
    if n == 0 {
        return Some((Matrix::zeros(0, 0, &zero), one));
    }
    let mut a = Matrix::zeros(n, 2 * n, &zero);
    a.paste(0, 0, m);
    a.paste(0, n, &Matrix::identity(n, &zero));
    let mut prev = one;
    for c in 0..n {
        let p = (c..n).filter(|&i| !a.get(i, c).is_zero_elem()).min_by_key(|&i| a.get(i, c).size_hint())?;
        a.swap_rows(p, c);
        let piv = a.get(c, c).clone();
        for i in c + 1..n {
            let lead = a.get(i, c).clone();
            for j in c + 1..2 * n {
                let v = piv.mul_ref(a.get(i, j)).sub_ref(&lead.mul_ref(a.get(c, j)));
                a.set(i, j, v.div_exact(&prev).expect("Bareiss division is exact"));
            }
            a.set(i, c, zero.clone());
        }
        prev = piv;
    }
    let d = a.get(n - 1, n - 1).clone();
    let mut x = Matrix::zeros(n, n, &zero);
    for col in 0..n {
        for i in (0..n).rev() {
            let mut acc = d.mul_ref(a.get(i, n + col));
            for k in i + 1..n {
                acc = acc.sub_ref(&a.get(i, k).mul_ref(x.get(k, col)));
            }
            x.set(i, col, acc.div_exact(a.get(i, i)).expect("adjugate entries are integral"));
        }
    }
    Some((x, d))
}

/// Determinant via the Berkowitz characteristic-polynomial recursion: only
/// ring operations, no division.
pub fn berkowitz_det<T: Ring>(m: &Matrix<T>) -> T {
    let n = m.rows();
    let zero = m.zero_elem().clone();
    let one = zero.one_like();
    // coefficients of det(xI - A_r), leading first
    let mut v = vec![one.clone()];
    for r in 0..n {
        let a = m.get(r, r).clone();
        let mut t = Vec::with_capacity(r + 2);
        t.push(one.clone());
        t.push(a.neg_ref());
        // c_k = A_r^k * C with C = column r above the diagonal
        let mut ck: Vec<T> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for _ in 0..r {
            let dot = (0..r).fold(zero.clone(), |acc, j| acc.add_ref(&m.get(r, j).mul_ref(&ck[j])));
            t.push(dot.neg_ref());
            ck = (0..r)
                .map(|i| (0..r).fold(zero.clone(), |acc, j| acc.add_ref(&m.get(i, j).mul_ref(&ck[j]))))
                .collect();
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = zero.clone();
            for (j, vj) in v.iter().enumerate().take(i + 1) {
                acc = acc.add_ref(&t[i - j].mul_ref(vj));
            }
            next.push(acc);
        }
        v = next;
    }
    let c = v.pop().unwrap_or(one);
    if n % 2 == 1 {
        c.neg_ref()
    } else {
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn zm(rows: &[&[i64]]) -> Matrix<BigInt> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols, BigInt::from(0))
            .unwrap()
    }

    #[test]
    fn determinants_agree() {
        let m = zm(&[&[2, -1, 0, 3], &[1, 4, 2, 0], &[0, 0, 5, 1], &[3, 1, 1, 1]]);
        let q = m.map(BigRational::from_integer(0.into()), |x| BigRational::from_integer(x.clone()));
        let b = bareiss_det(&m);
        assert_eq!(berkowitz_det(&m), b);
        assert_eq!(gaussian_det(&q), BigRational::from_integer(b));
        assert_eq!(bareiss_det(&zm(&[&[1, 1], &[1, 0]])), BigInt::from(-1));
    }

    #[test]
    fn rank_with_skipped_columns() {
        let m = zm(&[&[0, 1, 2], &[0, 2, 4], &[0, 0, 1]]);
        let e = fraction_free_echelon(&m, PivotOrder::Ascending);
        assert_eq!(e.rank, 2);
        assert_eq!(e.pivot_cols, alloc::vec![1, 2]);
        let d = fraction_free_echelon(&m, PivotOrder::Descending);
        assert_eq!(d.rank, 2);
        assert_eq!(d.pivot_cols, alloc::vec![2, 1]);
    }

    #[test]
    fn adjugate_inverse() {
        let m = zm(&[&[2, 1], &[1, 1]]);
        let (x, d) = bareiss_adjugate(&m).unwrap();
        let prod = m.mul(&x).unwrap();
        assert_eq!(prod, Matrix::identity(2, &BigInt::from(0)).scale(&d));
        assert!(bareiss_adjugate(&zm(&[&[1, 2], &[2, 4]])).is_none());
    }
}
