//! Torsion of acyclic based complexes over a field.
//!
//! Convention: `tau = det(d + Gamma : C_odd -> C_even)` for a chain
//! contraction `Gamma`, with rows ordered by even degree and columns by odd
//! degree (ascending, basis order within a degree). With this choice
//! `Z[t] --(1-t)--> Z[t]` in degrees 1, 0 has torsion `1 - t`, and the
//! algebraic mapping torus of `h` has torsion `prod_k det(1 - t h_k)^{(-1)^k}`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::chain_map::ChainMap;
use super::complex::{BasedChainComplex, Coefficient, RatComplex};
use crate::algebra::{rf_expand, Field, Matrix, PivotOrder, RationalFunction, TruncatedSeries, WittVector};
use crate::error::{Error, Result};

/// How the torsion is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionStrategy {
    /// `det(d + Gamma)` for the contraction built from pivot columns.
    Contraction(PivotOrder),
    /// Product of basis-change determinants `prod_k det(Q_k)^{(-1)^k}`.
    MilnorBases(PivotOrder),
}

impl Default for TorsionStrategy {
    fn default() -> Self {
        TorsionStrategy::Contraction(PivotOrder::Ascending)
    }
}

/// Pivot data shared by both strategies: for each degree, the pivot columns
/// of `d_k` and the square matrix `Q_k = [d_{k+1} e_j (j in piv_{k+1}) | e_i (i in piv_k)]`.
struct Splitting<T> {
    pivots: Vec<Vec<usize>>,
    q: Vec<Matrix<T>>,
}

fn splitting<T: Coefficient + Field>(c: &BasedChainComplex<T>, order: PivotOrder) -> Result<Splitting<T>> {
    if let Some((degree, rank)) = c.first_homology() {
        return Err(Error::NotAcyclic { degree, rank });
    }
    let n = c.len();
    let zero = c.zero_elem();
    let one = zero.one_like();
    let pivots: Vec<Vec<usize>> = (0..=n).map(|k| T::matrix_pivots(c.boundary(k), order)).collect();
    let mut q = Vec::with_capacity(n);
    for k in 0..n {
        let dim = c.rank(k);
        let up = c.boundary(k + 1);
        let mut m = Matrix::zeros(dim, dim, &zero);
        let mut col = 0;
        for &j in &pivots[k + 1] {
            for i in 0..dim {
                m.set(i, col, up.get(i, j).clone());
            }
            col += 1;
        }
        for &i in &pivots[k] {
            m.set(i, col, one.clone());
            col += 1;
        }
        debug_assert_eq!(col, dim, "acyclic complex splits");
        q.push(m);
    }
    Ok(Splitting { pivots, q })
}

/// A chain contraction `Gamma_k : C_k -> C_{k+1}` with `d Gamma + Gamma d = 1`.
pub fn contraction<T: Coefficient + Field>(c: &BasedChainComplex<T>, order: PivotOrder) -> Result<Vec<Matrix<T>>> {
    let s = splitting(c, order)?;
    contraction_from(c, &s)
}

fn contraction_from<T: Coefficient + Field>(c: &BasedChainComplex<T>, s: &Splitting<T>) -> Result<Vec<Matrix<T>>> {
    let zero = c.zero_elem();
    let mut gamma = Vec::with_capacity(c.len());
    for k in 0..c.len() {
        let inv = s.q[k].inverse()?.ok_or_else(|| Error::Invalid(format!("splitting matrix in degree {k} is singular")))?;
        let mut g = Matrix::zeros(c.rank(k + 1), c.rank(k), &zero);
        for (r, &j) in s.pivots[k + 1].iter().enumerate() {
            for i in 0..c.rank(k) {
                g.set(j, i, inv.get(r, i).clone());
            }
        }
        gamma.push(g);
    }
    Ok(gamma)
}

/// Torsion as an element of the coefficient field, before normalization.
pub fn torsion_raw<T: Coefficient + Field>(c: &BasedChainComplex<T>, strategy: TorsionStrategy) -> Result<T> {
    let one = c.zero_elem().one_like();
    match strategy {
        TorsionStrategy::Contraction(order) => {
            let s = splitting(c, order)?;
            let gamma = contraction_from(c, &s)?;
            let n = c.len();
            let even: Vec<usize> = (0..n).step_by(2).collect();
            let odd: Vec<usize> = (1..n).step_by(2).collect();
            let row_sizes: Vec<usize> = even.iter().map(|&k| c.rank(k)).collect();
            let col_sizes: Vec<usize> = odd.iter().map(|&k| c.rank(k)).collect();
            if row_sizes.iter().sum::<usize>() != col_sizes.iter().sum::<usize>() {
                return Err(Error::Invalid("acyclic complex with nonzero Euler characteristic".into()));
            }
            let blocks: Vec<Vec<Option<&Matrix<T>>>> = even
                .iter()
                .map(|&e| {
                    odd.iter()
                        .map(|&o| {
                            if o == e + 1 {
                                Some(c.boundary(o))
                            } else if e == o + 1 {
                                Some(&gamma[o])
                            } else {
                                None
                            }
                        })
                        .collect()
                })
                .collect();
            let m = Matrix::from_blocks(&row_sizes, &col_sizes, &blocks, &c.zero_elem())?;
            if m.rows() == 0 {
                return Ok(one);
            }
            m.det()
        }
        TorsionStrategy::MilnorBases(order) => {
            let s = splitting(c, order)?;
            let mut acc = one;
            for (k, q) in s.q.iter().enumerate() {
                let d = if q.rows() == 0 { acc.one_like() } else { q.det()? };
                acc = if k % 2 == 0 {
                    acc.mul_ref(&d)
                } else {
                    acc.div_ref(&d).ok_or_else(|| Error::Invalid(format!("singular splitting in degree {k}")))?
                };
            }
            Ok(acc)
        }
    }
}

/// Torsion over `Q(t)` together with its normalization into the Witt group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Torsion {
    pub raw: RationalFunction,
    /// `raw / (sign * t^shift)`; expansion starts with `1`.
    pub normalized: RationalFunction,
    pub sign: i8,
    pub shift: i64,
}

impl Torsion {
    /// Strips `±t^j` so the expansion at `t = 0` starts with `+1`.
    pub fn normalize(raw: RationalFunction) -> Result<Self> {
        let Some((n, d)) = raw.leading_ratio() else {
            return Err(Error::NormalizationImpossible(format!("{raw}")));
        };
        if !d.is_one() || !n.abs().is_one() {
            return Err(Error::NormalizationImpossible(format!("{raw}")));
        }
        let shift = raw.valuation().expect("nonzero");
        let sign: i8 = if n.is_negative() { -1 } else { 1 };
        let mut normalized = raw.shift(-shift);
        if sign < 0 {
            normalized = normalized.neg();
        }
        Ok(Self { raw, normalized, sign, shift })
    }

    pub fn one() -> Self {
        Self::normalize(RationalFunction::one()).expect("1 is normalized")
    }

    /// Expansion of the normalized value modulo `t^n`.
    pub fn expand(&self, n: i64) -> TruncatedSeries {
        rf_expand(&self.normalized, n).expect("canonical denominators are nonzero")
    }

    /// The normalized value as a Witt vector; fails if the expansion is not integral.
    pub fn witt(&self, n: i64) -> Result<WittVector> {
        WittVector::new(self.expand(n))
    }

    /// Whether the normalized expansion has integer coefficients mod `t^n`.
    pub fn is_integral(&self, n: i64) -> bool {
        self.expand(n).is_integral()
    }
}

/// Torsion of an acyclic complex over `Q(t)` (default strategy).
pub fn torsion(c: &RatComplex) -> Result<Torsion> {
    torsion_with(c, TorsionStrategy::default())
}

pub fn torsion_with(c: &RatComplex, strategy: TorsionStrategy) -> Result<Torsion> {
    Torsion::normalize(torsion_raw(c, strategy)?)
}

/// Torsion of a chain map: the torsion of its mapping cone.
pub fn torsion_of_map(f: &ChainMap<RationalFunction>) -> Result<Torsion> {
    let cone = f.mapping_cone()?;
    if let Some((degree, rank)) = cone.first_homology() {
        return Err(Error::NotAnEquivalence { degree, rank });
    }
    torsion(&cone)
}

/// `(1 - t a)` style helper: `det(1 - t h)` for an integer matrix `h`.
pub fn det_one_minus_th(h: &Matrix<BigInt>) -> Result<RationalFunction> {
    let m = one_minus_th(h)?;
    if m.rows() == 0 {
        return Ok(RationalFunction::one());
    }
    m.map(RationalFunction::zero(), |e| RationalFunction::from_poly(e.clone())).det()
}

/// `1 - t h` as a polynomial matrix.
pub fn one_minus_th(h: &Matrix<BigInt>) -> Result<Matrix<crate::algebra::LaurentPoly>> {
    use crate::algebra::LaurentPoly;
    if !h.is_square() {
        return Err(Error::NotSquare { rows: h.rows(), cols: h.cols() });
    }
    let n = h.rows();
    let mut m = Matrix::zeros(n, n, &LaurentPoly::zero());
    for i in 0..n {
        for j in 0..n {
            let c = if i == j { BigInt::one() } else { BigInt::from(0) };
            m.set(i, j, LaurentPoly::from_coeffs(0, alloc::vec![c, -h.get(i, j).clone()]));
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;
    use crate::complexes::ComplexRing;
    use alloc::string::ToString;
    use alloc::vec;

    fn rm(rows: &[&[&str]], cols: usize) -> Matrix<RationalFunction> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| parse_rational(s).unwrap()).collect()).collect(), cols, RationalFunction::zero()).unwrap()
    }

    fn labels(p: &str, n: usize) -> Vec<alloc::string::String> {
        (0..n).map(|i| format!("{p}{i}")).collect()
    }

    fn two_term(d: &str) -> RatComplex {
        RatComplex::new(ComplexRing::RationalFunctions, vec![labels("a", 1), labels("b", 1)], vec![rm(&[&[d]], 1)]).unwrap()
    }

    #[test]
    fn anchor() {
        let t = torsion(&two_term("1-t")).unwrap();
        assert_eq!(t.raw, parse_rational("1-t").unwrap());
        assert_eq!(t.sign, 1);
        assert_eq!(t.shift, 0);
        assert_eq!(torsion(&two_term("1")).unwrap(), Torsion::one());
    }

    #[test]
    fn normalization() {
        let t = torsion(&two_term("-t^2 + t^3")).unwrap();
        assert_eq!((t.sign, t.shift), (-1, 2));
        assert_eq!(t.normalized, parse_rational("1-t").unwrap());
        assert!(matches!(torsion(&two_term("2-t")), Err(Error::NormalizationImpossible(_))));
    }

    #[test]
    fn not_acyclic() {
        let c = RatComplex::new(ComplexRing::RationalFunctions, vec![labels("a", 1), labels("b", 1)], vec![rm(&[&["0"]], 1)]).unwrap();
        assert_eq!(torsion(&c), Err(Error::NotAcyclic { degree: 0, rank: 1 }));
    }

    #[test]
    fn contraction_identity() {
        let c = RatComplex::new(
            ComplexRing::RationalFunctions,
            vec![labels("a", 1), labels("b", 2), labels("c", 1)],
            vec![rm(&[&["1-t", "t"]], 2), rm(&[&["t"], &["t-1"]], 1)],
        )
        .unwrap();
        for order in [PivotOrder::Ascending, PivotOrder::Descending] {
            let g = contraction(&c, order).unwrap();
            for k in 0..c.len() {
                let dg = c.boundary(k + 1).mul(&g[k]).unwrap();
                let gd = if k == 0 { Matrix::zeros(c.rank(0), c.rank(0), &RationalFunction::zero()) } else { g[k - 1].mul(c.boundary(k)).unwrap() };
                assert_eq!(dg.add(&gd).unwrap(), Matrix::identity(c.rank(k), &RationalFunction::zero()), "degree {k}");
            }
        }
        let a = torsion_with(&c, TorsionStrategy::Contraction(PivotOrder::Ascending)).unwrap();
        let b = torsion_with(&c, TorsionStrategy::Contraction(PivotOrder::Descending)).unwrap();
        let m = torsion_with(&c, TorsionStrategy::MilnorBases(PivotOrder::Ascending)).unwrap();
        assert_eq!(a.normalized, b.normalized);
        assert_eq!(a.normalized, m.normalized);
    }

    #[test]
    fn map_torsion() {
        // multiplication by 1+t on a single module in degree 0
        let c = RatComplex::new(ComplexRing::RationalFunctions, vec![labels("a", 1)], Vec::new()).unwrap();
        let f = ChainMap::new(c.clone(), c.clone(), vec![rm(&[&["1+t"]], 1)]).unwrap();
        assert_eq!(torsion_of_map(&f).unwrap().normalized, parse_rational("1+t").unwrap());
        assert_eq!(torsion_of_map(&ChainMap::identity(&c)).unwrap(), Torsion::one());
        let z = ChainMap::zero_map(&c, &c).unwrap();
        assert!(matches!(torsion_of_map(&z), Err(Error::NotAnEquivalence { .. })));
        assert_eq!(format!("{}", det_one_minus_th(&Matrix::from_rows(vec![vec![2.into(), 1.into()], vec![1.into(), 1.into()]], 2, BigInt::from(0)).unwrap()).unwrap()), "1 - 3*t + t^2".to_string());
    }
}
