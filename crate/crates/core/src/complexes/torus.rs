//! Algebraic mapping torus of a chain self-map of an integral complex.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::complex::{ComplexRing, IntComplex};
use super::torsion::{det_one_minus_th, one_minus_th};
use crate::algebra::{LaurentPoly, Matrix, RationalFunction, Ring};
use crate::error::{Error, Result};

fn int_to_poly(m: &Matrix<BigInt>) -> Matrix<LaurentPoly> {
    m.map(LaurentPoly::zero(), |c| LaurentPoly::constant(c.clone()))
}

/// Mapping torus of `h : C -> C` for a complex `C` over `Z`:
/// `T_k = C_k ⊕ C_{k-1}` with `d_k = [[d^C_k, 1 - t h_{k-1}], [0, -d^C_{k-1}]]`.
/// Labels are `c/x` for the `C_k` part and `s/x` for the shifted part.
pub fn algebraic_mapping_torus(c: &IntComplex, h: &[Matrix<BigInt>]) -> Result<IntComplex> {
    if c.ring() != ComplexRing::Integers {
        return Err(Error::UnsupportedChange(format!("mapping torus of a complex over {}", c.ring())));
    }
    let n = c.len();
    if h.len() != n {
        return Err(Error::ShapeMismatch(format!("{} self-map matrices for {n} degrees", h.len())));
    }
    for (k, hk) in h.iter().enumerate() {
        if hk.shape() != (c.rank(k), c.rank(k)) {
            return Err(Error::ShapeMismatch(format!("h_{k} is {}x{}, expected {}x{}", hk.rows(), hk.cols(), c.rank(k), c.rank(k))));
        }
    }
    let hp: Vec<Matrix<LaurentPoly>> = h.iter().map(int_to_poly).collect();
    for k in 1..n {
        let diff = c.boundary(k).mul(&hp[k])?.sub(&hp[k - 1].mul(c.boundary(k))?)?;
        if let Some((i, j, v)) = diff.first_nonzero() {
            return Err(Error::NotAChainMap { degree: k, row: i, col: j, value: v.to_string() });
        }
    }
    if n == 0 {
        return Ok(IntComplex::zero(ComplexRing::Polynomials));
    }
    let zero = LaurentPoly::zero();
    let bases: Vec<Vec<_>> = (0..=n)
        .map(|k| {
            let mut b: Vec<_> = c.basis(k).iter().map(|l| format!("c/{l}")).collect();
            if k >= 1 {
                b.extend(c.basis(k - 1).iter().map(|l| format!("s/{l}")));
            }
            b
        })
        .collect();
    let mut bd = Vec::with_capacity(n);
    for k in 1..=n {
        let dk = c.boundary(k);
        let shift = one_minus_th(&h[k - 1])?;
        let neg_d = c.boundary(k - 1).neg();
        let rows = [c.rank(k - 1), if k >= 2 { c.rank(k - 2) } else { 0 }];
        let cols = [c.rank(k), c.rank(k - 1)];
        let blocks = vec![vec![Some(dk), Some(&shift)], vec![None, Some(&neg_d)]];
        bd.push(Matrix::from_blocks(&rows, &cols, &blocks, &zero)?);
    }
    IntComplex::new(ComplexRing::Polynomials, bases, bd)
}

/// Mapping torus of `h` on a complex with zero boundary and ranks given by `h`.
pub fn mapping_torus_zero_boundary(h: &[Matrix<BigInt>]) -> Result<IntComplex> {
    let mut bases = Vec::with_capacity(h.len());
    for (k, hk) in h.iter().enumerate() {
        if !hk.is_square() {
            return Err(Error::ShapeMismatch(format!("h_{k} is {}x{}, not square", hk.rows(), hk.cols())));
        }
        bases.push((0..hk.rows()).map(|i| format!("x{k}_{i}")).collect());
    }
    let bd = (1..h.len()).map(|k| Matrix::zeros(h[k - 1].rows(), h[k].rows(), &LaurentPoly::zero())).collect();
    let c = IntComplex::new(ComplexRing::Integers, bases, bd)?;
    algebraic_mapping_torus(&c, h)
}

/// `prod_k det(1 - t h_k)^{(-1)^k}` over `Q(t)`.
pub fn alternating_det_product(h: &[Matrix<BigInt>]) -> Result<RationalFunction> {
    let mut acc = RationalFunction::one();
    for (k, hk) in h.iter().enumerate() {
        let d = det_one_minus_th(hk)?;
        acc = if k % 2 == 0 { acc.mul_ref(&d) } else { acc.div(&d)? };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;
    use crate::complexes::torsion;

    fn im(rows: &[&[i64]]) -> Matrix<BigInt> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols, BigInt::from(0)).unwrap()
    }

    #[test]
    fn circle_fibration() {
        let t = mapping_torus_zero_boundary(&[im(&[&[1]])]).unwrap();
        assert_eq!(t.ranks(), vec![1, 1]);
        assert_eq!(t.boundary(1).get(0, 0), &LaurentPoly::from_ints(0, &[1, -1]));
        let tau = torsion(&t.rationalize().unwrap()).unwrap();
        assert_eq!(tau.normalized, parse_rational("1-t").unwrap());
    }

    #[test]
    fn cat_map_fibration() {
        let h = [im(&[&[1]]), im(&[&[2, 1], &[1, 1]]), im(&[&[1]])];
        let t = mapping_torus_zero_boundary(&h).unwrap();
        let tau = torsion(&t.rationalize().unwrap()).unwrap();
        let expected = parse_rational("(1-t)^2/(1-3t+t^2)").unwrap();
        assert_eq!(tau.normalized, expected);
        assert_eq!(alternating_det_product(&h).unwrap(), expected);
    }

    #[test]
    fn zero_self_map() {
        let t = mapping_torus_zero_boundary(&[Matrix::zeros(0, 0, &BigInt::from(0)), im(&[&[0, 0], &[0, 0]])]).unwrap();
        assert_eq!(t.boundary(2), &Matrix::identity(2, &LaurentPoly::zero()));
        assert!(torsion(&t.rationalize().unwrap()).unwrap().normalized.is_one());
    }

    #[test]
    fn rejects_non_chain_maps() {
        let c = IntComplex::new(
            ComplexRing::Integers,
            vec![vec!["a".into()], vec!["b".into()]],
            vec![Matrix::from_rows(vec![vec![LaurentPoly::one()]], 1, LaurentPoly::zero()).unwrap()],
        )
        .unwrap();
        assert!(matches!(algebraic_mapping_torus(&c, &[im(&[&[1]]), im(&[&[2]])]), Err(Error::NotAChainMap { .. })));
        algebraic_mapping_torus(&c, &[im(&[&[3]]), im(&[&[3]])]).unwrap();
    }
}
