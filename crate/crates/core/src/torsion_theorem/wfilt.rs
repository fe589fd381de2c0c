use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{LaurentPoly, Matrix};
use crate::complexes::{ComplexRing, IntComplex};
use crate::error::{Error, Result};

/// Data of the four-block complex `W_k = R1_k ⊕ R0_k ⊕ N_k ⊕ R1_{k-1}` with
/// boundary
///
/// ```text
/// [ d1_k  0     0     1         ]
/// [ 0     d0_k  X_k   -H_{k-1}  ]
/// [ 0     0     d_k   Y_k       ]
/// [ 0     0     0     -d1_{k-1} ]
/// ```
///
/// `H_k : R1_k -> R0_k`, `X_k : N_k -> R0_{k-1}`, `Y_k : R1_{k-1} -> N_{k-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct WFiltrationSystem {
    pub r1: IntComplex,
    pub r0: IntComplex,
    pub nv: IntComplex,
    pub h: Vec<(usize, Matrix<LaurentPoly>)>,
    pub star_x: Vec<(usize, Matrix<LaurentPoly>)>,
    pub star_y: Vec<(usize, Matrix<LaurentPoly>)>,
}

impl WFiltrationSystem {
    pub fn new(r1: IntComplex, r0: IntComplex, nv: IntComplex) -> Self {
        Self { r1, r0, nv, h: Vec::new(), star_x: Vec::new(), star_y: Vec::new() }
    }
}

fn lookup(list: &[(usize, Matrix<LaurentPoly>)], k: i64, shape: (usize, usize), what: &str) -> Result<Matrix<LaurentPoly>> {
    let zero = LaurentPoly::zero();
    match list.iter().find(|(d, _)| k >= 0 && *d as i64 == k) {
        Some((_, m)) if m.shape() == shape => Ok(m.clone()),
        Some((_, m)) => Err(Error::ShapeMismatch(format!("{what}_{k} is {}x{}, expected {}x{}", m.rows(), m.cols(), shape.0, shape.1))),
        None => Ok(Matrix::zeros(shape.0, shape.1, &zero)),
    }
}

/// Assembles and validates the four-block complex. Labels carry the prefixes
/// `r1/`, `r0/`, `n/`, `s/`, so a nonzero `d∘d` entry names its block.
pub fn build_w_complex(sys: &WFiltrationSystem) -> Result<IntComplex> {
    let top = sys.r1.len().max(sys.r0.len()).max(sys.nv.len());
    let lift = |c: &IntComplex| -> Result<IntComplex> {
        match c.ring() {
            ComplexRing::Integers | ComplexRing::Polynomials => Ok(c.map_entries(ComplexRing::Polynomials, |e| Ok(e.clone()))?.padded(top)),
            other => Err(Error::UnsupportedChange(format!("W blocks must be over Z or Z[t], got {other}"))),
        }
    };
    let (r1, r0, nv) = (lift(&sys.r1)?, lift(&sys.r0)?, lift(&sys.nv)?);
    let rank = |c: &IntComplex, k: i64| if k < 0 || k as usize >= c.len() { 0 } else { c.rank(k as usize) };
    let bd_of = |c: &IntComplex, k: i64| {
        if k < 0 || k as usize > c.len() {
            Matrix::zeros(rank(c, k - 1), rank(c, k), &LaurentPoly::zero())
        } else {
            c.boundary(k as usize).clone()
        }
    };
    for (k, _) in sys.h.iter().chain(&sys.star_x).chain(&sys.star_y) {
        if *k > top {
            return Err(Error::ShapeMismatch(format!("block given in degree {k}, beyond the top degree")));
        }
    }
    let l = top + 1;
    let bases: Vec<Vec<String>> = (0..l)
        .map(|k| {
            let mut b: Vec<String> = r1.basis(k).iter().map(|x| format!("r1/{x}")).collect();
            b.extend(r0.basis(k).iter().map(|x| format!("r0/{x}")));
            b.extend(nv.basis(k).iter().map(|x| format!("n/{x}")));
            if k >= 1 {
                b.extend(r1.basis(k - 1).iter().map(|x| format!("s/{x}")));
            }
            b
        })
        .collect();
    let zero = LaurentPoly::zero();
    let mut bd = Vec::new();
    for k in 1..l as i64 {
        let rows = [rank(&r1, k - 1), rank(&r0, k - 1), rank(&nv, k - 1), rank(&r1, k - 2)];
        let cols = [rank(&r1, k), rank(&r0, k), rank(&nv, k), rank(&r1, k - 1)];
        let d1 = bd_of(&r1, k);
        let d0 = bd_of(&r0, k);
        let d = bd_of(&nv, k);
        let id = Matrix::identity(rank(&r1, k - 1), &zero);
        let h = lookup(&sys.h, k - 1, (rank(&r0, k - 1), rank(&r1, k - 1)), "H")?.neg();
        let x = lookup(&sys.star_x, k, (rank(&r0, k - 1), rank(&nv, k)), "X")?;
        let y = lookup(&sys.star_y, k, (rank(&nv, k - 1), rank(&r1, k - 1)), "Y")?;
        let nd1 = bd_of(&r1, k - 1).neg();
        let blocks = vec![
            vec![Some(&d1), None, None, Some(&id)],
            vec![None, Some(&d0), Some(&x), Some(&h)],
            vec![None, None, Some(&d), Some(&y)],
            vec![None, None, None, Some(&nd1)],
        ];
        bd.push(Matrix::from_blocks(&rows, &cols, &blocks, &zero)?);
    }
    IntComplex::new(ComplexRing::Polynomials, bases, bd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::torsion;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(0, c)
    }

    fn m1(e: LaurentPoly) -> Matrix<LaurentPoly> {
        Matrix::from_rows(vec![vec![e]], 1, LaurentPoly::zero()).unwrap()
    }

    fn point(deg: usize, name: &str) -> IntComplex {
        let mut bases = vec![Vec::new(); deg + 1];
        bases[deg].push(String::from(name));
        let bd = (1..=deg).map(|k| Matrix::zeros(bases[k - 1].len(), bases[k].len(), &LaurentPoly::zero())).collect();
        IntComplex::new(ComplexRing::Integers, bases, bd).unwrap()
    }

    fn empty() -> IntComplex {
        IntComplex::zero(ComplexRing::Integers)
    }

    #[test]
    fn identity_pairing_is_acyclic() {
        let w = build_w_complex(&WFiltrationSystem::new(point(0, "a"), empty(), empty())).unwrap();
        assert_eq!(w.ranks(), vec![1, 1]);
        assert!(torsion(&w.rationalize().unwrap()).unwrap().normalized.is_one());
    }

    #[test]
    fn descent_block_shows_up() {
        let mut sys = WFiltrationSystem::new(point(0, "a"), point(0, "b"), empty());
        sys.h.push((0, m1(lp(&[0, 1]))));
        let w = build_w_complex(&sys).unwrap();
        assert_eq!(w.basis(1), &[String::from("s/a")]);
        assert_eq!(w.boundary(1).get(1, 0), &lp(&[0, -1]));
    }

    #[test]
    fn inconsistent_star_is_located() {
        // X_2 : N_2 -> R0_1 forces d0_1 X_2 = 0; pick d0_1 = 1 to break it.
        let r0 = IntComplex::new(
            ComplexRing::Integers,
            vec![vec![String::from("q")], vec![String::from("p")]],
            vec![m1(LaurentPoly::one())],
        )
        .unwrap();
        let mut sys = WFiltrationSystem::new(empty(), r0, point(2, "z"));
        sys.star_x.push((2, m1(LaurentPoly::one())));
        match build_w_complex(&sys) {
            Err(Error::BoundarySquareNonzero { row_label, col_label, .. }) => {
                assert_eq!(row_label, "r0/q");
                assert_eq!(col_label, "n/z");
            }
            other => panic!("expected a nonzero square, got {other:?}"),
        }
    }
}
