//! Filtrations given by assigning a level to every basis element.

use alloc::vec::Vec;

use super::complex::{Coefficient, IntComplex, RatComplex};
use crate::algebra::RationalFunction;
use crate::error::{Error, Result};

/// A complex with a level `0..=m` attached to each basis element. The
/// level-`i` piece is spanned by the elements of level `<= i`.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelFiltration {
    complex: RatComplex,
    levels: Vec<Vec<usize>>,
}

/// Outcome of [`LevelFiltration::check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    pub good: bool,
    /// Levels are free by construction, so `nice` coincides with `good`.
    pub nice: bool,
    /// First `(level, degree, rank)` where the level quotient has homology off
    /// its own degree.
    pub witness: Option<(usize, usize, usize)>,
}

impl LevelFiltration {
    pub fn new(complex: RatComplex, levels: Vec<Vec<usize>>) -> Result<Self> {
        if levels.len() != complex.len() || levels.iter().zip(complex.bases()).any(|(l, b)| l.len() != b.len()) {
            return Err(Error::ShapeMismatch("filtration levels do not match the basis sizes".into()));
        }
        Ok(Self { complex, levels })
    }

    /// From an integral complex; the check runs over `Q(t)`.
    pub fn from_integral(complex: &IntComplex, levels: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(complex.rationalize()?, levels)
    }

    /// Level of every generator equal to its degree.
    pub fn trivial(complex: RatComplex) -> Self {
        let levels = complex.bases().iter().enumerate().map(|(k, b)| alloc::vec![k; b.len()]).collect();
        Self { complex, levels }
    }

    pub fn complex(&self) -> &RatComplex {
        &self.complex
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    /// The subquotient spanned by generators of exactly level `i`.
    pub fn level_block(&self, i: usize) -> Result<RatComplex> {
        let c = &self.complex;
        let keep: Vec<Vec<usize>> = self.levels.iter().map(|l| (0..l.len()).filter(|&j| l[j] == i).collect()).collect();
        let bases = keep.iter().enumerate().map(|(k, idx)| idx.iter().map(|&j| c.basis(k)[j].clone()).collect()).collect();
        let bd = (1..c.len()).map(|k| c.boundary(k).submatrix(&keep[k - 1], &keep[k])).collect();
        RatComplex::new(c.ring(), bases, bd)
    }

    /// Verifies the boundary never raises the level, then tests each level
    /// quotient for homology outside degree `i`.
    pub fn check(&self) -> Result<FiltrationReport> {
        let c = &self.complex;
        for k in 1..c.len() {
            let d = c.boundary(k);
            for (i, j, v) in d.entries() {
                if !<RationalFunction as Coefficient>::reduce(v, c.ring()).is_zero() && self.levels[k - 1][i] > self.levels[k][j] {
                    return Err(Error::NotLevelTriangular {
                        from: c.basis(k)[j].clone(),
                        from_level: self.levels[k][j],
                        to: c.basis(k - 1)[i].clone(),
                        to_level: self.levels[k - 1][i],
                    });
                }
            }
        }
        let top = self.levels.iter().flatten().copied().max();
        let mut witness = None;
        if let Some(top) = top {
            'levels: for lvl in 0..=top {
                let block = self.level_block(lvl)?;
                for (k, r) in block.homology_ranks().into_iter().enumerate() {
                    if k != lvl && r != 0 {
                        witness = Some((lvl, k, r));
                        break 'levels;
                    }
                }
            }
        }
        let good = witness.is_none();
        Ok(FiltrationReport { good, nice: good, witness })
    }
}

impl core::fmt::Display for FiltrationReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self.witness {
            None => f.write_str("good (nice)"),
            Some((l, k, r)) => write!(f, "not good: level {l} has H_{k} of rank {r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_rational, Matrix};
    use crate::complexes::ComplexRing;
    use alloc::string::String;
    use alloc::vec;

    fn rm(rows: &[&[&str]], cols: usize) -> Matrix<RationalFunction> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| parse_rational(s).unwrap()).collect()).collect(), cols, RationalFunction::zero()).unwrap()
    }

    fn s(x: &str) -> String {
        String::from(x)
    }

    #[test]
    fn trivial_filtration_is_good() {
        let c = RatComplex::new(ComplexRing::RationalFunctions, vec![vec![s("a")], vec![s("b")]], vec![rm(&[&["1-t"]], 1)]).unwrap();
        assert!(LevelFiltration::trivial(c).check().unwrap().good);
    }

    #[test]
    fn off_degree_homology_is_reported() {
        // zero boundary with both generators at level 0: H_1 of that block is off-degree
        let c = RatComplex::new(ComplexRing::RationalFunctions, vec![vec![s("a")], vec![s("b")]], vec![rm(&[&["0"]], 1)]).unwrap();
        let f = LevelFiltration::new(c, vec![vec![0], vec![0]]).unwrap();
        let r = f.check().unwrap();
        assert!(!r.good);
        assert_eq!(r.witness, Some((0, 1, 1)));
    }

    #[test]
    fn raising_levels_is_rejected() {
        let c = RatComplex::new(ComplexRing::RationalFunctions, vec![vec![s("a")], vec![s("b")]], vec![rm(&[&["1"]], 1)]).unwrap();
        let f = LevelFiltration::new(c, vec![vec![1], vec![0]]).unwrap();
        assert!(matches!(f.check(), Err(Error::NotLevelTriangular { .. })));
    }
}
