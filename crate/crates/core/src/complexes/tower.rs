//! Towers `C(1) <- C(2) <- ... <- C(n)` of complexes over `Z[t]/t^k` and
//! their inverse limits.

use alloc::format;
use alloc::vec::Vec;

use super::complex::{BaseChange, ComplexRing, IntComplex};
use crate::algebra::{LaurentPoly, Matrix};
use crate::error::{Error, Result};

/// Level `k` (1-based) is a complex over `Z[t]/t^k`; the projections are the
/// reductions modulo `t^k` on matching bases.
#[derive(Debug, Clone, PartialEq)]
pub struct Tower {
    levels: Vec<IntComplex>,
}

impl Tower {
    /// Wraps levels without checking compatibility; see [`Tower::check`].
    pub fn from_levels(levels: Vec<IntComplex>) -> Self {
        Self { levels }
    }

    /// Reductions of `c` modulo `t^1, ..., t^n`.
    pub fn of_truncations(c: &IntComplex, n: i64) -> Result<Self> {
        let levels = (1..=n).map(|k| c.base_change(BaseChange::ModT(k))).collect::<Result<Vec<_>>>()?;
        Ok(Self { levels })
    }

    pub fn levels(&self) -> &[IntComplex] {
        &self.levels
    }

    pub fn height(&self) -> usize {
        self.levels.len()
    }

    /// Level `k`, 1-based.
    pub fn level(&self, k: usize) -> &IntComplex {
        &self.levels[k - 1]
    }

    pub fn level_mut(&mut self, k: usize) -> &mut IntComplex {
        &mut self.levels[k - 1]
    }

    /// Passes iff every level is the reduction of the next one. Scans from
    /// the top, so the reported level is the highest incompatible one.
    pub fn check(&self) -> Result<()> {
        for (i, c) in self.levels.iter().enumerate() {
            let k = i as i64 + 1;
            if c.ring() != ComplexRing::truncated(k) {
                return Err(Error::InconsistentTower(format!("level {k} is over {}, expected {}", c.ring(), ComplexRing::truncated(k))));
            }
        }
        for k in (1..self.levels.len()).rev() {
            let lower = &self.levels[k - 1];
            let upper = &self.levels[k];
            if lower.bases() != upper.bases() {
                return Err(Error::LevelMismatch(k));
            }
            if upper.base_change(BaseChange::ModT(k as i64)).map_or(true, |r| &r != lower) {
                return Err(Error::LevelMismatch(k));
            }
        }
        for c in &self.levels {
            c.validate()?;
        }
        Ok(())
    }

    /// Complex over `Z[[t]]` modulo `t^n` whose coefficient of `t^j` is read
    /// off level `j + 1`.
    pub fn inverse_limit(&self, n: i64) -> Result<IntComplex> {
        self.check().map_err(|e| Error::InconsistentTower(format!("{e}")))?;
        if n < 1 || n as usize > self.levels.len() {
            return Err(Error::InconsistentTower(format!("order {n} requested from a tower of height {}", self.levels.len())));
        }
        let base = &self.levels[0];
        let mut bd = Vec::with_capacity(base.boundaries().len());
        for k in 1..base.len() {
            let (rows, cols) = base.boundary(k).shape();
            let mut m = Matrix::zeros(rows, cols, &LaurentPoly::zero());
            for i in 0..rows {
                for j in 0..cols {
                    let coeffs = (0..n).map(|deg| self.levels[deg as usize].boundary(k).get(i, j).coeff(deg)).collect();
                    m.set(i, j, LaurentPoly::from_coeffs(0, coeffs));
                }
            }
            bd.push(m);
        }
        IntComplex::new(ComplexRing::PowerSeries(n), base.bases().to_vec(), bd)
    }
}
