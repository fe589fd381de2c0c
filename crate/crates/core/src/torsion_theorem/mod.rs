//! Descent data, the complexes `E` and `E'`, the map `xi`, and the comparison
//! of the torsion `w` with the zeta function of the gradient.

mod pipeline;
mod wfilt;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{LaurentPoly, Matrix};
use crate::complexes::{ComplexRing, IntComplex};
use crate::error::{Error, Result};
use crate::zeta::check_positive_valuation;

pub use pipeline::{
    build_e, build_e_prime, check_delta_p, closed_form_rf, delta_p, geometric_sum, source_boundary, telescoping_holds, torsion_closed_form,
    torsion_generic, torsion_generic_rf, torsion_of_xi, verify_theorem_b, xi_exact, xi_map, TheoremBReport, WRoute, ZetaSource,
};
pub use wfilt::{build_w_complex, WFiltrationSystem};

/// Algebraic payload of a gradient satisfying the descent condition: the
/// complexes `R` and `N`, the descent matrices `H_k` on `R_k`, the classes
/// `sigma_1(p)` in `R_{k-1}` and the two star blocks of the `E` boundary.
///
/// All vectors are indexed by degree `k = 0..=L`, where `L` is one past the
/// top degree of `R` and `N`:
/// - `h[k]`: `R_k -> R_k`
/// - `sigma1[k]`, `star_a[k]`: `N_k -> R_{k-1}`
/// - `star_b[k]`: `R_{k-1} -> N_{k-1}`
#[derive(Debug, Clone, PartialEq)]
pub struct DescentSystem {
    r: IntComplex,
    nv: IntComplex,
    h: Vec<Matrix<LaurentPoly>>,
    sigma1: Vec<Matrix<LaurentPoly>>,
    star_a: Vec<Matrix<LaurentPoly>>,
    star_a_given: bool,
    star_b: Vec<Matrix<LaurentPoly>>,
    n_data: i64,
}

/// Collects descent data with sparse per-degree and per-generator entries.
#[derive(Debug, Clone)]
pub struct DescentBuilder {
    r: IntComplex,
    nv: IntComplex,
    h: BTreeMap<usize, Matrix<LaurentPoly>>,
    sigma1: BTreeMap<String, Vec<LaurentPoly>>,
    star_a: Option<BTreeMap<usize, Matrix<LaurentPoly>>>,
    star_b: BTreeMap<usize, Matrix<LaurentPoly>>,
    n_data: i64,
}

fn zero() -> LaurentPoly {
    LaurentPoly::zero()
}

fn check_polynomial(c: &IntComplex, name: &str) -> Result<()> {
    match c.ring() {
        ComplexRing::Integers | ComplexRing::Polynomials => {}
        other => return Err(Error::UnsupportedChange(format!("{name} must be over Z or Z[t], got {other}"))),
    }
    for m in c.boundaries() {
        if let Some((_, _, e)) = m.entries().find(|(_, _, e)| !e.is_polynomial()) {
            return Err(Error::EntryNotInRing { entry: e.to_string(), ring: "Z[t]".into() });
        }
    }
    Ok(())
}

fn check_matrix(m: &Matrix<LaurentPoly>, shape: (usize, usize), what: &str) -> Result<()> {
    if m.shape() != shape {
        return Err(Error::ShapeMismatch(format!("{what} is {}x{}, expected {}x{}", m.rows(), m.cols(), shape.0, shape.1)));
    }
    if let Some((_, _, e)) = m.entries().find(|(_, _, e)| !e.is_polynomial()) {
        return Err(Error::EntryNotInRing { entry: e.to_string(), ring: "Z[t]".into() });
    }
    Ok(())
}

impl DescentBuilder {
    pub fn new(r: IntComplex, nv: IntComplex) -> Self {
        Self { r, nv, h: BTreeMap::new(), sigma1: BTreeMap::new(), star_a: None, star_b: BTreeMap::new(), n_data: 16 }
    }

    pub fn h(mut self, k: usize, m: Matrix<LaurentPoly>) -> Self {
        self.h.insert(k, m);
        self
    }

    pub fn sigma1(mut self, generator: impl Into<String>, vector: Vec<LaurentPoly>) -> Self {
        self.sigma1.insert(generator.into(), vector);
        self
    }

    /// Star block `N_k -> R_{k-1}`. When no `A` block is given at all it is
    /// taken equal to `sigma_1`.
    pub fn star_a(mut self, k: usize, m: Matrix<LaurentPoly>) -> Self {
        self.star_a.get_or_insert_with(BTreeMap::new).insert(k, m);
        self
    }

    /// Star block `R_{k-1} -> N_{k-1}`.
    pub fn star_b(mut self, k: usize, m: Matrix<LaurentPoly>) -> Self {
        self.star_b.insert(k, m);
        self
    }

    pub fn n_data(mut self, n: i64) -> Self {
        self.n_data = n;
        self
    }

    pub fn build(self) -> Result<DescentSystem> {
        check_polynomial(&self.r, "R")?;
        check_polynomial(&self.nv, "Nv")?;
        let lift = |c: &IntComplex| c.map_entries(ComplexRing::Polynomials, |e| Ok(e.clone()));
        let top = self.r.len().max(self.nv.len());
        let r = lift(&self.r)?.padded(top);
        let nv = lift(&self.nv)?.padded(top);
        let rank_r = |k: usize| if k == usize::MAX { 0 } else { r.rank(k) };
        let prev = |k: usize| k.checked_sub(1).unwrap_or(usize::MAX);

        let mut h: Vec<_> = (0..=top).map(|k| Matrix::zeros(r.rank(k), r.rank(k), &zero())).collect();
        for (k, m) in self.h {
            if k > top {
                return Err(Error::ShapeMismatch(format!("H_{k} given beyond the top degree {}", top.saturating_sub(1))));
            }
            check_matrix(&m, (r.rank(k), r.rank(k)), &format!("H_{k}"))?;
            h[k] = m;
        }
        check_positive_valuation(&h)?;

        let mut sigma1: Vec<_> = (0..=top).map(|k| Matrix::zeros(rank_r(prev(k)), nv.rank(k), &zero())).collect();
        for (label, v) in self.sigma1 {
            let (k, j) = (0..=top)
                .find_map(|k| nv.index_of(k, &label).map(|j| (k, j)))
                .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            let want = rank_r(prev(k));
            if v.len() != want {
                return Err(Error::ShapeMismatch(format!("sigma1({label}) has {} entries, R_{} has rank {want}", v.len(), k as i64 - 1)));
            }
            for (i, e) in v.into_iter().enumerate() {
                if !e.is_polynomial() {
                    return Err(Error::EntryNotInRing { entry: e.to_string(), ring: "Z[t]".into() });
                }
                sigma1[k].set(i, j, e);
            }
        }

        let star_a_given = self.star_a.is_some();
        let star_a = match self.star_a {
            None => sigma1.clone(),
            Some(given) => {
                let mut a: Vec<_> = (0..=top).map(|k| Matrix::zeros(rank_r(prev(k)), nv.rank(k), &zero())).collect();
                for (k, m) in given {
                    if k > top {
                        return Err(Error::ShapeMismatch(format!("star A_{k} given beyond the top degree")));
                    }
                    check_matrix(&m, a[k].shape(), &format!("star A_{k}"))?;
                    a[k] = m;
                }
                a
            }
        };

        let mut star_b: Vec<_> = (0..=top).map(|k| Matrix::zeros(if k == 0 { 0 } else { nv.rank(k - 1) }, rank_r(prev(k)), &zero())).collect();
        for (k, m) in self.star_b {
            if k == 0 || k > top {
                return Err(Error::ShapeMismatch(format!("star B_{k} must have degree in 1..={top}")));
            }
            check_matrix(&m, star_b[k].shape(), &format!("star B_{k}"))?;
            star_b[k] = m;
        }

        let sys = DescentSystem { r, nv, h, sigma1, star_a, star_a_given, star_b, n_data: self.n_data };
        build_e(&sys)?;
        Ok(sys)
    }
}

impl DescentSystem {
    pub fn builder(r: IntComplex, nv: IntComplex) -> DescentBuilder {
        DescentBuilder::new(r, nv)
    }

    /// `R`, padded with an empty top degree.
    pub fn r(&self) -> &IntComplex {
        &self.r
    }

    /// `N`, padded with an empty top degree.
    pub fn nv(&self) -> &IntComplex {
        &self.nv
    }

    /// Number of degrees of `E`.
    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    pub fn h(&self) -> &[Matrix<LaurentPoly>] {
        &self.h
    }

    pub fn sigma1(&self) -> &[Matrix<LaurentPoly>] {
        &self.sigma1
    }

    pub fn star_a(&self) -> &[Matrix<LaurentPoly>] {
        &self.star_a
    }

    /// Whether the `A` block came from the input rather than from `sigma_1`.
    pub fn star_a_given(&self) -> bool {
        self.star_a_given
    }

    pub fn star_b(&self) -> &[Matrix<LaurentPoly>] {
        &self.star_b
    }

    pub fn n_data(&self) -> i64 {
        self.n_data
    }

    /// `rank R_k`, zero for negative `k`.
    pub(crate) fn rank_r(&self, k: i64) -> usize {
        if k < 0 || k as usize >= self.r.len() {
            0
        } else {
            self.r.rank(k as usize)
        }
    }

    pub(crate) fn rank_n(&self, k: i64) -> usize {
        if k < 0 || k as usize >= self.nv.len() {
            0
        } else {
            self.nv.rank(k as usize)
        }
    }

    /// `H_k`, empty for out-of-range `k`.
    pub(crate) fn h_at(&self, k: i64) -> Matrix<LaurentPoly> {
        if k < 0 || k as usize >= self.h.len() {
            Matrix::zeros(0, 0, &zero())
        } else {
            self.h[k as usize].clone()
        }
    }

    /// `sigma_1` on `N_k`, with the right empty shape out of range.
    pub(crate) fn sigma_at(&self, k: i64) -> Matrix<LaurentPoly> {
        if k < 0 || k as usize >= self.sigma1.len() {
            Matrix::zeros(self.rank_r(k - 1), self.rank_n(k), &zero())
        } else {
            self.sigma1[k as usize].clone()
        }
    }

    pub(crate) fn a_at(&self, k: i64) -> Matrix<LaurentPoly> {
        if k < 0 || k as usize >= self.star_a.len() {
            Matrix::zeros(self.rank_r(k - 1), self.rank_n(k), &zero())
        } else {
            self.star_a[k as usize].clone()
        }
    }

    pub(crate) fn b_at(&self, k: i64) -> Matrix<LaurentPoly> {
        if k < 1 || k as usize >= self.star_b.len() {
            Matrix::zeros(self.rank_n(k - 1), self.rank_r(k - 1), &zero())
        } else {
            self.star_b[k as usize].clone()
        }
    }

    /// `d^R_k`, empty out of range.
    pub(crate) fn a1_at(&self, k: i64) -> Matrix<LaurentPoly> {
        if k < 0 || k as usize > self.r.len() {
            Matrix::zeros(self.rank_r(k - 1), self.rank_r(k), &zero())
        } else {
            self.r.boundary(k as usize).clone()
        }
    }

    pub(crate) fn d_at(&self, k: i64) -> Matrix<LaurentPoly> {
        if k < 0 || k as usize > self.nv.len() {
            Matrix::zeros(self.rank_n(k - 1), self.rank_n(k), &zero())
        } else {
            self.nv.boundary(k as usize).clone()
        }
    }

    /// Same data with the star blocks replaced; `star_a` defaults to `sigma_1`
    /// when `None`. Fails if the new `E` boundary does not square to zero.
    pub fn with_stars(&self, sigma1: Vec<Matrix<LaurentPoly>>, star_a: Option<Vec<Matrix<LaurentPoly>>>, star_b: Vec<Matrix<LaurentPoly>>) -> Result<Self> {
        let mut s = self.clone();
        if sigma1.len() != s.len() || star_b.len() != s.len() || star_a.as_ref().is_some_and(|a| a.len() != s.len()) {
            return Err(Error::ShapeMismatch("star blocks must cover every degree".into()));
        }
        for k in 0..s.len() {
            check_matrix(&sigma1[k], s.sigma1[k].shape(), &format!("sigma1 in degree {k}"))?;
            check_matrix(&star_b[k], s.star_b[k].shape(), &format!("star B_{k}"))?;
        }
        s.star_a_given = star_a.is_some();
        s.star_a = star_a.unwrap_or_else(|| sigma1.clone());
        s.sigma1 = sigma1;
        s.star_b = star_b;
        build_e(&s)?;
        Ok(s)
    }

    /// Labels of the `N` generators, per degree.
    pub fn generators(&self) -> impl Iterator<Item = (usize, &str)> + '_ {
        self.nv.bases().iter().enumerate().flat_map(|(k, b)| b.iter().map(move |l| (k, l.as_str())))
    }
}

#[cfg(test)]
mod tests;
