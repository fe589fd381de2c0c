use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::complex::{BasedChainComplex, Coefficient, RatComplex};
use crate::algebra::{linalg, Matrix, RationalFunction, Ring};
use crate::error::{Error, Result};

/// A degreewise map `f_k : C_k -> D_k` (matrix rows indexed by the target basis).
#[derive(Clone, PartialEq)]
pub struct ChainMap<T> {
    source: BasedChainComplex<T>,
    target: BasedChainComplex<T>,
    maps: Vec<Matrix<T>>,
}

impl<T: Coefficient> core::fmt::Debug for ChainMap<T> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("ChainMap").field("source", &self.source).field("target", &self.target).field("maps", &self.maps).finish()
    }
}

impl<T: Coefficient> ChainMap<T> {
    /// Validates shapes and `d f = f d`. Missing trailing degrees of either
    /// complex are treated as zero modules.
    pub fn new(source: BasedChainComplex<T>, target: BasedChainComplex<T>, maps: Vec<Matrix<T>>) -> Result<Self> {
        let f = Self::assemble(source, target, maps)?;
        f.validate()?;
        Ok(f)
    }

    /// Shape-checked but not validated as a chain map.
    pub fn assemble(source: BasedChainComplex<T>, target: BasedChainComplex<T>, maps: Vec<Matrix<T>>) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::UnsupportedChange(format!(
                "chain map between complexes over {} and {}",
                source.ring(),
                target.ring()
            )));
        }
        let len = source.len().max(target.len()).max(maps.len());
        let top = len.saturating_sub(1);
        let (source, target) = if len == 0 { (source, target) } else { (source.padded(top), target.padded(top)) };
        let zero = source.zero_elem();
        let mut padded = Vec::with_capacity(len);
        for k in 0..len {
            let want = (target.rank(k), source.rank(k));
            let m = match maps.get(k) {
                Some(m) => {
                    if m.shape() != want {
                        return Err(Error::ShapeMismatch(format!(
                            "f_{k} is {}x{}, expected {}x{}",
                            m.rows(),
                            m.cols(),
                            want.0,
                            want.1
                        )));
                    }
                    for (_, _, e) in m.entries() {
                        e.check_in(source.ring())?;
                    }
                    m.map(zero.clone(), |e| e.reduce(source.ring()))
                }
                None => Matrix::zeros(want.0, want.1, &zero),
            };
            padded.push(m);
        }
        Ok(Self { source, target, maps: padded })
    }

    pub fn identity(c: &BasedChainComplex<T>) -> Self {
        let zero = c.zero_elem();
        let maps = (0..c.len()).map(|k| Matrix::identity(c.rank(k), &zero)).collect();
        Self { source: c.clone(), target: c.clone(), maps }
    }

    pub fn zero_map(source: &BasedChainComplex<T>, target: &BasedChainComplex<T>) -> Result<Self> {
        Self::new(source.clone(), target.clone(), Vec::new())
    }

    pub fn source(&self) -> &BasedChainComplex<T> {
        &self.source
    }

    pub fn target(&self) -> &BasedChainComplex<T> {
        &self.target
    }

    pub fn maps(&self) -> &[Matrix<T>] {
        &self.maps
    }

    pub fn map(&self, k: usize) -> &Matrix<T> {
        &self.maps[k]
    }

    /// Checks `d^target_k f_k = f_{k-1} d^source_k` in every degree.
    pub fn validate(&self) -> Result<()> {
        let ring = self.source.ring();
        for k in 1..self.maps.len() {
            let lhs = self.target.boundary(k).mul(&self.maps[k])?;
            let rhs = self.maps[k - 1].mul(self.source.boundary(k))?;
            let diff = lhs.sub(&rhs)?;
            let bad = diff.entries().map(|(i, j, v)| (i, j, v.reduce(ring))).find(|(_, _, v)| !v.is_zero_elem());
            if let Some((i, j, v)) = bad {
                return Err(Error::NotAChainMap { degree: k, row: i, col: j, value: v.to_string() });
            }
        }
        Ok(())
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ChainMap<T>) -> Result<Self> {
        if g.source.bases() != self.target.bases() {
            return Err(Error::ShapeMismatch("composing maps whose middle complexes differ".to_string()));
        }
        let ring = self.source.ring();
        let maps = self
            .maps
            .iter()
            .zip(&g.maps)
            .map(|(f, g)| g.mul(f).map(|m| m.map(f.zero_elem().clone(), |e| e.reduce(ring))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.source.clone(), g.target.clone(), maps)
    }

    /// Mapping cone: `Cone_k = C_{k-1} ⊕ D_k` with
    /// `d = [[-d^C_{k-1}, 0], [f_{k-1}, d^D_k]]`. Source labels are
    /// prefixed `src/`, target labels `tgt/`.
    pub fn mapping_cone(&self) -> Result<BasedChainComplex<T>> {
        let m = self.maps.len();
        if m == 0 {
            return Ok(BasedChainComplex::zero(self.source.ring()));
        }
        let zero = self.source.zero_elem();
        let mut bases = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let mut b: Vec<_> = if k >= 1 { self.source.basis(k - 1).iter().map(|l| format!("src/{l}")).collect() } else { Vec::new() };
            b.extend(self.target.basis(k).iter().map(|l| format!("tgt/{l}")));
            bases.push(b);
        }
        let mut bd = Vec::with_capacity(m);
        for k in 1..=m {
            // rows: C_{k-2} ⊕ D_{k-1}; cols: C_{k-1} ⊕ D_k
            let neg_dc = self.source.boundary(k - 1).neg();
            let dd = self.target.boundary(k);
            let f = &self.maps[k - 1];
            let rows = [neg_dc.rows(), self.target.rank(k - 1)];
            let cols = [self.source.rank(k - 1), self.target.rank(k)];
            let blocks = vec![vec![Some(&neg_dc), None], vec![Some(f), Some(dd)]];
            bd.push(Matrix::from_blocks(&rows, &cols, &blocks, &zero)?);
        }
        BasedChainComplex::new(self.source.ring(), bases, bd)
    }
}

impl ChainMap<RationalFunction> {
    /// Solves `f - g = d s + s d` over `Q(t)`; returns the homotopy
    /// `s_k : C_k -> D_{k+1}` if one exists.
    pub fn homotopy_to(&self, g: &Self) -> Result<Option<Vec<Matrix<RationalFunction>>>> {
        if g.source.bases() != self.source.bases() || g.target.bases() != self.target.bases() {
            return Err(Error::ShapeMismatch("homotopy between maps with different endpoints".to_string()));
        }
        let (c, d) = (&self.source, &self.target);
        let len = self.maps.len();
        // unknowns: entries of s_k (rank D_{k+1} x rank C_k), row-major, k = 0..len
        let mut offsets = Vec::with_capacity(len + 1);
        let mut total = 0;
        for k in 0..len {
            offsets.push(total);
            total += d.rank(k + 1) * c.rank(k);
        }
        offsets.push(total);
        let eqs: usize = (0..len).map(|k| d.rank(k) * c.rank(k)).sum();
        let zero = RationalFunction::zero();
        let mut a = Matrix::zeros(eqs, total, &zero);
        let mut b = Matrix::zeros(eqs, 1, &zero);
        let mut row = 0;
        for k in 0..len {
            let diff = self.maps[k].sub(&g.maps[k])?;
            let dd = d.boundary(k + 1); // D_{k+1} -> D_k
            let dc = c.boundary(k); // C_k -> C_{k-1}
            for i in 0..d.rank(k) {
                for j in 0..c.rank(k) {
                    // (d s_k)[i][j] = sum_l dd[i][l] s_k[l][j]
                    for l in 0..d.rank(k + 1) {
                        let v = dd.get(i, l);
                        if !v.is_zero() {
                            let col = offsets[k] + l * c.rank(k) + j;
                            let slot = a.get_mut(row, col);
                            *slot = slot.add_ref(v);
                        }
                    }
                    // (s_{k-1} d)[i][j] = sum_l s_{k-1}[i][l] dc[l][j]
                    if k >= 1 {
                        for l in 0..c.rank(k - 1) {
                            let v = dc.get(l, j);
                            if !v.is_zero() {
                                let col = offsets[k - 1] + i * c.rank(k - 1) + l;
                                let slot = a.get_mut(row, col);
                                *slot = slot.add_ref(v);
                            }
                        }
                    }
                    b.set(row, 0, diff.get(i, j).clone());
                    row += 1;
                }
            }
        }
        let Some(x) = linalg::gaussian_solve(&a, &b) else {
            return Ok(None);
        };
        let mut out = Vec::with_capacity(len);
        for (k, &off) in offsets.iter().enumerate().take(len) {
            let (r, cc) = (d.rank(k + 1), c.rank(k));
            let data = (0..r * cc).map(|i| x.get(off + i, 0).clone()).collect();
            out.push(Matrix::from_vec(r, cc, data, zero.clone())?);
        }
        Ok(Some(out))
    }
}

/// Rationalizes both ends and the matrices of an integral chain map.
pub fn rationalize_map(f: &ChainMap<crate::algebra::LaurentPoly>) -> Result<ChainMap<RationalFunction>> {
    let s: RatComplex = f.source.rationalize()?;
    let t: RatComplex = f.target.rationalize()?;
    let maps = f.maps.iter().map(|m| m.map(RationalFunction::zero(), |e| RationalFunction::from_poly(e.clone()))).collect();
    ChainMap::new(s, t, maps)
}
