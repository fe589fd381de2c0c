use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::DescentSystem;
use crate::algebra::{rf_expand, LaurentPoly, Matrix, RationalFunction, Ring, SeriesComparison, TruncatedSeries, WittVector};
use crate::complexes::{torsion, torsion_of_map, BaseChange, ChainMap, ComplexRing, IntComplex, RatComplex, Torsion};
use crate::error::{Error, Result};
use crate::morse_novikov::MNInstance;
use crate::zeta::{det_one_minus, zeta_from_descent, zeta_from_orbits, zeta_rf_from_descent, zeta_v};

fn zp() -> LaurentPoly {
    LaurentPoly::zero()
}

fn trunc(m: &Matrix<LaurentPoly>, n: i64) -> Matrix<LaurentPoly> {
    m.map(zp(), |e| e.truncate(n))
}

fn to_rf(m: &Matrix<LaurentPoly>) -> Matrix<RationalFunction> {
    m.map(RationalFunction::zero(), |e| RationalFunction::from_poly(e.clone()))
}

fn one_minus(h: &Matrix<LaurentPoly>) -> Matrix<LaurentPoly> {
    Matrix::identity(h.rows(), &zp()).sub(h).expect("square")
}

fn check_order(s: &DescentSystem, n: i64) -> Result<()> {
    if n > s.n_data() {
        return Err(Error::InsufficientDataOrder { requested: n, available: s.n_data() });
    }
    if n < 1 {
        return Err(Error::Invalid(format!("truncation order must be positive, got {n}")));
    }
    Ok(())
}

/// `sum_{r < n} H^r` modulo `t^n`.
pub fn geometric_sum(h: &Matrix<LaurentPoly>, n: i64) -> Matrix<LaurentPoly> {
    let id = Matrix::identity(h.rows(), &zp());
    let mut acc = trunc(&id, n);
    let mut p = id;
    for _ in 1..n {
        p = trunc(&p.mul(h).expect("square"), n);
        if p.is_zero() {
            break;
        }
        acc = acc.add(&p).expect("square");
    }
    acc
}

/// `(1 - H)^{-1}` over `Q(t)`.
fn geometric_exact(h: &Matrix<LaurentPoly>) -> Result<Matrix<RationalFunction>> {
    to_rf(&one_minus(h)).inverse()?.ok_or_else(|| Error::Invalid("1 - H is singular".into()))
}

/// The complex `E`: `E_k = R_k ⊕ N_k ⊕ R_{k-1}` with boundary
/// `[[d^R_k, A_k, 1 - H_{k-1}], [0, d^N_k, B_k], [0, 0, -d^R_{k-1}]]`.
/// Basis labels carry the prefixes `r/`, `n/` and `s/`.
pub fn build_e(s: &DescentSystem) -> Result<IntComplex> {
    let l = s.len();
    let bases: Vec<Vec<String>> = (0..l)
        .map(|k| {
            let mut b: Vec<String> = s.r().basis(k).iter().map(|x| format!("r/{x}")).collect();
            b.extend(s.nv().basis(k).iter().map(|x| format!("n/{x}")));
            if k >= 1 {
                b.extend(s.r().basis(k - 1).iter().map(|x| format!("s/{x}")));
            }
            b
        })
        .collect();
    let mut bd = Vec::with_capacity(l.saturating_sub(1));
    for k in 1..l as i64 {
        let rows = [s.rank_r(k - 1), s.rank_n(k - 1), s.rank_r(k - 2)];
        let cols = [s.rank_r(k), s.rank_n(k), s.rank_r(k - 1)];
        let (a1, a, omh) = (s.a1_at(k), s.a_at(k), one_minus(&s.h_at(k - 1)));
        let (d, b, na1) = (s.d_at(k), s.b_at(k), s.a1_at(k - 1).neg());
        let blocks = vec![vec![Some(&a1), Some(&a), Some(&omh)], vec![None, Some(&d), Some(&b)], vec![None, None, Some(&na1)]];
        bd.push(Matrix::from_blocks(&rows, &cols, &blocks, &zp())?);
    }
    IntComplex::new(ComplexRing::Polynomials, bases, bd)
}

/// Boundary `D_k = d^N_k - B_k G_{k-1} sigma_k` of the source of `xi`,
/// modulo `t^n`, for `k = 1..L`.
pub fn source_boundary(s: &DescentSystem, n: i64) -> Result<Vec<Matrix<LaurentPoly>>> {
    (1..s.len() as i64)
        .map(|k| {
            let g = geometric_sum(&s.h_at(k - 1), n);
            let corr = s.b_at(k).mul(&g)?.mul(&s.sigma_at(k))?;
            Ok(trunc(&s.d_at(k).sub(&corr)?, n))
        })
        .collect()
}

fn xi_blocks<T: Ring>(s: &DescentSystem, k: i64, tail: &Matrix<T>, zero: &T) -> Result<Matrix<T>> {
    let id = Matrix::identity(s.rank_n(k), zero);
    let rows = [s.rank_r(k), s.rank_n(k), s.rank_r(k - 1)];
    let cols = [s.rank_n(k)];
    Matrix::from_blocks(&rows, &cols, &[vec![None], vec![Some(&id)], vec![Some(tail)]], zero)
}

fn nv_bases(s: &DescentSystem) -> Vec<Vec<String>> {
    s.nv().bases().to_vec()
}

/// `xi(p) = [p] - sum_r tau(H^r sigma_1(p))` modulo `t^n`, as a chain map
/// from `N` with boundary [`source_boundary`] into `E`. Validation of the
/// chain-map identity is where inconsistent descent data surfaces.
pub fn xi_map(s: &DescentSystem, n: i64) -> Result<ChainMap<LaurentPoly>> {
    check_order(s, n)?;
    let ring = ComplexRing::truncated(n);
    let e = build_e(s)?.base_change(BaseChange::ModT(n))?;
    let src = IntComplex::assemble(ring, nv_bases(s), source_boundary(s, n)?)?;
    let maps = (0..s.len() as i64)
        .map(|k| {
            let g = geometric_sum(&s.h_at(k - 1), n);
            let tail = trunc(&g.mul(&s.sigma_at(k))?.neg(), n);
            xi_blocks(s, k, &tail, &zp())
        })
        .collect::<Result<Vec<_>>>()?;
    let f = ChainMap::assemble(src, e, maps)?;
    f.validate()?;
    f.source().validate()?;
    Ok(f)
}

/// The map `xi` over `Q(t)`, with `G = (1 - H)^{-1}` exactly.
pub fn xi_exact(s: &DescentSystem) -> Result<ChainMap<RationalFunction>> {
    let rz = RationalFunction::zero();
    let mut bd = Vec::new();
    let mut maps = Vec::new();
    for k in 0..s.len() as i64 {
        let g = if k >= 1 { geometric_exact(&s.h_at(k - 1))? } else { Matrix::zeros(0, 0, &rz) };
        if k >= 1 {
            let corr = to_rf(&s.b_at(k)).mul(&g)?.mul(&to_rf(&s.sigma_at(k)))?;
            bd.push(to_rf(&s.d_at(k)).sub(&corr)?);
        }
        let tail = g.mul(&to_rf(&s.sigma_at(k)))?.neg();
        maps.push(xi_blocks(s, k, &tail, &rz)?);
    }
    let src = RatComplex::assemble(ComplexRing::RationalFunctions, nv_bases(s), bd)?;
    let f = ChainMap::assemble(src, build_e(s)?.rationalize()?, maps)?;
    f.validate()?;
    f.source().validate()?;
    Ok(f)
}

fn locate(s: &DescentSystem, generator: &str) -> Result<(usize, usize)> {
    (0..s.len()).find_map(|k| s.nv().index_of(k, generator).map(|j| (k, j))).ok_or_else(|| Error::UnknownLabel(generator.into()))
}

/// `Delta_p = [p] - sum_{r=1}^{n-1} tau(H^{r-1} sigma_1(p))` modulo `t^n`, as
/// a column in the basis of `E_k`.
pub fn delta_p(s: &DescentSystem, generator: &str, n: i64) -> Result<Vec<LaurentPoly>> {
    let (k, j) = locate(s, generator)?;
    let k = k as i64;
    let h = s.h_at(k - 1);
    let sigma = s.sigma_at(k);
    let mut v: Vec<LaurentPoly> = (0..sigma.rows()).map(|i| sigma.get(i, j).clone()).collect();
    let mut tail = vec![zp(); v.len()];
    for _ in 1..n {
        for (acc, x) in tail.iter_mut().zip(&v) {
            *acc = (&*acc - x).truncate(n);
        }
        v = (0..h.rows()).map(|i| (0..h.cols()).fold(zp(), |a, c| &a + &(h.get(i, c) * &v[c])).truncate(n)).collect();
    }
    let mut col = vec![zp(); s.rank_r(k) + s.rank_n(k)];
    col[s.rank_r(k) + j] = LaurentPoly::one().truncate(n);
    col.extend(tail);
    Ok(col)
}

/// Checks that `xi` modulo `t^n` equals the finite sum [`delta_p`] for every
/// generator and every `n <= n_max`. Requires `sigma_1` of positive valuation.
pub fn check_delta_p(s: &DescentSystem, n_max: i64) -> Result<()> {
    let xi = xi_map(s, n_max)?;
    for (k, label) in s.generators() {
        let j = s.nv().index_of(k, label).expect("generator of N");
        let m = xi.map(k);
        for n in 1..=n_max {
            let col: Vec<LaurentPoly> = (0..m.rows()).map(|i| m.get(i, j).truncate(n)).collect();
            if col != delta_p(s, label, n)? {
                return Err(Error::TruncationMismatch { generator: label.into(), order: n });
            }
        }
    }
    Ok(())
}

/// The quotient `E' = E / xi(N)` after exchanging `[p]` for `xi(p)`:
/// `E'_k = R_k ⊕ R_{k-1}` with boundary `[[d^R_k, 1 - H_{k-1}], [0, delta_{k-1}]]`
/// where `delta_{k-1} = -d^R_{k-1} + G_{k-2} sigma_{k-1} B_k`, over `Q(t)`.
pub fn build_e_prime(s: &DescentSystem) -> Result<RatComplex> {
    let l = s.len();
    let rz = RationalFunction::zero();
    let bases: Vec<Vec<String>> = (0..l)
        .map(|k| {
            let mut b: Vec<String> = s.r().basis(k).iter().map(|x| format!("r/{x}")).collect();
            if k >= 1 {
                b.extend(s.r().basis(k - 1).iter().map(|x| format!("s/{x}")));
            }
            b
        })
        .collect();
    let mut bd = Vec::new();
    for k in 1..l as i64 {
        let g = if k >= 2 { geometric_exact(&s.h_at(k - 2))? } else { Matrix::zeros(0, 0, &rz) };
        let corr = g.mul(&to_rf(&s.sigma_at(k - 1)))?.mul(&to_rf(&s.b_at(k)))?;
        let delta = corr.sub(&to_rf(&s.a1_at(k - 1)))?;
        let rows = [s.rank_r(k - 1), s.rank_r(k - 2)];
        let cols = [s.rank_r(k), s.rank_r(k - 1)];
        let (a1, omh) = (to_rf(&s.a1_at(k)), to_rf(&one_minus(&s.h_at(k - 1))));
        bd.push(Matrix::from_blocks(&rows, &cols, &[vec![Some(&a1), Some(&omh)], vec![None, Some(&delta)]], &rz)?);
    }
    RatComplex::new(ComplexRing::RationalFunctions, bases, bd)
}

/// `prod_k det(1 - H_k)^{(-1)^k}`.
pub fn closed_form_rf(s: &DescentSystem) -> Result<RationalFunction> {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for (k, h) in s.h().iter().enumerate() {
        let d = det_one_minus(h);
        if k % 2 == 0 {
            num = &num * &d;
        } else {
            den = &den * &d;
        }
    }
    RationalFunction::new(num, den)
}

pub fn torsion_closed_form(s: &DescentSystem, n: i64) -> Result<WittVector> {
    check_order(s, n)?;
    WittVector::new(rf_expand(&closed_form_rf(s)?, n)?)
}

/// Normalized torsion of [`build_e_prime`].
pub fn torsion_generic_rf(s: &DescentSystem) -> Result<Torsion> {
    torsion(&build_e_prime(s)?)
}

pub fn torsion_generic(s: &DescentSystem, n: i64) -> Result<WittVector> {
    check_order(s, n)?;
    torsion_generic_rf(s)?.witt(n)
}

/// Torsion of the exact `xi`, i.e. of its mapping cone.
pub fn torsion_of_xi(s: &DescentSystem) -> Result<Torsion> {
    torsion_of_map(&xi_exact(s)?)
}

/// `closed form * zeta from descent == 1` exactly over `Q(t)`.
pub fn telescoping_holds(s: &DescentSystem) -> Result<bool> {
    Ok(closed_form_rf(s)?.mul_ref(&zeta_rf_from_descent(s.h())?).is_one())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WRoute {
    /// Torsion of the quotient complex `E'`.
    EPrime,
    /// Torsion of a supplied comparison chain map.
    ComparisonMap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaSource {
    Orbits,
    Descent,
}

/// Outcome of [`verify_theorem_b`].
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremBReport {
    pub order: i64,
    pub route: WRoute,
    pub w: TruncatedSeries,
    /// Closed form of the `E'` torsion, when descent data is present.
    pub w_closed_form: Option<TruncatedSeries>,
    /// Torsion of `xi` itself, when descent data is present.
    pub w_via_xi: Option<TruncatedSeries>,
    pub zeta_source: ZetaSource,
    pub zeta_l: TruncatedSeries,
    pub zeta: TruncatedSeries,
    pub telescoping: Option<bool>,
    pub comparison: SeriesComparison,
    pub pass: bool,
}

/// Computes `w` (through `E'` when descent data is present, otherwise from the
/// comparison map) and `zeta(v)` (from orbits when present, otherwise from the
/// descent matrices) and compares them modulo `t^n`.
pub fn verify_theorem_b(inst: &MNInstance, n: i64) -> Result<TheoremBReport> {
    if n > inst.data_order {
        return Err(Error::InsufficientDataOrder { requested: n, available: inst.data_order });
    }
    let (route, w, w_closed_form, w_via_xi, telescoping) = match (&inst.descent, &inst.comparison) {
        (Some(s), _) => {
            check_order(s, n)?;
            xi_map(s, n)?;
            let w = torsion_generic_rf(s)?.expand(n);
            let closed = rf_expand(&closed_form_rf(s)?, n)?;
            let via_xi = torsion_of_xi(s)?.expand(n);
            (WRoute::EPrime, w, Some(closed), Some(via_xi), Some(telescoping_holds(s)?))
        }
        (None, Some(_)) => {
            let t = inst.comparison_torsion()?.ok_or_else(|| Error::MissingData("comparison map needs a simplicial complex".into()))?;
            (WRoute::ComparisonMap, t.expand(n), None, None, None)
        }
        (None, None) => return Err(Error::MissingData("instance has neither descent data nor a comparison map".into())),
    };
    let (zeta_source, zeta_l) = match (&inst.orbits, &inst.descent) {
        (Some(o), _) => (ZetaSource::Orbits, zeta_from_orbits(o, n)?),
        (None, Some(s)) => (ZetaSource::Descent, zeta_from_descent(s.h(), n)?),
        (None, None) => return Err(Error::MissingData("instance has neither orbits nor descent data for zeta".into())),
    };
    let zeta = zeta_v(&zeta_l)?;
    let comparison = w.compare(&zeta);
    let routes_agree = w_closed_form.as_ref().is_none_or(|c| c == &w) && w_via_xi.as_ref().is_none_or(|x| x == &w);
    let pass = comparison.equal && !comparison.orders_differ && routes_agree && telescoping != Some(false);
    Ok(TheoremBReport { order: n, route, w, w_closed_form, w_via_xi, zeta_source, zeta_l, zeta, telescoping, comparison, pass })
}
