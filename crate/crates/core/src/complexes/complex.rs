use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Field, LaurentPoly, Matrix, RationalFunction, Ring, TruncatedSeries};
use crate::error::{Error, Result};

/// Coefficient ring of a based complex.
///
/// The integral rings all use [`LaurentPoly`] entries; in the truncated
/// rings an entry is the representative of degree below the truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComplexRing {
    /// `Z`
    Integers,
    /// `Z[t]`
    Polynomials,
    /// `Z[t, t^-1]`
    Laurent,
    /// `Z[t]/t^n`, `n >= 2` (`n = 1` is `Z`).
    Truncated(i64),
    /// `Z[[t]]` known modulo `t^N`.
    PowerSeries(i64),
    /// The Novikov ring `Z((t))` known modulo `t^N`.
    Novikov(i64),
    /// `Q(t)`
    RationalFunctions,
    /// `Q((t))` known modulo `t^N`.
    LaurentSeriesField(i64),
}

impl ComplexRing {
    /// `Z[t]/t^n`, canonicalizing `n = 1` to `Z`.
    pub fn truncated(n: i64) -> Self {
        if n <= 1 {
            ComplexRing::Integers
        } else {
            ComplexRing::Truncated(n)
        }
    }

    /// Truncation order of the ring, if any. `Z` counts as `Z[t]/t`.
    pub fn order(self) -> Option<i64> {
        match self {
            ComplexRing::Integers => Some(1),
            ComplexRing::Truncated(n)
            | ComplexRing::PowerSeries(n)
            | ComplexRing::Novikov(n)
            | ComplexRing::LaurentSeriesField(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_field(self) -> bool {
        matches!(self, ComplexRing::RationalFunctions | ComplexRing::LaurentSeriesField(_))
    }

    /// Whether entries are integer Laurent polynomials.
    pub fn is_integral(self) -> bool {
        !self.is_field()
    }

    /// Parses the names produced by `Display`; series rings need `order`.
    pub fn parse(name: &str, order: Option<i64>) -> Result<Self> {
        let need = |what: &str| {
            order.filter(|&n| n >= 1).ok_or_else(|| Error::Invalid(format!("ring {what} needs a positive truncation order")))
        };
        let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        Ok(match compact.as_str() {
            "Z" => ComplexRing::Integers,
            "Z[t]" => ComplexRing::Polynomials,
            "Z[t,t^-1]" | "Z[t^-1,t]" | "L" => ComplexRing::Laurent,
            "Z[[t]]" => ComplexRing::PowerSeries(need(name)?),
            "Z((t))" | "Z[[t]][t^-1]" => ComplexRing::Novikov(need(name)?),
            "Q(t)" => ComplexRing::RationalFunctions,
            "Q((t))" => ComplexRing::LaurentSeriesField(need(name)?),
            other => {
                let n = other
                    .strip_prefix("Z[t]/t^")
                    .or_else(|| other.strip_prefix("Z[t]/(t^").and_then(|s| s.strip_suffix(')')))
                    .and_then(|s| s.parse::<i64>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| Error::Invalid(format!("unknown coefficient ring {name:?}")))?;
                ComplexRing::truncated(n)
            }
        })
    }
}

impl fmt::Display for ComplexRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexRing::Integers => f.write_str("Z"),
            ComplexRing::Polynomials => f.write_str("Z[t]"),
            ComplexRing::Laurent => f.write_str("Z[t,t^-1]"),
            ComplexRing::Truncated(n) => write!(f, "Z[t]/t^{n}"),
            ComplexRing::PowerSeries(_) => f.write_str("Z[[t]]"),
            ComplexRing::Novikov(_) => f.write_str("Z((t))"),
            ComplexRing::RationalFunctions => f.write_str("Q(t)"),
            ComplexRing::LaurentSeriesField(_) => f.write_str("Q((t))"),
        }
    }
}

/// Matrix entries usable in a [`BasedChainComplex`].
pub trait Coefficient: Ring + fmt::Display {
    /// Image in `ring` (truncation for the truncated rings).
    fn reduce(&self, ring: ComplexRing) -> Self;
    /// `Ok` if the entry is an element of `ring`.
    fn check_in(&self, ring: ComplexRing) -> Result<()>;
    /// Zero element of `ring`.
    fn zero_in(ring: ComplexRing) -> Self;
}

fn not_in(entry: &impl fmt::Display, ring: ComplexRing) -> Error {
    Error::EntryNotInRing { entry: entry.to_string(), ring: ring.to_string() }
}

impl Coefficient for LaurentPoly {
    fn reduce(&self, ring: ComplexRing) -> Self {
        match ring.order() {
            Some(n) => self.truncate(n),
            None => self.clone(),
        }
    }

    fn check_in(&self, ring: ComplexRing) -> Result<()> {
        let ok = match ring {
            ComplexRing::Integers => self.is_constant(),
            ComplexRing::Polynomials | ComplexRing::Truncated(_) | ComplexRing::PowerSeries(_) => self.is_polynomial(),
            ComplexRing::Laurent | ComplexRing::Novikov(_) => true,
            ComplexRing::RationalFunctions | ComplexRing::LaurentSeriesField(_) => false,
        };
        if ok {
            Ok(())
        } else {
            Err(not_in(self, ring))
        }
    }

    fn zero_in(_: ComplexRing) -> Self {
        LaurentPoly::zero()
    }
}

impl Coefficient for RationalFunction {
    fn reduce(&self, _: ComplexRing) -> Self {
        self.clone()
    }

    fn check_in(&self, ring: ComplexRing) -> Result<()> {
        if ring == ComplexRing::RationalFunctions {
            Ok(())
        } else {
            Err(not_in(self, ring))
        }
    }

    fn zero_in(_: ComplexRing) -> Self {
        RationalFunction::zero()
    }
}

impl Coefficient for TruncatedSeries {
    fn reduce(&self, ring: ComplexRing) -> Self {
        match ring.order() {
            Some(n) => self.truncate(n),
            None => self.clone(),
        }
    }

    fn check_in(&self, ring: ComplexRing) -> Result<()> {
        match ring {
            ComplexRing::LaurentSeriesField(n) if self.order() >= n => Ok(()),
            _ => Err(not_in(self, ring)),
        }
    }

    fn zero_in(ring: ComplexRing) -> Self {
        TruncatedSeries::zero(crate::algebra::CoeffRing::Rat, ring.order().unwrap_or(0)).as_laurent()
    }
}

/// Free based chain complex `C_m -> ... -> C_1 -> C_0`.
///
/// `boundary(k)` is the matrix of `d_k : C_k -> C_{k-1}`: rows are indexed by
/// the degree `k-1` basis, columns by the degree `k` basis.
#[derive(Clone, PartialEq)]
pub struct BasedChainComplex<T> {
    ring: ComplexRing,
    bases: Vec<Vec<String>>,
    // d[k] for k = 0..=m+1; the outer two are empty-shaped zero maps
    d: Vec<Matrix<T>>,
}

/// Complex over one of the integral rings.
pub type IntComplex = BasedChainComplex<LaurentPoly>;
/// Complex over `Q(t)`.
pub type RatComplex = BasedChainComplex<RationalFunction>;
/// Complex over `Q((t))` mod `t^N`.
pub type SeriesComplex = BasedChainComplex<TruncatedSeries>;

/// Target of [`IntComplex::base_change`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseChange {
    /// Reduction modulo `t^n`.
    ModT(i64),
    /// Localization `Z[t] -> Z[t, t^-1]`.
    InvertT,
    /// Completion to the Novikov ring, known modulo `t^N`.
    TensorNovikov(i64),
}

impl<T: Coefficient> BasedChainComplex<T> {
    /// Builds and validates a complex. `boundaries[k-1]` is `d_k`, for
    /// `k = 1..=m` where `m + 1 = bases.len()`.
    pub fn new(ring: ComplexRing, bases: Vec<Vec<String>>, boundaries: Vec<Matrix<T>>) -> Result<Self> {
        let c = Self::assemble(ring, bases, boundaries)?;
        c.validate()?;
        Ok(c)
    }

    /// Like [`new`](Self::new) but skips the `d∘d = 0` check (shapes and
    /// ring membership are still checked). Used to report on broken input.
    pub fn assemble(ring: ComplexRing, bases: Vec<Vec<String>>, boundaries: Vec<Matrix<T>>) -> Result<Self> {
        let m = bases.len();
        if boundaries.len() != m.saturating_sub(1) {
            return Err(Error::ShapeMismatch(format!(
                "{} boundary matrices for {} degrees",
                boundaries.len(),
                m
            )));
        }
        for (k, basis) in bases.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for label in basis {
                if !seen.insert(label.as_str()) {
                    return Err(Error::DuplicateLabel(format!("{label} (degree {k})")));
                }
            }
        }
        let zero = T::zero_in(ring);
        let mut d = Vec::with_capacity(m + 2);
        d.push(Matrix::zeros(0, bases.first().map_or(0, Vec::len), &zero));
        for (i, b) in boundaries.into_iter().enumerate() {
            let k = i + 1;
            let want = (bases[k - 1].len(), bases[k].len());
            if b.shape() != want {
                return Err(Error::ShapeMismatch(format!(
                    "d_{k} is {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    want.0,
                    want.1
                )));
            }
            for (_, _, e) in b.entries() {
                e.check_in(ring)?;
            }
            d.push(b.map(zero.clone(), |e| e.reduce(ring)));
        }
        d.push(Matrix::zeros(bases.last().map_or(0, Vec::len), 0, &zero));
        Ok(Self { ring, bases, d })
    }

    /// The complex with no generators.
    pub fn zero(ring: ComplexRing) -> Self {
        Self::assemble(ring, Vec::new(), Vec::new()).expect("empty complex")
    }

    pub fn ring(&self) -> ComplexRing {
        self.ring
    }

    /// Number of degrees (`m + 1`); zero for the empty complex.
    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.iter().all(Vec::is_empty)
    }

    /// Top degree `m`, or `None` for a complex with no degrees.
    pub fn top_degree(&self) -> Option<usize> {
        self.bases.len().checked_sub(1)
    }

    pub fn bases(&self) -> &[Vec<String>] {
        &self.bases
    }

    pub fn basis(&self, k: usize) -> &[String] {
        self.bases.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, k: usize) -> usize {
        self.basis(k).len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// `d_k`; defined for `k = 0..=m+1`.
    pub fn boundary(&self, k: usize) -> &Matrix<T> {
        &self.d[k]
    }

    /// `d_1, ..., d_m`.
    pub fn boundaries(&self) -> &[Matrix<T>] {
        let m = self.bases.len();
        if m == 0 {
            &[]
        } else {
            &self.d[1..m]
        }
    }

    pub fn zero_elem(&self) -> T {
        T::zero_in(self.ring)
    }

    /// Position of `label` in the degree-`k` basis.
    pub fn index_of(&self, k: usize, label: &str) -> Option<usize> {
        self.basis(k).iter().position(|l| l == label)
    }

    /// Checks `d_{k-1} ∘ d_k = 0` in every degree, reporting the first
    /// nonzero entry of the composite.
    pub fn validate(&self) -> Result<()> {
        for k in 2..self.bases.len() {
            let comp = self.d[k - 1].mul(&self.d[k])?;
            for (i, j, v) in comp.entries() {
                let v = v.reduce(self.ring);
                if !v.is_zero_elem() {
                    return Err(Error::BoundarySquareNonzero {
                        degree: k,
                        row: i,
                        col: j,
                        row_label: self.bases[k - 2][i].clone(),
                        col_label: self.bases[k][j].clone(),
                        value: v.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Same complex with degrees up to `m` (extra degrees are empty).
    pub fn padded(&self, m: usize) -> Self {
        if self.bases.len() > m {
            return self.clone();
        }
        let mut bases = self.bases.clone();
        bases.resize(m + 1, Vec::new());
        let zero = self.zero_elem();
        let mut bd: Vec<Matrix<T>> = self.boundaries().to_vec();
        for k in bd.len() + 1..=m {
            bd.push(Matrix::zeros(bases[k - 1].len(), 0, &zero));
        }
        Self::assemble(self.ring, bases, bd).expect("padding keeps shapes")
    }

    /// Applies `f` entrywise, landing in `ring`.
    pub fn map_entries<U: Coefficient>(&self, ring: ComplexRing, mut f: impl FnMut(&T) -> Result<U>) -> Result<BasedChainComplex<U>> {
        let zero = U::zero_in(ring);
        let bd = self.boundaries().iter().map(|b| b.try_map(zero.clone(), &mut f)).collect::<Result<Vec<_>>>()?;
        BasedChainComplex::assemble(ring, self.bases.clone(), bd)
    }

    /// Direct sum; bases are concatenated degreewise, labels must stay distinct.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::UnsupportedChange(format!("direct sum of complexes over {} and {}", self.ring, other.ring)));
        }
        let m = self.bases.len().max(other.bases.len());
        if m == 0 {
            return Ok(self.clone());
        }
        let (a, b) = (self.padded(m - 1), other.padded(m - 1));
        let bases = (0..m).map(|k| a.basis(k).iter().chain(b.basis(k)).cloned().collect()).collect();
        let zero = self.zero_elem();
        let bd = (1..m)
            .map(|k| {
                let (da, db) = (a.boundary(k), b.boundary(k));
                Matrix::from_blocks(&[da.rows(), db.rows()], &[da.cols(), db.cols()], &[alloc::vec![Some(da), None], alloc::vec![None, Some(db)]], &zero)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(self.ring, bases, bd)
    }

    /// Renames every basis label with `f`.
    pub fn relabel(&self, mut f: impl FnMut(usize, &str) -> String) -> Result<Self> {
        let bases = self.bases.iter().enumerate().map(|(k, b)| b.iter().map(|l| f(k, l)).collect()).collect();
        Self::assemble(self.ring, bases, self.boundaries().to_vec())
    }
}

impl<T: Coefficient + Field> BasedChainComplex<T> {
    /// Ranks of `H_k` over the coefficient field.
    pub fn homology_ranks(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.d.iter().map(|m| m.rank()).collect();
        (0..self.bases.len()).map(|k| self.rank(k) - ranks[k] - ranks[k + 1]).collect()
    }

    /// First degree with nonzero homology, as `(degree, rank)`.
    pub fn first_homology(&self) -> Option<(usize, usize)> {
        self.homology_ranks().into_iter().enumerate().find(|&(_, r)| r != 0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.first_homology().is_none()
    }
}

impl IntComplex {
    /// Entrywise image under a ring map. Truncated rings only admit
    /// further truncation.
    pub fn base_change(&self, to: BaseChange) -> Result<IntComplex> {
        let unsupported = |what: &str| Err(Error::UnsupportedChange(format!("{what} from {}", self.ring)));
        let ring = match (to, self.ring) {
            (BaseChange::ModT(n), _) if n < 1 => return unsupported("reduction mod t^0"),
            (BaseChange::ModT(n), r) => {
                if self.has_negative_powers() {
                    return unsupported("reduction mod t^n of entries with negative powers");
                }
                match r.order() {
                    Some(avail) if r != ComplexRing::Integers && n > avail => {
                        return Err(Error::InsufficientDataOrder { requested: n, available: avail });
                    }
                    _ => {}
                }
                ComplexRing::truncated(n)
            }
            (BaseChange::InvertT, ComplexRing::Integers | ComplexRing::Polynomials | ComplexRing::Laurent) => ComplexRing::Laurent,
            (BaseChange::InvertT, ComplexRing::PowerSeries(n) | ComplexRing::Novikov(n)) => ComplexRing::Novikov(n),
            (BaseChange::InvertT, _) => return unsupported("inverting t"),
            (BaseChange::TensorNovikov(n), ComplexRing::Integers | ComplexRing::Polynomials | ComplexRing::Laurent) => ComplexRing::Novikov(n),
            (BaseChange::TensorNovikov(n), ComplexRing::PowerSeries(m) | ComplexRing::Novikov(m)) => {
                if n > m {
                    return Err(Error::InsufficientDataOrder { requested: n, available: m });
                }
                ComplexRing::Novikov(n)
            }
            (BaseChange::TensorNovikov(_), _) => return unsupported("completion to the Novikov ring"),
        };
        let c = self.map_entries(ring, |e| Ok(e.reduce(ring)))?;
        c.validate()?;
        Ok(c)
    }

    fn has_negative_powers(&self) -> bool {
        self.boundaries().iter().any(|b| b.entries().any(|(_, _, e)| !e.is_polynomial()))
    }

    /// The same complex over `Q(t)`. For the truncated rings the polynomial
    /// representatives are used, which is only allowed when they satisfy
    /// `d∘d = 0` exactly.
    pub fn rationalize(&self) -> Result<RatComplex> {
        let c = self.map_entries(ComplexRing::RationalFunctions, |e| Ok(RationalFunction::from_poly(e.clone())))?;
        if self.ring.order().is_some() && self.ring != ComplexRing::Integers {
            c.validate().map_err(|e| {
                Error::UnsupportedChange(format!("truncated representatives over {} do not lift to a complex over Q(t): {e}", self.ring))
            })?;
        }
        Ok(c)
    }

    /// Expansion into `Q((t))` modulo `t^n`.
    pub fn to_series_field(&self, n: i64) -> Result<SeriesComplex> {
        if let Some(avail) = self.ring.order() {
            if self.ring != ComplexRing::Integers && n > avail {
                return Err(Error::InsufficientDataOrder { requested: n, available: avail });
            }
        }
        let ring = ComplexRing::LaurentSeriesField(n);
        let c = self.map_entries(ring, |e| Ok(TruncatedSeries::from_poly(e, n).to_rat().as_laurent()))?;
        c.validate()?;
        Ok(c)
    }

    /// Homology ranks over `Q(t)`.
    pub fn rational_homology_ranks(&self) -> Result<Vec<usize>> {
        Ok(self.rationalize()?.homology_ranks())
    }
}

impl<T: Coefficient> fmt::Debug for BasedChainComplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BasedChainComplex over {}", self.ring)?;
        for (k, b) in self.bases.iter().enumerate() {
            writeln!(f, "  C_{k}: {:?}", b)?;
            if k >= 1 {
                writeln!(f, "  d_{k} = {}", self.d[k])?;
            }
        }
        Ok(())
    }
}

/// Labels `prefix0, prefix1, ...`.
pub fn numbered_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_laurent;

    fn pm(rows: &[&[&str]], cols: usize) -> Matrix<LaurentPoly> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| parse_laurent(s).unwrap()).collect()).collect(), cols, LaurentPoly::zero()).unwrap()
    }

    fn labels(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    fn circle() -> IntComplex {
        IntComplex::new(ComplexRing::Polynomials, alloc::vec![labels(&["q"]), labels(&["p"])], alloc::vec![pm(&[&["1-t"]], 1)]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(IntComplex::new(ComplexRing::Polynomials, Vec::new(), Vec::new()).is_ok());
        circle().validate().unwrap();
        let bad = IntComplex::new(
            ComplexRing::Integers,
            alloc::vec![labels(&["a"]), labels(&["b"]), labels(&["c"])],
            alloc::vec![pm(&[&["1"]], 1), pm(&[&["1"]], 1)],
        );
        match bad {
            Err(Error::BoundarySquareNonzero { degree, row, col, ref row_label, ref col_label, ref value }) => {
                assert_eq!((degree, row, col), (2, 0, 0));
                assert_eq!((row_label.as_str(), col_label.as_str(), value.as_str()), ("a", "c", "1"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            IntComplex::new(ComplexRing::Integers, alloc::vec![labels(&["a"]), labels(&["b"])], alloc::vec![pm(&[&["t"]], 1)]),
            Err(Error::EntryNotInRing { .. })
        ));
        assert!(matches!(
            IntComplex::new(ComplexRing::Integers, alloc::vec![labels(&["a", "a"])], Vec::new()),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn base_changes() {
        let c = circle();
        let z = c.base_change(BaseChange::ModT(1)).unwrap();
        assert_eq!(z.ring(), ComplexRing::Integers);
        assert_eq!(z.boundary(1), &pm(&[&["1"]], 1));
        assert_eq!(c.rationalize().unwrap().homology_ranks(), alloc::vec![0, 0]);
        // t is a unit of the Novikov ring but not of Z[t]
        let d = IntComplex::new(ComplexRing::Polynomials, alloc::vec![labels(&["x"]), labels(&["y"])], alloc::vec![pm(&[&["t"]], 1)]).unwrap();
        let nov = d.base_change(BaseChange::TensorNovikov(8)).unwrap();
        assert_eq!(nov.ring(), ComplexRing::Novikov(8));
        assert!(nov.to_series_field(8).unwrap().is_acyclic());
        assert!(z.base_change(BaseChange::InvertT).is_ok());
        let t3 = c.base_change(BaseChange::ModT(3)).unwrap();
        assert!(matches!(t3.base_change(BaseChange::InvertT), Err(Error::UnsupportedChange(_))));
        assert!(matches!(t3.base_change(BaseChange::ModT(4)), Err(Error::InsufficientDataOrder { .. })));
    }

    #[test]
    fn truncated_rationalization_needs_exact_lift() {
        // d2 d1 = t^2 vanishes mod t^2 but not over Q(t)
        let c = IntComplex::new(
            ComplexRing::Truncated(2),
            alloc::vec![labels(&["a"]), labels(&["b"]), labels(&["c"])],
            alloc::vec![pm(&[&["t"]], 1), pm(&[&["t"]], 1)],
        )
        .unwrap();
        assert!(matches!(c.rationalize(), Err(Error::UnsupportedChange(_))));
    }

    #[test]
    fn ring_names_round_trip() {
        for r in [
            ComplexRing::Integers,
            ComplexRing::Polynomials,
            ComplexRing::Laurent,
            ComplexRing::Truncated(3),
            ComplexRing::PowerSeries(5),
            ComplexRing::Novikov(5),
            ComplexRing::RationalFunctions,
            ComplexRing::LaurentSeriesField(5),
        ] {
            assert_eq!(ComplexRing::parse(&r.to_string(), Some(5)).unwrap(), r);
        }
        assert_eq!(ComplexRing::parse("Z[t]/t^1", None).unwrap(), ComplexRing::Integers);
        assert!(ComplexRing::parse("Z[[t]]", None).is_err());
    }
}
