//! Morse and Novikov complexes built from critical points and incidence counts.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::algebra::{LaurentPoly, Matrix, Ring};
use crate::complexes::{rationalize_map, torsion_of_map, BaseChange, ChainMap, ComplexRing, IntComplex, Torsion, Tower};
use crate::torsion_theorem::DescentSystem;
use crate::error::{Error, Result};
use crate::zeta::OrbitSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPoint {
    pub label: String,
    pub index: usize,
}

impl CriticalPoint {
    pub fn new(label: impl Into<String>, index: usize) -> Self {
        Self { label: label.into(), index }
    }
}

/// Incidence numbers `n(p, q)` keyed by `(from, to)`. Repeated entries add up.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Incidence<T> {
    entries: BTreeMap<(String, String), T>,
}

/// Integer flow-line counts of a real-valued Morse function.
pub type MorseIncidence = Incidence<BigInt>;
/// `t`-graded flow-line counts, known up to the instance's data order.
pub type NovikovIncidence = Incidence<LaurentPoly>;

impl<T: Ring> Incidence<T> {
    pub fn new() -> Self {
        Self { entries: BTreeMap::new() }
    }

    pub fn add(&mut self, from: impl Into<String>, to: impl Into<String>, coeff: T) {
        let key = (from.into(), to.into());
        match self.entries.get_mut(&key) {
            Some(c) => *c = c.add_ref(&coeff),
            None => {
                self.entries.insert(key, coeff);
            }
        }
    }

    pub fn with(mut self, from: &str, to: &str, coeff: T) -> Self {
        self.add(from, to, coeff);
        self
    }

    pub fn get(&self, from: &str, to: &str) -> Option<&T> {
        self.entries.get(&(String::from(from), String::from(to)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str, &T)> + '_ {
        self.entries.iter().map(|((f, t), c)| (f.as_str(), t.as_str(), c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Bases by index (points in the given order) and a label lookup.
type Assembled = (Vec<Vec<String>>, Vec<Matrix<LaurentPoly>>);

/// Bases per degree, and each label's `(degree, position)`.
type Layout<'a> = (Vec<Vec<String>>, BTreeMap<&'a str, (usize, usize)>);

fn layout(points: &[CriticalPoint], dim: Option<usize>) -> Result<Layout<'_>> {
    let top = match dim {
        Some(m) => {
            if let Some(p) = points.iter().find(|p| p.index > m) {
                return Err(Error::Invalid(format!("critical point {} has index {} above the dimension {m}", p.label, p.index)));
            }
            Some(m)
        }
        None => points.iter().map(|p| p.index).max(),
    };
    let mut bases: Vec<Vec<String>> = alloc::vec![Vec::new(); top.map_or(0, |m| m + 1)];
    let mut pos = BTreeMap::new();
    for p in points {
        if pos.insert(p.label.as_str(), (p.index, bases[p.index].len())).is_some() {
            return Err(Error::DuplicateLabel(p.label.clone()));
        }
        bases[p.index].push(p.label.clone());
    }
    Ok((bases, pos))
}

fn assemble<T: Ring>(
    points: &[CriticalPoint],
    dim: Option<usize>,
    inc: &Incidence<T>,
    zero: &LaurentPoly,
    mut convert: impl FnMut(&str, &str, &T) -> Result<LaurentPoly>,
) -> Result<Assembled> {
    let (bases, pos) = layout(points, dim)?;
    let mut bd: Vec<Matrix<LaurentPoly>> = (1..bases.len()).map(|k| Matrix::zeros(bases[k - 1].len(), bases[k].len(), zero)).collect();
    for (from, to, c) in inc.iter() {
        let &(ip, jp) = pos.get(from).ok_or_else(|| Error::UnknownLabel(String::from(from)))?;
        let &(iq, jq) = pos.get(to).ok_or_else(|| Error::UnknownLabel(String::from(to)))?;
        if ip != iq + 1 {
            if c.is_zero_elem() {
                continue;
            }
            return Err(Error::IndexMismatch { from: from.into(), to: to.into(), from_index: ip, to_index: iq });
        }
        bd[ip - 1].set(jq, jp, convert(from, to, c)?);
    }
    Ok((bases, bd))
}

/// Morse complex over `Z`: `d p = sum_q n(p, q) q`.
pub fn build_morse_complex(points: &[CriticalPoint], inc: &MorseIncidence) -> Result<IntComplex> {
    let zero = LaurentPoly::zero();
    let (bases, bd) = assemble(points, None, inc, &zero, |_, _, c| Ok(LaurentPoly::constant(c.clone())))?;
    IntComplex::new(ComplexRing::Integers, bases, bd)
}

/// Options for [`build_novikov_complex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NovikovOptions {
    /// Top degree; defaults to the largest index.
    pub dim: Option<usize>,
    /// Order up to which the incidence polynomials are correct.
    pub data_order: i64,
    /// Accept negative powers of `t` (the result lives over the Novikov ring).
    pub allow_negative_powers: bool,
}

impl NovikovOptions {
    pub fn new(data_order: i64) -> Self {
        Self { dim: None, data_order, allow_negative_powers: false }
    }
}

/// Novikov complex modulo `t^n`: over `Z[[t]]`, or `Z((t))` when negative
/// powers are allowed and present.
pub fn build_novikov_complex(points: &[CriticalPoint], inc: &NovikovIncidence, n: i64, opts: NovikovOptions) -> Result<IntComplex> {
    if n > opts.data_order {
        return Err(Error::InsufficientDataOrder { requested: n, available: opts.data_order });
    }
    if n < 1 {
        return Err(Error::Invalid(format!("truncation order {n} must be positive")));
    }
    let zero = LaurentPoly::zero();
    let mut negative = false;
    let (bases, bd) = assemble(points, opts.dim, inc, &zero, |from, to, c| {
        if let Some(v) = c.valuation() {
            if v < 0 {
                if !opts.allow_negative_powers {
                    return Err(Error::NegativePower { from: from.into(), to: to.into(), exponent: v });
                }
                negative = true;
            }
        }
        Ok(c.truncate(n))
    })?;
    let ring = if negative { ComplexRing::Novikov(n) } else { ComplexRing::PowerSeries(n) };
    IntComplex::new(ring, bases, bd)
}

/// Reduction of a Novikov complex modulo `t^n`.
pub fn truncate_novikov(c: &IntComplex, n: i64) -> Result<IntComplex> {
    c.base_change(BaseChange::ModT(n))
}

/// The tower of reductions modulo `t, t^2, ..., t^n_max`.
pub fn novikov_tower(c: &IntComplex, n_max: i64) -> Result<Tower> {
    Tower::of_truncations(c, n_max)
}

/// Homology ranks over `Q(t)` (the polynomial representatives must form a complex).
pub fn novikov_homology_ranks(c: &IntComplex) -> Result<Vec<usize>> {
    c.rational_homology_ranks()
}

/// Declarative description of a circle-valued Morse function with its gradient.
#[derive(Debug, Clone, PartialEq)]
pub struct MNInstance {
    pub name: String,
    pub dim: usize,
    pub points: Vec<CriticalPoint>,
    pub incidence: NovikovIncidence,
    pub data_order: i64,
    pub allow_negative_powers: bool,
    /// Simplicial chain complex of the cover over `Z[t]`.
    pub simplicial: Option<IntComplex>,
    pub orbits: Option<OrbitSet>,
    pub descent: Option<DescentSystem>,
    /// Comparison chain map from the Novikov complex to the simplicial one,
    /// one matrix per degree.
    pub comparison: Option<Vec<Matrix<LaurentPoly>>>,
}

/// Outcome of [`MNInstance::structural_checks`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralReport {
    pub novikov_ranks: Vec<usize>,
    pub novikov_homology: Vec<usize>,
    pub simplicial_homology: Option<Vec<usize>>,
    pub tower_height: i64,
    pub tower_round_trip: bool,
    pub homology_agrees: Option<bool>,
    pub euler_agrees: Option<bool>,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.tower_round_trip && self.homology_agrees != Some(false) && self.euler_agrees != Some(false)
    }
}

impl MNInstance {
    pub fn new(name: impl Into<String>, dim: usize, points: Vec<CriticalPoint>, incidence: NovikovIncidence, data_order: i64) -> Self {
        Self {
            name: name.into(),
            dim,
            points,
            incidence,
            data_order,
            allow_negative_powers: false,
            simplicial: None,
            orbits: None,
            descent: None,
            comparison: None,
        }
    }

    fn options(&self) -> NovikovOptions {
        NovikovOptions { dim: Some(self.dim), data_order: self.data_order, allow_negative_powers: self.allow_negative_powers }
    }

    /// Novikov complex modulo `t^n`.
    pub fn novikov_complex(&self, n: i64) -> Result<IntComplex> {
        build_novikov_complex(&self.points, &self.incidence, n, self.options())
    }

    /// Flow-line form of the incidence: the exact polynomial complex over
    /// `Z[t]` (or `Z[t, t^-1]`), used for rationalization.
    pub fn novikov_polynomial_complex(&self) -> Result<IntComplex> {
        let opts = self.options();
        let zero = LaurentPoly::zero();
        let (bases, bd) = assemble(&self.points, opts.dim, &self.incidence, &zero, |from, to, c| {
            if let Some(v) = c.valuation().filter(|&v| v < 0) {
                if !opts.allow_negative_powers {
                    return Err(Error::NegativePower { from: from.into(), to: to.into(), exponent: v });
                }
            }
            Ok(c.clone())
        })?;
        let ring = if bd.iter().any(|m| m.entries().any(|(_, _, e)| !e.is_polynomial())) { ComplexRing::Laurent } else { ComplexRing::Polynomials };
        IntComplex::new(ring, bases, bd)
    }

    /// Homology ranks over `Q(t)` of the Novikov complex.
    pub fn novikov_homology_ranks(&self) -> Result<Vec<usize>> {
        self.novikov_polynomial_complex()?.rational_homology_ranks()
    }

    /// `d∘d = 0`, tower round trip up to `n`, and agreement of rational
    /// homology (and Euler characteristic) with the simplicial complex.
    pub fn structural_checks(&self, n: i64) -> Result<StructuralReport> {
        let nov = self.novikov_complex(n)?;
        let tower = novikov_tower(&nov, n)?;
        tower.check()?;
        let lim = tower.inverse_limit(n)?;
        let tower_round_trip = lim.boundaries() == nov.boundaries() && lim.bases() == nov.bases();
        let novikov_homology = self.novikov_homology_ranks()?;
        let mut report = StructuralReport {
            novikov_ranks: nov.ranks(),
            novikov_homology,
            simplicial_homology: None,
            tower_height: n,
            tower_round_trip,
            homology_agrees: None,
            euler_agrees: None,
        };
        if let Some(s) = &self.simplicial {
            s.validate()?;
            let sh = s.rational_homology_ranks()?;
            let pad = |v: &[usize], len: usize| {
                let mut v = v.to_vec();
                v.resize(len, 0);
                v
            };
            let len = sh.len().max(report.novikov_homology.len());
            report.homology_agrees = Some(pad(&sh, len) == pad(&report.novikov_homology, len));
            let euler = |v: &[usize]| v.iter().enumerate().map(|(k, &r)| if k % 2 == 0 { r as i64 } else { -(r as i64) }).sum::<i64>();
            report.euler_agrees = Some(euler(&sh) == euler(&report.novikov_homology));
            report.simplicial_homology = Some(sh);
        }
        Ok(report)
    }

    /// The comparison map as a chain map over `Q(t)`.
    pub fn comparison_map(&self) -> Result<Option<ChainMap<crate::algebra::RationalFunction>>> {
        let (Some(maps), Some(simp)) = (&self.comparison, &self.simplicial) else {
            return Ok(None);
        };
        let src = self.novikov_polynomial_complex()?;
        let tgt = simp.clone();
        let ring = if src.ring() == tgt.ring() { src.ring() } else { ComplexRing::Laurent };
        let lift = |c: &IntComplex| c.map_entries(ring, |e| Ok(e.clone()));
        let f = ChainMap::assemble(lift(&src)?, lift(&tgt)?, maps.clone())?;
        f.validate()?;
        Ok(Some(rationalize_map(&f)?))
    }

    /// Torsion of the comparison chain map, if the instance supplies one.
    pub fn comparison_torsion(&self) -> Result<Option<Torsion>> {
        self.comparison_map()?.map(|f| torsion_of_map(&f)).transpose()
    }
}

/// Labels that occur in an incidence but not among the points.
pub fn unknown_labels<T: Ring>(points: &[CriticalPoint], inc: &Incidence<T>) -> BTreeSet<String> {
    let known: BTreeSet<&str> = points.iter().map(|p| p.label.as_str()).collect();
    inc.iter().flat_map(|(f, t, _)| [f, t]).filter(|l| !known.contains(l)).map(String::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn circle() -> MNInstance {
        MNInstance::new(
            "circle",
            1,
            vec![CriticalPoint::new("p", 1), CriticalPoint::new("q", 0)],
            NovikovIncidence::new().with("p", "q", LaurentPoly::from_ints(0, &[1, -1])),
            16,
        )
    }

    #[test]
    fn morse_complexes() {
        let pts = [CriticalPoint::new("top", 2), CriticalPoint::new("bot", 0)];
        let c = build_morse_complex(&pts, &MorseIncidence::new()).unwrap();
        assert_eq!(c.rational_homology_ranks().unwrap(), vec![1, 0, 1]);
        let pts = [CriticalPoint::new("p", 1), CriticalPoint::new("q", 0)];
        let inc = MorseIncidence::new().with("p", "q", BigInt::from(1)).with("p", "q", BigInt::from(-1));
        assert!(build_morse_complex(&pts, &inc).unwrap().boundary(1).is_zero());
        let pts = [CriticalPoint::new("p", 2), CriticalPoint::new("q", 0)];
        let inc = MorseIncidence::new().with("p", "q", BigInt::from(1));
        assert!(matches!(build_morse_complex(&pts, &inc), Err(Error::IndexMismatch { from_index: 2, to_index: 0, .. })));
    }

    #[test]
    fn novikov_complexes() {
        let inst = circle();
        let c = inst.novikov_complex(16).unwrap();
        assert_eq!(c.ring(), ComplexRing::PowerSeries(16));
        assert_eq!(inst.novikov_homology_ranks().unwrap(), vec![0, 0]);
        assert!(matches!(inst.novikov_complex(17), Err(Error::InsufficientDataOrder { .. })));
        let empty = build_novikov_complex(&[], &NovikovIncidence::new(), 4, NovikovOptions::new(4)).unwrap();
        assert!(empty.is_empty());
        // d2 d1 = t
        let pts = [CriticalPoint::new("a", 2), CriticalPoint::new("b", 1), CriticalPoint::new("c", 0)];
        let inc = NovikovIncidence::new().with("a", "b", LaurentPoly::t()).with("b", "c", LaurentPoly::one());
        assert!(matches!(build_novikov_complex(&pts, &inc, 4, NovikovOptions::new(4)), Err(Error::BoundarySquareNonzero { degree: 2, .. })));
    }

    #[test]
    fn negative_powers() {
        let pts = [CriticalPoint::new("p", 1), CriticalPoint::new("q", 0)];
        let inc = NovikovIncidence::new().with("p", "q", LaurentPoly::from_ints(-1, &[1, 1]));
        assert!(matches!(build_novikov_complex(&pts, &inc, 4, NovikovOptions::new(4)), Err(Error::NegativePower { exponent: -1, .. })));
        let opts = NovikovOptions { allow_negative_powers: true, ..NovikovOptions::new(4) };
        assert_eq!(build_novikov_complex(&pts, &inc, 4, opts).unwrap().ring(), ComplexRing::Novikov(4));
    }

    #[test]
    fn truncation_and_ranks() {
        let c = circle().novikov_complex(8).unwrap();
        assert_eq!(truncate_novikov(&c, 1).unwrap().boundary(1).get(0, 0), &LaurentPoly::one());
        novikov_tower(&c, 5).unwrap().check().unwrap();
        let pts = [CriticalPoint::new("x", 1), CriticalPoint::new("y", 0), CriticalPoint::new("z", 1), CriticalPoint::new("w", 0)];
        let inc = NovikovIncidence::new().with("x", "y", LaurentPoly::t());
        let c = build_novikov_complex(&pts, &inc, 4, NovikovOptions::new(4)).unwrap();
        assert_eq!(novikov_homology_ranks(&c).unwrap(), vec![1, 1]);
    }

    #[test]
    fn circle_structure() {
        let mut inst = circle();
        inst.simplicial = Some(inst.novikov_polynomial_complex().unwrap());
        inst.comparison = Some(vec![Matrix::identity(1, &LaurentPoly::zero()), Matrix::identity(1, &LaurentPoly::zero())]);
        let r = inst.structural_checks(16).unwrap();
        assert!(r.passed());
        assert_eq!(r.homology_agrees, Some(true));
        assert_eq!(inst.comparison_torsion().unwrap(), Some(Torsion::one()));
    }
}
