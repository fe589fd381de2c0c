//! Seeded random generators for the property and acceptance suites.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{LaurentPoly, Matrix, RationalFunction, Ring, TruncatedSeries, WittVector};
use crate::complexes::{ComplexRing, IntComplex};
use crate::torsion_theorem::DescentSystem;
use crate::zeta::PrimeOrbit;

pub use rand_chacha::ChaCha8Rng;

/// Deterministic generator for a named suite.
pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

fn sign(rng: &mut impl Rng) -> i8 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// Up to `max_primes` prime orbits with windings in `1..=max_winding`.
pub fn random_prime_orbits(rng: &mut impl Rng, max_primes: usize, max_winding: u32) -> Vec<PrimeOrbit> {
    let count = rng.gen_range(0..=max_primes);
    (0..count).map(|_| PrimeOrbit::new(rng.gen_range(1..=max_winding), sign(rng), sign(rng)).expect("valid signs")).collect()
}

/// Integer Witt vector `1 + a_1 t + ...` modulo `t^n`.
pub fn random_witt(rng: &mut impl Rng, n: i64, bound: i64) -> WittVector {
    let mut c = vec![1i64];
    c.extend((1..n).map(|_| rng.gen_range(-bound..=bound)));
    WittVector::new(TruncatedSeries::from_ints(&c, n)).expect("constant term 1")
}

pub fn random_int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Matrix<BigInt> {
    let mut m = Matrix::zeros(rows, cols, &BigInt::zero());
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, BigInt::from(rng.gen_range(-bound..=bound)));
        }
    }
    m
}

/// Polynomial `c_0 + ... + c_deg t^deg` times `t^low`.
pub fn random_poly(rng: &mut impl Rng, low: i64, deg: usize, bound: i64) -> LaurentPoly {
    LaurentPoly::from_coeffs(low, (0..=deg).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
}

/// A product of elementary matrices `I + c E_ij` together with its inverse.
fn random_elementary_product<T: Ring>(rng: &mut impl Rng, n: usize, steps: usize, unit: &T, mut scalar: impl FnMut(&mut dyn rand::RngCore) -> T) -> (Matrix<T>, Matrix<T>) {
    let zero = unit.zero_like();
    let mut p = Matrix::identity(n, &zero);
    let mut pinv = Matrix::identity(n, &zero);
    if n < 2 {
        return (p, pinv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = scalar(&mut *rng);
        // p <- p (I + c E_ij): column j += c * column i
        for r in 0..n {
            let v = p.get(r, j).add_ref(&p.get(r, i).mul_ref(&c));
            p.set(r, j, v);
        }
        // pinv <- (I - c E_ij) pinv: row i -= c * row j
        for col in 0..n {
            let v = pinv.get(i, col).sub_ref(&c.mul_ref(pinv.get(j, col)));
            pinv.set(i, col, v);
        }
    }
    (p, pinv)
}

/// Unimodular integer matrix and its inverse.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> (Matrix<BigInt>, Matrix<BigInt>) {
    let steps = 2 * n;
    let (mut p, mut pinv) = random_elementary_product(rng, n, steps, &BigInt::one(), |r| BigInt::from(r.gen_range(-2i64..=2)));
    // a random signed permutation on top
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let signs: Vec<i8> = (0..n).map(|_| sign(rng)).collect();
    let mut q = Matrix::zeros(n, n, &BigInt::zero());
    for (i, &pi) in perm.iter().enumerate() {
        q.set(pi, i, BigInt::from(signs[i]));
    }
    let qinv = q.transpose();
    p = p.mul(&q).expect("square");
    pinv = qinv.mul(&pinv).expect("square");
    (p, pinv)
}

fn int_to_poly(m: &Matrix<BigInt>) -> Matrix<LaurentPoly> {
    m.map(LaurentPoly::zero(), |c| LaurentPoly::constant(c.clone()))
}

fn labels(prefix: &str, k: usize, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{k}_{i}")).collect()
}

/// Acyclic complex over `Z[t]` with known torsion.
#[derive(Debug, Clone)]
pub struct AcyclicSample {
    pub complex: IntComplex,
    pub expected: RationalFunction,
}

/// Direct sum of two-term pieces `x -> y` with boundary `p(t)`, `p(0) = ±1`,
/// conjugated by determinant-one matrices over `Z[t]`. The torsion is the
/// product of the `p^{±1}`, with exponent `+1` when `x` has odd degree.
pub fn random_acyclic_complex(rng: &mut impl Rng, max_top: usize, max_pieces: usize, max_rank: usize) -> AcyclicSample {
    let top = rng.gen_range(1..=max_top);
    let mut ranks = vec![0usize; top + 1];
    let mut pieces: Vec<(usize, LaurentPoly)> = Vec::new();
    for _ in 0..rng.gen_range(1..=max_pieces) {
        let k = rng.gen_range(1..=top);
        if ranks[k] >= max_rank || ranks[k - 1] >= max_rank {
            continue;
        }
        let deg = rng.gen_range(0..=2);
        let mut p = random_poly(rng, 1, deg, 3);
        p = &p + &LaurentPoly::constant(sign(rng));
        ranks[k] += 1;
        ranks[k - 1] += 1;
        pieces.push((k, p));
    }
    let zero = LaurentPoly::zero();
    let mut d: Vec<Matrix<LaurentPoly>> = (1..=top).map(|k| Matrix::zeros(ranks[k - 1], ranks[k], &zero)).collect();
    let mut fill = vec![0usize; top + 1];
    let mut expected = RationalFunction::one();
    for (k, p) in &pieces {
        // the upper end sits after the lower ends already placed in degree k
        let (row, col) = (fill[k - 1], fill[*k]);
        fill[k - 1] += 1;
        fill[*k] += 1;
        d[k - 1].set(row, col, p.clone());
        let rp = RationalFunction::from_poly(p.clone());
        expected = if k % 2 == 1 { expected.mul_ref(&rp) } else { expected.div(&rp).expect("nonzero") };
    }
    let conj: Vec<_> = ranks
        .iter()
        .map(|&n| random_elementary_product(rng, n, 2 * n, &LaurentPoly::one(), |r| random_poly_in(r, 0, 1, 2)))
        .collect();
    let d: Vec<_> = (1..=top).map(|k| conj[k - 1].0.mul(&d[k - 1]).and_then(|m| m.mul(&conj[k].1)).expect("shapes")).collect();
    let bases = (0..=top).map(|k| labels("g", k, ranks[k])).collect();
    let complex = IntComplex::new(ComplexRing::Polynomials, bases, d).expect("conjugated complex");
    AcyclicSample { complex, expected }
}

fn random_poly_in(rng: &mut dyn rand::RngCore, low: i64, deg: usize, bound: i64) -> LaurentPoly {
    LaurentPoly::from_coeffs(low, (0..=deg).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
}

/// Integer complex together with chain self-maps of it.
#[derive(Debug, Clone)]
pub struct SelfMapSample {
    pub complex: IntComplex,
    pub maps: Vec<Vec<Matrix<BigInt>>>,
}

/// Points and pairs `x -> a y`, `count` chain self-maps acting by matrices on
/// points and scalars on pairs, each perturbed by `d s + s d`, everything
/// conjugated by unimodular matrices. Degrees `0..=top` with `top <= max_top`.
pub fn random_complex_with_self_maps(rng: &mut impl Rng, max_top: usize, max_rank: usize, count: usize) -> SelfMapSample {
    complex_with_self_maps(rng, 0, max_top, max_rank, count, 0.5)
}

fn complex_with_self_maps(rng: &mut impl Rng, min_top: usize, max_top: usize, max_rank: usize, count: usize, pair_prob: f64) -> SelfMapSample {
    let top = rng.gen_range(min_top.min(max_top)..=max_top);
    let mut points = vec![0usize; top + 1];
    let mut pairs: Vec<(usize, i64)> = Vec::new();
    let mut ranks = vec![0usize; top + 1];
    for _ in 0..rng.gen_range(1..=2 * max_rank) {
        let k = rng.gen_range(0..=top);
        if k >= 1 && rng.gen_bool(pair_prob) {
            if ranks[k] < max_rank && ranks[k - 1] < max_rank {
                let a = rng.gen_range(1..=3) * i64::from(sign(rng));
                pairs.push((k, a));
                ranks[k] += 1;
                ranks[k - 1] += 1;
            }
        } else if ranks[k] < max_rank {
            points[k] += 1;
            ranks[k] += 1;
        }
    }
    // basis order in degree k: points, then pair ends in order of creation
    let zi = BigInt::zero();
    let mut d: Vec<Matrix<BigInt>> = (1..=top).map(|k| Matrix::zeros(ranks[k - 1], ranks[k], &zi)).collect();
    let mut fill = points.clone();
    let mut pair_slots = Vec::new();
    for &(k, a) in &pairs {
        let (row, col) = (fill[k - 1], fill[k]);
        fill[k - 1] += 1;
        fill[k] += 1;
        d[k - 1].set(row, col, BigInt::from(a));
        pair_slots.push((k, row, col));
    }
    let mut maps = Vec::with_capacity(count);
    for _ in 0..count {
        let mut h: Vec<Matrix<BigInt>> = ranks.iter().map(|&n| Matrix::zeros(n, n, &zi)).collect();
        for k in 0..=top {
            let block = random_int_matrix(rng, points[k], points[k], 2);
            h[k].paste(0, 0, &block);
        }
        for &(k, row, col) in &pair_slots {
            let lambda = BigInt::from(rng.gen_range(-2i64..=2));
            h[k].set(col, col, lambda.clone());
            h[k - 1].set(row, row, lambda);
        }
        // s_k : C_k -> C_{k+1}
        let s: Vec<Matrix<BigInt>> = (0..=top).map(|k| random_int_matrix(rng, if k < top { ranks[k + 1] } else { 0 }, ranks[k], 1)).collect();
        for k in 0..=top {
            let mut hk = h[k].clone();
            // d_{k+1} s_k
            if k < top {
                hk = hk.add(&d[k].mul(&s[k]).expect("shapes")).expect("square");
            }
            // s_{k-1} d_k
            if k >= 1 {
                hk = hk.add(&s[k - 1].mul(&d[k - 1]).expect("shapes")).expect("square");
            }
            h[k] = hk;
        }
        maps.push(h);
    }
    let conj: Vec<_> = ranks.iter().map(|&n| random_unimodular(rng, n)).collect();
    let d: Vec<_> = (1..=top).map(|k| conj[k - 1].0.mul(&d[k - 1]).and_then(|m| m.mul(&conj[k].1)).expect("shapes")).collect();
    let maps = maps
        .into_iter()
        .map(|h| h.iter().enumerate().map(|(k, hk)| conj[k].0.mul(hk).and_then(|m| m.mul(&conj[k].1)).expect("shapes")).collect())
        .collect();
    let bases = (0..=top).map(|k| labels("c", k, ranks[k])).collect();
    let complex = IntComplex::new(ComplexRing::Integers, bases, d.iter().map(int_to_poly).collect()).expect("conjugated complex");
    SelfMapSample { complex, maps }
}

/// Descent system with zero stars, plus the split `N = N' ⊕ N''` used by
/// [`vary_stars`] (`split[k]` is the rank of `N'_k`, which comes first).
#[derive(Debug, Clone)]
pub struct DescentSample {
    pub system: DescentSystem,
    pub split: Vec<usize>,
}

fn relabel(c: &IntComplex, prefix: &str) -> IntComplex {
    c.relabel(|k, l| format!("{prefix}{k}_{}", l.rsplit('_').next().unwrap_or(l))).expect("distinct labels")
}

fn poly_complex(c: &IntComplex) -> IntComplex {
    c.map_entries(ComplexRing::Polynomials, |e| Ok(e.clone())).expect("polynomial entries")
}

/// `R` with `H = t h_1 + t^2 h_2` for chain self-maps `h_1, h_2`, an
/// independent `N = N' ⊕ N''`, and zero stars.
pub fn random_descent_system(rng: &mut impl Rng, max_top: usize, max_rank: usize, n_data: i64) -> DescentSample {
    let r = random_complex_with_self_maps(rng, max_top, max_rank, 2);
    let n1 = complex_with_self_maps(rng, 1, max_top, max_rank.min(2), 0, 0.85).complex;
    let n2 = complex_with_self_maps(rng, 1, max_top, max_rank.min(2), 0, 0.85).complex;
    let nv = poly_complex(&relabel(&n1, "u")).direct_sum(&poly_complex(&relabel(&n2, "w"))).expect("disjoint labels");
    let split = (0..nv.len()).map(|k| if k < n1.len() { n1.rank(k) } else { 0 }).collect();
    let rc = poly_complex(&relabel(&r.complex, "e"));
    let mut b = DescentSystem::builder(rc.clone(), nv).n_data(n_data);
    for k in 0..rc.len() {
        let t1 = int_to_poly(&r.maps[0][k]).scale(&LaurentPoly::t());
        let t2 = int_to_poly(&r.maps[1][k]).scale(&LaurentPoly::t().pow(2));
        b = b.h(k, t1.add(&t2).expect("square"));
    }
    DescentSample { system: b.build().expect("chain self-map recipe"), split }
}

/// Random star blocks compatible with `d∘d = 0`: `sigma_1 = A = d^R U - U d^N`
/// with `U` supported on `N''` and divisible by `t`, and
/// `B = d^N V + V d^R` with `V` landing in `N'`.
pub fn vary_stars(rng: &mut impl Rng, sample: &DescentSample) -> DescentSystem {
    let s = &sample.system;
    let l = s.len();
    let zero = LaurentPoly::zero();
    let rank_r = |k: i64| if k < 0 || k as usize >= l { 0 } else { s.r().rank(k as usize) };
    let rank_n = |k: i64| if k < 0 || k as usize >= l { 0 } else { s.nv().rank(k as usize) };
    let split = |k: i64| if k < 0 || k as usize >= sample.split.len() { 0 } else { sample.split[k as usize] };
    let a1 = |k: i64| if k < 0 || k as usize > s.r().len() { Matrix::zeros(rank_r(k - 1), rank_r(k), &zero) } else { s.r().boundary(k as usize).clone() };
    let dn = |k: i64| if k < 0 || k as usize > s.nv().len() { Matrix::zeros(rank_n(k - 1), rank_n(k), &zero) } else { s.nv().boundary(k as usize).clone() };
    // U_k : N_k -> R_k on the N'' columns; V_k : R_k -> N_{k+1} into the N' rows
    let u: Vec<Matrix<LaurentPoly>> = (0..l as i64)
        .map(|k| {
            let mut m = Matrix::zeros(rank_r(k), rank_n(k), &zero);
            for i in 0..rank_r(k) {
                for j in split(k)..rank_n(k) {
                    m.set(i, j, random_poly(rng, 1, 1, 2));
                }
            }
            m
        })
        .collect();
    let v: Vec<Matrix<LaurentPoly>> = (0..l as i64)
        .map(|k| {
            let mut m = Matrix::zeros(rank_n(k + 1), rank_r(k), &zero);
            for i in 0..split(k + 1).min(rank_n(k + 1)) {
                for j in 0..rank_r(k) {
                    m.set(i, j, random_poly(rng, 0, 1, 2));
                }
            }
            m
        })
        .collect();
    let get = |m: &[Matrix<LaurentPoly>], k: i64, shape: (usize, usize)| if k < 0 || k as usize >= m.len() { Matrix::zeros(shape.0, shape.1, &zero) } else { m[k as usize].clone() };
    let sigma: Vec<_> = (0..l as i64)
        .map(|k| {
            let uk = get(&u, k, (rank_r(k), rank_n(k)));
            let uk1 = get(&u, k - 1, (rank_r(k - 1), rank_n(k - 1)));
            a1(k).mul(&uk).expect("shapes").sub(&uk1.mul(&dn(k)).expect("shapes")).expect("shapes")
        })
        .collect();
    let star_b: Vec<_> = (0..l as i64)
        .map(|k| {
            if k == 0 {
                return Matrix::zeros(0, 0, &zero);
            }
            let vk1 = get(&v, k - 1, (rank_n(k), rank_r(k - 1)));
            let vk2 = get(&v, k - 2, (rank_n(k - 1), rank_r(k - 2)));
            dn(k).mul(&vk1).expect("shapes").add(&vk2.mul(&a1(k - 1)).expect("shapes")).expect("shapes")
        })
        .collect();
    s.with_stars(sigma, None, star_b).expect("star recipe keeps d∘d = 0")
}
